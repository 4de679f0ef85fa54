#include "detail/level_points.hpp"

#include <set>

#include "reebsym/error.hpp"

namespace reebsym::detail {

LevelSegments::LevelSegments(const SurfaceComplex& complex, const ScalarField& field, const ReebVertex& component)
    : complex_(complex), field_(field), level_(component.value) {
  const std::set<int> vertices(component.level_vertices.begin(), component.level_vertices.end());
  const std::set<int> edges(component.crossing_edges.begin(), component.crossing_edges.end());
  present_.assign(static_cast<std::size_t>(complex.face_count()), 0);
  ends_.resize(static_cast<std::size_t>(complex.face_count()));
  for (int f = 0; f < complex.face_count(); ++f) {
    std::vector<End> found;
    bool ours = true;
    const auto& t = complex.face(f);
    for (int i = 0; i < 3; ++i) {
      const int v = t[static_cast<std::size_t>(i)];
      const int w = t[static_cast<std::size_t>((i + 1) % 3)];
      if (field[v] == level_) {
        found.push_back({{LevelPoint::Kind::Vertex, v}, 2 * i});
        ours = ours && vertices.count(v);
      }
      if ((field[v] < level_ && level_ < field[w]) || (field[w] < level_ && level_ < field[v])) {
        const int e = complex.edge_of_dart(3 * f + i);
        found.push_back({{LevelPoint::Kind::Edge, e}, 2 * i + 1});
        ours = ours && edges.count(e);
      }
    }
    if (found.size() == 2 && ours) {
      present_[static_cast<std::size_t>(f)] = 1;
      ends_[static_cast<std::size_t>(f)] = {found[0], found[1]};
    }
  }
}

int LevelSegments::position_of(int face, const LevelPoint& p) const {
  for (const auto& end : ends_[static_cast<std::size_t>(face)])
    if (end.point == p) return end.position;
  return -1;
}

bool LevelSegments::has_endpoint(int face, const LevelPoint& p) const {
  return in_component(face) && position_of(face, p) >= 0;
}

LevelPoint LevelSegments::other_end(int face, const LevelPoint& p) const {
  const auto& e = ends_[static_cast<std::size_t>(face)];
  if (e[0].point == p) return e[1].point;
  if (e[1].point == p) return e[0].point;
  throw Error(ErrorCode::InvalidInput, "internal: level point not on face segment");
}

int LevelSegments::next_face(int face, const LevelPoint& exit) const {
  if (exit.kind == LevelPoint::Kind::Edge) {
    const auto [d1, d2] = complex_.edge_darts(exit.id);
    const int f1 = SurfaceComplex::face_of(d1), f2 = SurfaceComplex::face_of(d2);
    return f1 == face ? f2 : f1;
  }
  for (int d : complex_.outgoing(exit.id)) {
    const int f = SurfaceComplex::face_of(d);
    if (f != face && has_endpoint(f, exit)) return f;
  }
  throw Error(ErrorCode::InvalidInput, "internal: level component dead-ends at a vertex");
}

bool LevelSegments::above_on_left(int face, const LevelPoint& from, const LevelPoint& to) const {
  const int p_from = position_of(face, from);
  const int p_to = position_of(face, to);
  const auto& t = complex_.face(face);
  // Counter-clockwise from the head of the segment back to its tail.
  for (int k = 1; k < 6; ++k) {
    const int pos = (p_to + k) % 6;
    if (pos == p_from) break;
    if (pos % 2 == 0) {
      const int v = t[static_cast<std::size_t>(pos / 2)];
      if (field_[v] != level_) return field_[v] > level_;
    }
  }
  throw Error(ErrorCode::InvalidInput, "internal: degenerate level segment");
}

}  // namespace reebsym::detail

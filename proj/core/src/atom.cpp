#include "reebsym/atom.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "detail/disjoint_sets.hpp"
#include "detail/level_points.hpp"
#include "reebsym/error.hpp"

namespace reebsym {

int CriticalComponent::saddle_index(int mesh_vertex) const {
  auto it = std::lower_bound(saddles.begin(), saddles.end(), mesh_vertex);
  if (it == saddles.end() || *it != mesh_vertex) return -1;
  return static_cast<int>(it - saddles.begin());
}

CriticalComponent CriticalComponent::ribbon(int saddle_count, const std::vector<std::pair<int, int>>& arcs,
                                            std::vector<std::vector<ArcEnd>> rotation) {
  CriticalComponent cc;
  for (int s = 0; s < saddle_count; ++s) cc.saddles.push_back(s);
  for (std::size_t i = 0; i < arcs.size(); ++i)
    cc.arcs.push_back({static_cast<int>(i), arcs[i].first, arcs[i].second, {}, {}});
  cc.rotation = std::move(rotation);
  if (static_cast<int>(cc.rotation.size()) != saddle_count)
    throw Error(ErrorCode::InvalidInput, "rotation count does not match saddle count");
  std::vector<int> seen(2 * arcs.size(), 0);
  for (int s = 0; s < saddle_count; ++s) {
    for (const auto& end : cc.rotation[static_cast<std::size_t>(s)]) {
      if (end.arc < 0 || end.arc >= static_cast<int>(arcs.size()) || end.end < 0 || end.end > 1)
        throw Error(ErrorCode::InvalidInput, "rotation names an unknown arc end");
      const auto& a = cc.arcs[static_cast<std::size_t>(end.arc)];
      if ((end.end == 0 ? a.start : a.finish) != s)
        throw Error(ErrorCode::InvalidInput, "arc end listed at the wrong saddle");
      ++seen[static_cast<std::size_t>(end.half_edge())];
    }
  }
  for (int count : seen)
    if (count != 1) throw Error(ErrorCode::InvalidInput, "each arc end must appear exactly once");
  return cc;
}

CriticalComponent extract_critical_component(const SurfaceComplex& complex, const ScalarField& field,
                                             const ReebGraph& graph, int reeb_vertex) {
  if (reeb_vertex < 0 || reeb_vertex >= graph.vertex_count())
    throw Error(ErrorCode::NoSuchVertex, "Reeb vertex " + std::to_string(reeb_vertex) + " does not exist");
  const auto& rv = graph.vertex(reeb_vertex);
  CriticalComponent cc;
  cc.reeb_vertex = reeb_vertex;
  cc.level = rv.value;
  for (int v : rv.critical_vertices)
    if (link_sign_changes(complex, field, v) > 2) cc.saddles.push_back(v);
  if (cc.saddles.empty())
    throw Error(ErrorCode::NotCritical, "Reeb vertex " + std::to_string(reeb_vertex) + " contains no saddle");

  const detail::LevelSegments segments(complex, field, rv);
  std::vector<int> face_arc(static_cast<std::size_t>(complex.face_count()), -1);

  for (int s : cc.saddles) {
    for (int d : complex.outgoing(s)) {
      const int f0 = SurfaceComplex::face_of(d);
      if (!segments.in_component(f0) || face_arc[static_cast<std::size_t>(f0)] >= 0) continue;
      const LevelPoint start{LevelPoint::Kind::Vertex, s};
      if (!segments.has_endpoint(f0, start)) continue;
      Arc arc;
      arc.id = static_cast<int>(cc.arcs.size());
      arc.faces.push_back(f0);
      int face = f0;
      LevelPoint entry = start;
      int finish = -1;
      for (int guard = 0; guard <= complex.face_count(); ++guard) {
        const LevelPoint exit = segments.other_end(face, entry);
        if (exit.kind == LevelPoint::Kind::Vertex && cc.saddle_index(exit.id) >= 0) {
          finish = exit.id;
          break;
        }
        arc.trace.push_back(exit);
        face = segments.next_face(face, exit);
        arc.faces.push_back(face);
        entry = exit;
      }
      if (finish < 0) throw Error(ErrorCode::InvalidInput, "internal: arc tracing did not terminate");
      arc.start = cc.saddle_index(s);
      arc.finish = cc.saddle_index(finish);
      const LevelPoint first_exit = arc.trace.empty() ? LevelPoint{LevelPoint::Kind::Vertex, finish} : arc.trace.front();
      if (!segments.above_on_left(f0, start, first_exit)) {
        std::reverse(arc.trace.begin(), arc.trace.end());
        std::reverse(arc.faces.begin(), arc.faces.end());
        std::swap(arc.start, arc.finish);
      }
      for (int f : arc.faces) face_arc[static_cast<std::size_t>(f)] = arc.id;
      cc.arcs.push_back(std::move(arc));
    }
  }

  cc.rotation.resize(cc.saddles.size());
  for (std::size_t i = 0; i < cc.saddles.size(); ++i) {
    const int s = cc.saddles[i];
    const LevelPoint here{LevelPoint::Kind::Vertex, s};
    for (int d : complex.outgoing(s)) {
      const int f = SurfaceComplex::face_of(d);
      if (!segments.in_component(f) || !segments.has_endpoint(f, here)) continue;
      const auto& arc = cc.arcs[static_cast<std::size_t>(face_arc[static_cast<std::size_t>(f)])];
      const bool at_start = arc.faces.front() == f && arc.start == static_cast<int>(i);
      cc.rotation[i].push_back({arc.id, at_start ? 0 : 1});
    }
  }
  return cc;
}

std::vector<BoundaryWalk> boundary_walks(const CriticalComponent& component) {
  const int half_edges = 2 * static_cast<int>(component.arcs.size());
  std::vector<int> ccw_next(static_cast<std::size_t>(half_edges), -1), ccw_prev(static_cast<std::size_t>(half_edges), -1);
  for (const auto& ring : component.rotation) {
    for (std::size_t k = 0; k < ring.size(); ++k) {
      const int h = ring[k].half_edge();
      const int n = ring[(k + 1) % ring.size()].half_edge();
      ccw_next[static_cast<std::size_t>(h)] = n;
      ccw_prev[static_cast<std::size_t>(n)] = h;
    }
  }
  std::vector<BoundaryWalk> walks;
  std::vector<char> used(static_cast<std::size_t>(half_edges), 0);
  for (int start = 0; start < half_edges; ++start) {
    if (used[static_cast<std::size_t>(start)]) continue;
    BoundaryWalk walk;
    walk.id = static_cast<int>(walks.size());
    int h = start;
    while (!used[static_cast<std::size_t>(h)]) {
      used[static_cast<std::size_t>(h)] = 1;
      const bool forward = h % 2 == 0;
      walk.steps.push_back({h / 2, forward, forward ? BoundaryWalk::Side::Left : BoundaryWalk::Side::Right});
      // Arrive at the far end, then leave along the clockwise neighbour so the
      // bounded region stays on the left.
      h = ccw_prev[static_cast<std::size_t>(h ^ 1)];
    }
    walks.push_back(std::move(walk));
  }
  return walks;
}

int PartitionXi::region_of(int face, FaceSide side) const {
  return face_region[static_cast<std::size_t>(face)][static_cast<std::size_t>(side)];
}

PartitionXi build_partition(const SurfaceComplex& complex, const ScalarField& field, const ReebGraph& graph,
                            const CriticalComponent& component) {
  const auto& rv = graph.vertex(component.reeb_vertex);
  const detail::LevelSegments segments(complex, field, rv);
  const Decimal& c = component.level;

  PartitionXi xi;
  xi.zero_elements = component.saddles;
  for (const auto& a : component.arcs) xi.one_elements.push_back(a.id);

  const int faces = complex.face_count();
  xi.face_cut.resize(static_cast<std::size_t>(faces));
  for (int f = 0; f < faces; ++f) xi.face_cut[static_cast<std::size_t>(f)] = segments.in_component(f) ? 1 : 0;

  auto node = [](int face, FaceSide side) { return 3 * face + static_cast<int>(side); };
  detail::DisjointSets sets(3 * faces);
  auto piece_on = [&](int face, int edge) {
    if (!xi.face_cut[static_cast<std::size_t>(face)]) return FaceSide::Whole;
    const auto [u, w] = complex.edge(edge);
    return std::max(field[u], field[w]) > c ? FaceSide::Above : FaceSide::Below;
  };
  std::set<int> crossed(rv.crossing_edges.begin(), rv.crossing_edges.end());
  for (int e = 0; e < complex.edge_count(); ++e) {
    const auto [d1, d2] = complex.edge_darts(e);
    const int f1 = SurfaceComplex::face_of(d1), f2 = SurfaceComplex::face_of(d2);
    if (crossed.count(e)) {
      sets.merge(node(f1, FaceSide::Above), node(f2, FaceSide::Above));
      sets.merge(node(f1, FaceSide::Below), node(f2, FaceSide::Below));
    } else {
      sets.merge(node(f1, piece_on(f1, e)), node(f2, piece_on(f2, e)));
    }
  }

  xi.face_region.assign(static_cast<std::size_t>(faces), {-1, -1, -1});
  std::map<int, int> region_of_root;
  for (int f = 0; f < faces; ++f) {
    const bool cut = xi.face_cut[static_cast<std::size_t>(f)];
    for (FaceSide side : {FaceSide::Whole, FaceSide::Above, FaceSide::Below}) {
      if (cut == (side == FaceSide::Whole)) continue;
      const int root = sets.find(node(f, side));
      auto [it, inserted] = region_of_root.emplace(root, static_cast<int>(xi.two_elements.size()));
      if (inserted) xi.two_elements.push_back({it->second, {}, {}});
      xi.two_elements[static_cast<std::size_t>(it->second)].pieces.emplace_back(f, side);
      xi.face_region[static_cast<std::size_t>(f)][static_cast<std::size_t>(side)] = it->second;
    }
  }

  std::set<int> on_component(rv.level_vertices.begin(), rv.level_vertices.end());
  for (int v = 0; v < complex.vertex_count(); ++v) {
    if (on_component.count(v)) continue;
    const int f = SurfaceComplex::face_of(complex.outgoing(v).front());
    FaceSide side = FaceSide::Whole;
    if (xi.face_cut[static_cast<std::size_t>(f)]) side = field[v] > c ? FaceSide::Above : FaceSide::Below;
    xi.two_elements[static_cast<std::size_t>(xi.region_of(f, side))].vertices.push_back(v);
  }
  return xi;
}

void bind_walk_regions(std::vector<BoundaryWalk>& walks, const CriticalComponent& component, const PartitionXi& xi) {
  for (auto& walk : walks) {
    const auto& step = walk.steps.front();
    const auto& arc = component.arcs[static_cast<std::size_t>(step.arc)];
    if (arc.faces.empty()) throw Error(ErrorCode::InvalidInput, "abstract ribbon graph has no regions");
    walk.region = xi.region_of(arc.faces.front(), step.forward ? FaceSide::Above : FaceSide::Below);
  }
}

SpecialReport is_special(const Star& star, const PartitionXi& xi, const ReebGraph& graph) {
  SpecialReport report;
  std::map<int, int> first_germ_of_region;
  for (std::size_t g = 0; g < star.germs.size(); ++g) {
    const auto& germ = star.germs[g];
    const auto& edge = graph.edge(germ.edge);
    const bool up = germ.direction == Germ::Direction::Up;
    const int face = up ? edge.lower_face : edge.upper_face;
    FaceSide side = FaceSide::Whole;
    if (xi.face_cut[static_cast<std::size_t>(face)]) side = up ? FaceSide::Above : FaceSide::Below;
    const int region = xi.region_of(face, side);
    report.germ_to_region.push_back(region);
    auto [it, inserted] = first_germ_of_region.emplace(region, static_cast<int>(g));
    if (!inserted && report.failure_witness.first < 0) report.failure_witness = {it->second, static_cast<int>(g)};
  }
  for (const auto& r : xi.two_elements) {
    if (!first_germ_of_region.count(r.id)) {
      report.unmatched_region = r.id;
      break;
    }
  }
  report.special = report.failure_witness.first < 0 && report.unmatched_region < 0;
  return report;
}

Atom atom_stats(const CriticalComponent& component) {
  Atom atom;
  atom.component = component;
  atom.walks = boundary_walks(component);
  atom.euler = static_cast<int>(component.saddles.size()) - static_cast<int>(component.arcs.size());
  atom.genus = (2 - atom.euler - static_cast<int>(atom.walks.size())) / 2;
  return atom;
}

}  // namespace reebsym

#include "reebsym/surface_complex.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "reebsym/error.hpp"

namespace reebsym {

namespace {

std::string edge_name(int u, int w) { return "edge (" + std::to_string(u) + "," + std::to_string(w) + ")"; }

}  // namespace

SurfaceComplex SurfaceComplex::build(std::span<const Triangle> triangles, int vertex_count) {
  if (triangles.empty()) throw Error(ErrorCode::InvalidInput, "empty triangle list");
  if (vertex_count <= 0) throw Error(ErrorCode::InvalidInput, "vertex count must be positive");
  const int face_count = static_cast<int>(triangles.size());
  for (int f = 0; f < face_count; ++f) {
    const auto& t = triangles[static_cast<std::size_t>(f)];
    for (int x : t)
      if (x < 0 || x >= vertex_count)
        throw Error(ErrorCode::InvalidInput, "face " + std::to_string(f) + " has vertex index out of range");
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
      throw Error(ErrorCode::NonManifold, "face " + std::to_string(f) + " is degenerate");
  }

  // undirected edge -> incident faces
  std::map<std::pair<int, int>, std::vector<int>> edge_faces;
  for (int f = 0; f < face_count; ++f) {
    const auto& t = triangles[static_cast<std::size_t>(f)];
    for (int i = 0; i < 3; ++i) {
      const int u = t[static_cast<std::size_t>(i)], w = t[static_cast<std::size_t>((i + 1) % 3)];
      edge_faces[{std::min(u, w), std::max(u, w)}].push_back(f);
    }
  }
  for (const auto& [key, faces] : edge_faces) {
    if (faces.size() == 1) throw Error(ErrorCode::NotClosed, edge_name(key.first, key.second) + " has one incident face");
    if (faces.size() > 2 || faces[0] == faces[1])
      throw Error(ErrorCode::NonManifold, edge_name(key.first, key.second) + " has " +
                                              std::to_string(faces.size()) + " incident faces");
  }

  // Coherent orientation by breadth-first propagation; also detects disconnection.
  auto has_directed = [](const Triangle& t, bool flipped, int u, int w) {
    for (int i = 0; i < 3; ++i) {
      int a = t[static_cast<std::size_t>(i)], b = t[static_cast<std::size_t>((i + 1) % 3)];
      if (flipped) std::swap(a, b);
      if (a == u && b == w) return true;
    }
    return false;
  };
  std::vector<int> flip(static_cast<std::size_t>(face_count), -1);
  flip[0] = 0;
  std::queue<int> queue;
  queue.push(0);
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop();
    const auto& t = triangles[static_cast<std::size_t>(f)];
    for (int i = 0; i < 3; ++i) {
      const int u = t[static_cast<std::size_t>(i)], w = t[static_cast<std::size_t>((i + 1) % 3)];
      const auto& faces = edge_faces[{std::min(u, w), std::max(u, w)}];
      const int g = faces[0] == f ? faces[1] : faces[0];
      const bool f_has_uw = has_directed(t, flip[static_cast<std::size_t>(f)] == 1, u, w);
      const auto& tg = triangles[static_cast<std::size_t>(g)];
      // g must traverse the shared edge opposite to f
      const int want = has_directed(tg, false, u, w) == f_has_uw ? 1 : 0;
      if (flip[static_cast<std::size_t>(g)] == -1) {
        flip[static_cast<std::size_t>(g)] = want;
        queue.push(g);
      } else if (flip[static_cast<std::size_t>(g)] != want) {
        throw Error(ErrorCode::NonOrientable, "face " + std::to_string(g) + " cannot be oriented coherently");
      }
    }
  }
  for (int f = 0; f < face_count; ++f)
    if (flip[static_cast<std::size_t>(f)] == -1)
      throw Error(ErrorCode::Disconnected, "face " + std::to_string(f) + " is not reachable from face 0");

  SurfaceComplex c;
  c.vertex_count_ = vertex_count;
  c.faces_.reserve(static_cast<std::size_t>(face_count));
  for (int f = 0; f < face_count; ++f) {
    Triangle t = triangles[static_cast<std::size_t>(f)];
    if (flip[static_cast<std::size_t>(f)] == 1) {
      std::swap(t[1], t[2]);
      c.reoriented_ = true;
    }
    c.faces_.push_back(t);
  }

  c.vertex_darts_.assign(static_cast<std::size_t>(vertex_count), {});
  std::map<std::pair<int, int>, int> directed;
  for (int d = 0; d < 3 * face_count; ++d) {
    directed[{c.origin(d), c.target(d)}] = d;
    c.vertex_darts_[static_cast<std::size_t>(c.origin(d))].push_back(d);
  }
  for (int v = 0; v < vertex_count; ++v)
    if (c.vertex_darts_[static_cast<std::size_t>(v)].empty())
      throw Error(ErrorCode::Disconnected, "vertex " + std::to_string(v) + " belongs to no face");

  c.twin_.resize(static_cast<std::size_t>(3 * face_count));
  for (int d = 0; d < 3 * face_count; ++d) {
    auto it = directed.find({c.target(d), c.origin(d)});
    if (it == directed.end())
      throw Error(ErrorCode::NonOrientable, "dart " + edge_name(c.origin(d), c.target(d)) + " has no twin");
    c.twin_[static_cast<std::size_t>(d)] = it->second;
  }

  c.edges_.reserve(edge_faces.size());
  for (const auto& entry : edge_faces) c.edges_.push_back(entry.first);
  c.dart_edge_.resize(static_cast<std::size_t>(3 * face_count));
  for (int d = 0; d < 3 * face_count; ++d) {
    const std::pair<int, int> key{std::min(c.origin(d), c.target(d)), std::max(c.origin(d), c.target(d))};
    c.dart_edge_[static_cast<std::size_t>(d)] =
        static_cast<int>(std::lower_bound(c.edges_.begin(), c.edges_.end(), key) - c.edges_.begin());
  }

  // Each vertex link must be a single cycle.
  for (int v = 0; v < vertex_count; ++v) {
    const auto& darts = c.vertex_darts_[static_cast<std::size_t>(v)];
    int steps = 0;
    int d = darts.front();
    do {
      d = c.rotate_ccw(d);
      ++steps;
    } while (d != darts.front() && steps <= static_cast<int>(darts.size()));
    if (steps != static_cast<int>(darts.size()))
      throw Error(ErrorCode::NonManifold, "link of vertex " + std::to_string(v) + " is not a single cycle");
  }
  return c;
}

int SurfaceComplex::find_edge(int u, int w) const {
  const std::pair<int, int> key{std::min(u, w), std::max(u, w)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<int>(it - edges_.begin());
}

int SurfaceComplex::find_dart(int u, int w) const {
  if (u < 0 || u >= vertex_count_) return -1;
  for (int d : vertex_darts_[static_cast<std::size_t>(u)])
    if (target(d) == w) return d;
  return -1;
}

int SurfaceComplex::find_face(int a, int b, int c) const {
  const int d = find_dart(a, b);
  if (d < 0 || target(next(d)) != c) return -1;
  return face_of(d);
}

std::pair<int, int> SurfaceComplex::edge_darts(int e) const {
  const auto [u, w] = edges_[static_cast<std::size_t>(e)];
  const int d = find_dart(u, w);
  return {d, twin(d)};
}

std::vector<int> SurfaceComplex::outgoing(int v) const {
  const auto& darts = vertex_darts_[static_cast<std::size_t>(v)];
  std::vector<int> out;
  out.reserve(darts.size());
  int d = darts.front();
  do {
    out.push_back(d);
    d = rotate_ccw(d);
  } while (d != darts.front());
  return out;
}

std::vector<int> SurfaceComplex::link(int v) const {
  std::vector<int> out;
  for (int d : outgoing(v)) out.push_back(target(d));
  return out;
}

VertexClass VertexClass::from_sign_changes(int changes, bool all_positive) {
  if (changes == 0) return {all_positive ? Kind::Minimum : Kind::Maximum, 0};
  if (changes == 2) return {Kind::Regular, 1};
  return {Kind::Saddle, changes / 2};
}

std::string VertexClass::name() const {
  switch (kind) {
    case Kind::Minimum: return "minimum";
    case Kind::Maximum: return "maximum";
    case Kind::Regular: return "regular";
    case Kind::Saddle: return "saddle(" + std::to_string(n) + ")";
  }
  return "?";
}

GenericityReport validate_level_generic(const SurfaceComplex& complex, const ScalarField& field) {
  if (field.size() != complex.vertex_count())
    throw Error(ErrorCode::InvalidInput, "field length " + std::to_string(field.size()) +
                                             " does not match vertex count " + std::to_string(complex.vertex_count()));
  GenericityReport report;
  for (const auto& [u, w] : complex.edges())
    if (field[u] == field[w]) report.offending_edges.emplace_back(u, w);
  report.ok = report.offending_edges.empty();
  return report;
}

void require_level_generic(const SurfaceComplex& complex, const ScalarField& field) {
  const auto report = validate_level_generic(complex, field);
  if (!report.ok) {
    const auto [u, w] = report.offending_edges.front();
    throw Error(ErrorCode::NotGeneric, "equal values across " + edge_name(u, w));
  }
}

int link_sign_changes(const SurfaceComplex& complex, const ScalarField& field, int v) {
  const auto link = complex.link(v);
  int changes = 0;
  for (std::size_t i = 0; i < link.size(); ++i) {
    const bool a = field[link[i]] > field[v];
    const bool b = field[link[(i + 1) % link.size()]] > field[v];
    if (a != b) ++changes;
  }
  return changes;
}

VertexClass classify_vertex(const SurfaceComplex& complex, const ScalarField& field, int v) {
  if (v < 0 || v >= complex.vertex_count())
    throw Error(ErrorCode::InvalidVertex, "vertex " + std::to_string(v) + " does not exist");
  if (field.size() != complex.vertex_count()) throw Error(ErrorCode::InvalidInput, "field length mismatch");
  for (int w : complex.link(v))
    if (field[w] == field[v])
      throw Error(ErrorCode::NotGeneric, "equal values across " + edge_name(v, w));
  const int changes = link_sign_changes(complex, field, v);
  return VertexClass::from_sign_changes(changes, field[complex.link(v).front()] > field[v]);
}

SurfaceStats surface_stats(const SurfaceComplex& complex) {
  SurfaceStats stats;
  stats.euler = complex.vertex_count() - complex.edge_count() + complex.face_count();
  stats.genus = (2 - stats.euler) / 2;
  return stats;
}

}  // namespace reebsym

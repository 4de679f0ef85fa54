#include "reebsym/reeb.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "detail/cells.hpp"
#include "detail/disjoint_sets.hpp"
#include "reebsym/error.hpp"

namespace reebsym {

ReebGraph::ReebGraph(std::vector<ReebVertex> vertices, std::vector<ReebEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {}

int ReebGraph::degree(int v) const {
  int d = 0;
  for (const auto& e : edges_) d += (e.lower == v) + (e.upper == v);
  return d;
}

bool ReebGraph::is_connected() const {
  if (vertices_.empty()) return true;
  detail::DisjointSets sets(vertex_count());
  for (const auto& e : edges_) sets.merge(e.lower, e.upper);
  for (int v = 1; v < vertex_count(); ++v)
    if (sets.find(v) != sets.find(0)) return false;
  return true;
}

int ReebProjection::reeb_vertex_of(int mesh_vertex) const {
  const auto& p = vertex_map[static_cast<std::size_t>(mesh_vertex)];
  return p.kind == ReebPoint::Kind::Vertex ? p.id : -1;
}

int Star::index_of(int edge, Germ::Direction direction) const {
  for (std::size_t i = 0; i < germs.size(); ++i)
    if (germs[i].edge == edge && germs[i].direction == direction) return static_cast<int>(i);
  return -1;
}

ReebResult compute_reeb(const SurfaceComplex& complex, const ScalarField& field) {
  require_level_generic(complex, field);
  const auto cells = detail::cell_ranges(complex, field);

  std::vector<char> critical(static_cast<std::size_t>(complex.vertex_count()), 0);
  std::vector<Decimal> values;
  for (int v = 0; v < complex.vertex_count(); ++v) {
    if (link_sign_changes(complex, field, v) != 2) {
      critical[static_cast<std::size_t>(v)] = 1;
      values.push_back(field[v]);
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  const int levels = static_cast<int>(values.size());
  const int slabs = levels - 1;

  std::vector<detail::CellLabels> level_labels, slab_labels;
  for (const auto& c : values) level_labels.push_back(detail::level_components(complex, cells, c));
  for (int i = 0; i < slabs; ++i)
    slab_labels.push_back(detail::slab_components(complex, cells, values[static_cast<std::size_t>(i)],
                                                  values[static_cast<std::size_t>(i + 1)]));

  // Critical level components become Reeb vertices.
  struct VertexKey {
    Decimal value;
    int smallest;
    int level;
    int label;
  };
  std::vector<VertexKey> keys;
  std::vector<std::vector<char>> is_critical_label(static_cast<std::size_t>(levels));
  for (int i = 0; i < levels; ++i) {
    const auto& labels = level_labels[static_cast<std::size_t>(i)];
    std::vector<int> smallest(static_cast<std::size_t>(labels.count), complex.vertex_count());
    auto& crit = is_critical_label[static_cast<std::size_t>(i)];
    crit.assign(static_cast<std::size_t>(labels.count), 0);
    for (int v = 0; v < complex.vertex_count(); ++v) {
      const int l = labels.label[static_cast<std::size_t>(v)];
      if (l < 0) continue;
      smallest[static_cast<std::size_t>(l)] = std::min(smallest[static_cast<std::size_t>(l)], v);
      if (critical[static_cast<std::size_t>(v)]) crit[static_cast<std::size_t>(l)] = 1;
    }
    for (int l = 0; l < labels.count; ++l)
      if (crit[static_cast<std::size_t>(l)])
        keys.push_back({values[static_cast<std::size_t>(i)], smallest[static_cast<std::size_t>(l)], i, l});
  }
  std::sort(keys.begin(), keys.end(), [](const VertexKey& a, const VertexKey& b) {
    return std::tie(a.value, a.smallest) < std::tie(b.value, b.smallest);
  });
  std::map<std::pair<int, int>, int> vertex_of_label;  // (level, label) -> Reeb vertex
  std::vector<ReebVertex> vertices;
  for (const auto& k : keys) {
    ReebVertex rv;
    rv.id = static_cast<int>(vertices.size());
    rv.value = k.value;
    const auto& labels = level_labels[static_cast<std::size_t>(k.level)];
    for (int v = 0; v < complex.vertex_count(); ++v) {
      if (labels.label[static_cast<std::size_t>(v)] != k.label) continue;
      rv.level_vertices.push_back(v);
      if (critical[static_cast<std::size_t>(v)]) rv.critical_vertices.push_back(v);
    }
    for (int e = 0; e < complex.edge_count(); ++e) {
      const auto [u, w] = complex.edge(e);
      if (labels.label[static_cast<std::size_t>(cells.edge_cell(e))] == k.label && field[u] != k.value &&
          field[w] != k.value)
        rv.crossing_edges.push_back(e);
    }
    vertex_of_label[{k.level, k.label}] = rv.id;
    vertices.push_back(std::move(rv));
  }

  // Union slab pieces with the regular level components they touch.
  std::vector<int> piece_base(static_cast<std::size_t>(slabs) + 1, 0);
  for (int i = 0; i < slabs; ++i)
    piece_base[static_cast<std::size_t>(i + 1)] = piece_base[static_cast<std::size_t>(i)] + slab_labels[static_cast<std::size_t>(i)].count;
  const int piece_total = piece_base.back();
  std::vector<int> level_base(static_cast<std::size_t>(levels) + 1, piece_total);
  for (int i = 0; i < levels; ++i)
    level_base[static_cast<std::size_t>(i + 1)] = level_base[static_cast<std::size_t>(i)] + level_labels[static_cast<std::size_t>(i)].count;
  detail::DisjointSets sets(level_base.back());

  struct PieceInfo {
    std::set<int> lower_vertices, upper_vertices;
    int smallest_face = -1;
    int smallest_edge = -1;
  };
  std::vector<PieceInfo> pieces(static_cast<std::size_t>(piece_total));
  for (int i = 0; i < slabs; ++i) {
    const auto& sl = slab_labels[static_cast<std::size_t>(i)];
    for (int cell = 0; cell < cells.size(); ++cell) {
      const int p = sl.label[static_cast<std::size_t>(cell)];
      if (p < 0) continue;
      const int node = piece_base[static_cast<std::size_t>(i)] + p;
      auto& info = pieces[static_cast<std::size_t>(node)];
      if (cell >= cells.face_cell(0) && info.smallest_face < 0) info.smallest_face = cell - cells.face_cell(0);
      if (cell >= cells.edge_cell(0) && cell < cells.face_cell(0) && info.smallest_edge < 0)
        info.smallest_edge = cell - cells.edge_cell(0);
      for (int side = 0; side < 2; ++side) {
        const int level = i + side;
        const int l = level_labels[static_cast<std::size_t>(level)].label[static_cast<std::size_t>(cell)];
        if (l < 0) continue;
        if (is_critical_label[static_cast<std::size_t>(level)][static_cast<std::size_t>(l)]) {
          const int rv = vertex_of_label.at({level, l});
          (side == 0 ? info.lower_vertices : info.upper_vertices).insert(rv);
        } else {
          sets.merge(node, level_base[static_cast<std::size_t>(level)] + l);
        }
      }
    }
  }

  struct EdgeDraft {
    std::set<int> lower, upper;
    int smallest_edge = -1;
    int lower_slab = -1, upper_slab = -1;
    int lower_face = -1, upper_face = -1;
  };
  std::map<int, EdgeDraft> drafts;
  std::vector<int> piece_root(static_cast<std::size_t>(piece_total));
  for (int i = 0; i < slabs; ++i) {
    for (int p = 0; p < slab_labels[static_cast<std::size_t>(i)].count; ++p) {
      const int node = piece_base[static_cast<std::size_t>(i)] + p;
      const int root = sets.find(node);
      piece_root[static_cast<std::size_t>(node)] = root;
      auto& d = drafts[root];
      const auto& info = pieces[static_cast<std::size_t>(node)];
      if (!info.lower_vertices.empty()) {
        d.lower.insert(info.lower_vertices.begin(), info.lower_vertices.end());
        d.lower_slab = i;
        d.lower_face = info.smallest_face;
      }
      if (!info.upper_vertices.empty()) {
        d.upper.insert(info.upper_vertices.begin(), info.upper_vertices.end());
        d.upper_slab = i;
        d.upper_face = info.smallest_face;
      }
      if (info.smallest_edge >= 0 && (d.smallest_edge < 0 || info.smallest_edge < d.smallest_edge))
        d.smallest_edge = info.smallest_edge;
    }
  }

  std::vector<ReebEdge> edges;
  std::map<int, int> draft_index;
  for (const auto& [root, d] : drafts) {
    if (d.lower.size() != 1 || d.upper.size() != 1)
      throw Error(ErrorCode::InvalidInput, "internal: Reeb edge without unique endpoints");
    ReebEdge e;
    e.lower = *d.lower.begin();
    e.upper = *d.upper.begin();
    e.lower_value = vertices[static_cast<std::size_t>(e.lower)].value;
    e.upper_value = vertices[static_cast<std::size_t>(e.upper)].value;
    e.smallest_mesh_edge = d.smallest_edge;
    e.lower_slab = d.lower_slab;
    e.upper_slab = d.upper_slab;
    e.lower_face = d.lower_face;
    e.upper_face = d.upper_face;
    e.id = root;  // temporary: the class root
    edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end(), [](const ReebEdge& a, const ReebEdge& b) {
    return std::tie(a.lower, a.upper, a.smallest_mesh_edge) < std::tie(b.lower, b.upper, b.smallest_mesh_edge);
  });
  for (std::size_t i = 0; i < edges.size(); ++i) {
    draft_index[edges[i].id] = static_cast<int>(i);
    edges[i].id = static_cast<int>(i);
  }

  ReebProjection proj;
  proj.critical_values = values;
  auto edge_of_node = [&](int node) { return draft_index.at(sets.find(node)); };

  proj.vertex_map.resize(static_cast<std::size_t>(complex.vertex_count()));
  for (int v = 0; v < complex.vertex_count(); ++v) {
    auto it = std::lower_bound(values.begin(), values.end(), field[v]);
    if (it != values.end() && *it == field[v]) {
      const int level = static_cast<int>(it - values.begin());
      const int l = level_labels[static_cast<std::size_t>(level)].label[static_cast<std::size_t>(v)];
      if (is_critical_label[static_cast<std::size_t>(level)][static_cast<std::size_t>(l)])
        proj.vertex_map[static_cast<std::size_t>(v)] = {ReebPoint::Kind::Vertex, vertex_of_label.at({level, l})};
      else
        proj.vertex_map[static_cast<std::size_t>(v)] = {ReebPoint::Kind::Edge,
                                                        edge_of_node(level_base[static_cast<std::size_t>(level)] + l)};
    } else {
      const int slab = static_cast<int>(it - values.begin()) - 1;
      const int p = slab_labels[static_cast<std::size_t>(slab)].label[static_cast<std::size_t>(v)];
      proj.vertex_map[static_cast<std::size_t>(v)] = {ReebPoint::Kind::Edge,
                                                      edge_of_node(piece_base[static_cast<std::size_t>(slab)] + p)};
    }
  }

  proj.slab_face_edge.assign(static_cast<std::size_t>(slabs), std::vector<int>(static_cast<std::size_t>(complex.face_count()), -1));
  proj.face_map.resize(static_cast<std::size_t>(complex.face_count()));
  for (int f = 0; f < complex.face_count(); ++f) {
    const int cell = cells.face_cell(f);
    std::set<ReebPoint> points;
    for (int i = 0; i < slabs; ++i) {
      const int p = slab_labels[static_cast<std::size_t>(i)].label[static_cast<std::size_t>(cell)];
      if (p < 0) continue;
      const int e = edge_of_node(piece_base[static_cast<std::size_t>(i)] + p);
      proj.slab_face_edge[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)] = e;
      points.insert({ReebPoint::Kind::Edge, e});
    }
    const auto& [lo, hi] = cells.range[static_cast<std::size_t>(cell)];
    for (int i = 0; i < levels; ++i) {
      const auto& c = values[static_cast<std::size_t>(i)];
      if (!(lo < c && c < hi)) continue;
      const int l = level_labels[static_cast<std::size_t>(i)].label[static_cast<std::size_t>(cell)];
      if (is_critical_label[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)])
        points.insert({ReebPoint::Kind::Vertex, vertex_of_label.at({i, l})});
    }
    proj.face_map[static_cast<std::size_t>(f)].assign(points.begin(), points.end());
  }

  return {ReebGraph(std::move(vertices), std::move(edges)), std::move(proj)};
}

Star star_of(const ReebGraph& graph, int v) {
  if (v < 0 || v >= graph.vertex_count())
    throw Error(ErrorCode::NoSuchVertex, "Reeb vertex " + std::to_string(v) + " does not exist");
  Star star;
  star.center = v;
  for (const auto& e : graph.edges()) {
    if (e.lower == v) star.germs.push_back({e.id, Germ::Direction::Up});
    if (e.upper == v) star.germs.push_back({e.id, Germ::Direction::Down});
  }
  return star;
}

}  // namespace reebsym

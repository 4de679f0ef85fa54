#include "detail/cells.hpp"

#include <algorithm>
#include <functional>

#include "detail/disjoint_sets.hpp"

namespace reebsym::detail {

CellRanges cell_ranges(const SurfaceComplex& complex, const ScalarField& field) {
  CellRanges cells;
  cells.vertices = complex.vertex_count();
  cells.edges = complex.edge_count();
  cells.faces = complex.face_count();
  cells.range.reserve(static_cast<std::size_t>(cells.size()));
  for (int v = 0; v < cells.vertices; ++v) cells.range.emplace_back(field[v], field[v]);
  for (const auto& [u, w] : complex.edges())
    cells.range.emplace_back(std::min(field[u], field[w]), std::max(field[u], field[w]));
  for (const auto& t : complex.faces()) {
    const auto [lo, hi] = std::minmax({field[t[0]], field[t[1]], field[t[2]]});
    cells.range.emplace_back(lo, hi);
  }
  return cells;
}

namespace {

CellLabels components(const SurfaceComplex& complex, const CellRanges& cells,
                      const std::function<bool(const Decimal&, const Decimal&)>& meets) {
  std::vector<char> in(static_cast<std::size_t>(cells.size()));
  for (int i = 0; i < cells.size(); ++i) {
    const auto& [lo, hi] = cells.range[static_cast<std::size_t>(i)];
    in[static_cast<std::size_t>(i)] = meets(lo, hi) ? 1 : 0;
  }
  DisjointSets sets(cells.size());
  for (int e = 0; e < cells.edges; ++e) {
    const int ce = cells.edge_cell(e);
    if (!in[static_cast<std::size_t>(ce)]) continue;
    const auto [u, w] = complex.edge(e);
    if (in[static_cast<std::size_t>(u)]) sets.merge(ce, u);
    if (in[static_cast<std::size_t>(w)]) sets.merge(ce, w);
  }
  for (int f = 0; f < cells.faces; ++f) {
    const int cf = cells.face_cell(f);
    if (!in[static_cast<std::size_t>(cf)]) continue;
    for (int i = 0; i < 3; ++i) {
      const int ce = cells.edge_cell(complex.edge_of_dart(3 * f + i));
      if (in[static_cast<std::size_t>(ce)]) sets.merge(cf, ce);
    }
  }
  CellLabels labels;
  labels.label.assign(static_cast<std::size_t>(cells.size()), -1);
  std::vector<int> root_label(static_cast<std::size_t>(cells.size()), -1);
  for (int i = 0; i < cells.size(); ++i) {
    if (!in[static_cast<std::size_t>(i)]) continue;
    const int r = sets.find(i);
    if (root_label[static_cast<std::size_t>(r)] < 0) root_label[static_cast<std::size_t>(r)] = labels.count++;
    labels.label[static_cast<std::size_t>(i)] = root_label[static_cast<std::size_t>(r)];
  }
  return labels;
}

}  // namespace

CellLabels level_components(const SurfaceComplex& complex, const CellRanges& cells, const Decimal& level) {
  return components(complex, cells, [&](const Decimal& lo, const Decimal& hi) { return lo <= level && level <= hi; });
}

CellLabels slab_components(const SurfaceComplex& complex, const CellRanges& cells, const Decimal& lo,
                           const Decimal& hi) {
  return components(complex, cells, [&](const Decimal& a, const Decimal& b) { return a < hi && b > lo; });
}

}  // namespace reebsym::detail

#pragma once

#include <utility>
#include <vector>

#include "reebsym/decimal.hpp"
#include "reebsym/surface_complex.hpp"

namespace reebsym::detail {

// Cells of a complex indexed as: vertices, then edges, then faces.
struct CellRanges {
  std::vector<std::pair<Decimal, Decimal>> range;  // min/max of the field over the cell
  int vertices = 0;
  int edges = 0;
  int faces = 0;

  int edge_cell(int e) const { return vertices + e; }
  int face_cell(int f) const { return vertices + edges + f; }
  int size() const { return vertices + edges + faces; }
};

CellRanges cell_ranges(const SurfaceComplex& complex, const ScalarField& field);

// Connected components of {x : lo <= f(x) <= hi} (closed) or lo < f(x) < hi
// (open). Returns a component label per cell, -1 for cells missing the set,
// and the number of components. Two cells meeting the set are joined when
// one is a face of the other, which is exact for piecewise-linear fields.
struct CellLabels {
  std::vector<int> label;
  int count = 0;
};

CellLabels level_components(const SurfaceComplex& complex, const CellRanges& cells, const Decimal& level);
CellLabels slab_components(const SurfaceComplex& complex, const CellRanges& cells, const Decimal& lo,
                           const Decimal& hi);

}  // namespace reebsym::detail

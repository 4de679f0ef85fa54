#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "reebsym/decimal.hpp"
#include "reebsym/surface_complex.hpp"

namespace reebsym {

/// Text surface format:
///
///     SRF 1
///     vertices <n>
///     <value>            (n lines, decimal literals)
///     triangles <m>
///     <a> <b> <c>        (m lines, 0-based vertex indices)
///
/// Blank lines and text after '#' are ignored.
struct SrfDocument {
  std::vector<Decimal> values;
  std::vector<Triangle> triangles;

  int vertex_count() const { return static_cast<int>(values.size()); }
};

/// Throws ParseError with the offending line number.
SrfDocument parse_srf(std::string_view text);
SrfDocument read_srf_file(const std::string& path);
std::string write_srf(const SrfDocument& doc);

/// A validated surface with its field.
struct FieldSurface {
  SurfaceComplex complex;
  ScalarField field;
};

FieldSurface to_field_surface(const SrfDocument& doc);

}  // namespace reebsym

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "reebsym/decimal.hpp"

namespace reebsym {

using Triangle = std::array<int, 3>;

/// Closed, connected, coherently oriented triangulated surface stored as darts.
///
/// Dart `3*f + i` runs from corner i to corner i+1 of face f, so next() cycles
/// inside a face and twin() jumps to the opposite dart of the neighbouring
/// face. Faces are stored in the coherent orientation chosen at build time;
/// `reoriented()` reports whether any input face had to be flipped.
class SurfaceComplex {
 public:
  /// Validates and builds. Throws NonManifold, NotClosed, Disconnected or
  /// NonOrientable naming the first offending cell.
  static SurfaceComplex build(std::span<const Triangle> triangles, int vertex_count);

  int vertex_count() const { return vertex_count_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int dart_count() const { return static_cast<int>(twin_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  static int face_of(int dart) { return dart / 3; }
  static int next(int dart) { return dart - dart % 3 + (dart % 3 + 1) % 3; }
  static int prev(int dart) { return dart - dart % 3 + (dart % 3 + 2) % 3; }
  int twin(int dart) const { return twin_[static_cast<std::size_t>(dart)]; }
  int origin(int dart) const { return faces_[static_cast<std::size_t>(dart / 3)][static_cast<std::size_t>(dart % 3)]; }
  int target(int dart) const { return origin(next(dart)); }
  /// Outgoing dart of the same vertex, one step counter-clockwise.
  int rotate_ccw(int dart) const { return twin(prev(dart)); }
  int edge_of_dart(int dart) const { return dart_edge_[static_cast<std::size_t>(dart)]; }

  const Triangle& face(int f) const { return faces_[static_cast<std::size_t>(f)]; }
  const std::vector<Triangle>& faces() const { return faces_; }

  /// Undirected edges sorted by (min vertex, max vertex); ids index this list.
  const std::pair<int, int>& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  /// Edge id joining u and w, or -1.
  int find_edge(int u, int w) const;
  /// Dart from u to w, or -1.
  int find_dart(int u, int w) const;
  /// Face with the given (cyclically ordered, oriented) corners, or -1.
  int find_face(int a, int b, int c) const;
  /// The two darts of an edge; the first has the smaller origin.
  std::pair<int, int> edge_darts(int e) const;

  /// Outgoing darts of v in counter-clockwise order, starting at the
  /// smallest dart id.
  std::vector<int> outgoing(int v) const;
  /// Link vertices of v in counter-clockwise order (targets of outgoing()).
  std::vector<int> link(int v) const;
  int degree(int v) const { return static_cast<int>(vertex_darts_[static_cast<std::size_t>(v)].size()); }

  bool reoriented() const { return reoriented_; }

 private:
  int vertex_count_ = 0;
  bool reoriented_ = false;
  std::vector<Triangle> faces_;
  std::vector<int> twin_;
  std::vector<int> dart_edge_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> vertex_darts_;  // outgoing darts, sorted
};

/// One exact value per vertex.
class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(std::vector<Decimal> values) : values_(std::move(values)) {}

  int size() const { return static_cast<int>(values_.size()); }
  const Decimal& operator[](int v) const { return values_[static_cast<std::size_t>(v)]; }
  const std::vector<Decimal>& values() const { return values_; }

 private:
  std::vector<Decimal> values_;
};

struct VertexClass {
  enum class Kind { Minimum, Maximum, Regular, Saddle };
  Kind kind = Kind::Regular;
  /// Half the number of link sign changes; meaningful for saddles (n >= 2).
  int n = 1;

  static VertexClass from_sign_changes(int changes, bool all_positive);
  bool is_critical() const { return kind != Kind::Regular; }
  std::string name() const;
  friend bool operator==(const VertexClass&, const VertexClass&) = default;
};

struct GenericityReport {
  bool ok = true;
  std::vector<std::pair<int, int>> offending_edges;
};

struct SurfaceStats {
  int euler = 0;
  int genus = 0;
};

GenericityReport validate_level_generic(const SurfaceComplex& complex, const ScalarField& field);

/// Throws NotGeneric when the field is not level-generic.
void require_level_generic(const SurfaceComplex& complex, const ScalarField& field);

/// Number of sign changes of (link value - centre value) around v.
int link_sign_changes(const SurfaceComplex& complex, const ScalarField& field, int v);

VertexClass classify_vertex(const SurfaceComplex& complex, const ScalarField& field, int v);

SurfaceStats surface_stats(const SurfaceComplex& complex);

}  // namespace reebsym

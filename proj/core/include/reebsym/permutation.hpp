#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace reebsym {

/// Bijection of {0, ..., n-1}. Composition reads right to left:
/// (a * b)(x) == a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Parses cycle notation such as "(0 1)(2 3)"; "()" or "" is the identity.
  static Permutation from_cycles(std::string_view text, int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  int order() const;
  std::vector<int> fixed_points() const;
  std::string cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Finite permutation group held as a full, sorted element list.
class PermutationGroup {
 public:
  PermutationGroup() = default;

  /// Closure of the generators. Throws SizeLimit when the group outgrows `limit`.
  static PermutationGroup generate(int degree, std::vector<Permutation> generators,
                                   std::size_t limit = 10000);
  static PermutationGroup trivial(int degree);

  int degree() const { return degree_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  bool contains(const Permutation& p) const;
  /// Position in elements(), or -1.
  int index_of(const Permutation& p) const;
  bool is_subgroup_of(const PermutationGroup& other) const;

 private:
  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

}  // namespace reebsym

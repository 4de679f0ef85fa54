#include "reebsym/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "reebsym/error.hpp"

namespace reebsym {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= size() || seen[static_cast<std::size_t>(x)])
      throw Error(ErrorCode::InvalidInput, "not a permutation");
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::string_view text, int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw Error(ErrorCode::ParseError, "expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (i >= text.size()) throw Error(ErrorCode::ParseError, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      int value = 0;
      bool any = false;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        value = value * 10 + (text[i] - '0');
        any = true;
        ++i;
      }
      if (!any) throw Error(ErrorCode::ParseError, "expected integer in cycle notation");
      if (value >= n) throw Error(ErrorCode::ParseError, "cycle entry out of range");
      if (used[static_cast<std::size_t>(value)])
        throw Error(ErrorCode::ParseError, "entry repeated in cycle notation");
      used[static_cast<std::size_t>(value)] = 1;
      cycle.push_back(value);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    skip_space();
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

int Permutation::order() const {
  long long result = 1;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    long long length = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = images_[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = 1;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return static_cast<int>(result);
}

std::vector<int> Permutation::fixed_points() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (images_[static_cast<std::size_t>(i)] == i) out.push_back(i);
  return out;
}

std::string Permutation::cycles() const {
  std::ostringstream out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<std::size_t>(i)] || images_[static_cast<std::size_t>(i)] == i) continue;
    out << '(';
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = images_[static_cast<std::size_t>(j)]) {
      if (j != i) out << ' ';
      out << j;
      seen[static_cast<std::size_t>(j)] = 1;
    }
    out << ')';
  }
  const std::string s = out.str();
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidInput, "permutation degree mismatch");
  std::vector<int> images(b.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

PermutationGroup PermutationGroup::generate(int degree, std::vector<Permutation> generators,
                                            std::size_t limit) {
  for (const auto& g : generators)
    if (g.size() != degree) throw Error(ErrorCode::InvalidInput, "generator degree mismatch");
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& g : generators) {
        Permutation q = g * p;
        if (seen.insert(q).second) {
          if (seen.size() > limit)
            throw Error(ErrorCode::SizeLimit, "group exceeds " + std::to_string(limit) + " elements");
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  PermutationGroup group;
  group.degree_ = degree;
  group.generators_ = std::move(generators);
  group.elements_.assign(seen.begin(), seen.end());
  return group;
}

PermutationGroup PermutationGroup::trivial(int degree) { return generate(degree, {}); }

int PermutationGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return -1;
  return static_cast<int>(it - elements_.begin());
}

bool PermutationGroup::contains(const Permutation& p) const { return index_of(p) >= 0; }

bool PermutationGroup::is_subgroup_of(const PermutationGroup& other) const {
  if (other.degree_ != degree_) return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const Permutation& p) { return other.contains(p); });
}

}  // namespace reebsym

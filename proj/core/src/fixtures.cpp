#include "reebsym/fixtures.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <random>

#include "reebsym/error.hpp"

namespace reebsym {

namespace {

constexpr double kPi = 3.14159265358979323846;

/// Jitter in units of 10^-scale, drawn from [1, bound].
class Jitter {
 public:
  explicit Jitter(std::uint64_t seed) : rng_(seed) {}
  long long draw(long long bound) { return std::uniform_int_distribution<long long>(1, bound)(rng_); }

 private:
  std::mt19937_64 rng_;
};

Decimal units(long long value, int scale) { return Decimal::from_scaled(value, scale); }

SrfDocument sphere_height(std::uint64_t seed) {
  Jitter jitter(seed);
  SrfDocument doc;
  doc.values = {Decimal::from_int(1), Decimal::from_int(-1)};
  for (int i = 1; i <= 4; ++i) doc.values.push_back(units(1000 * i + jitter.draw(99), 4));
  doc.triangles = {{0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 2}, {1, 3, 2}, {1, 4, 3}, {1, 5, 4}, {1, 2, 5}};
  return doc;
}

SrfDocument torus_height(std::uint64_t seed) {
  constexpr int n = 6;  // around the tube
  constexpr int m = 6;  // around the axis
  constexpr double R = 3.0;
  constexpr double r = 1.0;
  Jitter jitter(seed);
  auto id = [](int i, int j) { return ((i % n + n) % n) * m + ((j % m + m) % m); };

  SrfDocument doc;
  doc.values.resize(static_cast<std::size_t>(n * m));
  std::map<int, Decimal> orbit_value;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      const int rep = std::min(id(i, j), id(-i, -j));
      auto it = orbit_value.find(rep);
      if (it == orbit_value.end()) {
        const int ri = rep / m;
        const int rj = rep % m;
        const double z = -(R + r * std::cos(2 * kPi * ri / n)) * std::cos(2 * kPi * rj / m);
        const long long scaled = std::llround(z * 1e6) * 100 + jitter.draw(99);
        it = orbit_value.emplace(rep, units(scaled, 8)).first;
      }
      doc.values[static_cast<std::size_t>(id(i, j))] = it->second;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      doc.triangles.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      doc.triangles.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  return doc;
}

SrfDocument beachball(int k, std::uint64_t seed) {
  const int cols = 2 * k;
  Jitter jitter(seed);
  // ring magnitudes: 1, 3, 2; sign by column parity
  long long level[3][2];
  const long long base[3] = {1, 3, 2};
  for (int ring = 0; ring < 3; ++ring)
    for (int parity = 0; parity < 2; ++parity)
      level[ring][parity] = (parity == 0 ? 1 : -1) * (base[ring] * 10000 + jitter.draw(999));

  const int north = 0;
  const int south = 1;
  auto at = [cols](int ring, int col) { return 2 + ring * cols + ((col % cols) + cols) % cols; };

  SrfDocument doc;
  doc.values.assign(static_cast<std::size_t>(2 + 3 * cols), Decimal::from_int(0));
  for (int ring = 0; ring < 3; ++ring)
    for (int c = 0; c < cols; ++c) doc.values[static_cast<std::size_t>(at(ring, c))] = units(level[ring][c % 2], 4);

  for (int c = 0; c < cols; ++c) {
    doc.triangles.push_back({north, at(0, c), at(0, c + 1)});
    for (int ring = 0; ring < 2; ++ring) {
      doc.triangles.push_back({at(ring, c), at(ring + 1, c), at(ring + 1, c + 1)});
      doc.triangles.push_back({at(ring, c), at(ring + 1, c + 1), at(ring, c + 1)});
    }
    doc.triangles.push_back({south, at(2, c + 1), at(2, c)});
  }
  return doc;
}

SrfDocument flower(int k, std::uint64_t seed) {
  const int cols = 2 * k;
  Jitter jitter(seed);
  const long long petal = 10000 + jitter.draw(999);
  const long long valley = -10000 + jitter.draw(999);
  const long long outer_low = -25000 + jitter.draw(999);
  const long long outer_high = -20000 + jitter.draw(999);
  const long long pole = -30000 + jitter.draw(999);

  const int centre = 0;
  const int pole_id = 1;
  auto inner = [cols](int c) { return 2 + ((c % cols) + cols) % cols; };
  auto outer = [cols](int c) { return 2 + cols + ((c % cols) + cols) % cols; };

  SrfDocument doc;
  doc.values.assign(static_cast<std::size_t>(2 + 2 * cols), Decimal::from_int(0));
  doc.values[1] = units(pole, 4);
  for (int c = 0; c < cols; ++c) {
    doc.values[static_cast<std::size_t>(inner(c))] = units(c % 2 == 0 ? petal : valley, 4);
    doc.values[static_cast<std::size_t>(outer(c))] = units(c % 2 == 0 ? outer_low : outer_high, 4);
  }
  for (int c = 0; c < cols; ++c) {
    doc.triangles.push_back({centre, inner(c), inner(c + 1)});
    doc.triangles.push_back({inner(c), outer(c), outer(c + 1)});
    doc.triangles.push_back({inner(c), outer(c + 1), inner(c + 1)});
    doc.triangles.push_back({pole_id, outer(c + 1), outer(c)});
  }
  return doc;
}

}  // namespace

FixtureSpec FixtureSpec::parse(std::string_view name, int k, std::uint64_t seed) {
  FixtureSpec spec;
  spec.k = k;
  spec.seed = seed;
  if (auto open = name.find('('); open != std::string_view::npos) {
    if (name.back() != ')') throw Error(ErrorCode::BadParameter, "malformed fixture name '" + std::string(name) + "'");
    const auto arg = name.substr(open + 1, name.size() - open - 2);
    int value = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), value);
    if (ec != std::errc() || ptr != arg.data() + arg.size())
      throw Error(ErrorCode::BadParameter, "malformed fixture parameter '" + std::string(arg) + "'");
    spec.k = value;
    name = name.substr(0, open);
  }
  if (name == "sphere_height") {
    spec.kind = Kind::SphereHeight;
  } else if (name == "torus_height") {
    spec.kind = Kind::TorusHeight;
  } else if (name == "beachball") {
    spec.kind = Kind::Beachball;
  } else if (name == "flower") {
    spec.kind = Kind::Flower;
  } else {
    throw Error(ErrorCode::BadParameter, "unknown fixture '" + std::string(name) + "'");
  }
  return spec;
}

std::string FixtureSpec::name() const {
  switch (kind) {
    case Kind::SphereHeight: return "sphere_height";
    case Kind::TorusHeight: return "torus_height";
    case Kind::Beachball: return "beachball(" + std::to_string(k) + ")";
    case Kind::Flower: return "flower(" + std::to_string(k) + ")";
  }
  return {};
}

SrfDocument make_fixture(const FixtureSpec& spec) {
  switch (spec.kind) {
    case FixtureSpec::Kind::SphereHeight: return sphere_height(spec.seed);
    case FixtureSpec::Kind::TorusHeight: return torus_height(spec.seed);
    case FixtureSpec::Kind::Beachball:
    case FixtureSpec::Kind::Flower:
      if (spec.k < 2) throw Error(ErrorCode::BadParameter, "fixture parameter k must be at least 2");
      if (spec.k > 64) throw Error(ErrorCode::BadParameter, "fixture parameter k must be at most 64");
      return spec.kind == FixtureSpec::Kind::Beachball ? beachball(spec.k, spec.seed) : flower(spec.k, spec.seed);
  }
  throw Error(ErrorCode::BadParameter, "unknown fixture");
}

}  // namespace reebsym

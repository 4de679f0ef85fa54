#include <random>

#include <gtest/gtest.h>

#include "reebsym/error.hpp"
#include "reebsym/group.hpp"
#include "reebsym/surface_complex.hpp"
#include "test_support.hpp"

using namespace reebsym;
using reebsym::testing::decimals;
using reebsym::testing::fixture;

namespace {

const std::vector<Triangle> kTetrahedron = {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}};
const std::vector<Triangle> kOctahedron = {{0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 2},
                                           {1, 3, 2}, {1, 4, 3}, {1, 5, 4}, {1, 2, 5}};

std::vector<Triangle> seven_vertex_torus() {
  std::vector<Triangle> t;
  for (int i = 0; i < 7; ++i) {
    t.push_back({i, (i + 1) % 7, (i + 3) % 7});
    t.push_back({i, (i + 3) % 7, (i + 2) % 7});
  }
  return t;
}

// a ring of `n` around apex 0, closed by apex 1
std::vector<Triangle> suspension(int n) {
  std::vector<Triangle> t;
  for (int i = 0; i < n; ++i) {
    t.push_back({0, 2 + i, 2 + (i + 1) % n});
    t.push_back({1, 2 + (i + 1) % n, 2 + i});
  }
  return t;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST(SurfaceComplex, Tetrahedron) {
  const auto c = SurfaceComplex::build(kTetrahedron, 4);
  EXPECT_EQ(surface_stats(c).euler, 2);
  EXPECT_EQ(c.edge_count(), 6);
}

TEST(SurfaceComplex, OctahedronDarts) {
  const auto c = SurfaceComplex::build(kOctahedron, 6);
  EXPECT_EQ(c.edge_count(), 12);
  EXPECT_EQ(surface_stats(c).euler, 2);
  EXPECT_EQ(surface_stats(c).genus, 0);
  for (int d = 0; d < c.dart_count(); ++d) {
    EXPECT_NE(c.twin(d), d);
    EXPECT_EQ(c.twin(c.twin(d)), d);
    EXPECT_EQ(SurfaceComplex::next(SurfaceComplex::next(SurfaceComplex::next(d))), d);
    EXPECT_EQ(c.origin(c.twin(d)), c.target(d));
  }
  EXPECT_EQ(c.link(0).size(), 4u);
}

TEST(SurfaceComplex, SevenVertexTorus) {
  const auto c = SurfaceComplex::build(seven_vertex_torus(), 7);
  EXPECT_EQ(surface_stats(c).euler, 0);
  EXPECT_EQ(surface_stats(c).genus, 1);
}

TEST(SurfaceComplex, ReorientsInconsistentInput) {
  auto flipped = kOctahedron;
  std::swap(flipped[3][1], flipped[3][2]);
  const auto c = SurfaceComplex::build(flipped, 6);
  EXPECT_TRUE(c.reoriented());
  EXPECT_EQ(surface_stats(c).euler, 2);
}

TEST(SurfaceComplex, RejectsInvalidMeshes) {
  const std::vector<Triangle> strip = {{0, 1, 2}, {1, 3, 2}, {2, 3, 4}, {3, 5, 4}};
  EXPECT_EQ(code_of([&] { SurfaceComplex::build(strip, 6); }), ErrorCode::NotClosed);

  auto fin = kTetrahedron;
  fin.push_back({0, 1, 4});
  fin.push_back({0, 4, 1});
  EXPECT_EQ(code_of([&] { SurfaceComplex::build(fin, 5); }), ErrorCode::NonManifold);

  auto two = kTetrahedron;
  for (const auto& t : kTetrahedron) two.push_back({t[0] + 4, t[1] + 4, t[2] + 4});
  EXPECT_EQ(code_of([&] { SurfaceComplex::build(two, 8); }), ErrorCode::Disconnected);

  const std::vector<Triangle> rp2 = {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                                     {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}};
  EXPECT_EQ(code_of([&] { SurfaceComplex::build(rp2, 6); }), ErrorCode::NonOrientable);

  EXPECT_EQ(code_of([&] { SurfaceComplex::build(std::vector<Triangle>{{0, 1, 9}}, 3); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([&] { SurfaceComplex::build(std::vector<Triangle>{}, 0); }), ErrorCode::InvalidInput);
}

TEST(LevelGeneric, OctahedronDistinctValues) {
  const auto c = SurfaceComplex::build(kOctahedron, 6);
  const ScalarField f(decimals({"1", "-1", "0.1", "0.2", "0.3", "0.4"}));
  EXPECT_TRUE(validate_level_generic(c, f).ok);
}

TEST(LevelGeneric, ReportsEqualNeighbours) {
  const auto c = SurfaceComplex::build(kOctahedron, 6);
  const ScalarField f(decimals({"1", "-1", "0", "0.00", "0.3", "0.4"}));
  const auto report = validate_level_generic(c, f);
  EXPECT_FALSE(report.ok);
  ASSERT_EQ(report.offending_edges.size(), 1u);
  EXPECT_EQ(report.offending_edges[0], std::make_pair(2, 3));
  EXPECT_EQ(code_of([&] { classify_vertex(c, f, 2); }), ErrorCode::NotGeneric);
}

TEST(LevelGeneric, FixturesAreGeneric) {
  for (const auto& name : reebsym::testing::all_fixtures())
    for (std::uint64_t seed : {0u, 1u, 17u}) {
      const auto s = fixture(name, seed);
      EXPECT_TRUE(validate_level_generic(s.complex, s.field).ok) << name << " seed " << seed;
    }
}

TEST(Classify, ExtremaAndSaddles) {
  const auto octa = SurfaceComplex::build(kOctahedron, 6);
  const ScalarField f(decimals({"1", "-1", "0.1", "0.2", "0.3", "0.4"}));
  EXPECT_EQ(classify_vertex(octa, f, 0).kind, VertexClass::Kind::Maximum);
  EXPECT_EQ(classify_vertex(octa, f, 1).kind, VertexClass::Kind::Minimum);
  for (int v = 2; v < 6; ++v) EXPECT_EQ(classify_vertex(octa, f, v).kind, VertexClass::Kind::Regular);
  EXPECT_EQ(code_of([&] { classify_vertex(octa, f, 6); }), ErrorCode::InvalidVertex);
}

TEST(Classify, MorseSaddleHasFourSignChanges) {
  const auto c = SurfaceComplex::build(suspension(4), 6);
  const ScalarField f(decimals({"0", "5", "1", "-1", "2", "-2"}));
  EXPECT_EQ(link_sign_changes(c, f, 0), 4);
  EXPECT_EQ(classify_vertex(c, f, 0), (VertexClass{VertexClass::Kind::Saddle, 2}));
}

TEST(Classify, ThreeLineSaddleHasSixSignChanges) {
  const auto c = SurfaceComplex::build(suspension(6), 8);
  const ScalarField f(decimals({"0", "5", "1", "-1", "2", "-2", "3", "-3"}));
  EXPECT_EQ(link_sign_changes(c, f, 0), 6);
  EXPECT_EQ(classify_vertex(c, f, 0), (VertexClass{VertexClass::Kind::Saddle, 3}));
  EXPECT_EQ(classify_vertex(c, f, 0).name(), "saddle(3)");
}

namespace {

int poincare_hopf_twice(const SurfaceComplex& c, const ScalarField& f) {
  int sum = 0;
  for (int v = 0; v < c.vertex_count(); ++v) sum += 2 - link_sign_changes(c, f, v);
  return sum;
}

}  // namespace

TEST(Classify, PoincareHopfOnFixtures) {
  for (const auto& name : reebsym::testing::all_fixtures()) {
    const auto s = fixture(name);
    EXPECT_EQ(poincare_hopf_twice(s.complex, s.field), 2 * surface_stats(s.complex).euler) << name;
  }
}

TEST(Classify, PoincareHopfOnRandomFields) {
  std::mt19937_64 rng(20261016);
  for (const auto& name : reebsym::testing::all_fixtures()) {
    const auto s = fixture(name);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<long long> order(static_cast<std::size_t>(s.complex.vertex_count()));
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<Decimal> values;
      for (long long x : order) values.push_back(Decimal::from_scaled(x * 7 - 50, 1));
      const ScalarField f(std::move(values));
      ASSERT_TRUE(validate_level_generic(s.complex, f).ok);
      EXPECT_EQ(poincare_hopf_twice(s.complex, f), 2 * surface_stats(s.complex).euler) << name << " trial " << trial;
    }
  }
}

TEST(Classify, InvariantUnderFieldAutomorphisms) {
  for (const char* name : {"beachball(3)", "flower(3)", "torus_height"}) {
    const auto s = fixture(name);
    const auto group = compute_stabilizer_group(s.complex, s.field);
    for (const auto& h : group.elements())
      for (int v = 0; v < s.complex.vertex_count(); ++v)
        EXPECT_EQ(classify_vertex(s.complex, s.field, v), classify_vertex(s.complex, s.field, h.vertex(v)));
  }
}

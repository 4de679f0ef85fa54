#include <gtest/gtest.h>

#include "reebsym/atom.hpp"
#include "reebsym/error.hpp"
#include "test_support.hpp"

using namespace reebsym;
using reebsym::testing::fixture;

namespace {

struct Level {
  FieldSurface surface;
  ReebResult reeb;
  CriticalComponent cc;
  std::vector<BoundaryWalk> walks;
  PartitionXi xi;
};

Level level_of(const FieldSurface& s, const ReebResult& r, int v) {
  Level out{s, r, extract_critical_component(s.complex, s.field, r.graph, v), {}, {}};
  out.walks = boundary_walks(out.cc);
  out.xi = build_partition(s.complex, s.field, r.graph, out.cc);
  bind_walk_regions(out.walks, out.cc, out.xi);
  return out;
}

Level level_of(const std::string& name, int v) {
  const auto s = fixture(name);
  return level_of(s, compute_reeb(s.complex, s.field), v);
}

int saddle_vertex_of(const std::string& name) {
  const auto s = fixture(name);
  const auto g = compute_reeb(s.complex, s.field).graph;
  return reebsym::testing::saddle_vertices(s, g).front();
}

int arc_degree(const CriticalComponent& cc, int saddle) { return static_cast<int>(cc.rotation[static_cast<std::size_t>(saddle)].size()); }

// position on the counter-clockwise boundary of a face: corners even, edge crossings odd
int boundary_position(const SurfaceComplex& c, int face, const LevelPoint& p) {
  for (int i = 0; i < 3; ++i) {
    const int d = 3 * face + i;
    if (p.kind == LevelPoint::Kind::Vertex && c.origin(d) == p.id) return 2 * i;
    if (p.kind == LevelPoint::Kind::Edge && c.edge_of_dart(d) == p.id) return 2 * i + 1;
  }
  return -1;
}

}  // namespace

TEST(CriticalComponent, TorusLowerSaddleIsAFigureEight) {
  const auto l = level_of("torus_height", 1);
  ASSERT_EQ(l.cc.saddles.size(), 1u);
  ASSERT_EQ(l.cc.arcs.size(), 2u);
  for (const auto& a : l.cc.arcs) EXPECT_EQ(a.start, a.finish);
  EXPECT_EQ(arc_degree(l.cc, 0), 4);
}

TEST(CriticalComponent, BeachballTwoCentre) {
  const auto l = level_of("beachball(2)", 2);
  EXPECT_EQ(l.cc.saddles, (std::vector<int>{0, 1}));
  EXPECT_EQ(l.cc.arcs.size(), 4u);
  EXPECT_EQ(arc_degree(l.cc, 0), 4);
  EXPECT_EQ(arc_degree(l.cc, 1), 4);
}

TEST(CriticalComponent, FlowerThreeCentre) {
  const auto l = level_of("flower(3)", saddle_vertex_of("flower(3)"));
  ASSERT_EQ(l.cc.saddles.size(), 1u);
  EXPECT_EQ(l.cc.arcs.size(), 3u);
  EXPECT_EQ(arc_degree(l.cc, 0), 6);
}

TEST(CriticalComponent, RejectsExtremumVertex) {
  const auto s = fixture("beachball(2)");
  const auto r = compute_reeb(s.complex, s.field);
  try {
    extract_critical_component(s.complex, s.field, r.graph, 0);
    FAIL() << "extremum accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCritical);
  }
}

TEST(CriticalComponent, ArcsKeepHigherSideOnTheLeft) {
  for (const auto& name : reebsym::testing::all_fixtures()) {
    const auto s = fixture(name);
    const auto r = compute_reeb(s.complex, s.field);
    for (int v : reebsym::testing::saddle_vertices(s, r.graph)) {
      const auto cc = extract_critical_component(s.complex, s.field, r.graph, v);
      for (const auto& arc : cc.arcs) {
        std::vector<LevelPoint> points = {{LevelPoint::Kind::Vertex, cc.saddles[static_cast<std::size_t>(arc.start)]}};
        points.insert(points.end(), arc.trace.begin(), arc.trace.end());
        points.push_back({LevelPoint::Kind::Vertex, cc.saddles[static_cast<std::size_t>(arc.finish)]});
        ASSERT_EQ(arc.faces.size() + 1, points.size());
        for (std::size_t k = 0; k < arc.faces.size(); ++k) {
          const int face = arc.faces[k];
          const int p = boundary_position(s.complex, face, points[k]);
          const int q = boundary_position(s.complex, face, points[k + 1]);
          ASSERT_GE(p, 0);
          ASSERT_GE(q, 0);
          int left = 0;
          int right = 0;
          for (int x = (q + 1) % 6; x != p; x = (x + 1) % 6)
            if (x % 2 == 0) {
              EXPECT_GT(s.field[s.complex.face(face)[static_cast<std::size_t>(x / 2)]], cc.level) << name;
              ++left;
            }
          for (int x = (p + 1) % 6; x != q; x = (x + 1) % 6)
            if (x % 2 == 0) {
              EXPECT_LT(s.field[s.complex.face(face)[static_cast<std::size_t>(x / 2)]], cc.level) << name;
              ++right;
            }
          EXPECT_EQ(left + right, 1 + p % 2 + q % 2) << name;
        }
      }
    }
  }
}

TEST(BoundaryWalks, PlanarFigureEightIsAPairOfPants) {
  const auto cc = CriticalComponent::ribbon(1, {{0, 0}, {0, 0}}, {{{0, 0}, {0, 1}, {1, 0}, {1, 1}}});
  const auto walks = boundary_walks(cc);
  EXPECT_EQ(walks.size(), 3u);
  const auto atom = atom_stats(cc);
  EXPECT_EQ(atom.euler, -1);
  EXPECT_EQ(atom.genus, 0);
  EXPECT_EQ(reebsym::testing::slot_cycle_count(cc), 3);
}

TEST(BoundaryWalks, InterleavedFigureEightHasOneWalk) {
  const auto cc = CriticalComponent::ribbon(1, {{0, 0}, {0, 0}}, {{{0, 0}, {1, 0}, {0, 1}, {1, 1}}});
  EXPECT_EQ(boundary_walks(cc).size(), 1u);
  const auto atom = atom_stats(cc);
  EXPECT_EQ(atom.euler, -1);
  EXPECT_EQ(atom.genus, 1);
  EXPECT_EQ(reebsym::testing::slot_cycle_count(cc), 1);
}

TEST(BoundaryWalks, WalksCoverEachArcSideOnce) {
  const auto l = level_of("beachball(3)", 3);
  std::map<std::pair<int, bool>, int> seen;
  for (const auto& w : l.walks)
    for (const auto& step : w.steps) ++seen[{step.arc, step.forward}];
  EXPECT_EQ(seen.size(), 2 * l.cc.arcs.size());
  for (const auto& [key, count] : seen) EXPECT_EQ(count, 1);
}

TEST(Atom, Examples) {
  const auto torus = atom_stats(level_of("torus_height", 1).cc);
  EXPECT_EQ(torus.walks.size(), 3u);
  EXPECT_EQ(torus.euler, -1);
  EXPECT_EQ(torus.genus, 0);

  const auto ball = atom_stats(level_of("beachball(2)", 2).cc);
  EXPECT_EQ(ball.walks.size(), 4u);
  EXPECT_EQ(ball.euler, -2);
  EXPECT_EQ(ball.genus, 0);

  const auto flower = atom_stats(level_of("flower(3)", saddle_vertex_of("flower(3)")).cc);
  EXPECT_EQ(flower.walks.size(), 4u);
  EXPECT_EQ(flower.euler, -2);
  EXPECT_EQ(flower.genus, 0);
}

TEST(Atom, WalkCountMatchesOraclesOnEveryFixture) {
  for (const auto& name : reebsym::testing::all_fixtures()) {
    const auto s = fixture(name);
    const auto r = compute_reeb(s.complex, s.field);
    for (int v : reebsym::testing::saddle_vertices(s, r.graph)) {
      const auto l = level_of(s, r, v);
      EXPECT_EQ(static_cast<int>(l.walks.size()), r.graph.degree(v)) << name << " vertex " << v;
      EXPECT_EQ(static_cast<int>(l.walks.size()), reebsym::testing::slot_cycle_count(l.cc)) << name;
      EXPECT_EQ(static_cast<int>(l.xi.two_elements.size()),
                reebsym::testing::complement_component_count(s.complex, s.field, r.graph.vertex(v)))
          << name << " vertex " << v;
    }
  }
}

TEST(Partition, Examples) {
  EXPECT_EQ(level_of("torus_height", 1).xi.two_elements.size(), 2u);
  const auto ball = level_of("beachball(2)", 2);
  EXPECT_EQ(ball.xi.two_elements.size(), 4u);
  EXPECT_EQ(ball.xi.zero_elements.size(), 2u);
  EXPECT_EQ(ball.xi.one_elements.size(), 4u);
  EXPECT_EQ(ball.xi.element_count(), 10);
  EXPECT_EQ(level_of("flower(3)", saddle_vertex_of("flower(3)")).xi.two_elements.size(), 4u);
}

TEST(Partition, RegionsAreOneSided) {
  for (const auto& name : reebsym::testing::all_fixtures()) {
    const auto s = fixture(name);
    const auto r = compute_reeb(s.complex, s.field);
    for (int v : reebsym::testing::saddle_vertices(s, r.graph)) {
      const auto l = level_of(s, r, v);
      for (const auto& region : l.xi.two_elements) {
        ASSERT_FALSE(region.vertices.empty());
        const bool up = s.field[region.vertices.front()] > l.cc.level;
        for (int m : region.vertices) EXPECT_EQ(s.field[m] > l.cc.level, up) << name;
      }
      for (const auto& w : l.walks) EXPECT_GE(w.region, 0);
    }
  }
}

TEST(Partition, EulerCharacteristicAddsUp) {
  // every region of these fixtures is planar, an open region with b boundary walks has chi 2 - b
  for (const auto& name : reebsym::testing::all_fixtures()) {
    const auto s = fixture(name);
    const auto r = compute_reeb(s.complex, s.field);
    for (int v : reebsym::testing::saddle_vertices(s, r.graph)) {
      const auto l = level_of(s, r, v);
      std::map<int, int> boundary;
      for (const auto& w : l.walks) ++boundary[w.region];
      ASSERT_EQ(boundary.size(), l.xi.two_elements.size());
      int chi = static_cast<int>(l.cc.saddles.size()) - static_cast<int>(l.cc.arcs.size());
      for (const auto& [region, b] : boundary) chi += 2 - b;
      EXPECT_EQ(chi, surface_stats(s.complex).euler) << name << " vertex " << v;
    }
  }
}

TEST(Special, Examples) {
  const auto s = fixture("torus_height");
  const auto r = compute_reeb(s.complex, s.field);
  const auto torus = level_of(s, r, 1);
  const auto star = star_of(r.graph, 1);
  const auto report = is_special(star, torus.xi, r.graph);
  EXPECT_FALSE(report.special);
  const auto [a, b] = report.failure_witness;
  ASSERT_GE(a, 0);
  ASSERT_GE(b, 0);
  EXPECT_EQ(star.germs[static_cast<std::size_t>(a)].direction, Germ::Direction::Up);
  EXPECT_EQ(star.germs[static_cast<std::size_t>(b)].direction, Germ::Direction::Up);
  EXPECT_EQ(report.germ_to_region[static_cast<std::size_t>(a)], report.germ_to_region[static_cast<std::size_t>(b)]);

  for (const char* name : {"beachball(2)", "flower(3)"}) {
    const auto fs = fixture(name);
    const auto fr = compute_reeb(fs.complex, fs.field);
    const int v = reebsym::testing::saddle_vertices(fs, fr.graph).front();
    const auto l = level_of(fs, fr, v);
    const auto rep = is_special(star_of(fr.graph, v), l.xi, fr.graph);
    EXPECT_TRUE(rep.special) << name;
    auto regions = rep.germ_to_region;
    std::sort(regions.begin(), regions.end());
    for (std::size_t i = 0; i < regions.size(); ++i) EXPECT_EQ(regions[i], static_cast<int>(i)) << name;
  }
}

TEST(Special, GermRegionSidesMatchDirections) {
  for (const auto& name : reebsym::testing::all_fixtures()) {
    const auto s = fixture(name);
    const auto r = compute_reeb(s.complex, s.field);
    for (int v : reebsym::testing::saddle_vertices(s, r.graph)) {
      const auto l = level_of(s, r, v);
      const auto star = star_of(r.graph, v);
      const auto rep = is_special(star, l.xi, r.graph);
      for (std::size_t i = 0; i < star.germs.size(); ++i) {
        const auto& region = l.xi.two_elements[static_cast<std::size_t>(rep.germ_to_region[i])];
        EXPECT_EQ(s.field[region.vertices.front()] > l.cc.level, star.germs[i].direction == Germ::Direction::Up) << name;
      }
    }
  }
}

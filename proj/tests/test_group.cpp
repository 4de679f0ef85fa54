#include <gtest/gtest.h>

#include "reebsym/atom.hpp"
#include "reebsym/error.hpp"
#include "reebsym/group.hpp"
#include "test_support.hpp"

using namespace reebsym;
using reebsym::testing::fixture;

namespace {

struct Setup {
  FieldSurface surface;
  ReebResult reeb;
  SymmetryData sym;
};

Setup setup(const std::string& name) {
  auto s = fixture(name);
  auto r = compute_reeb(s.complex, s.field);
  auto sym = analyze_symmetry(s.complex, s.field, r);
  return {std::move(s), std::move(r), std::move(sym)};
}

int centre_of(const Setup& s) { return reebsym::testing::saddle_vertices(s.surface, s.reeb.graph).front(); }

bool has_order(const StabilizerGroup& g, int order) {
  return std::any_of(g.elements().begin(), g.elements().end(),
                     [&](const SurfAutomorphism& h) { return h.vertex_perm.order() == order; });
}

}  // namespace

TEST(StabilizerGroup, OctahedronWithDistinctValuesIsTrivial) {
  const auto s = fixture("sphere_height");
  const auto g = compute_stabilizer_group(s.complex, s.field);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_TRUE(g.element(0).vertex_perm.is_identity());
  EXPECT_TRUE(g.element(0).dart_perm.is_identity());
}

TEST(StabilizerGroup, MatchesBruteForceOracle) {
  for (const auto& name : reebsym::testing::all_fixtures()) {
    const auto s = fixture(name);
    const auto g = compute_stabilizer_group(s.complex, s.field);
    std::set<std::vector<int>> found;
    for (const auto& h : g.elements()) found.insert(h.vertex_perm.images());
    EXPECT_EQ(found.size(), g.size()) << name;
    EXPECT_EQ(found, reebsym::testing::brute_force_automorphisms(s.complex, s.field)) << name;
  }
}

TEST(StabilizerGroup, ElementsPreserveFieldAndFaces) {
  for (const auto& name : reebsym::testing::all_fixtures()) {
    const auto s = fixture(name);
    const auto g = compute_stabilizer_group(s.complex, s.field);
    EXPECT_TRUE(g.element(0).vertex_perm.is_identity()) << name;
    for (const auto& h : g.elements()) {
      for (int v = 0; v < s.complex.vertex_count(); ++v) EXPECT_EQ(s.field[h.vertex(v)], s.field[v]);
      for (int d = 0; d < s.complex.dart_count(); ++d) {
        EXPECT_TRUE(s.complex.origin(h.dart(d)) == h.vertex(s.complex.origin(d)) ||
                    s.complex.target(h.dart(d)) == h.vertex(s.complex.origin(d)));
        EXPECT_EQ(h.dart(s.complex.twin(d)), s.complex.twin(h.dart(d)));
        const int step = h.orientation_preserving ? SurfaceComplex::next(d) : SurfaceComplex::prev(d);
        EXPECT_EQ(h.dart(step), SurfaceComplex::next(h.dart(d)));
      }
    }
  }
}

TEST(StabilizerGroup, ContainsTheDocumentedRotations) {
  for (int k = 2; k <= 6; ++k) {
    const auto s = fixture("beachball(" + std::to_string(k) + ")");
    EXPECT_TRUE(has_order(compute_stabilizer_group(s.complex, s.field), k)) << k;
  }
  const auto t = fixture("torus_height");
  EXPECT_GE(compute_stabilizer_group(t.complex, t.field).size(), 2u);
}

TEST(StabilizerGroup, ComposeAndInverse) {
  const auto s = fixture("beachball(4)");
  const auto g = compute_stabilizer_group(s.complex, s.field);
  for (int a = 0; a < static_cast<int>(g.size()); ++a) {
    EXPECT_EQ(g.compose(a, g.inverse(a)), 0);
    for (int b = 0; b < static_cast<int>(g.size()); ++b)
      EXPECT_EQ(g.element(g.compose(a, b)).vertex_perm, g.element(a).vertex_perm * g.element(b).vertex_perm);
  }
  EXPECT_EQ(g.vertex_group().size(), g.size());
}

TEST(StabilizerGroup, SizeLimit) {
  const auto s = fixture("beachball(6)");
  try {
    compute_stabilizer_group(s.complex, s.field, 2);
    FAIL() << "limit ignored";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeLimit);
  }
}

TEST(ReebAction, IdentityAndHomomorphism) {
  for (const auto& name : reebsym::testing::all_fixtures()) {
    const auto s = setup(name);
    const auto& g = s.sym.group;
    EXPECT_TRUE(s.sym.rho[0].combined().is_identity()) << name;
    for (int a = 0; a < static_cast<int>(g.size()); ++a)
      for (int b = 0; b < static_cast<int>(g.size()); ++b)
        EXPECT_EQ(s.sym.rho[static_cast<std::size_t>(g.compose(a, b))].combined(),
                  s.sym.rho[static_cast<std::size_t>(a)].combined() * s.sym.rho[static_cast<std::size_t>(b)].combined())
            << name;
    EXPECT_LE(s.sym.image.size(), g.size());
  }
}

TEST(ReebAction, PreservesValues) {
  for (const auto& name : reebsym::testing::all_fixtures()) {
    const auto s = setup(name);
    const auto& graph = s.reeb.graph;
    for (const auto& rho : s.sym.rho) {
      for (const auto& v : graph.vertices()) EXPECT_EQ(graph.vertex(rho.vertices(v.id)).value, v.value);
      for (const auto& e : graph.edges()) {
        const auto& img = graph.edge(rho.edges(e.id));
        EXPECT_EQ(img.lower_value, e.lower_value);
        EXPECT_EQ(img.upper_value, e.upper_value);
        EXPECT_EQ(img.lower, rho.vertices(e.lower));
        EXPECT_EQ(img.upper, rho.vertices(e.upper));
      }
    }
  }
}

TEST(ReebAction, BeachballTwoSwapsLeaves) {
  const auto s = setup("beachball(2)");
  ASSERT_GE(s.sym.group.size(), 2u);
  const int centre = centre_of(s);
  int swaps = 0;
  for (std::size_t i = 1; i < s.sym.rho.size(); ++i) {
    const auto& rho = s.sym.rho[i];
    if (rho.vertices(centre) != centre) continue;
    bool all_moved = true;
    for (const auto& v : s.reeb.graph.vertices())
      if (s.reeb.graph.degree(v.id) == 1 && rho.vertices(v.id) == v.id) all_moved = false;
    swaps += all_moved;
  }
  EXPECT_GE(swaps, 1);
}

TEST(LocalStabilizer, TrivialOnOctahedronLeaf) {
  const auto s = setup("sphere_height");
  const auto local = local_stabilizer(s.sym.group, s.sym.rho, s.reeb.graph, 0);
  EXPECT_EQ(local.reeb_stabilizer.size(), 1u);
  EXPECT_EQ(local.local.size(), 1u);
  EXPECT_EQ(local.fixing, (std::vector<int>{0}));
}

TEST(LocalStabilizer, BeachballTwoCentre) {
  const auto s = setup("beachball(2)");
  const int v = centre_of(s);
  const auto local = local_stabilizer(s.sym.group, s.sym.rho, s.reeb.graph, v);
  EXPECT_EQ(local.fixing.size(), s.sym.group.size());
  EXPECT_EQ(local.reeb_stabilizer.size(), s.sym.image.size());
  bool found = false;
  for (const auto& p : local.local.elements()) {
    if (p.is_identity()) continue;
    bool pairs = true;
    for (int i = 0; i < p.size(); ++i)
      pairs = pairs && p(i) != i && p(p(i)) == i && local.star.germs[static_cast<std::size_t>(p(i))].direction ==
                                                        local.star.germs[static_cast<std::size_t>(i)].direction;
    found = found || pairs;
  }
  EXPECT_TRUE(found);
}

TEST(LocalStabilizer, FlowerThreeCentre) {
  const auto s = setup("flower(3)");
  const int v = centre_of(s);
  const auto local = local_stabilizer(s.sym.group, s.sym.rho, s.reeb.graph, v);
  bool found = false;
  for (const auto& p : local.local.elements()) {
    if (p.order() != 3) continue;
    const auto fixed = p.fixed_points();
    found = found || (fixed.size() == 1 &&
                      local.star.germs[static_cast<std::size_t>(fixed[0])].direction == Germ::Direction::Down);
  }
  EXPECT_TRUE(found);
}

TEST(LocalStabilizer, ActionsPreserveDirections) {
  for (const auto& name : reebsym::testing::all_fixtures()) {
    const auto s = setup(name);
    for (int v : reebsym::testing::saddle_vertices(s.surface, s.reeb.graph)) {
      const auto local = local_stabilizer(s.sym.group, s.sym.rho, s.reeb.graph, v);
      ASSERT_EQ(local.fixing.size(), local.restriction.size());
      for (const auto& action : local.restriction)
        for (int i = 0; i < action.germs.size(); ++i)
          EXPECT_EQ(local.star.germs[static_cast<std::size_t>(action.germs(i))].direction,
                    local.star.germs[static_cast<std::size_t>(i)].direction)
              << name;
    }
  }
}

TEST(Preimage, TrivialSubgroupGivesKernel) {
  const auto s = setup("beachball(3)");
  const auto local = local_stabilizer(s.sym.group, s.sym.rho, s.reeb.graph, centre_of(s));
  const auto pre = phi_and_preimage(local, {Permutation::identity(static_cast<int>(local.star.germs.size()))});
  EXPECT_EQ(pre.subgroup.size(), 1u);
  for (const auto& p : pre.phi) EXPECT_TRUE(p.is_identity());
  EXPECT_EQ(pre.members, (std::vector<int>{0}));
}

TEST(Preimage, FullLocalGroupAndHomomorphism) {
  for (const char* name : {"beachball(2)", "beachball(4)", "flower(3)"}) {
    const auto s = setup(name);
    const auto local = local_stabilizer(s.sym.group, s.sym.rho, s.reeb.graph, centre_of(s));
    const auto pre = phi_and_preimage(local, {});
    EXPECT_EQ(pre.subgroup.size(), local.local.size()) << name;
    std::map<int, Permutation> phi;
    for (std::size_t i = 0; i < pre.members.size(); ++i) phi[pre.members[i]] = pre.phi[i];
    for (const auto& [a, pa] : phi)
      for (const auto& [b, pb] : phi) {
        const int ab = s.sym.group.compose(a, b);
        ASSERT_TRUE(phi.count(ab)) << name;
        EXPECT_EQ(phi[ab], pa * pb) << name;
      }
  }
}

TEST(Preimage, ContainsTheRotation) {
  const auto s = setup("flower(3)");
  const auto local = local_stabilizer(s.sym.group, s.sym.rho, s.reeb.graph, centre_of(s));
  Permutation cycle;
  for (const auto& p : local.local.elements())
    if (p.order() == 3) cycle = p;
  ASSERT_GT(cycle.size(), 0);
  const auto pre = phi_and_preimage(local, {cycle});
  EXPECT_EQ(pre.subgroup.size(), 3u);
  EXPECT_TRUE(std::any_of(pre.members.begin(), pre.members.end(),
                          [&](int m) { return s.sym.group.element(m).vertex_perm.order() == 3; }));
}

TEST(Preimage, RejectsForeignGenerator) {
  const auto s = setup("beachball(2)");
  const auto local = local_stabilizer(s.sym.group, s.sym.rho, s.reeb.graph, centre_of(s));
  const int n = static_cast<int>(local.star.germs.size());
  // an Up germ swapped with a Down germ cannot come from a field-preserving map
  int up = -1;
  int down = -1;
  for (int i = 0; i < n; ++i) (local.star.germs[static_cast<std::size_t>(i)].direction == Germ::Direction::Up ? up : down) = i;
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::swap(images[static_cast<std::size_t>(up)], images[static_cast<std::size_t>(down)]);
  try {
    phi_and_preimage(local, {Permutation(images)});
    FAIL() << "foreign generator accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotASubgroup);
  }
}

TEST(Preimage, GermActionMatchesRegionAction) {
  for (const auto& name : reebsym::testing::all_fixtures()) {
    const auto s = setup(name);
    for (int v : reebsym::testing::saddle_vertices(s.surface, s.reeb.graph)) {
      const auto& c = s.surface.complex;
      const auto cc = extract_critical_component(c, s.surface.field, s.reeb.graph, v);
      const auto xi = build_partition(c, s.surface.field, s.reeb.graph, cc);
      const auto local = local_stabilizer(s.sym.group, s.sym.rho, s.reeb.graph, v);
      const auto report = is_special(local.star, xi, s.reeb.graph);
      if (!report.special) continue;
      std::map<int, int> region_of_vertex;
      for (const auto& r : xi.two_elements)
        for (int m : r.vertices) region_of_vertex[m] = r.id;
      const auto pre = phi_and_preimage(local, {});
      for (std::size_t i = 0; i < pre.members.size(); ++i) {
        const auto& h = s.sym.group.element(pre.members[i]);
        for (std::size_t germ = 0; germ < local.star.germs.size(); ++germ) {
          const int region = report.germ_to_region[germ];
          const int image = region_of_vertex.at(h.vertex(xi.two_elements[static_cast<std::size_t>(region)].vertices.front()));
          EXPECT_EQ(report.germ_to_region[static_cast<std::size_t>(pre.phi[i](static_cast<int>(germ)))], image) << name;
        }
      }
    }
  }
}

#include "reebsym/group.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "reebsym/error.hpp"

namespace reebsym {

int SurfAutomorphism::edge(const SurfaceComplex& complex, int e) const {
  return complex.edge_of_dart(dart_perm(complex.edge_darts(e).first));
}

SurfAutomorphism operator*(const SurfAutomorphism& a, const SurfAutomorphism& b) {
  return {a.vertex_perm * b.vertex_perm, a.dart_perm * b.dart_perm,
          a.orientation_preserving == b.orientation_preserving};
}

StabilizerGroup::StabilizerGroup(std::vector<SurfAutomorphism> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(),
            [](const SurfAutomorphism& x, const SurfAutomorphism& y) { return x.vertex_perm < y.vertex_perm; });
}

int StabilizerGroup::index_of(const Permutation& vertex_perm) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), vertex_perm,
                             [](const SurfAutomorphism& x, const Permutation& p) { return x.vertex_perm < p; });
  if (it == elements_.end() || it->vertex_perm != vertex_perm) return -1;
  return static_cast<int>(it - elements_.begin());
}

int StabilizerGroup::compose(int a, int b) const {
  return index_of(element(a).vertex_perm * element(b).vertex_perm);
}

int StabilizerGroup::inverse(int a) const { return index_of(element(a).vertex_perm.inverse()); }

PermutationGroup StabilizerGroup::vertex_group() const {
  if (elements_.empty()) return {};
  std::vector<Permutation> gens;
  for (const auto& h : elements_) gens.push_back(h.vertex_perm);
  const int n = elements_.front().vertex_perm.size();
  return PermutationGroup::generate(n, std::move(gens), elements_.size() + 1);
}

namespace {

/// Extends seed -> image along next/twin. Returns nullopt on any conflict.
std::optional<SurfAutomorphism> extend(const SurfaceComplex& c, const ScalarField& f, int seed, int image,
                                       bool preserving) {
  const int darts = c.dart_count();
  std::vector<int> dmap(static_cast<std::size_t>(darts), -1);
  std::vector<int> dinv(static_cast<std::size_t>(darts), -1);
  std::vector<int> vmap(static_cast<std::size_t>(c.vertex_count()), -1);
  std::vector<int> vinv(static_cast<std::size_t>(c.vertex_count()), -1);
  std::vector<int> stack;

  auto origin_image = [&](int e) { return preserving ? c.origin(e) : c.target(e); };
  auto assign = [&](int d, int e) {
    auto& cur = dmap[static_cast<std::size_t>(d)];
    if (cur != -1) return cur == e;
    if (dinv[static_cast<std::size_t>(e)] != -1) return false;
    const int v = c.origin(d);
    const int w = origin_image(e);
    auto& vm = vmap[static_cast<std::size_t>(v)];
    if (vm == -1) {
      if (vinv[static_cast<std::size_t>(w)] != -1 || f[v] != f[w]) return false;
      vm = w;
      vinv[static_cast<std::size_t>(w)] = v;
    } else if (vm != w) {
      return false;
    }
    cur = e;
    dinv[static_cast<std::size_t>(e)] = d;
    stack.push_back(d);
    return true;
  };

  if (!assign(seed, image)) return std::nullopt;
  while (!stack.empty()) {
    const int d = stack.back();
    stack.pop_back();
    const int e = dmap[static_cast<std::size_t>(d)];
    const int nd = SurfaceComplex::next(d);
    const int ne = preserving ? SurfaceComplex::next(e) : SurfaceComplex::prev(e);
    if (!assign(nd, ne)) return std::nullopt;
    if (!assign(c.twin(d), c.twin(e))) return std::nullopt;
  }
  // A connected surface reaches every dart from the seed.
  return SurfAutomorphism{Permutation(std::move(vmap)), Permutation(std::move(dmap)), preserving};
}

}  // namespace

StabilizerGroup compute_field_automorphisms(const SurfaceComplex& complex, const ScalarField& field,
                                            std::size_t size_limit) {
  // seed at the vertex whose (value, degree) is rarest
  std::map<std::pair<Decimal, int>, int> frequency;
  auto key = [&](int v) { return std::make_pair(field[v], complex.degree(v)); };
  for (int v = 0; v < complex.vertex_count(); ++v) ++frequency[key(v)];
  int anchor = 0;
  for (int v = 1; v < complex.vertex_count(); ++v)
    if (frequency[key(v)] < frequency[key(anchor)]) anchor = v;
  const int seed = complex.outgoing(anchor).front();

  std::vector<SurfAutomorphism> found;
  for (int image = 0; image < complex.dart_count(); ++image) {
    for (bool preserving : {true, false}) {
      const int w = preserving ? complex.origin(image) : complex.target(image);
      if (key(w) != key(anchor)) continue;
      if (auto h = extend(complex, field, seed, image, preserving)) {
        found.push_back(std::move(*h));
        if (found.size() > size_limit)
          throw Error(ErrorCode::SizeLimit,
                      "automorphism group exceeds " + std::to_string(size_limit) + " elements");
      }
    }
  }
  return StabilizerGroup(std::move(found));
}

StabilizerGroup compute_stabilizer_group(const SurfaceComplex& complex, const ScalarField& field,
                                         std::size_t size_limit) {
  require_level_generic(complex, field);
  return compute_field_automorphisms(complex, field, size_limit);
}

Permutation ReebAutomorphism::combined() const {
  std::vector<int> images = vertices.images();
  const int offset = vertices.size();
  for (int e : edges.images()) images.push_back(offset + e);
  return Permutation(std::move(images));
}

ReebAutomorphism induce_reeb_automorphism(const SurfAutomorphism& h, const ReebGraph& graph,
                                          const ReebProjection& projection) {
  std::vector<int> vimg;
  vimg.reserve(static_cast<std::size_t>(graph.vertex_count()));
  for (const auto& u : graph.vertices()) vimg.push_back(projection.reeb_vertex_of(h.vertex(u.critical_vertices.front())));
  std::vector<int> eimg;
  eimg.reserve(static_cast<std::size_t>(graph.edge_count()));
  for (const auto& e : graph.edges())
    eimg.push_back(projection.slab_face_edge[static_cast<std::size_t>(e.lower_slab)]
                                            [static_cast<std::size_t>(h.face(e.lower_face))]);
  return {Permutation(std::move(vimg)), Permutation(std::move(eimg))};
}

LocalStabilizer local_stabilizer(const StabilizerGroup& group, const std::vector<ReebAutomorphism>& rho,
                                 const ReebGraph& graph, int reeb_vertex) {
  LocalStabilizer out;
  out.reeb_vertex = reeb_vertex;
  out.star = star_of(graph, reeb_vertex);
  const int points = graph.vertex_count() + graph.edge_count();
  const int germs = static_cast<int>(out.star.germs.size());
  std::vector<Permutation> stab_gens;
  std::vector<Permutation> local_gens;
  for (int i = 0; i < static_cast<int>(group.size()); ++i) {
    const auto& r = rho[static_cast<std::size_t>(i)];
    if (r.vertices(reeb_vertex) != reeb_vertex) continue;
    std::vector<int> img;
    for (const auto& germ : out.star.germs) img.push_back(out.star.index_of(r.edges(germ.edge), germ.direction));
    out.fixing.push_back(i);
    out.restriction.push_back({Permutation(std::move(img)), i});
    stab_gens.push_back(r.combined());
    local_gens.push_back(out.restriction.back().germs);
  }
  out.reeb_stabilizer = PermutationGroup::generate(points, std::move(stab_gens), group.size() + 1);
  out.local = PermutationGroup::generate(germs, std::move(local_gens), group.size() + 1);
  return out;
}

Preimage phi_and_preimage(const LocalStabilizer& local, const std::vector<Permutation>& generators) {
  const int germs = static_cast<int>(local.star.germs.size());
  for (const auto& g : generators) {
    if (g.size() != germs || !local.local.contains(g))
      throw Error(ErrorCode::NotASubgroup, "generator " + g.cycles() + " is not in the local stabilizer");
  }
  Preimage out;
  out.subgroup = generators.empty() ? local.local
                                    : PermutationGroup::generate(germs, generators, local.local.size() + 1);
  for (const auto& action : local.restriction) {
    if (!out.subgroup.contains(action.germs)) continue;
    out.members.push_back(action.source);
    out.phi.push_back(action.germs);
  }
  return out;
}

SymmetryData analyze_symmetry(const SurfaceComplex& complex, const ScalarField& field, const ReebResult& reeb,
                              std::size_t size_limit) {
  SymmetryData out;
  out.group = compute_stabilizer_group(complex, field, size_limit);
  std::vector<Permutation> gens;
  for (const auto& h : out.group.elements()) {
    out.rho.push_back(induce_reeb_automorphism(h, reeb.graph, reeb.projection));
    gens.push_back(out.rho.back().combined());
  }
  out.image = PermutationGroup::generate(reeb.graph.vertex_count() + reeb.graph.edge_count(), std::move(gens),
                                         out.group.size() + 1);
  return out;
}

}  // namespace reebsym

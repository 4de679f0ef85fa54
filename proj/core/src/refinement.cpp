#include "reebsym/refinement.hpp"

#include <algorithm>

#include "reebsym/error.hpp"

namespace reebsym {

namespace {

struct Piece {
  Triangle corners;
  int source;
  int region;
};

Decimal distance(const Decimal& a, const Decimal& b) { return a > b ? a - b : b - a; }

}  // namespace

RefinedSurface build_refinement(const SurfaceComplex& complex, const ScalarField& field,
                                const CriticalComponent& component, const PartitionXi& xi,
                                const std::vector<int>& germ_to_region) {
  const int n = complex.vertex_count();
  const Decimal& c = component.level;
  RefinedSurface out;
  out.level = c;
  out.region_count = static_cast<int>(xi.two_elements.size());
  out.germ_to_region = germ_to_region;

  std::vector<Decimal> values = field.values();
  std::vector<RefinedVertex> info(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) info[static_cast<std::size_t>(v)] = {RefinedVertex::Kind::Original, v, -1};
  for (const auto& r : xi.two_elements)
    for (int v : r.vertices) info[static_cast<std::size_t>(v)].region = r.id;

  std::vector<int> crossed;
  for (const auto& arc : component.arcs)
    for (const auto& p : arc.trace)
      if (p.kind == LevelPoint::Kind::Edge) crossed.push_back(p.id);
  std::sort(crossed.begin(), crossed.end());
  crossed.erase(std::unique(crossed.begin(), crossed.end()), crossed.end());
  out.crossing_vertex.assign(static_cast<std::size_t>(complex.edge_count()), -1);
  for (int e : crossed) {
    out.crossing_vertex[static_cast<std::size_t>(e)] = static_cast<int>(values.size());
    values.push_back(c);
    info.push_back({RefinedVertex::Kind::Crossing, e, -1});
  }

  auto side_of = [&](int v) { return field[v] > c ? FaceSide::Above : FaceSide::Below; };
  std::vector<Piece> pieces;
  out.quad_vertex.assign(static_cast<std::size_t>(complex.face_count()), -1);
  for (int f = 0; f < complex.face_count(); ++f) {
    const Triangle& t = complex.face(f);
    if (!xi.face_cut[static_cast<std::size_t>(f)]) {
      pieces.push_back({t, f, xi.region_of(f, FaceSide::Whole)});
      continue;
    }
    std::array<int, 3> cross{};
    int count = 0;
    for (int i = 0; i < 3; ++i) {
      cross[static_cast<std::size_t>(i)] =
          out.crossing_vertex[static_cast<std::size_t>(complex.edge_of_dart(3 * f + i))];
      if (cross[static_cast<std::size_t>(i)] >= 0) ++count;
    }
    auto corner = [&](int i) { return t[static_cast<std::size_t>(i % 3)]; };
    if (count == 1) {
      int i = 0;
      while (cross[static_cast<std::size_t>(i)] < 0) ++i;
      const int s = corner(i + 2), a = corner(i), b = corner(i + 1);
      const int x = cross[static_cast<std::size_t>(i)];
      pieces.push_back({{s, a, x}, f, xi.region_of(f, side_of(a))});
      pieces.push_back({{s, x, b}, f, xi.region_of(f, side_of(b))});
    } else if (count == 2) {
      int k = 0;
      while (cross[static_cast<std::size_t>(k)] >= 0) ++k;
      const int a = corner(k), b = corner(k + 1), p = corner(k + 2);
      const int x = cross[static_cast<std::size_t>((k + 2) % 3)];
      const int y = cross[static_cast<std::size_t>((k + 1) % 3)];
      const int q = static_cast<int>(values.size());
      values.push_back((c + c + field[a] + field[b]).half().half());
      const int quad_region = xi.region_of(f, side_of(a));
      info.push_back({RefinedVertex::Kind::QuadCenter, f, quad_region});
      out.quad_vertex[static_cast<std::size_t>(f)] = q;
      pieces.push_back({{p, x, y}, f, xi.region_of(f, side_of(p))});
      pieces.push_back({{x, a, q}, f, quad_region});
      pieces.push_back({{a, b, q}, f, quad_region});
      pieces.push_back({{b, y, q}, f, quad_region});
      pieces.push_back({{y, x, q}, f, quad_region});
    } else {
      throw Error(ErrorCode::InvalidInput, "face " + std::to_string(f) + " is cut but crosses no component edge");
    }
  }

  std::vector<Triangle> split_faces;
  for (const auto& p : pieces) split_faces.push_back(p.corners);
  const int split_count = static_cast<int>(values.size());
  const SurfaceComplex split = SurfaceComplex::build(split_faces, split_count);
  if (split.reoriented()) throw Error(ErrorCode::InvalidInput, "refinement lost the input orientation");

  std::vector<char> on_level(static_cast<std::size_t>(split_count), 0);
  for (int s : component.saddles) on_level[static_cast<std::size_t>(s)] = 1;
  for (const auto& arc : component.arcs)
    for (const auto& p : arc.trace)
      if (p.kind == LevelPoint::Kind::Vertex) on_level[static_cast<std::size_t>(p.id)] = 1;
  for (int e : crossed) on_level[static_cast<std::size_t>(out.crossing_vertex[static_cast<std::size_t>(e)])] = 1;
  auto is_level_dart = [&](int d) {
    return on_level[static_cast<std::size_t>(split.origin(d))] && on_level[static_cast<std::size_t>(split.target(d))];
  };

  // one collar copy per sector between consecutive level darts
  std::vector<int> sector_of_dart(static_cast<std::size_t>(split.dart_count()), -1);
  std::vector<int> copy_base;
  std::vector<int> copy_neighbour;
  for (int w = 0; w < split_count; ++w) {
    if (!on_level[static_cast<std::size_t>(w)]) continue;
    const auto darts = split.outgoing(w);
    const int k = static_cast<int>(darts.size());
    for (int p = 0; p < k; ++p) {
      if (!is_level_dart(darts[static_cast<std::size_t>(p)])) continue;
      const int copy = split_count + static_cast<int>(copy_base.size());
      copy_base.push_back(w);
      copy_neighbour.push_back(-1);
      for (int q = p; q == p || !is_level_dart(darts[static_cast<std::size_t>(q % k)]); ++q) {
        const int d = darts[static_cast<std::size_t>(q % k)];
        sector_of_dart[static_cast<std::size_t>(d)] = copy;
        if (q == p) continue;
        out.copy_of[{w, split.target(d)}] = copy;
        if (copy_neighbour.back() < 0) copy_neighbour.back() = split.target(d);
      }
    }
  }

  // copies sit halfway between the level and the nearest value of their region
  std::vector<std::optional<Decimal>> nearest(static_cast<std::size_t>(out.region_count));
  for (int v = 0; v < split_count; ++v) {
    const int r = info[static_cast<std::size_t>(v)].region;
    if (r < 0) continue;
    auto& best = nearest[static_cast<std::size_t>(r)];
    if (!best || distance(values[static_cast<std::size_t>(v)], c) < distance(*best, c))
      best = values[static_cast<std::size_t>(v)];
  }
  out.copy_neighbour.assign(static_cast<std::size_t>(split_count), -1);
  for (std::size_t i = 0; i < copy_base.size(); ++i) {
    const int r = info[static_cast<std::size_t>(copy_neighbour[i])].region;
    info.push_back({RefinedVertex::Kind::CollarCopy, copy_base[i], r});
    values.push_back(midpoint(c, *nearest[static_cast<std::size_t>(r)]));
    out.copy_neighbour.push_back(copy_neighbour[i]);
  }

  std::vector<Triangle> faces;
  for (int f = 0; f < split.face_count(); ++f) {
    Triangle t = split.face(f);
    for (int i = 0; i < 3; ++i)
      if (on_level[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])])
        t[static_cast<std::size_t>(i)] = sector_of_dart[static_cast<std::size_t>(3 * f + i)];
    faces.push_back(t);
    out.faces.push_back({pieces[static_cast<std::size_t>(f)].source, pieces[static_cast<std::size_t>(f)].region, -1});
  }

  std::vector<char> visited(static_cast<std::size_t>(split.dart_count()), 0);
  for (int start = 0; start < split.dart_count(); ++start) {
    if (visited[static_cast<std::size_t>(start)] || !is_level_dart(start)) continue;
    CollarWalk walk;
    walk.id = static_cast<int>(out.walks.size());
    int d = start;
    do {
      visited[static_cast<std::size_t>(d)] = 1;
      walk.points.push_back(split.origin(d));
      walk.copies.push_back(sector_of_dart[static_cast<std::size_t>(d)]);
      // clockwise from the arriving dart to the next level dart
      int r = split.twin(d);
      do r = SurfaceComplex::next(split.twin(r)); while (!is_level_dart(r));
      d = r;
    } while (d != start);
    walk.region = info[static_cast<std::size_t>(walk.copies.front())].region;
    const int len = static_cast<int>(walk.points.size());
    for (int j = 0; j < len; ++j) {
      const int nj = (j + 1) % len;
      const std::size_t uj = static_cast<std::size_t>(j), un = static_cast<std::size_t>(nj);
      faces.push_back({walk.points[uj], walk.points[un], walk.copies[un]});
      faces.push_back({walk.points[uj], walk.copies[un], walk.copies[uj]});
      out.faces.push_back({-1, walk.region, walk.id});
      out.faces.push_back({-1, walk.region, walk.id});
    }
    out.walks.push_back(std::move(walk));
  }

  out.complex = SurfaceComplex::build(faces, static_cast<int>(values.size()));
  if (out.complex.reoriented()) throw Error(ErrorCode::InvalidInput, "refinement lost the input orientation");
  out.field = ScalarField(std::move(values));
  out.vertices = std::move(info);
  out.region_vertex.assign(static_cast<std::size_t>(out.region_count), -1);
  for (const auto& r : xi.two_elements) out.region_vertex[static_cast<std::size_t>(r.id)] = r.vertices.front();
  return out;
}

RefinedSurface identity_refinement(const SurfaceComplex& complex, const ScalarField& field,
                                   const CriticalComponent& component, const PartitionXi& xi,
                                   const std::vector<int>& germ_to_region) {
  RefinedSurface out;
  out.complex = complex;
  out.field = field;
  out.level = component.level;
  out.is_identity = true;
  out.region_count = static_cast<int>(xi.two_elements.size());
  out.germ_to_region = germ_to_region;
  for (int v = 0; v < complex.vertex_count(); ++v) out.vertices.push_back({RefinedVertex::Kind::Original, v, -1});
  out.region_vertex.assign(static_cast<std::size_t>(out.region_count), -1);
  for (const auto& r : xi.two_elements) {
    for (int v : r.vertices) out.vertices[static_cast<std::size_t>(v)].region = r.id;
    out.region_vertex[static_cast<std::size_t>(r.id)] = r.vertices.front();
  }
  for (int f = 0; f < complex.face_count(); ++f)
    out.faces.push_back({f, xi.face_cut[static_cast<std::size_t>(f)] ? -1 : xi.region_of(f, FaceSide::Whole), -1});
  return out;
}

std::optional<SurfAutomorphism> lift_to_refinement(const RefinedSurface& refined, const SurfaceComplex& complex,
                                                   const SurfAutomorphism& h) {
  if (refined.is_identity) return h;
  const int count = refined.complex.vertex_count();
  std::vector<int> img(static_cast<std::size_t>(count), -1);
  for (int v = 0; v < count; ++v) {
    const auto& rv = refined.vertices[static_cast<std::size_t>(v)];
    switch (rv.kind) {
      case RefinedVertex::Kind::Original: img[static_cast<std::size_t>(v)] = h.vertex(rv.source); break;
      case RefinedVertex::Kind::Crossing:
        img[static_cast<std::size_t>(v)] = refined.crossing_vertex[static_cast<std::size_t>(h.edge(complex, rv.source))];
        break;
      case RefinedVertex::Kind::QuadCenter:
        img[static_cast<std::size_t>(v)] = refined.quad_vertex[static_cast<std::size_t>(h.face(rv.source))];
        break;
      case RefinedVertex::Kind::CollarCopy: break;
    }
  }
  for (int v = 0; v < count; ++v) {
    const auto& rv = refined.vertices[static_cast<std::size_t>(v)];
    if (rv.kind != RefinedVertex::Kind::CollarCopy) continue;
    const int w = img[static_cast<std::size_t>(rv.source)];
    const int u = img[static_cast<std::size_t>(refined.copy_neighbour[static_cast<std::size_t>(v)])];
    auto it = refined.copy_of.find({w, u});
    if (it == refined.copy_of.end()) return std::nullopt;
    img[static_cast<std::size_t>(v)] = it->second;
  }
  std::vector<char> seen(static_cast<std::size_t>(count), 0);
  for (int x : img) {
    if (x < 0 || seen[static_cast<std::size_t>(x)]) return std::nullopt;
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return automorphism_from_vertex_map(refined.complex, Permutation(std::move(img)));
}

std::optional<SurfAutomorphism> automorphism_from_vertex_map(const SurfaceComplex& complex,
                                                             const Permutation& vertex_perm) {
  if (vertex_perm.size() != complex.vertex_count()) return std::nullopt;
  std::vector<int> darts(static_cast<std::size_t>(complex.dart_count()), -1);
  std::optional<bool> preserving;
  for (int f = 0; f < complex.face_count(); ++f) {
    const Triangle& t = complex.face(f);
    const int a = vertex_perm(t[0]), b = vertex_perm(t[1]), c = vertex_perm(t[2]);
    int image = complex.find_face(a, b, c);
    bool keeps = true;
    if (image < 0) {
      image = complex.find_face(b, a, c);
      keeps = false;
    }
    if (image < 0) return std::nullopt;
    if (preserving && *preserving != keeps) return std::nullopt;
    preserving = keeps;
    for (int i = 0; i < 3; ++i) {
      const int from = vertex_perm(t[static_cast<std::size_t>(i)]);
      const int to = vertex_perm(t[static_cast<std::size_t>((i + 1) % 3)]);
      const int d = keeps ? complex.find_dart(from, to) : complex.find_dart(to, from);
      if (d < 0 || SurfaceComplex::face_of(d) != image) return std::nullopt;
      darts[static_cast<std::size_t>(3 * f + i)] = d;
    }
  }
  return SurfAutomorphism{vertex_perm, Permutation(std::move(darts)), preserving.value_or(true)};
}

std::vector<int> region_action(const RefinedSurface& refined, const Permutation& vertex_perm) {
  std::vector<int> out;
  for (int r = 0; r < refined.region_count; ++r)
    out.push_back(refined.vertices[static_cast<std::size_t>(vertex_perm(refined.region_vertex[static_cast<std::size_t>(r)]))].region);
  return out;
}

Permutation refined_phi(const RefinedSurface& refined, const Permutation& vertex_perm) {
  const auto action = region_action(refined, vertex_perm);
  const int germs = static_cast<int>(refined.germ_to_region.size());
  std::vector<int> img(static_cast<std::size_t>(germs), -1);
  for (int g = 0; g < germs; ++g) {
    const int r = refined.germ_to_region[static_cast<std::size_t>(g)];
    const int target = r < 0 ? -1 : action[static_cast<std::size_t>(r)];
    if (target == r) {
      img[static_cast<std::size_t>(g)] = g;
      continue;
    }
    for (int j = 0; j < germs; ++j)
      if (refined.germ_to_region[static_cast<std::size_t>(j)] == target) {
        img[static_cast<std::size_t>(g)] = j;
        break;
      }
    if (img[static_cast<std::size_t>(g)] < 0)
      throw Error(ErrorCode::NotSpecial, "germ " + std::to_string(g) + " has no region image");
  }
  return Permutation(std::move(img));
}

}  // namespace reebsym

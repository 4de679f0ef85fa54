#include "reebsym/lift.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "reebsym/error.hpp"

namespace reebsym {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

std::string describe(const ConditionCWitness& w) {
  static const char* const names[] = {"saddle", "arc", "region"};
  std::ostringstream out;
  out << "element " << w.element << " fixes region " << w.fixed_region << " but "
      << (w.orientation ? "reverses " : "moves ") << names[w.dimension] << ' ' << w.moved;
  return out.str();
}

SurfAutomorphism identity_automorphism(const SurfaceComplex& complex) {
  return {Permutation::identity(complex.vertex_count()), Permutation::identity(complex.dart_count()), true};
}

/// Orbits of `count` points under the listed actions, each sorted, ordered by smallest member.
std::vector<std::vector<int>> orbits_of(int count, const std::vector<const std::vector<int>*>& actions) {
  std::vector<int> seen(at(count), 0);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < count; ++x) {
    if (seen[at(x)]) continue;
    std::vector<int> orbit;
    for (const auto* act : actions) {
      const int y = (*act)[at(x)];
      if (!seen[at(y)]) {
        seen[at(y)] = 1;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace

Permutation XiPermutation::combined() const {
  std::vector<int> images = saddles;
  const int s = static_cast<int>(saddles.size());
  const int a = static_cast<int>(arcs.size());
  for (int x : arcs) images.push_back(s + x);
  for (int x : regions) images.push_back(s + a + x);
  return Permutation(std::move(images));
}

XiPermutation act_on_xi(const SurfaceComplex& complex, const CriticalComponent& component, const PartitionXi& xi,
                        const SurfAutomorphism& h) {
  XiPermutation out;
  out.orientation_preserving = h.orientation_preserving;
  for (int s : component.saddles) out.saddles.push_back(component.saddle_index(h.vertex(s)));

  std::vector<std::pair<int, int>> position(at(complex.face_count()), {-1, -1});
  for (const auto& arc : component.arcs)
    for (std::size_t p = 0; p < arc.faces.size(); ++p) position[at(arc.faces[p])] = {arc.id, static_cast<int>(p)};
  for (const auto& arc : component.arcs) {
    const auto first = position[at(h.face(arc.faces.front()))];
    if (first.first < 0) throw Error(ErrorCode::InvalidInput, "automorphism does not preserve the critical component");
    bool reversed = false;
    if (arc.faces.size() > 1) {
      reversed = position[at(h.face(arc.faces[1]))].second < first.second;
    } else {
      reversed = component.arcs[at(first.first)].start != out.saddles[at(arc.start)];
    }
    out.arcs.push_back(first.first);
    out.arc_reversed.push_back(reversed ? 1 : 0);
  }
  for (const auto& region : xi.two_elements) {
    const auto [face, side] = region.pieces.front();
    out.regions.push_back(xi.region_of(h.face(face), side));
  }
  return out;
}

LiftProblem prepare_lift(const SurfaceComplex& complex, const ScalarField& field, int reeb_vertex,
                         const std::vector<Permutation>& generators, std::size_t size_limit) {
  LiftProblem p;
  p.complex = complex;
  p.field = field;
  p.reeb = compute_reeb(complex, field);
  p.reeb_vertex = reeb_vertex;
  const Star star = star_of(p.reeb.graph, reeb_vertex);
  p.component = extract_critical_component(complex, field, p.reeb.graph, reeb_vertex);
  p.walks = boundary_walks(p.component);
  p.xi = build_partition(complex, field, p.reeb.graph, p.component);
  bind_walk_regions(p.walks, p.component, p.xi);
  p.special = is_special(star, p.xi, p.reeb.graph);
  p.symmetry = analyze_symmetry(complex, field, p.reeb, size_limit);
  p.local = local_stabilizer(p.symmetry.group, p.symmetry.rho, p.reeb.graph, reeb_vertex);
  p.preimage = phi_and_preimage(p.local, generators);
  for (int m : p.preimage.members)
    p.actions.push_back(act_on_xi(complex, p.component, p.xi, p.symmetry.group.element(m)));
  return p;
}

ConditionCReport check_condition_C(const LiftProblem& problem) {
  ConditionCReport report;
  for (std::size_t i = 0; i < problem.preimage.members.size(); ++i) {
    const auto& act = problem.actions[i];
    const int element = problem.preimage.members[i];
    for (int e = 0; e < static_cast<int>(act.regions.size()); ++e) {
      if (act.regions[at(e)] != e) continue;
      auto fail = [&](int dimension, int moved, bool orientation) {
        report.holds = false;
        report.witness = ConditionCWitness{element, e, dimension, moved, orientation};
      };
      for (int r = 0; r < static_cast<int>(act.regions.size()) && report.holds; ++r)
        if (act.regions[at(r)] != r) fail(2, r, false);
      for (int a = 0; a < static_cast<int>(act.arcs.size()) && report.holds; ++a)
        if (act.arcs[at(a)] != a) fail(1, a, false);
      for (int s = 0; s < static_cast<int>(act.saddles.size()) && report.holds; ++s)
        if (act.saddles[at(s)] != s) fail(0, s, false);
      for (int a = 0; a < static_cast<int>(act.arcs.size()) && report.holds; ++a)
        if (act.arc_reversed[at(a)]) fail(1, a, true);
      if (report.holds && !act.orientation_preserving) fail(2, e, true);
      if (!report.holds) return report;
    }
  }
  return report;
}

XiAction xi_action(const LiftProblem& problem) {
  const auto condition = check_condition_C(problem);
  if (!condition.holds) throw Error(ErrorCode::ConditionCViolated, describe(*condition.witness));

  XiAction out;
  const auto& pre = problem.preimage;
  for (const auto& g : pre.subgroup.elements()) {
    int first = -1;
    for (std::size_t i = 0; i < pre.members.size(); ++i) {
      if (pre.phi[i] != g) continue;
      if (first < 0) {
        first = static_cast<int>(i);
      } else if (problem.actions[i] != problem.actions[at(first)]) {
        throw Error(ErrorCode::NotWellDefined, "elements " + std::to_string(pre.members[at(first)]) + " and " +
                                                   std::to_string(pre.members[i]) + " both map to " + g.cycles() +
                                                   " but act differently on the partition");
      }
    }
    if (first < 0) throw Error(ErrorCode::NotWellDefined, "no automorphism realizes " + g.cycles());
    const auto& act = problem.actions[at(first)];
    if (!g.is_identity()) {
      for (int r = 0; r < static_cast<int>(act.regions.size()); ++r) {
        if (act.regions[at(r)] == r) {
          out.free_on_regions = false;
          throw Error(ErrorCode::NotWellDefined,
                      g.cycles() + " fixes region " + std::to_string(r) + "; the action is not free");
        }
      }
    }
    out.table.push_back(act.combined());
    out.actions.push_back(act);
    out.representatives.push_back(pre.members[at(first)]);
  }
  return out;
}

Section construct_section(const LiftProblem& problem) {
  const auto& pre = problem.preimage;
  const auto& group = problem.symmetry.group;
  const auto& cc = problem.component;
  Section section;
  section.subgroup = pre.subgroup;

  if (pre.subgroup.size() == 1) {
    section.refined = identity_refinement(problem.complex, problem.field, cc, problem.xi, problem.special.germ_to_region);
    section.images.push_back(identity_automorphism(problem.complex));
    section.phi.push_back(pre.subgroup.elements().front());
    return section;
  }
  if (!problem.special.special) {
    std::ostringstream msg;
    msg << "Reeb vertex " << problem.reeb_vertex << " is not special";
    if (problem.special.failure_witness.first >= 0)
      msg << ": germs " << problem.special.failure_witness.first << " and " << problem.special.failure_witness.second
          << " share a region";
    throw Error(ErrorCode::NotSpecial, msg.str());
  }
  const XiAction tau = xi_action(problem);

  section.refined = build_refinement(problem.complex, problem.field, cc, problem.xi, problem.special.germ_to_region);
  const RefinedSurface& refined = section.refined;

  std::map<int, std::size_t> member_slot;
  for (std::size_t i = 0; i < pre.members.size(); ++i) member_slot[pre.members[i]] = i;
  std::vector<SurfAutomorphism> lifted;
  for (int m : pre.members) {
    auto h = lift_to_refinement(refined, problem.complex, group.element(m));
    if (!h) throw Error(ErrorCode::OrbitMismatch, "element " + std::to_string(m) + " does not lift to the refinement");
    lifted.push_back(std::move(*h));
  }

  const auto& elements = pre.subgroup.elements();
  const int hcount = static_cast<int>(elements.size());
  auto choose = [&](int count, auto image_of) {
    std::vector<const std::vector<int>*> acts;
    for (const auto& act : tau.actions) acts.push_back(&image_of(act));
    std::vector<OrbitChoice> choices;
    for (auto& orbit : orbits_of(count, acts)) {
      OrbitChoice choice;
      choice.representative = orbit.front();
      for (int y : orbit) {
        for (std::size_t i = 0; i < pre.members.size(); ++i) {
          if (image_of(problem.actions[i])[at(choice.representative)] == y) {
            choice.transporters.push_back(pre.members[i]);
            break;
          }
        }
      }
      choice.members = std::move(orbit);
      choices.push_back(std::move(choice));
    }
    return choices;
  };
  LiftData& data = section.data;
  const int saddle_count = static_cast<int>(cc.saddles.size());
  const int arc_count = static_cast<int>(cc.arcs.size());
  data.saddle_orbits = choose(saddle_count, [](const XiPermutation& x) -> const std::vector<int>& { return x.saddles; });
  data.arc_orbits = choose(arc_count, [](const XiPermutation& x) -> const std::vector<int>& { return x.arcs; });
  data.region_orbits = choose(refined.region_count, [](const XiPermutation& x) -> const std::vector<int>& { return x.regions; });

  // Step 1: at every saddle the element rotates the cyclic order of arc ends
  data.rotation_offsets.assign(at(hcount), std::vector<int>(at(saddle_count), 0));
  for (int g = 0; g < hcount; ++g) {
    const auto& act = tau.actions[at(g)];
    for (int z = 0; z < saddle_count; ++z) {
      const auto& from = cc.rotation[at(z)];
      const auto& to = cc.rotation[at(act.saddles[at(z)])];
      std::vector<ArcEnd> mapped;
      for (const auto& end : from)
        mapped.push_back({act.arcs[at(end.arc)], act.arc_reversed[at(end.arc)] ? 1 - end.end : end.end});
      int offset = -1;
      const int len = static_cast<int>(to.size());
      for (int k = 0; k < len && offset < 0; ++k) {
        bool ok = len == static_cast<int>(mapped.size());
        for (int i = 0; i < len && ok; ++i) ok = mapped[at(i)] == to[at((k + i) % len)];
        if (ok) offset = k;
      }
      if (offset < 0)
        throw Error(ErrorCode::OrbitMismatch, elements[at(g)].cycles() + " does not act by a rotation at saddle " +
                                                  std::to_string(cc.saddles[at(z)]));
      data.rotation_offsets[at(g)][at(z)] = offset;
    }
  }

  // Step 2: arcs in one orbit carry the same number of points, aligned by index
  for (const auto& orbit : data.arc_orbits) {
    const std::size_t points = cc.arcs[at(orbit.representative)].trace.size();
    for (int a : orbit.members)
      if (cc.arcs[at(a)].trace.size() != points)
        throw Error(ErrorCode::OrbitMismatch, "arcs " + std::to_string(orbit.representative) + " and " +
                                                  std::to_string(a) + " have different lengths");
    data.arc_subdivision.push_back(static_cast<int>(points));
  }
  for (int g = 0; g < hcount; ++g) {
    const auto& act = tau.actions[at(g)];
    for (int a = 0; a < arc_count; ++a) {
      const auto& src = cc.arcs[at(a)];
      const auto& dst = cc.arcs[at(act.arcs[at(a)])];
      if (act.arc_reversed[at(a)] || dst.start != act.saddles[at(src.start)] ||
          dst.finish != act.saddles[at(src.finish)])
        throw Error(ErrorCode::OrbitMismatch, elements[at(g)].cycles() + " misaligns arc " + std::to_string(a));
    }
  }

  auto point_vertex = [&](const LevelPoint& p) {
    return p.kind == LevelPoint::Kind::Vertex ? p.id : refined.crossing_vertex[at(p.id)];
  };
  std::map<int, std::pair<int, int>> arc_point;  // refined vertex -> (arc, index)
  for (const auto& arc : cc.arcs)
    for (std::size_t i = 0; i < arc.trace.size(); ++i) arc_point[point_vertex(arc.trace[i])] = {arc.id, static_cast<int>(i)};

  std::map<std::pair<int, int>, std::pair<int, int>> walk_step;  // directed level edge -> (walk, index)
  std::map<int, std::pair<int, int>> copy_step;                  // copy -> (walk, index)
  for (const auto& w : refined.walks) {
    const int len = static_cast<int>(w.points.size());
    for (int j = 0; j < len; ++j) {
      walk_step[{w.points[at(j)], w.points[at((j + 1) % len)]}] = {w.id, j};
      copy_step[w.copies[at(j)]] = {w.id, j};
    }
  }

  // Step 3: on each region the element is transported from the orbit representative
  std::vector<int> region_orbit(at(refined.region_count), -1), region_member(at(refined.region_count), -1);
  for (std::size_t o = 0; o < data.region_orbits.size(); ++o)
    for (std::size_t i = 0; i < data.region_orbits[o].members.size(); ++i) {
      region_orbit[at(data.region_orbits[o].members[i])] = static_cast<int>(o);
      region_member[at(data.region_orbits[o].members[i])] = static_cast<int>(i);
    }
  auto transporter = [&](int region) {
    return data.region_orbits[at(region_orbit[at(region)])].transporters[at(region_member[at(region)])];
  };

  const int vcount = refined.complex.vertex_count();
  data.collar_twists.assign(at(hcount), std::vector<int>(refined.walks.size(), 0));
  for (int g = 0; g < hcount; ++g) {
    const auto& act = tau.actions[at(g)];
    std::vector<const SurfAutomorphism*> on_region(at(refined.region_count));
    for (int r = 0; r < refined.region_count; ++r) {
      const int ti = transporter(r);
      const int tj = transporter(act.regions[at(r)]);
      const int composite = group.compose(tj, group.inverse(ti));
      on_region[at(r)] = &lifted[member_slot.at(composite)];
    }

    std::vector<int> img(at(vcount), -1);
    for (int v = 0; v < vcount; ++v) {
      const auto& rv = refined.vertices[at(v)];
      if (rv.region >= 0) {
        img[at(v)] = on_region[at(rv.region)]->vertex(v);
      } else if (const int z = rv.kind == RefinedVertex::Kind::Original ? cc.saddle_index(v) : -1; z >= 0) {
        img[at(v)] = cc.saddles[at(act.saddles[at(z)])];
      } else {
        const auto [a, i] = arc_point.at(v);
        img[at(v)] = point_vertex(cc.arcs[at(act.arcs[at(a)])].trace[at(i)]);
      }
    }

    for (const auto& w : refined.walks) {
      const int len = static_cast<int>(w.points.size());
      int twist = 0;
      for (int j = 0; j < len; ++j) {
        const auto step = walk_step.find({img[at(w.points[at(j)])], img[at(w.points[at((j + 1) % len)])]});
        const auto copy = copy_step.find(img[at(w.copies[at(j)])]);
        if (step == walk_step.end() || copy == copy_step.end() || step->second.first != copy->second.first)
          throw Error(ErrorCode::OrbitMismatch, elements[at(g)].cycles() + " separates collar walk " +
                                                    std::to_string(w.id) + " from its region");
        const int wlen = static_cast<int>(refined.walks[at(step->second.first)].points.size());
        const int d = ((copy->second.second - step->second.second) % wlen + wlen) % wlen;
        if (j == 0) {
          twist = d;
        } else if (d != twist) {
          throw Error(ErrorCode::OrbitMismatch, "collar walk " + std::to_string(w.id) + " has an inconsistent twist under " +
                                                    elements[at(g)].cycles());
        }
      }
      data.collar_twists[at(g)][at(w.id)] = twist;
      if (twist != 0)
        throw Error(ErrorCode::TwistUnrealizable, "collar walk " + std::to_string(w.id) + " needs a twist of " +
                                                      std::to_string(twist) + " under " + elements[at(g)].cycles());
    }

    std::vector<char> seen(at(vcount), 0);
    for (int x : img) {
      if (x < 0 || seen[at(x)])
        throw Error(ErrorCode::OrbitMismatch, "assembled map for " + elements[at(g)].cycles() + " is not a bijection");
      seen[at(x)] = 1;
    }
    auto h = automorphism_from_vertex_map(refined.complex, Permutation(std::move(img)));
    if (!h)
      throw Error(ErrorCode::OrbitMismatch, "assembled map for " + elements[at(g)].cycles() + " does not preserve faces");
    section.phi.push_back(refined_phi(refined, h->vertex_perm));
    section.images.push_back(std::move(*h));
  }
  return section;
}

OracleResult find_section_oracle(const RefinedSurface& refined, const PermutationGroup& subgroup,
                                 std::size_t size_limit) {
  OracleResult out;
  const auto automorphisms = compute_field_automorphisms(refined.complex, refined.field, size_limit);
  out.automorphisms = automorphisms.size();

  std::vector<const SurfAutomorphism*> candidates;
  std::vector<Permutation> phis;
  for (const auto& h : automorphisms.elements()) {
    Permutation phi;
    try {
      phi = refined_phi(refined, h.vertex_perm);
    } catch (const Error&) {
      continue;
    }
    if (!subgroup.contains(phi)) continue;
    candidates.push_back(&h);
    phis.push_back(std::move(phi));
  }
  out.preimage = candidates.size();

  // a small generating set of H
  std::vector<Permutation> gens;
  PermutationGroup spanned = PermutationGroup::trivial(subgroup.degree());
  for (const auto& g : subgroup.elements()) {
    if (spanned.contains(g)) continue;
    gens.push_back(g);
    spanned = PermutationGroup::generate(subgroup.degree(), gens, subgroup.size() + 1);
  }
  std::vector<std::vector<int>> options(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t c = 0; c < candidates.size(); ++c)
      if (phis[c] == gens[i]) options[i].push_back(static_cast<int>(c));

  const auto& elements = subgroup.elements();
  const std::size_t order = elements.size();
  std::vector<int> choice(gens.size(), 0);
  auto extend = [&](std::vector<SurfAutomorphism>& images) {
    images.assign(order, SurfAutomorphism{});
    std::vector<char> set(order, 0);
    const int id = subgroup.index_of(Permutation::identity(subgroup.degree()));
    images[at(id)] = identity_automorphism(refined.complex);
    set[at(id)] = 1;
    std::vector<int> queue{id};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int x = queue[q];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const int y = subgroup.index_of(gens[i] * elements[at(x)]);
        SurfAutomorphism value = *candidates[at(options[i][at(choice[i])])] * images[at(x)];
        if (!set[at(y)]) {
          images[at(y)] = std::move(value);
          set[at(y)] = 1;
          queue.push_back(y);
        } else if (images[at(y)].vertex_perm != value.vertex_perm) {
          return false;
        }
      }
    }
    return true;
  };

  for (const auto& o : options)
    if (o.empty()) return out;
  while (true) {
    if (++out.assignments > size_limit)
      throw Error(ErrorCode::SizeLimit, "section search exceeds " + std::to_string(size_limit) + " assignments");
    if (extend(out.images)) {
      out.found = true;
      return out;
    }
    std::size_t i = 0;
    while (i < gens.size() && ++choice[i] == static_cast<int>(options[i].size())) choice[i++] = 0;
    if (i == gens.size()) break;
  }
  out.images.clear();
  return out;
}

SectionVerification verify_section(const Section& section) {
  SectionVerification report;
  const auto& elements = section.subgroup.elements();
  const auto& images = section.images;
  const auto& complex = section.refined.complex;
  const auto& field = section.refined.field;
  const int n = static_cast<int>(elements.size());
  if (static_cast<int>(images.size()) != n) {
    report.homomorphism = {false, "section has " + std::to_string(images.size()) + " images for " + std::to_string(n) + " elements"};
    return report;
  }

  for (int a = 0; a < n && report.homomorphism.passed; ++a) {
    for (int b = 0; b < n && report.homomorphism.passed; ++b) {
      const int ab = section.subgroup.index_of(elements[at(a)] * elements[at(b)]);
      if (images[at(ab)].vertex_perm != images[at(a)].vertex_perm * images[at(b)].vertex_perm)
        report.homomorphism = {false, "s(" + elements[at(a)].cycles() + " * " + elements[at(b)].cycles() +
                                          ") != s(" + elements[at(a)].cycles() + ") * s(" + elements[at(b)].cycles() + ")"};
    }
  }

  for (int g = 0; g < n && report.section.passed; ++g) {
    Permutation phi;
    try {
      phi = refined_phi(section.refined, images[at(g)].vertex_perm);
    } catch (const Error& e) {
      report.section = {false, "phi(s(" + elements[at(g)].cycles() + ")) undefined: " + e.what()};
      break;
    }
    if (phi != elements[at(g)])
      report.section = {false, "phi(s(" + elements[at(g)].cycles() + ")) = " + phi.cycles()};
  }

  for (int g = 0; g < n && report.field_preserving.passed; ++g) {
    const auto& h = images[at(g)];
    if (h.vertex_perm.size() != complex.vertex_count()) {
      report.field_preserving = {false, "s(" + elements[at(g)].cycles() + ") has the wrong degree"};
      break;
    }
    for (int v = 0; v < complex.vertex_count(); ++v) {
      if (field[h.vertex(v)] != field[v]) {
        report.field_preserving = {false, "s(" + elements[at(g)].cycles() + ") moves vertex " + std::to_string(v) +
                                              " to a different value"};
        break;
      }
    }
  }

  for (int g = 0; g < n && report.automorphism.passed; ++g) {
    const auto& h = images[at(g)];
    const auto rebuilt = automorphism_from_vertex_map(complex, h.vertex_perm);
    bool ok = rebuilt && rebuilt->dart_perm == h.dart_perm && rebuilt->orientation_preserving == h.orientation_preserving;
    for (int d = 0; ok && d < complex.dart_count(); ++d) {
      const int step = h.orientation_preserving ? SurfaceComplex::next(h.dart(d)) : SurfaceComplex::prev(h.dart(d));
      ok = h.dart(SurfaceComplex::next(d)) == step && h.dart(complex.twin(d)) == complex.twin(h.dart(d));
    }
    if (!ok) report.automorphism = {false, "s(" + elements[at(g)].cycles() + ") is not an automorphism of the refinement"};
  }
  return report;
}

}  // namespace reebsym

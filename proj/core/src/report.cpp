#include "reebsym/report.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

#include "reebsym/atom.hpp"
#include "reebsym/group.hpp"
#include "reebsym/lift.hpp"
#include "reebsym/reeb.hpp"

namespace reebsym {

namespace {

using Json = nlohmann::ordered_json;

Json header(std::string_view command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

const char* direction_name(Germ::Direction d) { return d == Germ::Direction::Up ? "up" : "down"; }

const char* kind_name(RefinedVertex::Kind k) {
  switch (k) {
    case RefinedVertex::Kind::Original: return "original";
    case RefinedVertex::Kind::Crossing: return "crossing";
    case RefinedVertex::Kind::QuadCenter: return "quad_center";
    case RefinedVertex::Kind::CollarCopy: return "collar_copy";
  }
  return "";
}

Json orbit_json(const std::vector<OrbitChoice>& orbits) {
  Json out = Json::array();
  for (const auto& o : orbits)
    out.push_back({{"representative", o.representative}, {"members", o.members}, {"transporters", o.transporters}});
  return out;
}

Json section_json(const Section& section) {
  const auto& r = section.refined;
  Json vertices = Json::array();
  for (int v = 0; v < r.complex.vertex_count(); ++v) {
    const auto& rv = r.vertices[static_cast<std::size_t>(v)];
    vertices.push_back({{"kind", kind_name(rv.kind)}, {"source", rv.source}, {"region", rv.region},
                        {"value", r.field[v].str()}});
  }
  Json faces = Json::array();
  for (int f = 0; f < r.complex.face_count(); ++f) {
    const auto& t = r.complex.face(f);
    const auto& rf = r.faces[static_cast<std::size_t>(f)];
    faces.push_back({{"corners", {t[0], t[1], t[2]}}, {"source", rf.source}, {"region", rf.region}, {"walk", rf.walk}});
  }
  Json walks = Json::array();
  for (const auto& w : r.walks)
    walks.push_back({{"id", w.id}, {"region", w.region}, {"points", w.points}, {"copies", w.copies}});

  Json elements = Json::array();
  const auto& hs = section.subgroup.elements();
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const auto& img = section.images[i];
    elements.push_back({{"germs", hs[i].cycles()},
                        {"phi", section.phi[i].cycles()},
                        {"orientation_preserving", img.orientation_preserving},
                        {"vertices", img.vertex_perm.cycles()},
                        {"darts", img.dart_perm.cycles()}});
  }
  Json generators = Json::array();
  for (const auto& g : section.subgroup.generators()) generators.push_back(g.cycles());

  const auto& d = section.data;
  Json data;
  data["saddle_orbits"] = orbit_json(d.saddle_orbits);
  data["arc_orbits"] = orbit_json(d.arc_orbits);
  data["arc_subdivision"] = d.arc_subdivision;
  data["region_orbits"] = orbit_json(d.region_orbits);
  data["rotation_offsets"] = d.rotation_offsets;
  data["collar_twists"] = d.collar_twists;

  Json out;
  out["refinement"] = {{"identity", r.is_identity},
                       {"level", r.level.str()},
                       {"vertex_count", r.complex.vertex_count()},
                       {"face_count", r.complex.face_count()},
                       {"vertices", vertices},
                       {"faces", faces},
                       {"collar_walks", walks}};
  out["generators"] = generators;
  out["elements"] = elements;
  out["lift_data"] = data;
  return out;
}

Json check_json(const SectionCheck& c) {
  Json j{{"passed", c.passed}};
  j["witness"] = c.passed ? Json(nullptr) : Json(c.witness);
  return j;
}

}  // namespace

CommandOutput run_analyze(const SrfDocument& doc) {
  const auto surface = to_field_surface(doc);
  const auto& c = surface.complex;
  const auto& f = surface.field;
  if (f.size() != c.vertex_count()) throw Error(ErrorCode::InvalidInput, "field size does not match vertex count");
  const auto stats = surface_stats(c);
  const auto generic = validate_level_generic(c, f);

  Json out = header("analyze");
  out["vertices"] = c.vertex_count();
  out["edges"] = c.edge_count();
  out["faces"] = c.face_count();
  out["euler"] = stats.euler;
  out["genus"] = stats.genus;
  Json offending = Json::array();
  for (const auto& [u, w] : generic.offending_edges) offending.push_back({u, w});
  out["generic"] = {{"ok", generic.ok}, {"offending_edges", offending}};
  if (!generic.ok) {
    out["census"] = nullptr;
    return {kExitInputError, dump(out)};
  }

  int maxima = 0, minima = 0, regular = 0, ph_twice = 0;
  std::map<int, int> saddles;
  Json classes = Json::array();
  for (int v = 0; v < c.vertex_count(); ++v) {
    const int changes = link_sign_changes(c, f, v);
    const auto cls = classify_vertex(c, f, v);
    ph_twice += 2 - changes;
    switch (cls.kind) {
      case VertexClass::Kind::Maximum: ++maxima; break;
      case VertexClass::Kind::Minimum: ++minima; break;
      case VertexClass::Kind::Regular: ++regular; break;
      case VertexClass::Kind::Saddle: ++saddles[cls.n]; break;
    }
    classes.push_back({{"vertex", v}, {"value", f[v].str()}, {"class", cls.name()}, {"sign_changes", changes}});
  }
  Json saddle_census = Json::object();
  for (const auto& [n, count] : saddles) saddle_census[std::to_string(n)] = count;
  out["census"] = {{"max", maxima}, {"min", minima}, {"regular", regular}, {"saddles", saddle_census}};
  out["poincare_hopf"] = {{"sum", ph_twice / 2}, {"holds", ph_twice == 2 * stats.euler}};
  out["classification"] = classes;
  return {kExitOk, dump(out)};
}

CommandOutput run_reeb(const SrfDocument& doc, ReebFormat format) {
  const auto surface = to_field_surface(doc);
  const auto reeb = compute_reeb(surface.complex, surface.field);
  const auto& g = reeb.graph;
  if (format == ReebFormat::Dot) {
    std::ostringstream out;
    out << "graph reeb {\n";
    for (const auto& v : g.vertices()) out << "  v" << v.id << " [label=\"" << v.value.str() << "\"];\n";
    for (const auto& e : g.edges()) out << "  v" << e.lower << " -- v" << e.upper << ";\n";
    out << "}\n";
    return {kExitOk, out.str()};
  }
  Json out = header("reeb");
  Json vertices = Json::array();
  for (const auto& v : g.vertices())
    vertices.push_back({{"id", v.id},
                        {"value", v.value.str()},
                        {"critical_vertices", v.critical_vertices},
                        {"degree", g.degree(v.id)}});
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({{"id", e.id}, {"lower", e.lower}, {"upper", e.upper}});
  out["vertices"] = vertices;
  out["edges"] = edges;
  out["betti1"] = g.betti1();
  out["connected"] = g.is_connected();
  return {kExitOk, dump(out)};
}

std::vector<Permutation> parse_subgroup(std::string_view text, int germ_count) {
  std::vector<Permutation> gens;
  std::size_t pos = 0;
  int line = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++line;
    std::string_view row = text.substr(pos, end - pos);
    pos = end + 1;
    if (auto hash = row.find('#'); hash != std::string_view::npos) row = row.substr(0, hash);
    if (row.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      gens.push_back(Permutation::from_cycles(row, germ_count));
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, "subgroup line " + std::to_string(line) + ": " + e.what());
    }
  }
  if (gens.empty()) gens.push_back(Permutation::identity(germ_count));
  return gens;
}

CommandOutput run_lift(const SrfDocument& doc, int reeb_vertex, const std::optional<std::string>& subgroup,
                       std::size_t size_limit) {
  const auto surface = to_field_surface(doc);
  std::vector<Permutation> generators;
  if (subgroup) {
    const auto reeb = compute_reeb(surface.complex, surface.field);
    generators = parse_subgroup(*subgroup, static_cast<int>(star_of(reeb.graph, reeb_vertex).germs.size()));
  }
  const LiftProblem p = prepare_lift(surface.complex, surface.field, reeb_vertex, generators, size_limit);

  Json out = header("lift");
  out["vertex"] = reeb_vertex;
  Json germs = Json::array();
  for (std::size_t i = 0; i < p.local.star.germs.size(); ++i) {
    const auto& g = p.local.star.germs[i];
    germs.push_back({{"index", i}, {"edge", g.edge}, {"direction", direction_name(g.direction)}});
  }
  out["star"] = germs;
  Json elements = Json::array();
  for (const auto& g : p.preimage.subgroup.elements()) elements.push_back(g.cycles());
  out["subgroup"] = {{"order", p.preimage.subgroup.size()}, {"elements", elements}};
  out["groups"] = {{"stabilizer", p.symmetry.group.size()},
                   {"reeb_image", p.symmetry.image.size()},
                   {"vertex_stabilizer", p.local.reeb_stabilizer.size()},
                   {"local_stabilizer", p.local.local.size()},
                   {"preimage", p.preimage.members.size()}};
  out["partition"] = {{"saddles", p.component.saddles},
                      {"arcs", p.component.arcs.size()},
                      {"regions", p.xi.two_elements.size()},
                      {"boundary_walks", p.walks.size()}};

  Json special{{"value", p.special.special}, {"germ_to_region", p.special.germ_to_region}};
  if (!p.special.special) {
    const auto [a, b] = p.special.failure_witness;
    if (a >= 0) {
      special["witness"] = {{"germs", {a, b}},
                            {"directions",
                             {direction_name(p.local.star.germs[static_cast<std::size_t>(a)].direction),
                              direction_name(p.local.star.germs[static_cast<std::size_t>(b)].direction)}},
                            {"region", p.special.germ_to_region[static_cast<std::size_t>(a)]}};
    } else {
      special["witness"] = {{"unmatched_region", p.special.unmatched_region}};
    }
  } else {
    special["witness"] = nullptr;
  }
  out["special"] = special;

  const auto condition = check_condition_C(p);
  Json cond{{"value", condition.holds}};
  if (condition.witness) {
    const auto& w = *condition.witness;
    std::string phi;
    for (std::size_t i = 0; i < p.preimage.members.size(); ++i)
      if (p.preimage.members[i] == w.element) phi = p.preimage.phi[i].cycles();
    static const char* const dims[] = {"saddle", "arc", "region"};
    cond["witness"] = {{"element", w.element},
                       {"germs", phi},
                       {"fixed_region", w.fixed_region},
                       {"offending", {{"dimension", w.dimension}, {"kind", dims[w.dimension]}, {"index", w.moved}}},
                       {"orientation_reversed", w.orientation}};
  } else {
    cond["witness"] = nullptr;
  }
  out["conditionC"] = cond;

  std::optional<Section> section;
  std::string result = "section";
  std::string failure;
  const bool trivial = p.preimage.subgroup.size() == 1;
  if (!trivial && !p.special.special) {
    result = "not_special";
  } else if (!trivial && !condition.holds) {
    result = "condition_c_failed";
  } else {
    try {
      section = construct_section(p);
    } catch (const Error& e) {
      result = "no_section";
      failure = e.what();
    }
  }

  if (section && !trivial) {
    Json table = Json::array();
    const auto tau = xi_action(p);
    for (std::size_t i = 0; i < tau.table.size(); ++i)
      table.push_back({{"germs", p.preimage.subgroup.elements()[i].cycles()},
                       {"partition", tau.table[i].cycles()},
                       {"representative", tau.representatives[i]}});
    out["xi_action"] = {{"free_on_regions", tau.free_on_regions}, {"table", table}};
  } else {
    out["xi_action"] = nullptr;
  }

  bool verified = false;
  if (section) {
    const auto v = verify_section(*section);
    verified = v.passed();
    out["section"] = section_json(*section);
    out["verification"] = {{"passed", verified},
                           {"homomorphism", check_json(v.homomorphism)},
                           {"section", check_json(v.section)},
                           {"field_preserving", check_json(v.field_preserving)},
                           {"automorphism", check_json(v.automorphism)}};
    if (!verified) result = "no_section";
  } else {
    out["section"] = nullptr;
    out["verification"] = nullptr;
  }
  if (!failure.empty()) out["failure"] = failure;

  // the oracle needs a refinement, which exists whenever the vertex is special
  Json oracle = nullptr;
  if (section || p.special.special) {
    const RefinedSurface refined = section ? section->refined
                                           : build_refinement(p.complex, p.field, p.component, p.xi,
                                                              p.special.germ_to_region);
    try {
      const auto found = find_section_oracle(refined, p.preimage.subgroup, size_limit);
      oracle = {{"constructed", section.has_value()},
                {"oracle_found", found.found},
                {"agree", section.has_value() == found.found},
                {"automorphisms", found.automorphisms},
                {"preimage", found.preimage},
                {"assignments", found.assignments}};
    } catch (const Error& e) {
      oracle = {{"constructed", section.has_value()}, {"oracle_found", nullptr}, {"agree", nullptr}, {"error", e.what()}};
    }
  }
  out["oracle_agreement"] = oracle;
  out["result"] = result;
  return {section && verified ? kExitOk : kExitNegative, dump(out)};
}

CommandOutput run_fixture(const FixtureSpec& spec) { return {kExitOk, write_srf(make_fixture(spec))}; }

std::string error_report(const Error& error) {
  Json out;
  out["schema"] = kSchema;
  out["error"] = {{"code", to_string(error.code())}, {"message", error.what()}};
  return dump(out);
}

}  // namespace reebsym

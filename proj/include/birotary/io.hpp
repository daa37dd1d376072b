#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "birotary/birotary.hpp"
#include "birotary/census.hpp"
#include "birotary/classify.hpp"
#include "birotary/families.hpp"
#include "birotary/group.hpp"
#include "birotary/pclass.hpp"

namespace birotary {

using Json = nlohmann::ordered_json;

// Group file format:
//   {"name": ..., "degree": n, "generators": [[image array], ...],
//    "generatorNames": ["x","y",...] (optional), "order": N (optional)}
// The text form accepts one generator per line in cycle notation.

struct NamedGroup {
  PermutationGroup group;
  std::vector<std::string> generator_names;  // defaults g0, g1, ...
};

inline Json group_to_json(const PermutationGroup& G,
                          const std::vector<std::string>& generator_names = {}) {
  Json j;
  j["name"] = G.name();
  j["degree"] = G.degree();
  Json gens = Json::array();
  for (const auto& g : G.generators()) gens.push_back(g.images());
  j["generators"] = std::move(gens);
  if (!generator_names.empty()) j["generatorNames"] = generator_names;
  if (G.analytic_order())
    j["order"] = *G.analytic_order();
  else if (G.is_materialized())
    j["order"] = G.elements().size();
  return j;
}

inline NamedGroup group_from_json(const Json& j) {
  require(j.contains("degree") && j.contains("generators"), Errc::parse_error,
          "group file needs degree and generators");
  std::size_t degree = j["degree"].get<std::size_t>();
  std::vector<Permutation> gens;
  for (const auto& arr : j["generators"]) {
    std::vector<Point> img;
    for (const auto& v : arr) img.push_back(static_cast<Point>(v.get<unsigned>()));
    require(img.size() == degree, Errc::parse_error, "generator image length != degree");
    gens.push_back(Permutation(std::move(img)));
  }
  require(!gens.empty(), Errc::parse_error, "group file has no generators");
  std::optional<std::uint64_t> order;
  if (j.contains("order")) order = j["order"].get<std::uint64_t>();
  NamedGroup ng{PermutationGroup(degree, std::move(gens),
                                 j.value("name", std::string("group")), order),
                {}};
  if (j.contains("generatorNames"))
    for (const auto& v : j["generatorNames"]) ng.generator_names.push_back(v.get<std::string>());
  while (ng.generator_names.size() < ng.group.generators().size())
    ng.generator_names.push_back("g" + std::to_string(ng.generator_names.size()));
  return ng;
}

// Text form: one generator per line, cycle notation; first line may be
// "degree N".
inline NamedGroup group_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("degree", 0) == 0) {
      degree = std::stoul(line.substr(6));
      continue;
    }
    require(degree > 0, Errc::parse_error, "text form needs a leading 'degree N' line");
    gens.push_back(Permutation::parse_cycles(degree, line));
  }
  require(!gens.empty(), Errc::parse_error, "no generators in text form");
  NamedGroup ng{PermutationGroup(degree, std::move(gens), "group"), {}};
  for (std::size_t i = 0; i < ng.group.generators().size(); ++i)
    ng.generator_names.push_back("g" + std::to_string(i));
  return ng;
}

inline NamedGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::parse_error, "cannot open group file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  require(first != std::string::npos, Errc::parse_error, "empty group file " + path);
  if (text[first] == '{') return group_from_json(Json::parse(text));
  return group_from_text(text);
}

// Pair elements come either as generator words ("x*y^3") resolved against the
// group file's named generators, or as explicit cycle notation / image arrays.
inline Permutation resolve_element(const NamedGroup& ng, const std::string& text) {
  std::string t = text;
  auto strip = [](std::string s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  t = strip(t);
  require(!t.empty(), Errc::parse_error, "empty element expression");
  if (t[0] == '(') return Permutation::parse_cycles(ng.group.degree(), t);
  if (t[0] == '[') {
    Json arr = Json::parse(t);
    std::vector<Point> img;
    for (const auto& v : arr) img.push_back(static_cast<Point>(v.get<unsigned>()));
    return Permutation(std::move(img));
  }
  Permutation acc = Permutation::identity(ng.group.degree());
  std::size_t pos = 0;
  while (pos < t.size()) {
    auto star = t.find('*', pos);
    std::string term = strip(t.substr(pos, star == std::string::npos ? star : star - pos));
    pos = star == std::string::npos ? t.size() : star + 1;
    if (term.empty()) continue;
    long long exp = 1;
    auto caret = term.find('^');
    std::string name = term;
    if (caret != std::string::npos) {
      name = strip(term.substr(0, caret));
      exp = std::stoll(strip(term.substr(caret + 1)));
    }
    std::optional<Permutation> base;
    for (std::size_t i = 0; i < ng.generator_names.size(); ++i)
      if (ng.generator_names[i] == name) base = ng.group.generators()[i];
    require(base.has_value(), Errc::parse_error, "unknown generator name '" + name + "'");
    acc = acc * base->power(exp);
  }
  return acc;
}

// --- report serialization -----------------------------------------------------------

inline Json map_report_json(const BiRotaryMap& M) {
  Json j;
  j["group"] = M.group.name();
  j["order"] = M.group.elements().size();
  j["x"] = M.pair.x.to_cycle_string();
  j["y"] = M.pair.y.to_cycle_string();
  j["k"] = M.k;
  j["m"] = M.m;
  j["chi"] = M.chi;
  j["V"] = M.vertices;
  j["E"] = M.edges;
  j["F"] = M.faces;
  j["orientable"] = M.orientable;
  if (auto pp = prime_power_chi(M.chi))
    j["primePower"] = Json{{"p", pp->first}, {"n", pp->second}};
  else
    j["primePower"] = nullptr;
  j["tags"] = M.tag.empty() ? Json::array() : Json::array({M.tag});
  return j;
}

inline Json classification_report_json(const ClassificationReport& rep) {
  Json j;
  j["p"] = rep.p;
  j["pCoreOrder"] = rep.p_core_order;
  j["quotientOrder"] = rep.quotient_order;
  j["branch"] = branch_name(rep.branch);
  if (!rep.note.empty()) j["note"] = rep.note;
  if (rep.solvable) {
    const auto& d = *rep.solvable;
    Json s;
    s["row"] = d.table_row;
    s["hallShape"] = hall_shape_name(d.hall_shape);
    s["parameters"] = Json{{"k1", d.k1}, {"e", d.e}, {"f", d.f}};
    s["K_order"] = d.K.elements().size();
    s["H_order"] = d.H.elements().size();
    s["a_order"] = d.m2;
    s["b_order"] = d.k2;
    s["m2prime"] = d.m2_prime;
    s["aprime_order"] = d.a_prime_order;
    s["m2prime_equals_aprime"] = d.m2_prime == d.a_prime_order;
    if (!d.kappa_option.empty()) s["kappaOption"] = d.kappa_option;
    s["i"] = d.i_exponent;
    s["j"] = d.j_exponent;
    s["rho0"] = d.rho0.to_cycle_string();
    s["tau0"] = d.tau0.to_cycle_string();
    s["standardPair"] = Json::array(
        {d.standard_rho.to_cycle_string(), d.standard_tau.to_cycle_string()});
    s["predictedType"] = Json::array({d.predicted_k, d.predicted_m});
    s["computedType"] = Json::array({d.computed_k, d.computed_m});
    j["decomposition"] = std::move(s);
  }
  if (rep.non_solvable) {
    const auto& d = *rep.non_solvable;
    Json s;
    s["case"] = theorem_case_name(d.theorem_case);
    s["R_order"] = d.R.elements().size();
    s["D_order"] = d.D.elements().size();
    s["q"] = d.q;
    s["qMatches"] = d.q_matches;
    s["f"] = d.f;
    s["qInNum"] = d.q_in_num;
    if (!d.odd_case.empty()) s["oddCase"] = d.odd_case;
    if (d.f == 2) s["O2_of_G_mod_D"] = d.o2_of_G_mod_D;
    j["decomposition"] = std::move(s);
  }
  return j;
}

inline Json pclass_report_json(const PClassReport& r) {
  Json j;
  j["p"] = r.p;
  if (r.p0) {
    j["P0"] = Json{{"holds", r.p0->holds}, {"n", r.p0->n}, {"chi", r.p0->chi}};
  }
  Json p1{{"holds", r.p1.holds}};
  if (r.p1.holds) {
    p1["n"] = r.p1.n;
    p1["H1_order"] = r.p1.h1_order;
    p1["H2_order"] = r.p1.h2_order;
  }
  j["P1"] = std::move(p1);
  if (r.p1_plus)
    j["P1plus"] = Json{{"holds", r.p1_plus->holds},
                       {"n", r.p1_plus->n},
                       {"faceOrder", r.p1_plus->face_order},
                       {"rhoOrder", r.p1_plus->rho_order}};
  Json p2{{"holds", r.p2.holds}};
  Json wl = Json::array();
  for (const auto& w : r.p2.witnesses)
    wl.push_back(Json{{"r", w.prime},
                      {"order", w.subgroup.elements().size()},
                      {"shape", shape_name(w.shape)}});
  p2["sylow"] = std::move(wl);
  j["P2"] = std::move(p2);
  if (r.p2_plus) j["P2plus"] = *r.p2_plus;
  return j;
}

inline Json identity_report_json(const IdentityReport& rep) {
  Json j;
  j["family"] = rep.family_id;
  j["f"] = rep.f;
  j["sideConditions"] = rep.side_conditions;
  j["sideConditionsOk"] = rep.side_conditions_ok;
  Json claims = Json::array();
  for (const auto& c : rep.claims)
    claims.push_back(Json{{"claim", c.description},
                          {"expected", c.expected},
                          {"computed", c.computed},
                          {"verdict", c.verdict},
                          {"flagged", c.flagged}});
  j["claims"] = std::move(claims);
  j["allVerified"] = rep.all_verified();
  j["flagged"] = rep.has_flags();
  return j;
}

inline Json census_records_json(const std::vector<CensusRecord>& records) {
  Json arr = Json::array();
  for (const auto& r : records) {
    Json j;
    j["group"] = r.group_name;
    j["order"] = r.order;
    j["k"] = r.k;
    j["m"] = r.m;
    j["chi"] = r.chi;
    j["orientable"] = r.orientable;
    if (r.prime_power)
      j["primePower"] = Json{{"p", r.prime_power->first}, {"n", r.prime_power->second}};
    else
      j["primePower"] = nullptr;
    j["orbitSize"] = r.orbit_size;
    j["x"] = r.x_cycles;
    j["y"] = r.y_cycles;
    j["status"] = r.status;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace birotary

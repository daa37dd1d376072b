#pragma once

#include <optional>
#include <string>
#include <vector>

#include "birotary/constructions.hpp"
#include "birotary/families.hpp"
#include "birotary/io.hpp"
#include "birotary/psl.hpp"

namespace birotary {

// A parsed construction: the group, generator names for word resolution, and
// the family's canonical rotary pair when it defines one.
struct Construction {
  PermutationGroup group;
  std::vector<std::string> generator_names;
  std::optional<RotaryPair> pair;
};

namespace detail {

inline bool parse_call(const std::string& s, const std::string& head,
                       std::vector<std::string>& args) {
  if (s.rfind(head + "(", 0) != 0 || s.back() != ')') return false;
  std::string inner = s.substr(head.size() + 1, s.size() - head.size() - 2);
  args.clear();
  std::string cur;
  int depth = 0;
  for (char ch : inner) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      args.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty() || !args.empty()) args.push_back(cur);
  return true;
}

inline std::uint64_t parse_uint(const std::string& s) {
  try {
    std::size_t pos = 0;
    std::uint64_t v = std::stoull(s, &pos);
    require(pos == s.size(), Errc::parse_error, "trailing characters in number '" + s + "'");
    return v;
  } catch (const Error&) {
    throw;
  } catch (...) {
    fail(Errc::parse_error, "expected a number, got '" + s + "'");
  }
}

inline Construction from_semidirect_file(const std::string& path, std::uint64_t cap);

inline Construction parse_atom(const std::string& spec, std::uint64_t cap) {
  std::vector<std::string> args;
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json")
    return from_semidirect_file(spec, cap);
  if (parse_call(spec, "Z", args) && args.size() == 1) {
    return Construction{cyclic(parse_uint(args[0])), {"x"}, std::nullopt};
  }
  if (parse_call(spec, "D", args) && args.size() == 1) {
    std::uint64_t order = parse_uint(args[0]);
    require(order >= 2 && order % 2 == 0, Errc::parse_error, "D(n) needs an even order n");
    return Construction{dihedral_group(order / 2), {"r", "s"}, std::nullopt};
  }
  if (parse_call(spec, "A", args) && args.size() == 1)
    return Construction{alternating_group(static_cast<unsigned>(parse_uint(args[0]))),
                        {"a", "c"},
                        std::nullopt};
  if (parse_call(spec, "S", args) && args.size() == 1)
    return Construction{symmetric_group(static_cast<unsigned>(parse_uint(args[0]))),
                        {"t", "c"},
                        std::nullopt};
  if (spec.size() >= 2 && (spec[0] == 'A' || spec[0] == 'S') &&
      spec.find_first_not_of("0123456789", 1) == std::string::npos) {
    unsigned n = static_cast<unsigned>(parse_uint(spec.substr(1)));
    return spec[0] == 'A' ? Construction{alternating_group(n), {"a", "c"}, std::nullopt}
                          : Construction{symmetric_group(n), {"t", "c"}, std::nullopt};
  }
  if (spec == "SD16" || spec == "M16") {
    auto trio = order16_groups();
    const GroupWithPair& g = spec == "SD16" ? trio[0] : trio[2];
    return Construction{g.group, {"x", "y"}, RotaryPair{g.x, g.y}};
  }
  if (parse_call(spec, "PSL", args) && args.size() == 2 && args[0] == "2")
    return Construction{psl2(static_cast<unsigned>(parse_uint(args[1]))),
                        {"t", "m", "s"},
                        std::nullopt};
  if (parse_call(spec, "PGL", args) && args.size() == 2 && args[0] == "2")
    return Construction{pgl2(static_cast<unsigned>(parse_uint(args[1]))),
                        {"t", "n", "s"},
                        std::nullopt};
  if (parse_call(spec, "PSigmaL", args) && args.size() == 2 && args[0] == "2")
    return Construction{psigmal2(static_cast<unsigned>(parse_uint(args[1]))),
                        {"t", "m", "s", "frob"},
                        std::nullopt};
  if (parse_call(spec, "torus", args) && args.size() == 2) {
    TorusInstance t = torus_group(static_cast<unsigned>(parse_uint(args[0])),
                                  static_cast<unsigned>(parse_uint(args[1])), cap);
    return Construction{t.group, {"x", "y"}, RotaryPair{t.x, t.y}};
  }
  if (parse_call(spec, "composite2", args) && args.size() == 2) {
    unsigned seed = 3;
    if (args[1] == "sd16xy") seed = 0;
    if (args[1] == "sd16xyy") seed = 1;
    if (args[1] == "m16xy") seed = 2;
    require(seed < 3, Errc::parse_error, "seed must be sd16xy, sd16xyy or m16xy");
    CompositeInstance c =
        composite_two_group(static_cast<unsigned>(parse_uint(args[0])), seed, cap);
    return Construction{c.group, {"x", "y"}, RotaryPair{c.x, c.y}};
  }
  if (parse_call(spec, "bouquet", args) && args.size() == 1) {
    GroupWithPair g = abelian_map(parse_uint(args[0]), AbelianKind::bouquet);
    return Construction{g.group, {"x"}, RotaryPair{g.x, g.y}};
  }
  if (parse_call(spec, "dipole", args) && args.size() == 1) {
    GroupWithPair g = abelian_map(parse_uint(args[0]), AbelianKind::dipole);
    return Construction{g.group, {"x", "y"}, RotaryPair{g.x, g.y}};
  }
  if (spec.rfind("line", 0) == 0) {
    auto paren = spec.find('(');
    require(paren == 5 && spec.back() == ')', Errc::parse_error,
            "line family syntax: line<k>(f)");
    int line = spec[4] - '0';
    unsigned f = static_cast<unsigned>(parse_uint(spec.substr(6, spec.size() - 7)));
    FamilyInstance inst = solvable_example(line, f, cap);
    require(inst.group.has_value(), Errc::cap_exceeded,
            spec + " is paper-scale: analytic order " + inst.analytic_order.str() +
                " exceeds the cap; use identity-check instead");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < inst.group->generators().size(); ++i)
      names.push_back("g" + std::to_string(i));
    return Construction{*inst.group, names, inst.pair};
  }
  fail(Errc::parse_error, "unrecognized construction '" + spec + "'");
}

inline Construction from_semidirect_file(const std::string& path, std::uint64_t cap) {
  std::ifstream in(path);
  require(in.good(), Errc::parse_error, "cannot open spec file " + path);
  Json j = Json::parse(in, nullptr, true, true);
  require(j.contains("normal") && j.contains("complement") && j.contains("action"),
          Errc::parse_error, "semidirect spec needs normal, complement, action");
  NamedGroup N = group_from_json(j["normal"]);
  NamedGroup H = group_from_json(j["complement"]);
  std::vector<std::vector<Permutation>> action;
  for (const auto& row : j["action"]) {
    std::vector<Permutation> images;
    for (const auto& cell : row) {
      if (cell.is_string())
        images.push_back(resolve_element(N, cell.get<std::string>()));
      else {
        std::vector<Point> img;
        for (const auto& v : cell) img.push_back(static_cast<Point>(v.get<unsigned>()));
        images.push_back(Permutation(std::move(img)));
      }
    }
    action.push_back(std::move(images));
  }
  SemidirectSpec spec{N.group, H.group, std::move(action), j.value("name", std::string())};
  auto sdp = semidirect_product(spec, cap);
  std::vector<std::string> names;
  for (const auto& nm : N.generator_names) names.push_back(nm);
  for (const auto& nm : H.generator_names) names.push_back(nm);
  return Construction{sdp.group, names, std::nullopt};
}

}  // namespace detail

// Grammar: "Z(n)", "D(2n)", "A(n)"/"An", "S(n)"/"Sn", "SD16", "M16",
// "PSL(2,q)", "PGL(2,q)", "PSigmaL(2,q)", "torus(f,eps)", "composite2(f,seed)",
// "bouquet(n)", "dipole(n)", "line<k>(f)", direct products with "x", and
// semidirect products from JSON action-table files.
inline Construction parse_construction(const std::string& spec,
                                       std::uint64_t cap = kDefaultCap) {
  // split at top-level 'x' (not inside parentheses)
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : spec) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == 'x' && depth == 0 && !cur.empty()) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  require(!parts.empty() && !parts.back().empty(), Errc::parse_error,
          "empty construction spec");
  Construction acc = detail::parse_atom(parts[0], cap);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    Construction rhs = detail::parse_atom(parts[i], cap);
    PermutationGroup prod = direct_product(acc.group, rhs.group);
    std::vector<std::string> names = acc.generator_names;
    for (const auto& nm : rhs.generator_names) {
      std::string candidate = nm;
      int suffix = 2;
      while (std::find(names.begin(), names.end(), candidate) != names.end())
        candidate = nm + std::to_string(suffix++);
      names.push_back(candidate);
    }
    acc = Construction{prod, names, std::nullopt};
  }
  return acc;
}

// The property-harness catalog: at least 25 groups spanning cyclic, dihedral,
// the order-16 trio, torus instances, alternating/symmetric groups, the
// projective families, and the two desk-scale solvable lines.
inline std::vector<PermutationGroup> standard_catalog(std::uint64_t cap = kDefaultCap) {
  std::vector<PermutationGroup> cat;
  for (std::uint64_t n : {2, 4, 6, 8, 12, 24}) cat.push_back(cyclic(n));
  for (std::uint64_t n : {3, 4, 5, 6, 8}) cat.push_back(dihedral_group(n));
  cat.push_back(dihedral_group(2, "V4"));
  auto trio = order16_groups();
  cat.push_back(trio[0].group);  // SD16
  cat.push_back(trio[2].group);  // M16
  cat.push_back(torus_group(1, 0, cap).group);
  cat.push_back(torus_group(1, 1, cap).group);
  cat.push_back(torus_group(2, 0, cap).group);
  cat.push_back(alternating_group(4));
  cat.push_back(symmetric_group(4));
  cat.push_back(alternating_group(5));
  cat.push_back(alternating_group(7));
  cat.push_back(psl2(5));
  cat.push_back(psl2(7));
  cat.push_back(psl2(8));
  cat.push_back(pgl2(5));
  cat.push_back(cyclic_semidirect(13, 6, 4, "Z13:Z6").group);
  cat.push_back(cyclic_semidirect(5, 4, 2, "Z5:Z4").group);
  cat.push_back(cyclic_semidirect(9, 3, 4, "Z9:Z3").group);
  cat.push_back(direct_product(cyclic(25), dihedral_group(84), "Z25xD168"));
  cat.push_back(direct_product(alternating_group(5), cyclic(3), "A5xZ3"));
  return cat;
}

}  // namespace birotary

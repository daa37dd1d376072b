#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "birotary/analysis.hpp"
#include "birotary/birotary.hpp"
#include "birotary/group.hpp"

namespace birotary {

// All (x, y) with |y| = 2 and <x,y> = G, in BFS element order (y outer, x inner).
inline std::vector<RotaryPair> enumerate_rotary_pairs(const PermutationGroup& G,
                                                      std::uint64_t cap = kDefaultCap) {
  G.materialize(cap);
  std::vector<RotaryPair> pairs;
  std::uint64_t n = G.elements().size();
  for (const auto& y : G.elements()) {
    if (y.order() != 2) continue;
    for (const auto& x : G.elements()) {
      PermutationGroup S(G.degree(), {x, y});
      bool generates = true;
      try {
        generates = S.materialize(n).size() == n;
      } catch (const Error& e) {
        if (e.code() != Errc::cap_exceeded) throw;
        generates = false;  // cannot happen for a subgroup, kept for safety
      }
      if (generates) pairs.push_back(RotaryPair{x, y});
    }
  }
  return pairs;
}

struct PairOrbit {
  std::vector<std::uint32_t> members;  // indices into the input pair list
  RotaryPair representative;           // lexicographically least (x images, y images)
};

// Partition of the pairs under the diagonal Aut(G)-action. The orbit
// invariants (k, m, chi, orientability) are constant on each orbit.
inline std::vector<PairOrbit> pair_orbits(const PermutationGroup& G,
                                          const std::vector<RotaryPair>& pairs,
                                          std::uint64_t cap = kDefaultCap) {
  auto auts = automorphisms(G, cap);
  std::map<std::pair<std::vector<Point>, std::vector<Point>>, std::uint32_t> index;
  for (std::uint32_t i = 0; i < pairs.size(); ++i)
    index.emplace(std::make_pair(pairs[i].x.images(), pairs[i].y.images()), i);

  std::vector<bool> seen(pairs.size(), false);
  std::vector<PairOrbit> orbits;
  for (std::uint32_t i = 0; i < pairs.size(); ++i) {
    if (seen[i]) continue;
    PairOrbit orbit{{}, pairs[i]};
    std::vector<std::uint32_t> frontier{i};
    seen[i] = true;
    orbit.members.push_back(i);
    while (!frontier.empty()) {
      std::vector<std::uint32_t> next;
      for (std::uint32_t j : frontier) {
        for (const auto& sigma : auts) {
          RotaryPair im{sigma.apply(pairs[j].x), sigma.apply(pairs[j].y)};
          auto it = index.find(std::make_pair(im.x.images(), im.y.images()));
          require(it != index.end(), Errc::structure_violation,
                  "automorphism image of a rotary pair is not a rotary pair");
          if (!seen[it->second]) {
            seen[it->second] = true;
            orbit.members.push_back(it->second);
            next.push_back(it->second);
          }
        }
      }
      frontier = std::move(next);
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    for (std::uint32_t j : orbit.members) {
      auto key = std::make_pair(pairs[j].x.images(), pairs[j].y.images());
      auto rep = std::make_pair(orbit.representative.x.images(), orbit.representative.y.images());
      if (key < rep) orbit.representative = pairs[j];
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

struct CensusRecord {
  std::string group_name;
  std::uint64_t order = 0;
  std::uint64_t k = 0, m = 0;
  std::int64_t chi = 0;
  bool orientable = false;
  std::optional<std::pair<std::uint64_t, unsigned>> prime_power;
  std::uint64_t orbit_size = 0;
  std::string x_cycles, y_cycles;
  std::string status = "ok";  // ok | skipped(cap) | dup(<group>)
};

struct CensusFilter {
  // name: "all", "prime-power", "neg-power(p)", "chi<0", "chi=<value>"
  std::string name = "all";
  std::function<bool(std::int64_t)> pred = [](std::int64_t) { return true; };
};

inline CensusFilter parse_census_filter(const std::string& text) {
  CensusFilter f;
  f.name = text;
  if (text == "all" || text.empty()) {
    f.name = "all";
    return f;
  }
  if (text == "prime-power") {
    f.pred = [](std::int64_t chi) { return prime_power_chi(chi).has_value(); };
    return f;
  }
  if (text.rfind("neg-power(", 0) == 0 && text.back() == ')') {
    std::uint64_t p = std::stoull(text.substr(10, text.size() - 11));
    f.pred = [p](std::int64_t chi) {
      auto pp = prime_power_chi(chi);
      return pp && pp->first == p;
    };
    return f;
  }
  if (text == "chi<0") {
    f.pred = [](std::int64_t chi) { return chi < 0; };
    return f;
  }
  if (text.rfind("chi=", 0) == 0) {
    std::int64_t v = std::stoll(text.substr(4));
    f.pred = [v](std::int64_t chi) { return chi == v; };
    return f;
  }
  fail(Errc::parse_error, "unknown census filter: " + text);
}

// Scans each catalog group: enumerates pairs, partitions them into
// Aut-orbits, filters by chi, and emits one record per surviving orbit.
// Per-group failures become records with status "skipped(cap)"; records of
// isomorphic maps across groups of equal order are marked "dup(...)" (the
// pinned-isomorphism test of the map-isomorphism lemma decides merging).
// Groups are processed concurrently; the output order is deterministic.
inline std::vector<CensusRecord> census_scan(const std::vector<PermutationGroup>& catalog,
                                             const CensusFilter& filter,
                                             std::uint64_t cap = kDefaultCap) {
  struct GroupResult {
    std::vector<CensusRecord> records;
    std::vector<std::optional<BiRotaryMap>> maps;  // parallel to records
  };
  std::vector<std::future<GroupResult>> futures;
  for (const auto& G : catalog) {
    futures.push_back(std::async(std::launch::async, [&filter, G, cap]() {
      GroupResult res;
      try {
        auto pairs = enumerate_rotary_pairs(G, cap);
        auto orbits = pair_orbits(G, pairs, cap);
        for (const auto& orbit : orbits) {
          BiRotaryMap M = make_map(G, orbit.representative.x, orbit.representative.y, cap);
          if (!filter.pred(M.chi)) continue;
          CensusRecord rec;
          rec.group_name = G.name();
          rec.order = G.elements().size();
          rec.k = M.k;
          rec.m = M.m;
          rec.chi = M.chi;
          rec.orientable = M.orientable;
          rec.prime_power = prime_power_chi(M.chi);
          rec.orbit_size = orbit.members.size();
          rec.x_cycles = orbit.representative.x.to_cycle_string();
          rec.y_cycles = orbit.representative.y.to_cycle_string();
          res.records.push_back(std::move(rec));
          res.maps.push_back(std::move(M));
        }
      } catch (const Error& e) {
        if (e.code() != Errc::cap_exceeded) throw;
        CensusRecord rec;
        rec.group_name = G.name();
        rec.order = G.analytic_order().value_or(0);
        rec.status = "skipped(cap)";
        res.records.push_back(std::move(rec));
        res.maps.push_back(std::nullopt);
      }
      return res;
    }));
  }

  std::vector<CensusRecord> records;
  std::vector<std::optional<BiRotaryMap>> maps;
  for (auto& fut : futures) {
    GroupResult res = fut.get();
    for (std::size_t i = 0; i < res.records.size(); ++i) {
      records.push_back(std::move(res.records[i]));
      maps.push_back(std::move(res.maps[i]));
    }
  }

  // cross-group dedup via pinned isomorphism
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!maps[i] || records[i].status != "ok") continue;
    for (std::size_t j = i + 1; j < records.size(); ++j) {
      if (!maps[j] || records[j].status != "ok") continue;
      if (records[i].group_name == records[j].group_name) continue;
      if (records[i].order != records[j].order) continue;
      if (maps_isomorphic(*maps[i], *maps[j]).has_value())
        records[j].status = "dup(" + records[i].group_name + ")";
    }
  }

  std::sort(records.begin(), records.end(), [](const CensusRecord& a, const CensusRecord& b) {
    return std::tie(a.order, a.chi, a.k, a.m, a.x_cycles, a.y_cycles, a.group_name) <
           std::tie(b.order, b.chi, b.k, b.m, b.x_cycles, b.y_cycles, b.group_name);
  });
  return records;
}

inline std::string census_csv(const std::vector<CensusRecord>& records) {
  std::ostringstream os;
  os << "group,order,k,m,chi,orientable,p,n,orbit_size,x,y,status\n";
  for (const auto& r : records) {
    os << r.group_name << ',' << r.order << ',' << r.k << ',' << r.m << ',' << r.chi << ','
       << (r.orientable ? "true" : "false") << ',';
    if (r.prime_power)
      os << r.prime_power->first << ',' << r.prime_power->second;
    else
      os << ',';
    os << ',' << r.orbit_size << ',' << '"' << r.x_cycles << '"' << ',' << '"' << r.y_cycles
       << '"' << ',' << r.status << '\n';
  }
  return os.str();
}

}  // namespace birotary

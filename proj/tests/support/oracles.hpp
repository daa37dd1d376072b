#pragma once

// Brute-force oracles, independent of the library's Sylow / core / radical
// implementations: normal subgroups are enumerated as joins of normal
// closures of single elements, which reaches every normal subgroup.

#include <set>
#include <vector>

#include "birotary/analysis.hpp"
#include "birotary/group.hpp"

namespace oracles {

using namespace birotary;

inline std::vector<PermutationGroup> normal_subgroups(const PermutationGroup& G,
                                                      std::uint64_t cap = kDefaultCap) {
  G.materialize(cap);
  std::vector<PermutationGroup> found;
  std::set<std::set<Permutation>> seen;
  auto add = [&](const PermutationGroup& N) {
    std::set<Permutation> key(N.elements().begin(), N.elements().end());
    if (seen.insert(std::move(key)).second) {
      found.push_back(N);
      return true;
    }
    return false;
  };
  add(PermutationGroup::trivial(G.degree()));
  std::vector<PermutationGroup> atoms;
  for (const auto& g : G.elements()) {
    PermutationGroup N = normal_closure(G, {g}, cap);
    if (add(N)) atoms.push_back(N);
  }
  // close the set under joins
  std::size_t frontier_start = 0;
  std::vector<PermutationGroup> all = found;
  while (frontier_start < all.size()) {
    std::size_t end = all.size();
    for (std::size_t i = frontier_start; i < end; ++i) {
      for (const auto& atom : atoms) {
        std::vector<Permutation> gens = all[i].generators();
        for (const auto& a : atom.generators()) gens.push_back(a);
        PermutationGroup J = subgroup_generated(G, gens, cap);
        if (add(J)) all.push_back(J);
      }
    }
    frontier_start = end;
  }
  return found;
}

inline std::uint64_t max_normal_p_subgroup_order(const PermutationGroup& G, std::uint64_t p,
                                                 std::uint64_t cap = kDefaultCap) {
  std::uint64_t best = 1;
  for (const auto& N : normal_subgroups(G, cap)) {
    std::uint64_t n = N.elements().size();
    bool is_p_group = true;
    for (std::uint64_t v = n; v > 1; v /= p)
      if (v % p != 0) {
        is_p_group = false;
        break;
      }
    if (is_p_group && n > best) best = n;
  }
  return best;
}

inline std::uint64_t max_solvable_normal_order(const PermutationGroup& G,
                                               std::uint64_t cap = kDefaultCap) {
  std::uint64_t best = 1;
  for (const auto& N : normal_subgroups(G, cap))
    if (is_solvable(N, cap)) best = std::max<std::uint64_t>(best, N.elements().size());
  return best;
}

}  // namespace oracles

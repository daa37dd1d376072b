#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "birotary/group.hpp"

namespace birotary {

inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Largest divisor of n supported on the given primes.
inline std::uint64_t part_of(std::uint64_t n, std::initializer_list<std::uint64_t> primes) {
  std::uint64_t part = 1;
  for (std::uint64_t p : primes)
    while (n % p == 0) {
      n /= p;
      part *= p;
    }
  return part;
}

// --- derived series, solvability, perfect residual ---------------------------

inline PermutationGroup derived_subgroup(const PermutationGroup& G,
                                         std::uint64_t cap = kDefaultCap) {
  G.materialize(cap);
  std::vector<Permutation> comms;
  const auto& gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (i != j) comms.push_back(commutator(gens[i], gens[j]));
  if (comms.empty()) comms.push_back(Permutation::identity(G.degree()));
  return normal_closure(G, std::move(comms), cap, G.name() + "'");
}

struct DerivedSeries {
  std::vector<PermutationGroup> terms;  // G = terms[0] > terms[1] > ... stabilizing
};

inline DerivedSeries derived_series(const PermutationGroup& G, std::uint64_t cap = kDefaultCap) {
  DerivedSeries s;
  s.terms.push_back(G);
  for (;;) {
    const PermutationGroup& last = s.terms.back();
    last.materialize(cap);
    PermutationGroup next = derived_subgroup(last, cap);
    if (next.elements().size() == last.elements().size()) break;
    s.terms.push_back(next);
    if (next.elements().size() == 1) break;
  }
  return s;
}

inline bool is_solvable(const PermutationGroup& G, std::uint64_t cap = kDefaultCap) {
  return derived_series(G, cap).terms.back().elements().size() == 1;
}

// Limit of the derived series: the smallest normal subgroup with solvable quotient.
inline PermutationGroup perfect_residual(const PermutationGroup& G,
                                         std::uint64_t cap = kDefaultCap) {
  auto s = derived_series(G, cap);
  PermutationGroup D = s.terms.back();
  D.set_name(G.name() + "^(inf)");
  return D;
}

// --- cyclic / dihedral recognition -------------------------------------------

inline bool is_cyclic(const PermutationGroup& G) {
  G.materialize();
  std::uint64_t n = G.elements().size();
  for (const auto& g : G.elements())
    if (g.order() == n) return true;
  return false;
}

// Dihedral test; orders 2 and 4 (Klein) count as degenerate dihedral, since the
// face group <tau, tau^rho> of order 2|[rho,tau]| can have either order.
inline bool is_dihedral(const PermutationGroup& G) {
  G.materialize();
  std::uint64_t n = G.elements().size();
  if (n % 2 != 0) return false;
  if (n == 2) return true;
  if (n == 4) {
    // Klein four-group, but not Z4
    for (const auto& g : G.elements())
      if (g.order() == 4) return false;
    return true;
  }
  for (const auto& c : G.elements()) {
    if (c.order() != n / 2) continue;
    PermutationGroup C = subgroup_generated(G, {c});
    for (const auto& t : G.elements()) {
      if (t.order() != 2 || C.contains(t)) continue;
      if (conjugate(c, t) == c.inverse()) return true;
    }
    break;  // all cyclic index-2 subgroups coincide with <c> up to choice of generator
  }
  return false;
}

// --- Sylow subgroups, p-core, radical ----------------------------------------

enum class SylowShape { cyclic, dihedral, other };

inline const char* shape_name(SylowShape s) {
  switch (s) {
    case SylowShape::cyclic: return "cyclic";
    case SylowShape::dihedral: return "dihedral";
    case SylowShape::other: return "other";
  }
  return "?";
}

struct SylowWitness {
  std::uint64_t prime = 0;
  PermutationGroup subgroup;
  SylowShape shape = SylowShape::cyclic;
};

// Grows a p-subgroup by adjoining r-power-order elements of N_G(P) \ P until
// the full r-part of |G| is reached.
inline SylowWitness sylow_subgroup(const PermutationGroup& G, std::uint64_t r,
                                   bool reverse_sweep = false) {
  require(is_prime(r), Errc::invalid_argument, "Sylow prime must be prime");
  G.materialize();
  std::uint64_t target = part_of(G.elements().size(), {r});
  PermutationGroup P = PermutationGroup::trivial(G.degree());
  std::vector<Permutation> seeds;
  while (P.elements().size() < target) {
    PermutationGroup N = P.elements().size() == 1 ? G : normalizer(G, P);
    bool grew = false;
    const auto& pool = N.elements();
    for (std::size_t k = 0; k < pool.size(); ++k) {
      const auto& g = pool[reverse_sweep ? pool.size() - 1 - k : k];
      std::uint64_t o = g.order();
      std::uint64_t m = o / part_of(o, {r});
      Permutation h = g.power(static_cast<long long>(m));
      if (h.is_identity() || P.contains(h)) continue;
      seeds.push_back(h);
      P = subgroup_generated(G, seeds);
      grew = true;
      break;
    }
    require(grew, Errc::structure_violation, "Sylow growth stalled");
  }
  SylowShape shape = SylowShape::other;
  if (is_cyclic(P))
    shape = SylowShape::cyclic;
  else if (is_dihedral(P))
    shape = SylowShape::dihedral;
  P.set_name(G.name() + "_Syl" + std::to_string(r));
  return SylowWitness{r, P, shape};
}

// Right-coset representatives of H in G, in BFS element order.
inline std::vector<Permutation> right_transversal(const PermutationGroup& G,
                                                  const PermutationGroup& H) {
  G.materialize();
  H.materialize();
  std::vector<bool> covered(G.elements().size(), false);
  std::vector<Permutation> reps;
  for (std::uint32_t i = 0; i < G.elements().size(); ++i) {
    if (covered[i]) continue;
    reps.push_back(G.elements()[i]);
    for (const auto& h : H.elements()) covered[*G.index_of(h * G.elements()[i])] = true;
  }
  return reps;
}

// O_p(G): the intersection of all conjugates of one Sylow p-subgroup, taken
// over a transversal of its normalizer.
inline PermutationGroup p_core(const PermutationGroup& G, std::uint64_t p) {
  G.materialize();
  PermutationGroup P = sylow_subgroup(G, p).subgroup;
  if (P.elements().size() == 1) {
    auto T = PermutationGroup::trivial(G.degree(), "O_" + std::to_string(p));
    return T;
  }
  PermutationGroup N = normalizer(G, P);
  std::set<Permutation> core(P.elements().begin(), P.elements().end());
  for (const auto& t : right_transversal(G, N)) {
    std::set<Permutation> pt;
    for (const auto& x : P.elements()) pt.insert(conjugate(x, t));
    std::set<Permutation> inter;
    for (const auto& x : core)
      if (pt.count(x)) inter.insert(x);
    core = std::move(inter);
    if (core.size() == 1) break;
  }
  std::vector<Permutation> gens(core.begin(), core.end());
  PermutationGroup O(G.degree(), std::move(gens), "O_" + std::to_string(p));
  O.materialize();
  return O;
}

// rad(G), generated by every element whose normal closure is solvable.
inline PermutationGroup solvable_radical(const PermutationGroup& G,
                                         std::uint64_t cap = kDefaultCap) {
  G.materialize(cap);
  if (is_solvable(G, cap)) {
    PermutationGroup R = G;
    R.set_name("rad(" + G.name() + ")");
    return R;
  }
  std::vector<Permutation> members{Permutation::identity(G.degree())};
  std::set<Permutation> in_rad{Permutation::identity(G.degree())};
  std::set<Permutation> known_bad;
  for (const auto& g : G.elements()) {
    if (in_rad.count(g) || known_bad.count(g)) continue;
    PermutationGroup N = normal_closure(G, {g}, cap);
    if (N.elements().size() == G.elements().size() || !is_solvable(N, cap)) {
      for (const auto& x : N.generators()) known_bad.insert(x);
      known_bad.insert(g);
      continue;
    }
    for (const auto& x : N.elements()) {
      if (in_rad.insert(x).second) members.push_back(x);
    }
  }
  PermutationGroup R = subgroup_generated(G, members, cap, "rad(" + G.name() + ")");
  return R;
}

// --- conjugacy classes and fingerprints ---------------------------------------

struct ConjugacyClasses {
  std::vector<std::uint32_t> class_of;        // element index -> class id
  std::vector<std::uint32_t> representative;  // class id -> element index (BFS-least)
  std::vector<std::uint32_t> size;
};

inline ConjugacyClasses conjugacy_classes(const PermutationGroup& G) {
  G.materialize();
  const auto& els = G.elements();
  ConjugacyClasses cc;
  cc.class_of.assign(els.size(), UINT32_MAX);
  for (std::uint32_t i = 0; i < els.size(); ++i) {
    if (cc.class_of[i] != UINT32_MAX) continue;
    auto cid = static_cast<std::uint32_t>(cc.representative.size());
    cc.representative.push_back(i);
    std::vector<std::uint32_t> frontier{i};
    cc.class_of[i] = cid;
    std::uint32_t count = 1;
    while (!frontier.empty()) {
      std::vector<std::uint32_t> next;
      for (std::uint32_t j : frontier) {
        for (const auto& g : G.generators()) {
          auto k = *G.index_of(conjugate(els[j], g));
          if (cc.class_of[k] == UINT32_MAX) {
            cc.class_of[k] = cid;
            next.push_back(k);
            ++count;
          }
        }
      }
      frontier = std::move(next);
    }
    cc.size.push_back(count);
  }
  return cc;
}

// --- Hall {2,3}-subgroup -------------------------------------------------------

// Deterministic ordered conjugate sweep over P2 * P3^g; no randomization.
inline PermutationGroup hall_subgroup_23(const PermutationGroup& G,
                                         std::uint64_t cap = kDefaultCap) {
  G.materialize(cap);
  require(is_solvable(G, cap), Errc::not_solvable, "Hall {2,3}-subgroup requires solvable G");
  std::uint64_t target = part_of(G.elements().size(), {2, 3});
  if (target == 1) return PermutationGroup::trivial(G.degree(), "Hall23");
  PermutationGroup P2 = sylow_subgroup(G, 2).subgroup;
  PermutationGroup P3 = sylow_subgroup(G, 3).subgroup;
  if (P2.elements().size() == target) return P2;
  if (P3.elements().size() == target) return P3;
  for (const auto& g : G.elements()) {
    std::vector<Permutation> seeds = P2.generators();
    for (const auto& h : P3.generators()) seeds.push_back(conjugate(h, g));
    PermutationGroup H(G.degree(), seeds, "Hall23");
    bool fits = true;
    try {
      H.materialize(target);
    } catch (const Error& e) {
      if (e.code() != Errc::cap_exceeded) throw;
      fits = false;
    }
    if (fits && H.elements().size() == target) return H;
  }
  fail(Errc::not_found, "Hall {2,3}-subgroup search exhausted (internal error)");
}

// --- isomorphism and automorphisms --------------------------------------------

namespace detail {

struct Fingerprint {
  std::uint64_t order;
  std::uint64_t centralizer_size;
  auto operator<=>(const Fingerprint&) const = default;
};

inline std::vector<Fingerprint> fingerprints(const PermutationGroup& G) {
  G.materialize();
  const auto& els = G.elements();
  std::vector<Fingerprint> fp(els.size());
  auto cc = conjugacy_classes(G);
  for (std::uint32_t i = 0; i < els.size(); ++i)
    fp[i] = {els[i].order(),
             els.size() / cc.size[cc.class_of[i]]};
  return fp;
}

}  // namespace detail

// Backtracking search for an isomorphism G -> H over order-preserving
// generator-image assignments, with optional pinned images. Images are pruned
// by (element order, centralizer size) fingerprints, then each candidate is
// extended across the Cayley graph and verified bijective.
inline std::optional<Homomorphism> find_isomorphism(
    const PermutationGroup& G, const PermutationGroup& H,
    const std::optional<std::vector<Permutation>>& pinned_images = std::nullopt) {
  G.materialize();
  H.materialize();
  if (G.elements().size() != H.elements().size()) return std::nullopt;

  if (pinned_images) {
    require(pinned_images->size() == G.generators().size(), Errc::invalid_argument,
            "one pinned image per generator required");
    Homomorphism sigma(G, H, *pinned_images);
    if (sigma.extend_and_check() && sigma.is_bijective_onto_target()) return sigma;
    return std::nullopt;
  }

  auto fpG = detail::fingerprints(G);
  auto fpH = detail::fingerprints(H);
  std::multiset<detail::Fingerprint> bagG(fpG.begin(), fpG.end());
  std::multiset<detail::Fingerprint> bagH(fpH.begin(), fpH.end());
  if (bagG != bagH) return std::nullopt;

  const auto& gens = G.generators();
  std::vector<std::vector<Permutation>> candidates(gens.size());
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    auto want = fpG[*G.index_of(gens[gi])];
    for (std::uint32_t j = 0; j < H.elements().size(); ++j)
      if (fpH[j] == want) candidates[gi].push_back(H.elements()[j]);
  }

  std::vector<Permutation> images;
  std::optional<Homomorphism> found;
  auto rec = [&](auto&& self, std::size_t gi) -> bool {
    if (gi == gens.size()) {
      Homomorphism sigma(G, H, images);
      if (sigma.extend_and_check() && sigma.is_bijective_onto_target()) {
        found = sigma;
        return true;
      }
      return false;
    }
    for (const auto& cand : candidates[gi]) {
      images.push_back(cand);
      if (self(self, gi + 1)) return true;
      images.pop_back();
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

// All isomorphisms G -> G, in deterministic candidate order.
inline std::vector<Homomorphism> automorphisms(const PermutationGroup& G,
                                               std::uint64_t cap = kDefaultCap) {
  G.materialize(cap);
  auto fp = detail::fingerprints(G);
  const auto& gens = G.generators();
  std::vector<std::vector<Permutation>> candidates(gens.size());
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    auto want = fp[*G.index_of(gens[gi])];
    for (std::uint32_t j = 0; j < G.elements().size(); ++j)
      if (fp[j] == want) candidates[gi].push_back(G.elements()[j]);
  }
  std::vector<Homomorphism> out;
  std::vector<Permutation> images;
  auto rec = [&](auto&& self, std::size_t gi) -> void {
    if (gi == gens.size()) {
      Homomorphism sigma(G, G, images);
      if (sigma.extend_and_check() && sigma.is_bijective_onto_target()) out.push_back(sigma);
      return;
    }
    for (const auto& cand : candidates[gi]) {
      images.push_back(cand);
      self(self, gi + 1);
      images.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace birotary

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "birotary/analysis.hpp"
#include "birotary/birotary.hpp"
#include "birotary/group.hpp"

namespace birotary {

// The five P-class predicates of the group-class hierarchy.
//
// P0(p) w.r.t. (rho,tau):  |tau| = 2, <rho,tau> = G and
//     |G|(1/|rho| + 1/|<tau,tau^rho>| - 1/2) = -p^n for some n >= 1.
// P1(p): |G| = p^n lcm(|H1|,|H2|) for cyclic-or-dihedral H1, H2, n >= 0.
// P1+(p) w.r.t. (rho,tau): |tau| <= 2, <rho,tau> = G, <[rho,tau],rho> = G for
//     odd p, and P1 holds with the fixed witnesses H1 = <tau,tau^rho>, H2 = <rho>.
// P2(p): every Sylow r-subgroup with r != p is cyclic or dihedral.
// P2+(p): the pair conditions of P1+ plus P2.
//
// P0 requires n >= 1 while P1 accepts n = 0; the asymmetry is deliberate.

struct P0Verdict {
  bool holds = false;
  unsigned n = 0;
  std::int64_t chi = 0;
};

inline P0Verdict is_p0(const PermutationGroup& G, const Permutation& rho,
                       const Permutation& tau, std::uint64_t p,
                       std::uint64_t cap = kDefaultCap) {
  require(tau.order() == 2, Errc::not_involution, "tau must be an involution");
  G.materialize(cap);
  PermutationGroup gen = subgroup_generated(G, {rho, tau}, cap);
  require(gen.elements().size() == G.elements().size(), Errc::not_generating,
          "(rho,tau) does not generate");
  BiRotaryMap M = make_map(G, rho, tau, cap);
  P0Verdict v;
  v.chi = M.chi;
  auto pp = prime_power_chi(M.chi);
  if (pp && pp->first == p) {
    v.holds = true;
    v.n = pp->second;
  }
  return v;
}

struct P1Witness {
  bool holds = false;
  unsigned n = 0;
  std::uint64_t h1_order = 0;  // cyclic witness order
  std::uint64_t h2_order = 0;
  std::optional<PermutationGroup> h1;
  std::optional<PermutationGroup> h2;
};

namespace detail {

// Orders of cyclic and dihedral subgroups realizable in G, with a witness
// subgroup for each order (first found in BFS element order).
struct CyclicDihedralInventory {
  std::map<std::uint64_t, PermutationGroup> cyclic;    // order -> subgroup
  std::map<std::uint64_t, PermutationGroup> dihedral;  // order -> subgroup
};

inline CyclicDihedralInventory cyclic_dihedral_inventory(const PermutationGroup& G,
                                                         std::uint64_t cap = kDefaultCap) {
  G.materialize(cap);
  CyclicDihedralInventory inv;
  std::vector<const Permutation*> involutions;
  for (const auto& g : G.elements())
    if (g.order() == 2) involutions.push_back(&g);
  for (const auto& g : G.elements()) {
    std::uint64_t o = g.order();
    if (!inv.cyclic.count(o)) inv.cyclic.emplace(o, subgroup_generated(G, {g}));
  }
  // order-2 and Klein subgroups are degenerate dihedral
  if (inv.cyclic.count(2) && !inv.dihedral.count(2)) inv.dihedral.emplace(2, inv.cyclic.at(2));
  for (const auto* s : involutions) {
    if (inv.dihedral.count(4)) break;
    for (const auto* t : involutions) {
      if (*s == *t || !(*s * *t == *t * *s)) continue;
      inv.dihedral.emplace(4, subgroup_generated(G, {*s, *t}));
      break;
    }
  }
  for (const auto& g : G.elements()) {
    std::uint64_t c = g.order();
    if (c < 3 || inv.dihedral.count(2 * c)) continue;
    PermutationGroup C = subgroup_generated(G, {g});
    for (const auto* t : involutions) {
      if (C.contains(*t)) continue;
      if (conjugate(g, *t) == g.inverse()) {
        inv.dihedral.emplace(2 * c, subgroup_generated(G, {g, *t}));
        break;
      }
    }
  }
  return inv;
}

inline bool is_p_power(std::uint64_t v, std::uint64_t p, unsigned* n_out = nullptr) {
  unsigned n = 0;
  while (v % p == 0) {
    v /= p;
    ++n;
  }
  if (v != 1) return false;
  if (n_out) *n_out = n;
  return true;
}

}  // namespace detail

// Candidate orders are enumerated before subgroups are constructed, pruned by
// the lcm condition; ties broken by smallest (|H1|,|H2|) lexicographically.
inline P1Witness is_p1(const PermutationGroup& G, std::uint64_t p,
                       std::uint64_t cap = kDefaultCap) {
  require(is_prime(p), Errc::invalid_argument, "p must be prime");
  G.materialize(cap);
  std::uint64_t n = G.elements().size();
  auto inv = detail::cyclic_dihedral_inventory(G, cap);

  std::vector<std::pair<std::uint64_t, const PermutationGroup*>> pool;
  for (const auto& [o, H] : inv.cyclic) pool.emplace_back(o, &H);
  for (const auto& [o, H] : inv.dihedral) pool.emplace_back(o, &H);
  std::sort(pool.begin(), pool.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  P1Witness best;
  for (const auto& [o1, H1] : pool) {
    for (const auto& [o2, H2] : pool) {
      std::uint64_t l = std::lcm(o1, o2);
      if (n % l != 0) continue;
      unsigned e = 0;
      if (!detail::is_p_power(n / l, p, &e)) continue;
      if (best.holds &&
          std::make_pair(best.h1_order, best.h2_order) <= std::make_pair(o1, o2))
        continue;
      best.holds = true;
      best.n = e;
      best.h1_order = o1;
      best.h2_order = o2;
      best.h1 = *H1;
      best.h2 = *H2;
    }
  }
  return best;
}

struct P1PlusVerdict {
  bool holds = false;
  unsigned n = 0;
  std::uint64_t face_order = 0;  // |<tau,tau^rho>|
  std::uint64_t rho_order = 0;
};

// Checks the fixed witness pair H1 = <tau,tau^rho>, H2 = <rho> plus the
// odd-p orientability condition <[rho,tau],rho> = G.
inline P1PlusVerdict is_p1_plus(const PermutationGroup& G, const Permutation& rho,
                                const Permutation& tau, std::uint64_t p,
                                std::uint64_t cap = kDefaultCap) {
  require(tau.order() <= 2, Errc::invalid_argument, "tau must have order at most 2");
  G.materialize(cap);
  PermutationGroup gen = subgroup_generated(G, {rho, tau}, cap);
  require(gen.elements().size() == G.elements().size(), Errc::not_generating,
          "(rho,tau) does not generate");
  P1PlusVerdict v;
  v.rho_order = rho.order();
  PermutationGroup face = subgroup_generated(G, {tau, conjugate(tau, rho)}, cap);
  v.face_order = face.elements().size();
  if (p % 2 == 1) {
    PermutationGroup S = subgroup_generated(G, {commutator(rho, tau), rho}, cap);
    if (S.elements().size() != G.elements().size()) return v;
  }
  std::uint64_t l = std::lcm(v.face_order, v.rho_order);
  std::uint64_t n = G.elements().size();
  if (n % l != 0) return v;
  unsigned e = 0;
  if (!detail::is_p_power(n / l, p, &e)) return v;
  v.holds = true;
  v.n = e;
  return v;
}

struct P2Verdict {
  bool holds = false;
  std::vector<SylowWitness> witnesses;  // one per prime r != p dividing |G|
};

inline P2Verdict is_p2(const PermutationGroup& G, std::uint64_t p,
                       std::uint64_t cap = kDefaultCap) {
  require(is_prime(p), Errc::invalid_argument, "p must be prime");
  G.materialize(cap);
  P2Verdict v;
  v.holds = true;
  for (auto [r, e] : factorize(G.elements().size())) {
    if (r == p) continue;
    SylowWitness w = sylow_subgroup(G, r);
    if (w.shape == SylowShape::other) v.holds = false;
    v.witnesses.push_back(std::move(w));
  }
  return v;
}

inline bool is_p2_plus(const PermutationGroup& G, const Permutation& rho,
                       const Permutation& tau, std::uint64_t p,
                       std::uint64_t cap = kDefaultCap) {
  require(tau.order() <= 2, Errc::invalid_argument, "tau must have order at most 2");
  PermutationGroup gen = subgroup_generated(G, {rho, tau}, cap);
  if (gen.elements().size() != G.materialize(cap).size()) fail(Errc::not_generating, "(rho,tau) does not generate");
  if (p % 2 == 1) {
    PermutationGroup S = subgroup_generated(G, {commutator(rho, tau), rho}, cap);
    if (S.elements().size() != G.elements().size()) return false;
  }
  return is_p2(G, p, cap).holds;
}

// Aggregate report with all verdicts and witnesses, re-checkable externally.
struct PClassReport {
  std::uint64_t p = 0;
  std::optional<P0Verdict> p0;  // pair-dependent verdicts absent without a pair
  P1Witness p1;
  std::optional<P1PlusVerdict> p1_plus;
  P2Verdict p2;
  std::optional<bool> p2_plus;
};

inline PClassReport pclass_report(const PermutationGroup& G,
                                  const std::optional<RotaryPair>& pair, std::uint64_t p,
                                  std::uint64_t cap = kDefaultCap) {
  PClassReport r;
  r.p = p;
  r.p1 = is_p1(G, p, cap);
  r.p2 = is_p2(G, p, cap);
  if (pair) {
    if (pair->y.order() == 2) r.p0 = is_p0(G, pair->x, pair->y, p, cap);
    r.p1_plus = is_p1_plus(G, pair->x, pair->y, p, cap);
    r.p2_plus = is_p2_plus(G, pair->x, pair->y, p, cap);
  }
  return r;
}

}  // namespace birotary

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "birotary/analysis.hpp"
#include "birotary/group.hpp"

namespace birotary {

struct RotaryPair {
  Permutation x;
  Permutation y;
};

// Map(G, x, y): the algebraic bi-rotary map of a group with a rotary pair.
// Type (k, m) with k = |x| and m = |<y, y^x>| = 2|[x,y]|; cell counts
// V = |G|/k, E = |G|/2, F = |G|/m; chi = V - E + F as an exact integer.
struct BiRotaryMap {
  PermutationGroup group;
  RotaryPair pair;
  std::uint64_t k = 0;
  std::uint64_t m = 0;
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  std::uint64_t faces = 0;
  std::int64_t chi = 0;
  bool orientable = false;
  std::string tag;  // "bouquet" / "dipole" for abelian groups, else empty
};

// Quotient artifact when y collapses to the identity: a semistar embedding.
struct DegenerateMap {
  PermutationGroup group;
  Permutation x;
  std::string reason;
};

// True iff <[x,y], x> is a proper subgroup of G (Lemma: the map is
// non-orientable exactly when that subgroup is the whole group).
inline bool orientability_subgroup_is_proper(const PermutationGroup& G, const Permutation& x,
                                             const Permutation& y,
                                             std::uint64_t cap = kDefaultCap) {
  G.materialize(cap);
  PermutationGroup S = subgroup_generated(G, {commutator(x, y), x}, cap);
  return S.elements().size() < G.elements().size();
}

inline BiRotaryMap make_map(const PermutationGroup& G, const Permutation& x,
                            const Permutation& y, std::uint64_t cap = kDefaultCap) {
  require(y.order() == 2, Errc::not_involution, "y must have order exactly 2");
  G.materialize(cap);
  require(G.contains(x) && G.contains(y), Errc::precondition_failed,
          "pair elements must lie in the group");
  PermutationGroup gen = subgroup_generated(G, {x, y}, cap);
  require(gen.elements().size() == G.elements().size(), Errc::not_generating,
          "<x,y> is a proper subgroup");

  BiRotaryMap M{G, RotaryPair{x, y}};
  std::uint64_t n = G.elements().size();
  M.k = x.order();
  std::uint64_t comm_order = commutator(x, y).order();
  M.m = 2 * comm_order;
  require(n % M.k == 0 && n % 2 == 0 && n % M.m == 0, Errc::divisibility_violation,
          "cell counts must be integers");
  M.vertices = n / M.k;
  M.edges = n / 2;
  M.faces = n / M.m;
  M.chi = static_cast<std::int64_t>(M.vertices) - static_cast<std::int64_t>(M.edges) +
          static_cast<std::int64_t>(M.faces);
  M.orientable = orientability_subgroup_is_proper(G, x, y, cap);
  if (G.is_abelian()) {
    PermutationGroup X = subgroup_generated(G, {x}, cap);
    M.tag = X.contains(y) ? "bouquet" : "dipole";
  }
  return M;
}

inline bool is_orientable(const BiRotaryMap& M) { return M.orientable; }

// Cross-check of the face-group order: m = |<y, y^x>| must equal 2|[x,y]|.
inline std::uint64_t face_group_order(const BiRotaryMap& M, std::uint64_t cap = kDefaultCap) {
  PermutationGroup F = subgroup_generated(
      M.group, {M.pair.y, conjugate(M.pair.y, M.pair.x)}, cap);
  return F.elements().size();
}

// Map(X/N, xN, yN); degenerate when yN = N.
inline std::variant<BiRotaryMap, DegenerateMap> quotient_map(const BiRotaryMap& M,
                                                             const PermutationGroup& N,
                                                             std::uint64_t cap = kDefaultCap) {
  auto [Q, pi] = quotient(M.group, N, cap);
  Permutation xq = pi.apply(M.pair.x);
  Permutation yq = pi.apply(M.pair.y);
  if (yq.is_identity())
    return DegenerateMap{Q, xq, "y collapses to the identity (semistar quotient)"};
  return make_map(Q, xq, yq, cap);
}

// Lemma 2.1(iii): maps are isomorphic iff a group isomorphism carries
// (x, y) to (x1, y1); so pin the generator images and extend.
inline std::optional<Homomorphism> maps_isomorphic(const BiRotaryMap& M1,
                                                   const BiRotaryMap& M2) {
  if (M1.group.elements().size() != M2.group.elements().size()) return std::nullopt;
  if (M1.k != M2.k || M1.m != M2.m || M1.chi != M2.chi) return std::nullopt;
  PermutationGroup src(M1.group.degree(), {M1.pair.x, M1.pair.y}, M1.group.name() + "<x,y>");
  src.materialize();
  Homomorphism sigma(src, M2.group, {M2.pair.x, M2.pair.y});
  if (sigma.extend_and_check() && sigma.is_bijective_onto_target()) return sigma;
  return std::nullopt;
}

// (p, n) with chi = -p^n, when chi is a negative prime power.
inline std::optional<std::pair<std::uint64_t, unsigned>> prime_power_chi(std::int64_t chi) {
  if (chi >= 0) return std::nullopt;
  auto fac = factorize(static_cast<std::uint64_t>(-chi));
  if (fac.size() != 1) return std::nullopt;
  return std::make_pair(fac[0].first, fac[0].second);
}

inline std::optional<std::pair<std::uint64_t, unsigned>> prime_power_chi(const BiRotaryMap& M) {
  return prime_power_chi(M.chi);
}

}  // namespace birotary

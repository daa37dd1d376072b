#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "birotary/analysis.hpp"
#include "birotary/group.hpp"

namespace birotary {

// --- elementary families -------------------------------------------------------

inline PermutationGroup cyclic(std::uint64_t n, std::string name = "") {
  require(n >= 1, Errc::invalid_argument, "cyclic(n) needs n >= 1");
  std::size_t deg = static_cast<std::size_t>(n);
  std::vector<Point> img(deg);
  for (std::size_t i = 0; i < deg; ++i) img[i] = static_cast<Point>((i + 1) % deg);
  PermutationGroup G(deg, {Permutation(std::move(img))},
                     name.empty() ? "Z(" + std::to_string(n) + ")" : std::move(name), n);
  return G;
}

// Dihedral group of order 2n ("D(2n)"); n-gon action for n >= 3, regular below.
inline PermutationGroup dihedral_group(std::uint64_t half_order, std::string name = "") {
  std::uint64_t n = half_order;
  require(n >= 1, Errc::invalid_argument, "dihedralGroup(n) needs n >= 1");
  std::string nm = name.empty() ? "D(" + std::to_string(2 * n) + ")" : std::move(name);
  if (n == 1) {
    return PermutationGroup(2, {Permutation({1, 0})}, nm, 2);
  }
  if (n == 2) {
    return PermutationGroup(
        4, {Permutation({1, 0, 3, 2}), Permutation({2, 3, 0, 1})}, nm, 4);
  }
  std::vector<Point> r(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = static_cast<Point>((i + 1) % n);
    s[i] = static_cast<Point>((n - i) % n);
  }
  return PermutationGroup(n, {Permutation(std::move(r)), Permutation(std::move(s))}, nm,
                          2 * n);
}

inline PermutationGroup symmetric_group(unsigned n) {
  require(n >= 2 && n <= 16, Errc::invalid_argument, "S(n) supports 2 <= n <= 16");
  std::uint64_t ord = 1;
  for (unsigned i = 2; i <= n; ++i) ord *= i;
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1}})};
  if (n > 2) {
    std::vector<Point> cyc(n);
    for (unsigned i = 0; i < n; ++i) cyc[i] = static_cast<Point>(i);
    gens.push_back(Permutation::from_cycles(n, {cyc}));
  }
  return PermutationGroup(n, std::move(gens), "S" + std::to_string(n), ord);
}

inline PermutationGroup alternating_group(unsigned n) {
  require(n >= 3 && n <= 16, Errc::invalid_argument, "A(n) supports 3 <= n <= 16");
  std::uint64_t ord = 1;
  for (unsigned i = 3; i <= n; ++i) ord *= i;
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1, 2}})};
  if (n > 3) {
    std::vector<Point> cyc;
    if (n % 2 == 1) {
      for (unsigned i = 0; i < n; ++i) cyc.push_back(static_cast<Point>(i));
    } else {
      for (unsigned i = 1; i < n; ++i) cyc.push_back(static_cast<Point>(i));
    }
    gens.push_back(Permutation::from_cycles(n, {cyc}));
  }
  return PermutationGroup(n, std::move(gens), "A" + std::to_string(n), ord);
}

// Disjoint-union action; generators of A extended by the identity on B's
// points and vice versa.
inline PermutationGroup direct_product(const PermutationGroup& A, const PermutationGroup& B,
                                       std::string name = "") {
  std::size_t da = A.degree(), db = B.degree();
  std::vector<Permutation> gens;
  for (const auto& g : A.generators()) {
    std::vector<Point> img(da + db);
    for (std::size_t i = 0; i < da; ++i) img[i] = g(static_cast<Point>(i));
    for (std::size_t i = 0; i < db; ++i) img[da + i] = static_cast<Point>(da + i);
    gens.push_back(Permutation(std::move(img)));
  }
  for (const auto& g : B.generators()) {
    std::vector<Point> img(da + db);
    for (std::size_t i = 0; i < da; ++i) img[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < db; ++i) img[da + i] = static_cast<Point>(da + g(static_cast<Point>(i)));
    gens.push_back(Permutation(std::move(img)));
  }
  std::optional<std::uint64_t> ord;
  if (A.analytic_order() && B.analytic_order()) ord = *A.analytic_order() * *B.analytic_order();
  return PermutationGroup(da + db, std::move(gens),
                          name.empty() ? A.name() + "x" + B.name() : std::move(name), ord);
}

// --- semidirect products ---------------------------------------------------------

// N : H with the action given per H-generator as image lists for N's
// generators. Realized on the disjoint union of N's elements (cosets of H)
// and H's elements (cosets of N); each action map is verified to be an
// automorphism of N, and the closure order is checked against |N| * |H|.
struct SemidirectSpec {
  PermutationGroup normal_part;
  PermutationGroup complement;
  std::vector<std::vector<Permutation>> action;  // [h-gen][n-gen] -> image in N
  std::string name;
};

struct SemidirectProduct {
  PermutationGroup group;
  std::vector<Permutation> normal_gens;      // images of N's generators in the product
  std::vector<Permutation> complement_gens;  // images of H's generators
};

inline SemidirectProduct semidirect_product(const SemidirectSpec& spec,
                                            std::uint64_t cap = kDefaultCap) {
  const PermutationGroup& N = spec.normal_part;
  const PermutationGroup& H = spec.complement;
  N.materialize(cap);
  H.materialize(cap);
  require(spec.action.size() == H.generators().size(), Errc::invalid_action,
          "one action row per complement generator");

  std::vector<std::vector<Permutation>> action_on_elements;
  for (const auto& images : spec.action) {
    require(images.size() == N.generators().size(), Errc::invalid_action,
            "one image per normal-part generator");
    Homomorphism phi(N, N, images);
    require(phi.extend_and_check() && phi.is_bijective_onto_target(), Errc::invalid_action,
            "action image is not an automorphism of the normal part");
    action_on_elements.push_back(phi.element_images());
  }

  std::size_t dn = N.elements().size(), dh = H.elements().size();
  auto build = [&](auto&& n_map, auto&& h_map) {
    std::vector<Point> img(dn + dh);
    for (std::size_t i = 0; i < dn; ++i) img[i] = static_cast<Point>(n_map(i));
    for (std::size_t i = 0; i < dh; ++i) img[dn + i] = static_cast<Point>(dn + h_map(i));
    return Permutation(std::move(img));
  };

  std::vector<Permutation> gens;
  SemidirectProduct out{PermutationGroup::trivial(1), {}, {}};
  for (const auto& a : N.generators()) {
    Permutation g = build([&](std::size_t i) { return *N.index_of(N.elements()[i] * a); },
                          [](std::size_t i) { return i; });
    out.normal_gens.push_back(g);
    gens.push_back(std::move(g));
  }
  for (std::size_t hi = 0; hi < H.generators().size(); ++hi) {
    const auto& h = H.generators()[hi];
    Permutation g = build(
        [&](std::size_t i) { return *N.index_of(action_on_elements[hi][i]); },
        [&](std::size_t i) { return *H.index_of(H.elements()[i] * h); });
    out.complement_gens.push_back(g);
    gens.push_back(std::move(g));
  }

  std::uint64_t order = static_cast<std::uint64_t>(dn) * dh;
  require(order <= cap, Errc::cap_exceeded, "semidirect product order exceeds cap");
  PermutationGroup G(dn + dh, std::move(gens),
                     spec.name.empty() ? N.name() + ":" + H.name() : spec.name);
  bool ok = true;
  try {
    ok = G.materialize(order).size() == order;
  } catch (const Error& e) {
    if (e.code() != Errc::cap_exceeded) throw;
    ok = false;
  }
  require(ok, Errc::invalid_action, "action does not respect the complement's relations");
  out.group = G;
  return out;
}

// Convenience: Z_n : Z_m with the cyclic action a -> a^k.
inline SemidirectProduct cyclic_semidirect(std::uint64_t n, std::uint64_t m, std::uint64_t k,
                                           std::string name = "") {
  PermutationGroup N = cyclic(n);
  PermutationGroup H = cyclic(m);
  SemidirectSpec spec{N, H, {{N.generators()[0].power(static_cast<long long>(k))}},
                      name.empty() ? "Z(" + std::to_string(n) + "):Z(" + std::to_string(m) + ")"
                                   : std::move(name)};
  return semidirect_product(spec);
}

// --- the order-16 trio (semidihedral and modular) --------------------------------

struct GroupWithPair {
  PermutationGroup group;
  Permutation x;
  Permutation y;
  std::string label;
};

// SD16 = <x,y | x^8, y^2, x^y = x^3> with pairs (x,y) and (xy,y), and the
// modular group M16 = <x,y | x^8, y^2, x^y = x^5> with pair (x,y).
inline std::vector<GroupWithPair> order16_groups() {
  PermutationGroup Z8 = cyclic(8);
  PermutationGroup Z2 = cyclic(2);
  auto make = [&](std::uint64_t e, const std::string& nm) {
    SemidirectSpec spec{Z8, Z2, {{Z8.generators()[0].power(static_cast<long long>(e))}}, nm};
    return semidirect_product(spec);
  };
  auto sd = make(3, "SD16");
  auto m16 = make(5, "M16");
  const Permutation& sx = sd.normal_gens[0];
  const Permutation& sy = sd.complement_gens[0];
  const Permutation& mx = m16.normal_gens[0];
  const Permutation& my = m16.complement_gens[0];
  return {
      GroupWithPair{sd.group, sx, sy, "SD16:(x,y)"},
      GroupWithPair{sd.group, sx * sy, sy, "SD16:(xy,y)"},
      GroupWithPair{m16.group, mx, my, "M16:(x,y)"},
  };
}

// --- the torus family: (U : Z4) : Z2 of order 2^(2f+3+eps) ----------------------

// U = Z_{2^(f+eps)} x Z_{2^f} = <u> x <v>, X = (U : <x>) : <y> with
//   u^x = u v^-1,  v^x = u^2 v^-1,  u^y = u v^-1,  v^y = v^-1,  x^y = x^-1 u^-1.
// Elements carry the normal form u^a v^b x^c y^d; the group acts on the
// cosets of <u> (eps = 0) or <v> (eps = 1), which have trivial core.
struct TorusInstance {
  PermutationGroup group;
  Permutation x;
  Permutation y;
  Permutation u;
  Permutation v;
  unsigned f = 0;
  unsigned eps = 0;
};

namespace detail {

struct TorusNF {  // u^a v^b x^c y^d
  std::uint32_t a, b, c, d;
};

class TorusCollector {
 public:
  TorusCollector(unsigned f, unsigned eps) : ma_(1u << (f + eps)), mb_(1u << f) {}

  std::uint32_t ma() const { return ma_; }
  std::uint32_t mb() const { return mb_; }

  // exponent action of conjugation by x / x^-1 / y on u^al v^be
  std::pair<std::int64_t, std::int64_t> phi_x(std::int64_t al, std::int64_t be) const {
    return {al + 2 * be, -al - be};
  }
  std::pair<std::int64_t, std::int64_t> phi_x_inv(std::int64_t al, std::int64_t be) const {
    return {-al - 2 * be, al + be};
  }
  std::pair<std::int64_t, std::int64_t> phi_y(std::int64_t al, std::int64_t be) const {
    return {al, -al - be};
  }

  // exponents of w^(x^-c y^-d) for w = u^al v^be, moving w left past x^c y^d
  std::pair<std::uint32_t, std::uint32_t> move_left(std::int64_t al, std::int64_t be,
                                                    std::uint32_t c, std::uint32_t d) const {
    if (d) std::tie(al, be) = phi_y(al, be);  // y involutive
    for (std::uint32_t i = 0; i < c; ++i) std::tie(al, be) = phi_x_inv(al, be);
    return {mod(al, ma_), mod(be, mb_)};
  }

  TorusNF mul_u(TorusNF w, std::int64_t e) const {
    auto [da, db] = move_left(e, 0, w.c, w.d);
    return {(w.a + da) % ma_, (w.b + db) % mb_, w.c, w.d};
  }
  TorusNF mul_v(TorusNF w, std::int64_t e) const {
    auto [da, db] = move_left(0, e, w.c, w.d);
    return {(w.a + da) % ma_, (w.b + db) % mb_, w.c, w.d};
  }
  TorusNF mul_x(TorusNF w) const {
    if (w.d == 0) return {w.a, w.b, (w.c + 1) & 3u, 0};
    // ... y x = x^-1 u^-1 y
    std::uint32_t c1 = (w.c + 3) & 3u;
    auto [da, db] = move_left(-1, 0, c1, 0);
    return {(w.a + da) % ma_, (w.b + db) % mb_, c1, 1};
  }
  TorusNF mul_y(TorusNF w) const { return {w.a, w.b, w.c, w.d ^ 1u}; }

 private:
  static std::uint32_t mod(std::int64_t v, std::uint32_t m) {
    std::int64_t r = v % static_cast<std::int64_t>(m);
    return static_cast<std::uint32_t>(r < 0 ? r + m : r);
  }
  std::uint32_t ma_, mb_;
};

}  // namespace detail

inline TorusInstance torus_group(unsigned f, unsigned eps, std::uint64_t cap = kDefaultCap) {
  require(f >= 1 && eps <= 1, Errc::invalid_argument, "torus(f,eps) needs f >= 1, eps in {0,1}");
  std::uint64_t order = 1ull << (2 * f + 3 + eps);
  require(order <= cap, Errc::cap_exceeded, "torus group order exceeds cap");

  detail::TorusCollector col(f, eps);
  // coset space: drop the u-exponent (eps=0) or the v-exponent (eps=1)
  std::uint32_t na = col.ma(), nb = col.mb();
  std::size_t deg = static_cast<std::size_t>(eps ? na : nb) * 8;
  auto point_of = [&](detail::TorusNF w) -> Point {
    std::uint32_t key = eps ? w.a : w.b;
    return static_cast<Point>((key * 4 + w.c) * 2 + w.d);
  };
  auto rep_of = [&](std::size_t pt) -> detail::TorusNF {
    auto d = static_cast<std::uint32_t>(pt & 1);
    auto c = static_cast<std::uint32_t>((pt >> 1) & 3);
    auto key = static_cast<std::uint32_t>(pt >> 3);
    return eps ? detail::TorusNF{key, 0, c, d} : detail::TorusNF{0, key, c, d};
  };
  auto gen_perm = [&](auto&& mul) {
    std::vector<Point> img(deg);
    for (std::size_t p = 0; p < deg; ++p) img[p] = point_of(mul(rep_of(p)));
    return Permutation(std::move(img));
  };

  Permutation pu = gen_perm([&](detail::TorusNF w) { return col.mul_u(w, 1); });
  Permutation pv = gen_perm([&](detail::TorusNF w) { return col.mul_v(w, 1); });
  Permutation px = gen_perm([&](detail::TorusNF w) { return col.mul_x(w); });
  Permutation py = gen_perm([&](detail::TorusNF w) { return col.mul_y(w); });

  std::string nm = "torus(" + std::to_string(f) + "," + std::to_string(eps) + ")";
  PermutationGroup X(deg, {px, py}, nm, order);
  X.materialize(cap);
  return TorusInstance{X, px, py, pu, pv, f, eps};
}

// --- composite 2-groups: X <= X1 x X2 with X1 of order 16, |X2| = 2^f ------------

struct CompositeInstance {
  PermutationGroup group;
  Permutation x;
  Permutation y;
  GroupWithPair seed;
  unsigned f = 0;
};

// seed index: 0 = SD16:(x,y), 1 = SD16:(xy,y), 2 = M16:(x,y)
inline CompositeInstance composite_two_group(unsigned f, unsigned seed_index,
                                             std::uint64_t cap = kDefaultCap) {
  require(f >= 5, Errc::invalid_argument, "composite family needs f >= 5");
  require(seed_index < 3, Errc::invalid_argument, "seed index in {0,1,2}");
  auto trio = order16_groups();
  GroupWithPair seed = trio[seed_index];

  unsigned f0, eps;
  if ((f - 3) % 2 == 0) {
    f0 = (f - 3) / 2;
    eps = 0;
  } else {
    f0 = (f - 4) / 2;
    eps = 1;
  }
  require(f0 >= 1, Errc::invalid_argument, "composite family needs f >= 5");
  TorusInstance t = torus_group(f0, eps, cap);

  PermutationGroup prod = direct_product(seed.group, t.group);
  std::size_t d1 = seed.group.degree();
  auto pair_up = [&](const Permutation& a, const Permutation& b) {
    std::vector<Point> img(prod.degree());
    for (std::size_t i = 0; i < d1; ++i) img[i] = a(static_cast<Point>(i));
    for (std::size_t i = 0; i < t.group.degree(); ++i)
      img[d1 + i] = static_cast<Point>(d1 + b(static_cast<Point>(i)));
    return Permutation(std::move(img));
  };
  Permutation x = pair_up(seed.x, t.x);
  Permutation y = pair_up(seed.y, t.y);
  std::string nm = "composite2(" + std::to_string(f) + "," + seed.label + ")";
  PermutationGroup X(prod.degree(), {x, y}, nm);
  X.materialize(cap);
  return CompositeInstance{X, x, y, seed, f};
}

// --- abelian maps of Section 2.3 -------------------------------------------------

enum class AbelianKind { bouquet, dipole };

// bouquet: Z_{2n} with y = x^n; dipole: Z_n x Z_2 with y the Z2 generator.
inline GroupWithPair abelian_map(std::uint64_t n, AbelianKind kind) {
  require(n >= 1, Errc::invalid_argument, "abelianMap(n) needs n >= 1");
  if (kind == AbelianKind::bouquet) {
    PermutationGroup G = cyclic(2 * n, "B" + std::to_string(n) + "_group");
    Permutation x = G.generators()[0];
    return GroupWithPair{G, x, x.power(static_cast<long long>(n)),
                         "bouquet(" + std::to_string(n) + ")"};
  }
  PermutationGroup Zn = cyclic(n);
  PermutationGroup Z2 = cyclic(2);
  PermutationGroup G = direct_product(Zn, Z2, "D" + std::to_string(n) + "_group");
  return GroupWithPair{G, G.generators()[0], G.generators()[1],
                       "dipole(" + std::to_string(n) + ")"};
}

}  // namespace birotary

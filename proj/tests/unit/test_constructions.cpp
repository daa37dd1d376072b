#include <catch2/catch_amalgamated.hpp>

#include "birotary/birotary.hpp"
#include "birotary/constructions.hpp"

using namespace birotary;

TEST_CASE("cyclic and dihedral basics") {
  CHECK(cyclic(1).materialize().size() == 1);
  CHECK(cyclic(7).materialize().size() == 7);
  CHECK(dihedral_group(3).materialize().size() == 6);
  CHECK(is_dihedral(dihedral_group(3)));
  CHECK(dihedral_group(84).materialize().size() == 168);
}

TEST_CASE("direct products act on the disjoint union") {
  PermutationGroup G = direct_product(cyclic(4), dihedral_group(3));
  CHECK(G.degree() == 4 + 3);
  CHECK(G.materialize().size() == 24);
}

TEST_CASE("semidirect products verify the action") {
  auto G = cyclic_semidirect(13, 6, 4, "Z13:Z6");
  CHECK(G.group.elements().size() == 78);
  CHECK_FALSE(G.group.is_abelian());

  // a^x = a^2 has multiplicative order 12 mod 13, not a valid Z6-action
  PermutationGroup N = cyclic(13);
  PermutationGroup H = cyclic(6);
  SemidirectSpec bad{N, H, {{N.generators()[0].power(2)}}, "bad"};
  CHECK_THROWS_AS(semidirect_product(bad), Error);

  // non-bijective "automorphism": a -> a^0 is not an automorphism either
  SemidirectSpec collapse{N, H, {{N.generators()[0].power(13)}}, "collapse"};
  CHECK_THROWS_AS(semidirect_product(collapse), Error);
}

TEST_CASE("the order-16 trio matches its defining relations") {
  auto trio = order16_groups();
  REQUIRE(trio.size() == 3);
  const auto& sd = trio[0];
  CHECK(sd.group.elements().size() == 16);
  CHECK(sd.x.order() == 8);
  CHECK(sd.y.order() == 2);
  CHECK(conjugate(sd.x, sd.y) == sd.x.power(3));
  CHECK(commutator(sd.x, sd.y) == sd.x.power(2));  // [x,y] = x^2 in SD16

  const auto& sd2 = trio[1];
  CHECK((sd2.x == sd.x * sd.y));
  CHECK(sd2.x.order() == 4);

  const auto& m16 = trio[2];
  CHECK(m16.group.elements().size() == 16);
  CHECK(conjugate(m16.x, m16.y) == m16.x.power(5));
  CHECK(commutator(m16.x, m16.y).order() == 2);
}

TEST_CASE("torus groups satisfy the defining relations") {
  for (auto [f, eps] : std::vector<std::pair<unsigned, unsigned>>{{1, 0}, {1, 1}, {2, 0}}) {
    TorusInstance t = torus_group(f, eps);
    std::uint64_t order = 1ull << (2 * f + 3 + eps);
    CHECK(t.group.elements().size() == order);  // also proves <x,y> = X
    CHECK(t.x.order() == 4);
    CHECK(t.y.order() == 2);
    CHECK(t.u.order() == (1ull << (f + eps)));
    CHECK(t.v.order() == (1ull << f));
    CHECK(t.u * t.v == t.v * t.u);
    CHECK(conjugate(t.u, t.x) == t.u * t.v.inverse());
    CHECK(conjugate(t.v, t.x) == t.u.power(2) * t.v.inverse());
    CHECK(conjugate(t.u, t.y) == t.u * t.v.inverse());
    CHECK(conjugate(t.v, t.y) == t.v.inverse());
    CHECK(conjugate(t.x, t.y) == t.x.inverse() * t.u.inverse());
    CHECK(commutator(t.x, t.y).order() == 2);
    CHECK(t.group.contains(t.u));
    CHECK(t.group.contains(t.v));
  }
}

TEST_CASE("torus(1,0) matches the stated invariants: order 32, chi = 0") {
  TorusInstance t = torus_group(1, 0);
  BiRotaryMap M = make_map(t.group, t.x, t.y);
  CHECK(M.k == 4);
  CHECK(M.m == 4);
  CHECK(M.chi == 0);
}

TEST_CASE("composite 2-groups stay within the stated order and type bounds") {
  for (unsigned seed = 0; seed < 3; ++seed) {
    CompositeInstance c = composite_two_group(5, seed);
    std::uint64_t n = c.group.elements().size();
    CHECK(n >= (1u << 5));
    CHECK(n <= (1u << 9));
    BiRotaryMap M = make_map(c.group, c.x, c.y);
    BiRotaryMap Mseed = make_map(c.seed.group, c.seed.x, c.seed.y);
    CHECK(M.k == Mseed.k);
    CHECK(M.m == Mseed.m);
  }
}

TEST_CASE("bouquet and dipole maps") {
  GroupWithPair b3 = abelian_map(3, AbelianKind::bouquet);
  BiRotaryMap M = make_map(b3.group, b3.x, b3.y);
  CHECK(M.vertices == 1);
  CHECK(M.edges == 3);
  CHECK(M.faces == 3);
  CHECK(M.chi == 1);
  CHECK(M.tag == "bouquet");

  GroupWithPair d6 = abelian_map(6, AbelianKind::dipole);
  BiRotaryMap D = make_map(d6.group, d6.x, d6.y);
  CHECK(D.vertices == 2);
  CHECK(D.edges == 6);
  CHECK(D.faces == 6);
  CHECK(D.chi == 2);
  CHECK(D.tag == "dipole");

  GroupWithPair b1 = abelian_map(1, AbelianKind::bouquet);
  CHECK(make_map(b1.group, b1.x, b1.y).chi == 1);
}

TEST_CASE("alternating and symmetric groups") {
  CHECK(alternating_group(4).materialize().size() == 12);
  CHECK(alternating_group(6).materialize().size() == 360);
  CHECK(symmetric_group(5).materialize().size() == 120);
}

#include <catch2/catch_amalgamated.hpp>

#include "birotary/birotary.hpp"
#include "birotary/constructions.hpp"
#include "birotary/psl.hpp"

using namespace birotary;

TEST_CASE("the dipole map on Z6 x Z2") {
  GroupWithPair d = abelian_map(6, AbelianKind::dipole);
  BiRotaryMap M = make_map(d.group, d.x, d.y);
  CHECK(M.vertices == 2);
  CHECK(M.edges == 6);
  CHECK(M.faces == 6);
  CHECK(M.chi == 2);
  CHECK(M.orientable);  // sphere
}

TEST_CASE("the SD16 map of type (8,8) and chi -4") {
  auto trio = order16_groups();
  BiRotaryMap M = make_map(trio[0].group, trio[0].x, trio[0].y);
  CHECK(M.k == 8);
  CHECK(M.m == 8);
  CHECK(M.chi == -4);
  CHECK(M.orientable);  // <[x,y],x> = <x> of order 8, proper
}

TEST_CASE("the A5 example map has k=3, m=10, chi=-4") {
  PermutationGroup A5 = alternating_group(5);
  Permutation x = Permutation::parse_cycles(5, "(0 2 4)");
  Permutation y = Permutation::parse_cycles(5, "(0 1)(2 3)");
  BiRotaryMap M = make_map(A5, x, y);
  CHECK(M.k == 3);
  CHECK(M.m == 10);
  CHECK(M.chi == -4);
}

TEST_CASE("makeMap rejects bad pairs") {
  PermutationGroup A5 = alternating_group(5);
  Permutation x = Permutation::parse_cycles(5, "(0 2 4)");
  CHECK_THROWS_AS(make_map(A5, x, x), Error);  // |y| != 2
  CHECK_THROWS_AS(make_map(A5, x, Permutation::identity(5)), Error);
  Permutation y = Permutation::parse_cycles(5, "(0 1)(2 3)");
  PermutationGroup S5 = symmetric_group(5);
  CHECK_THROWS_AS(make_map(S5, x, y), Error);  // <x,y> = A5 proper
}

TEST_CASE("orientability: bouquet non-orientable, dipole orientable") {
  GroupWithPair b = abelian_map(4, AbelianKind::bouquet);
  BiRotaryMap Mb = make_map(b.group, b.x, b.y);
  CHECK_FALSE(Mb.orientable);
  CHECK(Mb.chi == 1);  // odd chi forces non-orientable

  GroupWithPair d = abelian_map(4, AbelianKind::dipole);
  CHECK(make_map(d.group, d.x, d.y).orientable);
}

TEST_CASE("m equals the face-group order |<y, y^x>|") {
  auto trio = order16_groups();
  for (const auto& g : trio) {
    BiRotaryMap M = make_map(g.group, g.x, g.y);
    CHECK(M.m == face_group_order(M));
  }
  GroupWithPair d = abelian_map(5, AbelianKind::dipole);
  BiRotaryMap M = make_map(d.group, d.x, d.y);
  CHECK(M.m == face_group_order(M));
}

TEST_CASE("quotient maps: trivial, proper, and degenerate") {
  GroupWithPair d = abelian_map(6, AbelianKind::dipole);
  BiRotaryMap M = make_map(d.group, d.x, d.y);

  auto q1 = quotient_map(M, PermutationGroup::trivial(d.group.degree()));
  REQUIRE(std::holds_alternative<BiRotaryMap>(q1));
  CHECK(std::get<BiRotaryMap>(q1).chi == 2);

  // quotient by <y>: y collapses, leaving the semistar S6
  PermutationGroup Y = subgroup_generated(d.group, {d.y});
  auto q2 = quotient_map(M, Y);
  REQUIRE(std::holds_alternative<DegenerateMap>(q2));
  CHECK(std::get<DegenerateMap>(q2).group.elements().size() == 6);

  auto trio = order16_groups();
  BiRotaryMap S = make_map(trio[0].group, trio[0].x, trio[0].y);
  PermutationGroup N = subgroup_generated(S.group, {trio[0].x.power(4)});
  auto q3 = quotient_map(S, N);
  REQUIRE(std::holds_alternative<BiRotaryMap>(q3));
  const BiRotaryMap& Q = std::get<BiRotaryMap>(q3);
  CHECK(Q.group.elements().size() == 8);
  CHECK(S.k % Q.k == 0);  // quotient type divides the source type
  CHECK(S.m % Q.m == 0);
}

TEST_CASE("map isomorphism is pinned to the pair") {
  auto trio = order16_groups();
  BiRotaryMap M1 = make_map(trio[0].group, trio[0].x, trio[0].y);
  BiRotaryMap M2 = make_map(trio[1].group, trio[1].x, trio[1].y);
  CHECK(maps_isomorphic(M1, M1).has_value());
  CHECK_FALSE(maps_isomorphic(M1, M2).has_value());  // types (8,8) vs (4,8)

  // two dipole maps built on different point sets are isomorphic
  GroupWithPair d1 = abelian_map(6, AbelianKind::dipole);
  PermutationGroup Z6 = cyclic(6);
  PermutationGroup Z2 = cyclic(2);
  PermutationGroup G2 = direct_product(Z2, Z6, "Z2xZ6");
  BiRotaryMap Ma = make_map(d1.group, d1.x, d1.y);
  BiRotaryMap Mb = make_map(G2, G2.generators()[1], G2.generators()[0]);
  CHECK(maps_isomorphic(Ma, Mb).has_value());
}

TEST_CASE("prime power chi detection") {
  CHECK(prime_power_chi(-4) == std::make_pair(std::uint64_t{2}, 2u));
  CHECK(prime_power_chi(-2048) == std::make_pair(std::uint64_t{2}, 11u));
  CHECK(prime_power_chi(-7) == std::make_pair(std::uint64_t{7}, 1u));
  CHECK_FALSE(prime_power_chi(0).has_value());
  CHECK_FALSE(prime_power_chi(2).has_value());
  CHECK_FALSE(prime_power_chi(-6).has_value());
  CHECK_FALSE(prime_power_chi(-1).has_value());
}

TEST_CASE("PSL(2,7) has a rotary pair of type (3,8) with chi = -7") {
  PermutationGroup G = psl2(7);
  G.materialize();
  bool found = false;
  for (const auto& y : G.elements()) {
    if (y.order() != 2) continue;
    for (const auto& x : G.elements()) {
      if (x.order() != 3 || commutator(x, y).order() != 4) continue;
      PermutationGroup S = subgroup_generated(G, {x, y});
      if (S.elements().size() != 168) continue;
      BiRotaryMap M = make_map(G, x, y);
      CHECK(M.chi == -7);
      CHECK_FALSE(M.orientable);  // odd chi
      found = true;
      break;
    }
    if (found) break;
  }
  CHECK(found);
}

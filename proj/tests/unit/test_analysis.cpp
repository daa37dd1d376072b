#include <catch2/catch_amalgamated.hpp>

#include "birotary/analysis.hpp"
#include "birotary/constructions.hpp"

using namespace birotary;

TEST_CASE("derived series of S4 is S4 > A4 > V4 > 1") {
  auto s = derived_series(symmetric_group(4));
  REQUIRE(s.terms.size() == 4);
  CHECK(s.terms[0].elements().size() == 24);
  CHECK(s.terms[1].elements().size() == 12);
  CHECK(s.terms[2].elements().size() == 4);
  CHECK(s.terms[3].elements().size() == 1);
  CHECK(is_solvable(symmetric_group(4)));
}

TEST_CASE("abelian groups are solvable with series [G, 1]") {
  auto s = derived_series(cyclic(12));
  REQUIRE(s.terms.size() == 2);
  CHECK(s.terms[1].elements().size() == 1);
}

TEST_CASE("perfect residual of A5 x Z6 is A5") {
  PermutationGroup G = direct_product(alternating_group(5), cyclic(6));
  CHECK_FALSE(is_solvable(G));
  PermutationGroup D = perfect_residual(G);
  CHECK(D.elements().size() == 60);
  PermutationGroup DD = derived_subgroup(D);
  CHECK(DD.elements().size() == 60);  // perfect
}

TEST_CASE("Sylow subgroups: orders, shapes and triviality") {
  PermutationGroup A5 = alternating_group(5);
  auto w2 = sylow_subgroup(A5, 2);
  CHECK(w2.subgroup.elements().size() == 4);
  CHECK(w2.shape == SylowShape::dihedral);  // Klein counts as degenerate dihedral
  auto w5 = sylow_subgroup(A5, 5);
  CHECK(w5.subgroup.elements().size() == 5);
  CHECK(w5.shape == SylowShape::cyclic);
  auto w7 = sylow_subgroup(A5, 7);
  CHECK(w7.subgroup.elements().size() == 1);

  PermutationGroup A7 = alternating_group(7);
  auto a7w2 = sylow_subgroup(A7, 2);
  CHECK(a7w2.subgroup.elements().size() == 8);
  CHECK(a7w2.shape == SylowShape::dihedral);
}

TEST_CASE("independently grown Sylow subgroups are conjugate") {
  PermutationGroup S4 = symmetric_group(4);
  auto p1 = sylow_subgroup(S4, 2, false).subgroup;
  auto p2 = sylow_subgroup(S4, 2, true).subgroup;
  bool conj = false;
  for (const auto& g : S4.elements())
    if (conjugate_subgroup(p1, g).same_element_set(p2)) {
      conj = true;
      break;
    }
  CHECK(conj);
}

TEST_CASE("p-core examples") {
  PermutationGroup D12 = dihedral_group(6);  // order 12
  CHECK(p_core(D12, 2).elements().size() == 2);  // the central involution
  PermutationGroup A5 = alternating_group(5);
  CHECK(p_core(A5, 2).elements().size() == 1);
  CHECK(p_core(A5, 5).elements().size() == 1);
  PermutationGroup Q = torus_group(1, 0).group;  // a 2-group
  CHECK(p_core(Q, 2).elements().size() == 32);
}

TEST_CASE("solvable radical examples") {
  PermutationGroup S4 = symmetric_group(4);
  CHECK(solvable_radical(S4).elements().size() == 24);
  PermutationGroup A5 = alternating_group(5);
  CHECK(solvable_radical(A5).elements().size() == 1);
  PermutationGroup G = direct_product(alternating_group(5), cyclic(3));
  PermutationGroup R = solvable_radical(G);
  CHECK(R.elements().size() == 3);
  CHECK(is_normal_in(R, G));
  CHECK(is_solvable(R));
}

TEST_CASE("rad(G/rad(G)) is trivial") {
  PermutationGroup G = direct_product(alternating_group(5), cyclic(6));
  PermutationGroup R = solvable_radical(G);
  CHECK(R.elements().size() == 6);
  auto [Q, pi] = quotient(G, R);
  CHECK(solvable_radical(Q).elements().size() == 1);
}

TEST_CASE("cyclic and dihedral recognition") {
  CHECK(is_cyclic(cyclic(8)));
  CHECK_FALSE(is_dihedral(cyclic(8)));
  CHECK_FALSE(is_cyclic(dihedral_group(2)));
  CHECK(is_dihedral(dihedral_group(2)));  // Klein, degenerate dihedral
  CHECK(is_dihedral(dihedral_group(3)));
  CHECK(is_dihedral(dihedral_group(8)));
  CHECK(is_cyclic(cyclic(2)));
  CHECK(is_dihedral(cyclic(2)));  // order 2 counts as degenerate dihedral
  CHECK_FALSE(is_dihedral(cyclic(4)));

  auto trio = order16_groups();
  CHECK_FALSE(is_cyclic(trio[0].group));   // SD16
  CHECK_FALSE(is_dihedral(trio[0].group));
  CHECK_FALSE(is_cyclic(trio[2].group));   // M16
  CHECK_FALSE(is_dihedral(trio[2].group));
}

TEST_CASE("Hall {2,3}-subgroups") {
  PermutationGroup G1 = symmetric_group(4);  // a {2,3}-group
  CHECK(hall_subgroup_23(G1).elements().size() == 24);

  PermutationGroup G2 = cyclic_semidirect(13, 6, 4, "Z13:Z6").group;
  PermutationGroup H2 = hall_subgroup_23(G2);
  CHECK(H2.elements().size() == 6);
  CHECK(is_cyclic(H2));

  PermutationGroup G3 = direct_product(cyclic(25), dihedral_group(84), "Z25xD168");
  CHECK(hall_subgroup_23(G3).elements().size() == 24);

  CHECK_THROWS_AS(hall_subgroup_23(alternating_group(5)), Error);
}

TEST_CASE("isomorphism search") {
  PermutationGroup G = dihedral_group(6);
  // another presentation of the order-12 dihedral group on different points
  PermutationGroup H = direct_product(dihedral_group(3), cyclic(2), "D6xZ2");
  H.materialize();
  REQUIRE(H.elements().size() == 12);
  CHECK(find_isomorphism(G, H).has_value());

  CHECK_FALSE(find_isomorphism(cyclic(4), dihedral_group(2)).has_value());

  // identity pin on equal groups
  PermutationGroup A5 = alternating_group(5);
  auto sigma = find_isomorphism(A5, A5, A5.generators());
  REQUIRE(sigma.has_value());
  CHECK(sigma->apply(A5.generators()[0]) == A5.generators()[0]);
}

TEST_CASE("automorphism counts") {
  CHECK(automorphisms(cyclic(2)).size() == 1);
  CHECK(automorphisms(cyclic(5)).size() == 4);
  CHECK(automorphisms(alternating_group(5)).size() == 120);  // Aut(A5) = S5
}

TEST_CASE("homomorphism kernels are normal") {
  PermutationGroup S4 = symmetric_group(4);
  PermutationGroup V = normal_closure(S4, {Permutation::parse_cycles(4, "(0 1)(2 3)")});
  auto [Q, pi] = quotient(S4, V);
  PermutationGroup K = pi.kernel();
  for (const auto& g : S4.generators())
    for (const auto& k : K.elements()) CHECK(K.contains(conjugate(k, g)));
}

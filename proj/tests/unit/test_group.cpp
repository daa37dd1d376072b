#include <catch2/catch_amalgamated.hpp>

#include "birotary/constructions.hpp"
#include "birotary/group.hpp"

using namespace birotary;

TEST_CASE("closure of a 5-cycle has 5 elements") {
  PermutationGroup G(5, {Permutation::parse_cycles(5, "(0 1 2 3 4)")});
  CHECK(G.materialize().size() == 5);
}

TEST_CASE("closure of A5 generators has 60 elements, identity first") {
  PermutationGroup G = alternating_group(5);
  const auto& els = G.materialize();
  CHECK(els.size() == 60);
  CHECK(els[0].is_identity());
  CHECK(G.order() == 60);
}

TEST_CASE("closure respects the cap") {
  PermutationGroup G(5,
                     {Permutation::parse_cycles(5, "(0 1 2 3 4)"),
                      Permutation::parse_cycles(5, "(0 1 2)")});
  try {
    G.materialize(10);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::cap_exceeded);
  }
}

TEST_CASE("closure is idempotent and deterministic") {
  PermutationGroup G = alternating_group(5);
  auto first = G.materialize();
  auto second = G.materialize();
  CHECK(first == second);
}

TEST_CASE("subgroup generated by the identity is trivial") {
  PermutationGroup G = cyclic(6);
  PermutationGroup T = subgroup_generated(G, {Permutation::identity(6)});
  CHECK(T.elements().size() == 1);
}

TEST_CASE("subgroup of Z6 generated by x^3 has order 2") {
  PermutationGroup G = cyclic(6);
  PermutationGroup H = subgroup_generated(G, {G.generators()[0].power(3)});
  CHECK(H.elements().size() == 2);
}

TEST_CASE("normal closure examples") {
  PermutationGroup A5 = alternating_group(5);
  PermutationGroup N = normal_closure(A5, {Permutation::parse_cycles(5, "(0 1 2)")});
  CHECK(N.elements().size() == 60);  // A5 is simple

  PermutationGroup S4 = symmetric_group(4);
  PermutationGroup V = normal_closure(S4, {Permutation::parse_cycles(4, "(0 1)(2 3)")});
  CHECK(V.elements().size() == 4);  // Klein four-group

  PermutationGroup T = normal_closure(A5, {Permutation::identity(5)});
  CHECK(T.elements().size() == 1);
}

TEST_CASE("centralizer examples") {
  PermutationGroup A5 = alternating_group(5);
  A5.materialize();
  std::vector<Permutation> id{Permutation::identity(5)};
  CHECK(centralizer(A5, id).elements().size() == 60);

  PermutationGroup Z12 = cyclic(12);
  std::vector<Permutation> some{Z12.generators()[0].power(5)};
  CHECK(centralizer(Z12, some).elements().size() == 12);
}

TEST_CASE("normalizer examples") {
  PermutationGroup A5 = alternating_group(5);
  PermutationGroup C5 = subgroup_generated(A5, {Permutation::parse_cycles(5, "(0 1 2 3 4)")});
  CHECK(normalizer(A5, C5).elements().size() == 10);  // dihedral of order 10
  CHECK(normalizer(A5, A5).elements().size() == 60);
  CHECK(normalizer(A5, PermutationGroup::trivial(5)).elements().size() == 60);
}

TEST_CASE("quotient by the whole group and by the trivial subgroup") {
  PermutationGroup S4 = symmetric_group(4);
  S4.materialize();
  auto [Q1, pi1] = quotient(S4, S4);
  CHECK(Q1.elements().size() == 1);
  auto [Q2, pi2] = quotient(S4, PermutationGroup::trivial(4));
  CHECK(Q2.elements().size() == 24);
  CHECK(pi2.is_bijective_onto_target());
}

TEST_CASE("quotient order is |G|/|N| and the projection is a homomorphism") {
  PermutationGroup S4 = symmetric_group(4);
  PermutationGroup V = normal_closure(S4, {Permutation::parse_cycles(4, "(0 1)(2 3)")});
  auto [Q, pi] = quotient(S4, V);
  CHECK(Q.elements().size() == 6);
  CHECK(pi.extend_and_check());
  PermutationGroup K = pi.kernel();
  CHECK(K.same_element_set(V));
  CHECK(is_normal_in(K, S4));
}

TEST_CASE("quotient requires normality") {
  PermutationGroup S4 = symmetric_group(4);
  PermutationGroup H = subgroup_generated(S4, {Permutation::parse_cycles(4, "(0 1)")});
  CHECK_THROWS_AS(quotient(S4, H), Error);
}

TEST_CASE("Lagrange spot-check over a few subgroups") {
  PermutationGroup A5 = alternating_group(5);
  A5.materialize();
  for (const auto& g : A5.elements()) {
    if (g.order() != 2 && g.order() != 5) continue;
    PermutationGroup H = subgroup_generated(A5, {g});
    CHECK(60 % H.elements().size() == 0);
  }
}

TEST_CASE("analytic order mismatches are caught") {
  PermutationGroup wrong(5, {Permutation::parse_cycles(5, "(0 1 2 3 4)")}, "bad", 7);
  CHECK_THROWS_AS(wrong.materialize(), Error);
}

#include <catch2/catch_amalgamated.hpp>

#include "birotary/constructions.hpp"
#include "birotary/field.hpp"
#include "birotary/psl.hpp"

using namespace birotary;

TEST_CASE("prime fields have degree-1 modulus") {
  FiniteField F7(7);
  CHECK(F7.characteristic() == 7);
  CHECK(F7.extension_degree() == 1);
  CHECK(F7.mul(3, 5) == 1);
  CHECK(F7.add(6, 3) == 2);
}

TEST_CASE("chosen moduli are the lexicographically smallest irreducibles") {
  CHECK(FiniteField(4).modulus_coefficients() == std::vector<unsigned>{1, 1});   // z^2+z+1
  CHECK(FiniteField(8).modulus_coefficients() == std::vector<unsigned>{1, 1, 0});  // z^3+z+1
  CHECK(FiniteField(9).modulus_coefficients() == std::vector<unsigned>{1, 0});   // z^2+1
  CHECK(FiniteField(16).modulus_coefficients() == std::vector<unsigned>{1, 1, 0, 0});
  CHECK(FiniteField(27).modulus_coefficients() == std::vector<unsigned>{1, 2, 0});  // z^3+2z+1
  CHECK(FiniteField(32).modulus_coefficients() == std::vector<unsigned>{1, 0, 1, 0, 0});
}

TEST_CASE("non-prime-powers are rejected") {
  CHECK_THROWS_AS(FiniteField(6), Error);
  CHECK_THROWS_AS(FiniteField(12), Error);
  CHECK_THROWS_AS(FiniteField(129), Error);
}

TEST_CASE("the multiplicative group is cyclic of order q-1") {
  for (unsigned q : {4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u, 121u, 128u}) {
    FiniteField F(q);
    CHECK(F.mult_order(F.generator()) == q - 1);
    // field axioms spot-check: a*(b+c) = a*b + a*c on a deterministic slice
    for (unsigned a = 0; a < std::min(q, 8u); ++a)
      for (unsigned b = 0; b < std::min(q, 8u); ++b) {
        CHECK(F.mul(a, F.add(b, 1)) == F.add(F.mul(a, b), F.mul(a, 1)));
        if (a) CHECK(F.mul(a, F.inv(a)) == F.one());
      }
  }
}

TEST_CASE("psl2 orders match q(q^2-1)/gcd(2,q-1)") {
  CHECK(psl2(4).materialize().size() == 60);
  CHECK(psl2(5).materialize().size() == 60);
  CHECK(psl2(7).materialize().size() == 168);
  CHECK(psl2(8).materialize().size() == 504);
  CHECK(psl2(9).materialize().size() == 360);
  CHECK(pgl2(5).materialize().size() == 120);
  CHECK(pgl2(7).materialize().size() == 336);
  CHECK(psigmal2(9).materialize().size() == 720);
  CHECK(psigmal2(4).materialize().size() == 120);
}

TEST_CASE("psl2(q) is transitive on the q+1 points with the right stabilizer order") {
  for (unsigned q : {5u, 7u, 8u, 9u}) {
    PermutationGroup G = psl2(q);
    G.materialize();
    std::vector<bool> orbit(q + 1, false);
    orbit[0] = true;
    for (const auto& g : G.elements()) orbit[g(0)] = true;
    for (bool b : orbit) CHECK(b);
    std::size_t stab = 0;
    for (const auto& g : G.elements())
      if (g(0) == 0) ++stab;
    CHECK(stab == G.elements().size() / (q + 1));
  }
}

TEST_CASE("psl2(5) and psl2(4) are isomorphic to A5; psl2(7) is simple") {
  CHECK(find_isomorphism(psl2(5), alternating_group(5)).has_value());
  CHECK(find_isomorphism(psl2(4), alternating_group(5)).has_value());

  PermutationGroup G = psl2(7);
  G.materialize();
  // no proper nontrivial normal subgroup: the normal closure of any
  // non-identity element is everything
  for (std::uint32_t i = 1; i < G.elements().size(); i += 13) {
    PermutationGroup N = normal_closure(G, {G.elements()[i]});
    CHECK(N.elements().size() == 168);
  }
}

TEST_CASE("PSigmaL(2,9) centralizer of an order-5 element is that cyclic group") {
  PermutationGroup psl = psl2(9);
  PermutationGroup psig = psigmal2(9);
  psl.materialize();
  psig.materialize();
  bool found = false;
  for (const auto& g : psl.elements()) {
    if (g.order() != 5) continue;
    std::vector<Permutation> gs{g};
    PermutationGroup C = centralizer(psig, gs);
    CHECK(C.elements().size() == 5);
    found = true;
    break;
  }
  CHECK(found);
}

TEST_CASE("q out of range is rejected") {
  CHECK_THROWS_AS(psl2(3), Error);
  CHECK_THROWS_AS(psl2(64), Error);
  CHECK_THROWS_AS(psl2(6), Error);
}

#include <catch2/catch_amalgamated.hpp>

#include "birotary/perm.hpp"

using namespace birotary;

TEST_CASE("composition is left-to-right (apply first factor first)") {
  Permutation c3 = Permutation::parse_cycles(3, "(0 1 2)");
  CHECK((c3 * c3) == Permutation::parse_cycles(3, "(0 2 1)"));
  CHECK((c3 * Permutation::identity(3)) == c3);
  CHECK((Permutation::identity(3) * c3) == c3);

  // (0 1) then (1 2): 0 -> 1 -> 2, so 0 lands on 2 under this convention
  Permutation a = Permutation::parse_cycles(3, "(0 1)");
  Permutation b = Permutation::parse_cycles(3, "(1 2)");
  CHECK((a * b).images() == std::vector<Point>{2, 0, 1});
  CHECK((a * b)(0) == 2);
}

TEST_CASE("degree mismatch is rejected") {
  Permutation a = Permutation::parse_cycles(3, "(0 1)");
  Permutation b = Permutation::parse_cycles(4, "(0 1)");
  CHECK_THROWS_AS(a * b, Error);
  CHECK_THROWS_AS(commutator(a, b), Error);
}

TEST_CASE("non-bijective image arrays are rejected") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), Error);
}

TEST_CASE("element order is the lcm of cycle lengths") {
  CHECK(Permutation::identity(5).order() == 1);
  CHECK(Permutation::parse_cycles(8, "(0 1 2 3 4 5 6 7)").order() == 8);
  CHECK(Permutation::parse_cycles(5, "(0 1)(2 3 4)").order() == 6);
}

TEST_CASE("commutator of commuting elements is the identity") {
  Permutation a = Permutation::parse_cycles(5, "(0 1)");
  Permutation b = Permutation::parse_cycles(5, "(2 3 4)");
  CHECK(commutator(a, b).is_identity());
}

TEST_CASE("A5 pair x=(0 2 4), y=(0 1)(2 3) has |[x,y]| = 5") {
  Permutation x = Permutation::parse_cycles(5, "(0 2 4)");
  Permutation y = Permutation::parse_cycles(5, "(0 1)(2 3)");
  CHECK(commutator(x, y).order() == 5);
}

TEST_CASE("conjugation and commutator conventions are consistent") {
  std::vector<Permutation> sample = {
      Permutation::parse_cycles(6, "(0 1 2 3 4 5)"),
      Permutation::parse_cycles(6, "(0 1)(2 4)"),
      Permutation::parse_cycles(6, "(1 3 5)"),
      Permutation::parse_cycles(6, "(0 5)(1 4)(2 3)"),
      Permutation::parse_cycles(6, "(0 2 4)(1 3 5)"),
  };
  for (const auto& g : sample) {
    for (const auto& h : sample) {
      CHECK(commutator(g, h) == g.inverse() * conjugate(g, h));
      CHECK(conjugate(conjugate(g, h), h.inverse()) == g);
      CHECK(conjugate(g, h) == h.inverse() * g * h);
    }
  }
}

TEST_CASE("inverse and power") {
  Permutation c = Permutation::parse_cycles(7, "(0 1 2 3 4 5 6)");
  CHECK((c * c.inverse()).is_identity());
  CHECK(c.power(7).is_identity());
  CHECK(c.power(-1) == c.inverse());
  CHECK(c.power(3) * c.power(4) == Permutation::identity(7));
  CHECK(c.power(0).is_identity());
}

TEST_CASE("cycle parsing and printing round-trip") {
  Permutation p = Permutation::parse_cycles(6, "(0 1 2)(3 4)");
  CHECK(p.to_cycle_string() == "(0 1 2)(3 4)");
  CHECK(Permutation::parse_cycles(6, p.to_cycle_string()) == p);
  CHECK(Permutation::identity(4).to_cycle_string() == "()");
  CHECK_THROWS_AS(Permutation::parse_cycles(3, "(0 5)"), Error);
  CHECK_THROWS_AS(Permutation::parse_cycles(3, "(0 1"), Error);
}

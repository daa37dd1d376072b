#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "birotary/field.hpp"
#include "birotary/group.hpp"

namespace birotary {

// PSL(2,q), PGL(2,q) and PSigmaL(2,q) acting on the q+1 points of the
// projective line, elements represented directly as permutations.
//
// PSL is generated by z -> z+1, z -> w^2 z and z -> -1/z (all of square
// determinant); PGL adds z -> w z, PSigmaL adjoins the Frobenius z -> z^p
// acting coordinatewise. q is capped at 32 for full materialization.

namespace detail {

inline Permutation moebius(const FiniteField& F, unsigned a, unsigned b, unsigned c,
                           unsigned d) {
  unsigned q = F.q();
  std::vector<Point> img(q + 1);
  for (unsigned z = 0; z < q; ++z) {
    unsigned num = F.add(F.mul(a, z), b);
    unsigned den = F.add(F.mul(c, z), d);
    img[z] = den == 0 ? static_cast<Point>(q) : static_cast<Point>(F.mul(num, F.inv(den)));
  }
  img[q] = c == 0 ? static_cast<Point>(q) : static_cast<Point>(F.mul(a, F.inv(c)));
  return Permutation(std::move(img));
}

inline Permutation frobenius(const FiniteField& F) {
  unsigned q = F.q();
  std::vector<Point> img(q + 1);
  for (unsigned z = 0; z < q; ++z) img[z] = static_cast<Point>(F.pow(z, F.characteristic()));
  img[q] = static_cast<Point>(q);
  return Permutation(std::move(img));
}

inline void check_q(unsigned q) {
  require(q >= 4 && q <= 32, Errc::invalid_argument,
          "projective constructions support 4 <= q <= 32");
  FiniteField probe(q);  // throws NotPrimePower otherwise
  (void)probe;
}

}  // namespace detail

inline PermutationGroup psl2(unsigned q) {
  detail::check_q(q);
  FiniteField F(q);
  unsigned w = F.generator();
  std::vector<Permutation> gens{
      detail::moebius(F, F.one(), F.one(), 0, F.one()),     // z + 1
      detail::moebius(F, F.mul(w, w), 0, 0, F.one()),       // w^2 z
      detail::moebius(F, 0, F.one(), F.neg(F.one()), 0)};   // -1/z
  std::uint64_t d = q % 2 == 0 ? 1 : 2;
  std::uint64_t order = static_cast<std::uint64_t>(q) * (q - 1) * (q + 1) / d;
  return PermutationGroup(q + 1, std::move(gens), "PSL(2," + std::to_string(q) + ")", order);
}

inline PermutationGroup pgl2(unsigned q) {
  detail::check_q(q);
  FiniteField F(q);
  unsigned w = F.generator();
  std::vector<Permutation> gens{
      detail::moebius(F, F.one(), F.one(), 0, F.one()),
      detail::moebius(F, w, 0, 0, F.one()),                 // w z
      detail::moebius(F, 0, F.one(), F.neg(F.one()), 0)};
  std::uint64_t order = static_cast<std::uint64_t>(q) * (q - 1) * (q + 1);
  return PermutationGroup(q + 1, std::move(gens), "PGL(2," + std::to_string(q) + ")", order);
}

inline PermutationGroup psigmal2(unsigned q) {
  detail::check_q(q);
  FiniteField F(q);
  unsigned w = F.generator();
  std::vector<Permutation> gens{
      detail::moebius(F, F.one(), F.one(), 0, F.one()),
      detail::moebius(F, F.mul(w, w), 0, 0, F.one()),
      detail::moebius(F, 0, F.one(), F.neg(F.one()), 0),
      detail::frobenius(F)};
  std::uint64_t d = q % 2 == 0 ? 1 : 2;
  std::uint64_t order =
      static_cast<std::uint64_t>(F.extension_degree()) * q * (q - 1) * (q + 1) / d;
  return PermutationGroup(q + 1, std::move(gens), "PSigmaL(2," + std::to_string(q) + ")",
                          order);
}

}  // namespace birotary

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "birotary/analysis.hpp"

namespace birotary {

// F_q for a prime power q <= 128. Elements are codes 0..q-1; the code digits
// base p (low digit = constant coefficient) are the coordinates over F_p.
// The modulus is the lexicographically smallest monic irreducible polynomial,
// ordered by that same code value; not a Conway polynomial, but deterministic
// without an external table, and recorded in reports.
class FiniteField {
 public:
  explicit FiniteField(unsigned q) : q_(q) {
    require(q >= 2 && q <= 128, Errc::not_prime_power, "q out of supported range [2,128]");
    unsigned m = q;
    for (unsigned p = 2; p <= m; ++p) {
      if (m % p == 0) {
        p_ = p;
        t_ = 0;
        while (m % p == 0) {
          m /= p;
          ++t_;
        }
        break;
      }
    }
    require(p_ != 0 && ipow(p_, t_) == q, Errc::not_prime_power,
            std::to_string(q) + " is not a prime power");
    if (t_ == 1) {
      modulus_ = {0, 1};  // z - 0 placeholder: unused for prime fields
    } else {
      find_modulus();
    }
    build_tables();
    find_generator();
  }

  unsigned q() const { return q_; }
  unsigned characteristic() const { return p_; }
  unsigned extension_degree() const { return t_; }
  unsigned zero() const { return 0; }
  unsigned one() const { return 1 % q_; }
  unsigned generator() const { return omega_; }

  // Non-leading coefficients of the monic modulus, constant term first.
  std::vector<unsigned> modulus_coefficients() const {
    if (t_ == 1) return {};
    return std::vector<unsigned>(modulus_.begin(), modulus_.end() - 1);
  }

  std::string modulus_string() const {
    if (t_ == 1) return "z";
    std::string s = "z^" + std::to_string(t_);
    for (int i = static_cast<int>(t_) - 1; i >= 0; --i) {
      unsigned c = modulus_[i];
      if (!c) continue;
      s += " + ";
      if (c != 1 || i == 0) s += std::to_string(c);
      if (i == 1)
        s += (c != 1 ? "*z" : "z");
      else if (i > 1)
        s += (c != 1 ? "*z^" : "z^") + std::to_string(i);
    }
    return s;
  }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }

  unsigned inv(unsigned a) const {
    require(a != 0, Errc::invalid_argument, "division by zero");
    return inv_[a];
  }

  unsigned pow(unsigned a, std::uint64_t e) const {
    unsigned r = one();
    unsigned base = a;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  std::uint64_t mult_order(unsigned a) const {
    require(a != 0, Errc::invalid_argument, "order of zero");
    unsigned x = a;
    std::uint64_t k = 1;
    while (x != one()) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }

 private:
  static unsigned ipow(unsigned b, unsigned e) {
    unsigned r = 1;
    while (e--) r *= b;
    return r;
  }

  std::vector<unsigned> digits(unsigned code) const {
    std::vector<unsigned> d(t_);
    for (unsigned i = 0; i < t_; ++i) {
      d[i] = code % p_;
      code /= p_;
    }
    return d;
  }

  unsigned code_of(const std::vector<unsigned>& d) const {
    unsigned c = 0;
    for (unsigned i = t_; i-- > 0;) c = c * p_ + (i < d.size() ? d[i] % p_ : 0);
    return c;
  }

  // Polynomial arithmetic over F_p on coefficient vectors (constant term first).
  std::vector<unsigned> poly_mod(std::vector<unsigned> a, const std::vector<unsigned>& m) const {
    while (a.size() >= m.size()) {
      unsigned c = a.back();
      if (c) {
        std::size_t off = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
          a[off + i] = (a[off + i] + p_ - (c * m[i]) % p_) % p_;
      }
      a.pop_back();
    }
    return a;
  }

  bool divides(const std::vector<unsigned>& d, const std::vector<unsigned>& m) const {
    auto r = poly_mod(m, d);
    for (unsigned c : r)
      if (c) return false;
    return true;
  }

  void find_modulus() {
    // candidates ordered by code value of the non-leading coefficients
    for (unsigned code = 0; code < q_; ++code) {
      std::vector<unsigned> mod = digits(code);
      mod.push_back(1);  // monic of degree t
      bool irred = true;
      // trial division by all monic polynomials of degree 1..t/2
      for (unsigned d = 1; irred && d <= t_ / 2; ++d) {
        for (unsigned dc = 0; dc < ipow(p_, d); ++dc) {
          std::vector<unsigned> div;
          unsigned v = dc;
          for (unsigned i = 0; i < d; ++i) {
            div.push_back(v % p_);
            v /= p_;
          }
          div.push_back(1);
          if (divides(div, mod)) {
            irred = false;
            break;
          }
        }
      }
      if (irred) {
        modulus_ = mod;
        return;
      }
    }
    fail(Errc::not_found, "no irreducible modulus found (internal)");
  }

  void build_tables() {
    add_.resize(static_cast<std::size_t>(q_) * q_);
    mul_.resize(static_cast<std::size_t>(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (unsigned a = 0; a < q_; ++a) {
      auto da = digits(a);
      std::vector<unsigned> dn(t_);
      for (unsigned i = 0; i < t_; ++i) dn[i] = (p_ - da[i]) % p_;
      neg_[a] = code_of(dn);
      for (unsigned b = 0; b < q_; ++b) {
        auto db = digits(b);
        std::vector<unsigned> ds(t_);
        for (unsigned i = 0; i < t_; ++i) ds[i] = (da[i] + db[i]) % p_;
        add_[a * q_ + b] = code_of(ds);
        std::vector<unsigned> prod(2 * t_ - 1, 0);
        for (unsigned i = 0; i < t_; ++i)
          for (unsigned j = 0; j < t_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        auto red = t_ == 1 ? std::vector<unsigned>{prod[0] % p_} : poly_mod(prod, modulus_);
        red.resize(t_, 0);
        mul_[a * q_ + b] = code_of(red);
      }
    }
    for (unsigned a = 1; a < q_; ++a)
      for (unsigned b = 1; b < q_; ++b)
        if (mul(a, b) == one()) {
          inv_[a] = b;
          break;
        }
  }

  void find_generator() {
    for (unsigned a = 1; a < q_; ++a)
      if (mult_order(a) == q_ - 1) {
        omega_ = a;
        return;
      }
    fail(Errc::structure_violation, "multiplicative group is not cyclic (internal)");
  }

  unsigned q_, p_ = 0, t_ = 0, omega_ = 0;
  std::vector<unsigned> modulus_;  // monic, constant term first
  std::vector<unsigned> add_, mul_, neg_, inv_;
};

inline FiniteField make_field(unsigned q) { return FiniteField(q); }

// The projective line over F_q: points [x : 1] indexed by the field codes
// 0..q-1, with [1 : 0] last at index q.
struct ProjectiveLine {
  explicit ProjectiveLine(unsigned q) : q(q) {}
  unsigned q;
  unsigned size() const { return q + 1; }
  unsigned infinity() const { return q; }
};

}  // namespace birotary

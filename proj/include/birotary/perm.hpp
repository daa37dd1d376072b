#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "birotary/errors.hpp"

namespace birotary {

using Point = std::uint16_t;

// A permutation of {0, ..., degree-1}, stored as its image array.
//
// Composition convention is left-to-right: (p * q) applies p first, then q.
// Conjugation x^h = h^-1 * x * h and [g,h] = g^-1 * h^-1 * g * h follow from it.
class Permutation {
 public:
  Permutation() = default;  // the empty (degree-0) permutation

  explicit Permutation(std::vector<Point> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (Point p : img_) {
      require(p < img_.size() && !seen[p], Errc::invalid_argument,
              "image array is not a bijection");
      seen[p] = true;
    }
  }

  static Permutation identity(std::size_t degree) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    return Permutation(std::move(img));
  }

  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    for (const auto& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        Point from = cyc[i];
        Point to = cyc[(i + 1) % cyc.size()];
        require(from < degree && img[from] == from, Errc::parse_error,
                "overlapping or out-of-range cycle entries");
        img[from] = to;
      }
    }
    return Permutation(std::move(img));
  }

  // Cycle notation, e.g. "(0 1 2)(3 4)"; separators are spaces or commas.
  static Permutation parse_cycles(std::size_t degree, std::string_view text) {
    std::vector<std::vector<Point>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
    };
    skip_ws();
    while (i < text.size()) {
      require(text[i] == '(', Errc::parse_error, "expected '(' in cycle notation");
      ++i;
      std::vector<Point> cyc;
      skip_ws();
      while (i < text.size() && text[i] != ')') {
        std::size_t j = i;
        while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
        require(j > i, Errc::parse_error, "expected point index in cycle");
        unsigned long v = std::stoul(std::string(text.substr(i, j - i)));
        require(v < degree, Errc::parse_error, "cycle point exceeds degree");
        cyc.push_back(static_cast<Point>(v));
        i = j;
        skip_ws();
      }
      require(i < text.size(), Errc::parse_error, "unterminated cycle");
      ++i;  // ')'
      if (!cyc.empty()) cycles.push_back(std::move(cyc));
      skip_ws();
    }
    return from_cycles(degree, cycles);
  }

  std::size_t degree() const { return img_.size(); }
  Point operator()(Point p) const { return img_[p]; }
  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<Point> inv(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<Point>(i);
    return Permutation(std::move(inv));
  }

  // Apply *this first, then rhs.
  Permutation operator*(const Permutation& rhs) const {
    require(degree() == rhs.degree(), Errc::degree_mismatch, "composing unequal degrees");
    std::vector<Point> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) img[i] = rhs.img_[img_[i]];
    return Permutation(std::move(img));
  }

  Permutation power(long long n) const {
    Permutation base = n >= 0 ? *this : inverse();
    unsigned long long k = n >= 0 ? static_cast<unsigned long long>(n)
                                  : static_cast<unsigned long long>(-(n + 1)) + 1;
    Permutation acc = identity(degree());
    while (k) {
      if (k & 1) acc = acc * base;
      base = base * base;
      k >>= 1;
    }
    return acc;
  }

  std::vector<std::vector<Point>> cycles(bool include_fixed = false) const {
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i]) continue;
      std::vector<Point> cyc;
      Point j = static_cast<Point>(i);
      do {
        seen[j] = true;
        cyc.push_back(j);
        j = img_[j];
      } while (j != i);
      if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
    }
    return out;
  }

  // Least n >= 1 with p^n = identity; the lcm of the cycle lengths.
  std::uint64_t order() const {
    std::uint64_t o = 1;
    for (const auto& cyc : cycles()) {
      std::uint64_t l = cyc.size();
      std::uint64_t g = std::gcd(o, l);
      require(o / g <= UINT64_MAX / l, Errc::invalid_argument, "element order overflows");
      o = o / g * l;
    }
    return o;
  }

  std::string to_cycle_string() const {
    auto cyc = cycles();
    if (cyc.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cyc) {
      os << '(';
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
      os << ')';
    }
    return os.str();
  }

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Point> img_;
};

inline Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }

inline Permutation conjugate(const Permutation& x, const Permutation& h) {
  return h.inverse() * x * h;
}

// [g,h] = g^-1 * g^h.
inline Permutation commutator(const Permutation& g, const Permutation& h) {
  require(g.degree() == h.degree(), Errc::degree_mismatch, "commutator of unequal degrees");
  return g.inverse() * conjugate(g, h);
}

inline std::uint64_t element_order(const Permutation& p) { return p.order(); }

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    // FNV-1a over the image bytes
    std::uint64_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.to_cycle_string();
}

}  // namespace birotary

#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "centerbound/bigint.hpp"
#include "centerbound/error.hpp"

namespace centerbound {

/// A permutation of the points {1..n}.
///
/// Points are 1-based in every public interface (image(), cycle notation);
/// storage is 0-based. The degree is part of the value: two permutations of
/// different degree never compare equal and never compose.
///
/// Products act left to right: `p * q` applies p first, so (p*q)(i) = q(p(i)).
class Perm {
 public:
  using Point = std::uint16_t;
  static constexpr std::size_t kMaxDegree = 65535;

  Perm() = default;

  static Perm identity(std::size_t degree) {
    check_degree(degree);
    Perm p;
    p.img_.resize(degree);
    std::iota(p.img_.begin(), p.img_.end(), Point{0});
    return p;
  }

  /// Builds from 1-based images: images[i-1] is the image of point i.
  static Perm from_images(std::span<const std::size_t> images) {
    check_degree(images.size());
    Perm p;
    p.img_.resize(images.size());
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
      const std::size_t v = images[i];
      if (v < 1 || v > images.size() || seen[v - 1])
        throw Error(ErrorCode::ParseError, "images do not form a bijection of {1.." +
                                               std::to_string(images.size()) + "}");
      seen[v - 1] = true;
      p.img_[i] = static_cast<Point>(v - 1);
    }
    return p;
  }

  static Perm from_images(std::initializer_list<std::size_t> images) {
    std::vector<std::size_t> v(images);
    return from_images(std::span<const std::size_t>(v));
  }

  /// Unchecked 0-based constructor for internal kernels.
  static Perm from_zero_based(std::vector<Point> images) {
    Perm p;
    p.img_ = std::move(images);
    return p;
  }

  std::size_t degree() const noexcept { return img_.size(); }

  /// Image of a 1-based point.
  std::size_t image(std::size_t point) const {
    if (point < 1 || point > img_.size())
      throw Error(ErrorCode::DegreeViolation, "point " + std::to_string(point) +
                                                  " outside 1.." + std::to_string(img_.size()));
    return static_cast<std::size_t>(img_[point - 1]) + 1;
  }

  /// 0-based raw access.
  Point operator[](std::size_t i) const noexcept { return img_[i]; }

  std::span<const Point> images() const noexcept { return img_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  /// First 0-based point moved, or degree() when the permutation is the identity.
  std::size_t first_moved() const noexcept {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return i;
    return img_.size();
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Point v : img_) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) {
    if (a.img_.size() != b.img_.size()) return a.img_.size() <=> b.img_.size();
    return std::lexicographical_compare_three_way(a.img_.begin(), a.img_.end(),
                                                  b.img_.begin(), b.img_.end());
  }

 private:
  static void check_degree(std::size_t degree) {
    if (degree > kMaxDegree)
      throw CapExceeded("permutation degree", std::to_string(degree), kMaxDegree);
  }

  std::vector<Point> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept { return p.hash(); }
};

namespace detail {
inline void require_same_degree(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw Error(ErrorCode::DegreeMismatch, "degrees " + std::to_string(p.degree()) + " and " +
                                               std::to_string(q.degree()));
}
}  // namespace detail

/// Apply p first, then q.
inline Perm compose(const Perm& p, const Perm& q) {
  detail::require_same_degree(p, q);
  std::vector<Perm::Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = q[p[i]];
  return Perm::from_zero_based(std::move(out));
}

inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

inline Perm inverse(const Perm& p) {
  std::vector<Perm::Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[p[i]] = static_cast<Perm::Point>(i);
  return Perm::from_zero_based(std::move(out));
}

inline Perm power(const Perm& p, BigInt e) {
  Perm result = Perm::identity(p.degree());
  Perm base = p;
  if (e < 0) {
    base = inverse(p);
    e = -e;
  }
  while (e > 0) {
    if ((e & 1) != 0) result = compose(result, base);
    e >>= 1;
    if (e > 0) base = compose(base, base);
  }
  return result;
}

/// x^g = g^-1 x g.
inline Perm conjugate(const Perm& x, const Perm& g) { return compose(compose(inverse(g), x), g); }

/// [x, y] = x^-1 y^-1 x y, so that [ab, x] = [a, x]^b [b, x].
inline Perm commutator(const Perm& x, const Perm& y) {
  return compose(compose(inverse(x), inverse(y)), compose(x, y));
}

/// Disjoint cycles as 0-based point lists, each starting at its smallest point.
inline std::vector<std::vector<std::size_t>> cycles(const Perm& p) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) continue;
    std::vector<std::size_t> c;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

inline BigInt element_order(const Perm& p) {
  BigInt result = 1;
  for (const auto& c : cycles(p)) {
    const BigInt len = c.size();
    result = result / gcd(result, len) * len;
  }
  return result;
}

/// Cycle notation with 1-based points, e.g. "(1 2 3)(4 5)"; identity is "()".
inline std::string to_cycle_string(const Perm& p) {
  std::string out;
  for (const auto& c : cycles(p)) {
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(c[k] + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

/// Parses cycle notation against an externally supplied degree.
///
/// Whitespace is insignificant and commas may separate points. A product of
/// several (possibly overlapping) cycles is composed left to right. Errors:
/// ParseError for malformed text, DegreeViolation for points outside 1..degree.
inline Perm parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0) throw Error(ErrorCode::ParseError, "degree must be positive");
  Perm result = Perm::identity(degree);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  if (i == text.size()) throw Error(ErrorCode::ParseError, "empty permutation text");
  while (i < text.size()) {
    if (text[i] != '(')
      throw Error(ErrorCode::ParseError,
                  "expected '(' at column " + std::to_string(i + 1) + " in '" + std::string(text) + "'");
    ++i;
    std::vector<std::size_t> cyc;
    for (;;) {
      skip_ws();
      if (i == text.size())
        throw Error(ErrorCode::ParseError, "unterminated cycle in '" + std::string(text) + "'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw Error(ErrorCode::ParseError, "unexpected '" + std::string(1, text[i]) +
                                               "' at column " + std::to_string(i + 1));
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        if (v > Perm::kMaxDegree + 1) break;
        ++i;
      }
      if (v < 1 || v > degree)
        throw Error(ErrorCode::DegreeViolation,
                    "point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      if (std::find(cyc.begin(), cyc.end(), v - 1) != cyc.end())
        throw Error(ErrorCode::ParseError, "point " + std::to_string(v) + " repeated in a cycle");
      cyc.push_back(v - 1);
    }
    if (cyc.size() > 1) {
      std::vector<Perm::Point> img(degree);
      std::iota(img.begin(), img.end(), Perm::Point{0});
      for (std::size_t k = 0; k < cyc.size(); ++k)
        img[cyc[k]] = static_cast<Perm::Point>(cyc[(k + 1) % cyc.size()]);
      result = compose(result, Perm::from_zero_based(std::move(img)));
    }
    skip_ws();
  }
  return result;
}

}  // namespace centerbound

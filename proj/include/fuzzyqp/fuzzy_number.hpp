#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>

#include "fuzzyqp/errors.hpp"

namespace fuzzyqp {

/// Closed real interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  constexpr bool contains(double x) const noexcept { return lo <= x && x <= hi; }
  constexpr bool contains(const Interval& other) const noexcept {
    return lo <= other.lo && other.hi <= hi;
  }
  constexpr double width() const noexcept { return hi - lo; }

  friend constexpr bool operator==(const Interval&, const Interval&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Interval& iv) {
  return os << '[' << iv.lo << ", " << iv.hi << ']';
}

/// Triangular fuzzy number (a1, a2, a3): support [a1, a3], peak at a2.
/// A crisp value c embeds as (c, c, c).
struct TriangularFuzzyNumber {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  static constexpr TriangularFuzzyNumber crisp(double c) noexcept { return {c, c, c}; }

  constexpr bool is_ordered() const noexcept { return a1 <= a2 && a2 <= a3; }
  constexpr bool is_crisp() const noexcept { return a1 == a2 && a2 == a3; }

  friend constexpr bool operator==(const TriangularFuzzyNumber&,
                                   const TriangularFuzzyNumber&) = default;
};

using Tfn = TriangularFuzzyNumber;

inline std::ostream& operator<<(std::ostream& os, const Tfn& t) {
  return os << '(' << t.a1 << ", " << t.a2 << ", " << t.a3 << ')';
}

inline void require_alpha(double alpha) {
  // Negated form so that NaN is rejected too.
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("alpha must lie in [0, 1]");
  }
}

// Exact at alpha = 0, at alpha = 1, and for a collapsed side.
inline double lower_endpoint(const Tfn& t, double alpha) {
  require_alpha(alpha);
  return alpha == 1.0 ? t.a2 : t.a1 + alpha * (t.a2 - t.a1);
}

inline double upper_endpoint(const Tfn& t, double alpha) {
  require_alpha(alpha);
  return alpha == 1.0 ? t.a2 : t.a3 - alpha * (t.a3 - t.a2);
}

/// The alpha-cut {x : membership(t, x) >= alpha} of a TFN.
inline Interval alpha_cut(const Tfn& t, double alpha) {
  return {lower_endpoint(t, alpha), upper_endpoint(t, alpha)};
}

/// Piecewise-linear membership degree. A collapsed side (a1 == a2 or a2 == a3)
/// contributes only the point a2, where the degree is 1.
inline double membership(const Tfn& t, double x) noexcept {
  if (x == t.a2) return 1.0;
  if (x < t.a2) {
    if (x <= t.a1) return 0.0;
    return (x - t.a1) / (t.a2 - t.a1);
  }
  if (x >= t.a3) return 0.0;
  return (t.a3 - x) / (t.a3 - t.a2);
}

// Interval arithmetic on alpha-cuts.

constexpr Interval add(const Interval& a, const Interval& b) noexcept {
  return {a.lo + b.lo, a.hi + b.hi};
}

constexpr Interval scale(double k, const Interval& a) noexcept {
  if (k >= 0.0) return {k * a.lo, k * a.hi};
  return {k * a.hi, k * a.lo};
}

inline Interval mul(const Interval& a, const Interval& b) noexcept {
  const auto products = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  const auto [mn, mx] = std::minmax(products);
  return {mn, mx};
}

constexpr Interval operator+(const Interval& a, const Interval& b) noexcept { return add(a, b); }
constexpr Interval operator*(double k, const Interval& a) noexcept { return scale(k, a); }
inline Interval operator*(const Interval& a, const Interval& b) noexcept { return mul(a, b); }

}  // namespace fuzzyqp

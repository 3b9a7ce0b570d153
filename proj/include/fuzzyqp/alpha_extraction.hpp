#pragma once

#include "fuzzyqp/fuzzy_number.hpp"
#include "fuzzyqp/problem.hpp"

namespace fuzzyqp {

/// A membership level in [0, 1].
class AlphaLevel {
 public:
  explicit AlphaLevel(double alpha) : alpha_(alpha) { require_alpha(alpha); }
  double value() const noexcept { return alpha_; }

 private:
  double alpha_;
};

enum class Endpoint { lower, upper };

inline const char* to_string(Endpoint e) noexcept { return e == Endpoint::lower ? "lower" : "upper"; }

/// The crisp QP obtained by taking one alpha-cut endpoint of every coefficient
/// (c, Q, A and b together).
inline CrispQP endpoint_qp(const FuzzyQP& p, AlphaLevel alpha, Endpoint side) {
  require_valid(p);
  const double a = alpha.value();
  auto pick = [&](const Tfn& t) {
    return side == Endpoint::lower ? lower_endpoint(t, a) : upper_endpoint(t, a);
  };
  const auto n = static_cast<Eigen::Index>(p.n);
  const auto m = static_cast<Eigen::Index>(p.m);

  CrispQP q;
  q.c.resize(n);
  q.Q.resize(n, n);
  q.A.resize(m, n);
  q.b.resize(m);
  for (Eigen::Index j = 0; j < n; ++j) {
    q.c(j) = pick(p.c[static_cast<std::size_t>(j)]);
    for (Eigen::Index k = 0; k < n; ++k) {
      q.Q(j, k) = pick(p.Q[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
    }
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    q.b(i) = pick(p.b[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j < n; ++j) {
      q.A(i, j) = pick(p.A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  }
  return q;
}

inline CrispQP lower_qp(const FuzzyQP& p, AlphaLevel alpha) { return endpoint_qp(p, alpha, Endpoint::lower); }
inline CrispQP upper_qp(const FuzzyQP& p, AlphaLevel alpha) { return endpoint_qp(p, alpha, Endpoint::upper); }

}  // namespace fuzzyqp

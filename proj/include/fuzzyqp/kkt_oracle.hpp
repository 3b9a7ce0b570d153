#pragma once

// Brute-force reference solver for small QPs. Every subset S of the m + n
// constraints (rows of A, then the bounds x_j >= 0) with |S| <= n is treated as
// an active set: the stationarity system
//
//   [ Q   G_S' ] [x]   [-c ]
//   [ G_S  0   ] [l] = [h_S]
//
// yields a candidate, and every |S| = n subset with nonsingular G_S yields a
// vertex. The feasible candidate with the lowest objective wins.

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "fuzzyqp/errors.hpp"
#include "fuzzyqp/problem.hpp"
#include "fuzzyqp/qp_solver.hpp"

namespace fuzzyqp {

inline constexpr Eigen::Index kOracleMaxVariables = 8;
inline constexpr Eigen::Index kOracleMaxConstraints = 24;

namespace detail {

inline void consider(const CrispQP& q, const Eigen::VectorXd& x, QpSolution& best, bool& found) {
  const double scale = std::max(1.0, x.cwiseAbs().maxCoeff());
  if (!x.allFinite() || max_violation(x, q.A, q.b) > 1e-9 * scale) return;
  const double z = objective(q, x);
  if (!found || z < best.z - 1e-12 * std::max(1.0, std::abs(z)) ||
      (std::abs(z - best.z) <= 1e-12 * std::max(1.0, std::abs(z)) && lexicographically_less(x, best.x))) {
    best.x = x;
    best.z = z;
    found = true;
  }
}

}  // namespace detail

inline QpSolution solve_oracle(const CrispQP& q) {
  require_consistent(q);
  const auto n = q.n();
  const auto m = q.m();
  if (n > kOracleMaxVariables) throw CapabilityError("oracle supports at most 8 variables");
  if (m + n > kOracleMaxConstraints) throw CapabilityError("oracle supports at most 24 constraints in total");

  // All constraints as G x <= h.
  const auto total = m + n;
  Eigen::MatrixXd G(total, n);
  Eigen::VectorXd h(total);
  G.topRows(m) = q.A;
  h.head(m) = q.b;
  G.bottomRows(n) = -Eigen::MatrixXd::Identity(n, n);
  h.tail(n).setZero();

  QpSolution best;
  best.convex = is_psd(q.Q);
  bool found = false;
  int candidates = 0;

  const std::uint32_t subsets = std::uint32_t{1} << total;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    const int k = std::popcount(mask);
    if (k > n) continue;
    std::vector<Eigen::Index> active;
    for (Eigen::Index i = 0; i < total; ++i) {
      if (mask & (std::uint32_t{1} << i)) active.push_back(i);
    }
    Eigen::MatrixXd GS(k, n);
    Eigen::VectorXd hS(k);
    for (int r = 0; r < k; ++r) {
      GS.row(r) = G.row(active[static_cast<std::size_t>(r)]);
      hS(r) = h(active[static_cast<std::size_t>(r)]);
    }

    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(n + k, n + k);
    kkt.topLeftCorner(n, n) = q.Q;
    kkt.topRightCorner(n, k) = GS.transpose();
    kkt.bottomLeftCorner(k, n) = GS;
    Eigen::VectorXd rhs(n + k);
    rhs << -q.c, hS;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(kkt);
    if (lu.rank() == n + k) {
      ++candidates;
      detail::consider(q, lu.solve(rhs).head(n), best, found);
    }
    if (k == n) {
      Eigen::FullPivLU<Eigen::MatrixXd> vertex(GS);
      if (vertex.rank() == n) {
        ++candidates;
        detail::consider(q, vertex.solve(hS), best, found);
      }
    }
  }

  if (!found) throw InfeasibleError("oracle found no feasible candidate");
  best.iterations = candidates;
  best.converged = true;
  best.status = SolveStatus::converged;
  best.stationarity = 0.0;
  return best;
}

}  // namespace fuzzyqp

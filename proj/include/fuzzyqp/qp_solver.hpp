#pragma once

// Projected gradient solver for  min c'x + 1/2 x'Qx  s.t. Ax <= b, x >= 0.
//
// Each iteration takes a gradient step of length 1/K, with K = ||Q||_2 the
// Lipschitz constant of the gradient, then projects back onto the polyhedron.
// The projection runs Dykstra's algorithm over the individual halfspaces and
// the nonnegative orthant, then polishes the result by solving the
// equality-constrained projection on the active set Dykstra identified.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "fuzzyqp/errors.hpp"
#include "fuzzyqp/problem.hpp"

namespace fuzzyqp {

struct SolverOptions {
  double tol = 1e-9;           // stop when ||x_{k+1} - x_k||_inf <= tol
  int max_iter = 100000;
  /// Extra start points for indefinite Q. Empty means: generate
  /// multistart_count seeded pseudorandom feasible points.
  std::vector<Eigen::VectorXd> multistart;
  int multistart_count = 8;
  std::uint64_t seed = 12345;
  double projection_tol = 1e-10;
  int projection_max_sweeps = 10000;
  bool projection_polish = true;  // finish Dykstra with the exact active-set projection
  bool record_trace = false;  // keep objective values for every iterate

  void validate() const {
    if (!(tol > 0.0)) throw DomainError("tol must be positive");
    if (max_iter < 1) throw DomainError("max_iter must be at least 1");
    if (!(projection_tol > 0.0)) throw DomainError("projection_tol must be positive");
    if (projection_max_sweeps < 1) throw DomainError("projection_max_sweeps must be at least 1");
    if (multistart_count < 0) throw DomainError("multistart_count must be non-negative");
  }
};

enum class SolveStatus { converged, max_iterations, unbounded };

inline const char* to_string(SolveStatus s) noexcept {
  switch (s) {
    case SolveStatus::converged: return "converged";
    case SolveStatus::max_iterations: return "max_iterations";
    case SolveStatus::unbounded: return "unbounded";
  }
  return "unknown";
}

struct QpSolution {
  Eigen::VectorXd x;
  double z = std::numeric_limits<double>::quiet_NaN();
  int iterations = 0;
  bool converged = false;
  SolveStatus status = SolveStatus::max_iterations;
  double stationarity = std::numeric_limits<double>::quiet_NaN();  // gradient-mapping norm at x
  bool convex = false;
  int starts = 1;  // number of start points tried
  std::vector<double> trace;  // objective per iterate, when requested
};

inline void require_size(const CrispQP& q, const Eigen::VectorXd& x) {
  if (x.size() != q.n()) throw DimensionError("point has wrong dimension");
}

inline double objective(const CrispQP& q, const Eigen::VectorXd& x) {
  require_size(q, x);
  return q.c.dot(x) + 0.5 * x.dot(q.Q * x);
}

inline Eigen::VectorXd gradient(const CrispQP& q, const Eigen::VectorXd& x) {
  require_size(q, x);
  return q.c + q.Q * x;
}

/// Largest |eigenvalue| of a symmetric matrix by power iteration on Q^2.
inline double spectral_norm_power(const Eigen::MatrixXd& Q, double rel_tol = 1e-13, int max_iter = 100000) {
  const auto n = Q.rows();
  if (n == 0) return 0.0;
  // Deterministic, dense start vector; unlikely to be orthogonal to the top eigenvector.
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = 1.0 + 0.1 * std::sin(static_cast<double>(i + 1));
  v.normalize();
  double estimate = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXd w = Q * (Q * v);
    const double norm = w.norm();
    if (norm == 0.0) return 0.0;
    const double next = std::sqrt(v.dot(w));  // Rayleigh quotient of Q^2, = ||Q v||
    v = w / norm;
    if (std::abs(next - estimate) <= rel_tol * next) return next;
    estimate = next;
  }
  return estimate;
}

/// Lipschitz constant of x -> c + Qx, i.e. the spectral norm of symmetric Q.
/// Returns 1 for Q = 0.
inline double lipschitz_constant(const Eigen::MatrixXd& Q) {
  if (Q.size() == 0 || Q.isZero(0.0)) return 1.0;
  if (Q.rows() <= 32) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Q, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }
  return spectral_norm_power(Q);
}

inline double min_eigenvalue(const Eigen::MatrixXd& Q) {
  if (Q.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Q, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

inline bool is_psd(const Eigen::MatrixXd& Q) {
  if (Q.size() == 0) return true;
  const double scale = std::max(1.0, Q.cwiseAbs().maxCoeff());
  return min_eigenvalue(Q) >= -1e-10 * scale;
}

/// Largest violation of Ax <= b and x >= 0 (0 when feasible).
inline double max_violation(const Eigen::VectorXd& x, const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
  double v = 0.0;
  if (A.rows() > 0) v = std::max(v, (A * x - b).maxCoeff());
  if (x.size() > 0) v = std::max(v, (-x).maxCoeff());
  return v;
}

namespace detail {

// Exact projection onto {z : A_S z = b_S} for the constraints Dykstra left
// active, accepted only if it satisfies the KKT conditions of the full
// projection problem.
inline bool polish_projection(const Eigen::VectorXd& y, const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                              const std::vector<Eigen::VectorXd>& corrections, Eigen::VectorXd& out) {
  const auto n = y.size();
  const auto m = A.rows();
  const double scale = std::max(1.0, y.cwiseAbs().maxCoeff());
  const double active_eps = 1e-14 * scale;

  std::vector<Eigen::Index> rows;
  std::vector<Eigen::Index> bounds;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (corrections[static_cast<std::size_t>(i)].norm() > active_eps) rows.push_back(i);
  }
  const auto& orth = corrections.back();
  for (Eigen::Index j = 0; j < n; ++j) {
    if (orth(j) < -active_eps) bounds.push_back(j);
  }
  const auto k = static_cast<Eigen::Index>(rows.size() + bounds.size());
  if (k == 0) {
    if (max_violation(y, A, b) <= 0.0) out = y;
    return true;
  }
  if (k > n) return false;

  Eigen::MatrixXd G(k, n);
  Eigen::VectorXd h(k);
  Eigen::Index r = 0;
  for (auto i : rows) {
    G.row(r) = A.row(i);
    h(r++) = b(i);
  }
  for (auto j : bounds) {
    G.row(r).setZero();
    G(r, j) = -1.0;
    h(r++) = 0.0;
  }
  const Eigen::MatrixXd gram = G * G.transpose();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
  if (lu.rank() < k) return false;
  const Eigen::VectorXd lambda = lu.solve(G * y - h);
  if (lambda.minCoeff() < -1e-12 * scale) return false;
  Eigen::VectorXd z = y - G.transpose() * lambda;
  for (auto j : bounds) z(j) = 0.0;
  if (max_violation(z, A, b) > 1e-12 * scale) return false;
  out = std::move(z);
  return true;
}

}  // namespace detail

/// Euclidean projection of x onto {z : Az <= b, z >= 0}.
/// Throws InfeasibleError when the set is (numerically) empty.
inline Eigen::VectorXd project(const Eigen::VectorXd& x, const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                               const SolverOptions& opts = {}) {
  const auto n = x.size();
  const auto m = A.rows();
  if (A.cols() != n || b.size() != m) throw DimensionError("projection: A, b and x sizes disagree");

  Eigen::VectorXd row_norm2(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    row_norm2(i) = A.row(i).squaredNorm();
    if (row_norm2(i) == 0.0 && b(i) < 0.0) {
      throw InfeasibleError("constraint " + std::to_string(i + 1) + " reads 0 <= " + std::to_string(b(i)));
    }
  }
  if (max_violation(x, A, b) <= 0.0) return x;

  // corrections[0..m-1] belong to the halfspaces, corrections[m] to the orthant.
  std::vector<Eigen::VectorXd> corrections(static_cast<std::size_t>(m) + 1, Eigen::VectorXd::Zero(n));
  Eigen::VectorXd cur = x;
  Eigen::VectorXd y(n);
  const double tol = opts.projection_tol * std::max(1.0, x.cwiseAbs().maxCoeff());
  bool settled = false;

  for (int sweep = 0; sweep < opts.projection_max_sweeps; ++sweep) {
    const Eigen::VectorXd start = cur;
    double change2 = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
      auto& p = corrections[static_cast<std::size_t>(i)];
      y = cur + p;
      cur = y;
      if (row_norm2(i) > 0.0) {
        const double excess = A.row(i).dot(y) - b(i);
        if (excess > 0.0) cur -= (excess / row_norm2(i)) * A.row(i).transpose();
      }
      const Eigen::VectorXd next_p = y - cur;
      change2 += (next_p - p).squaredNorm();
      p = next_p;
    }
    auto& p = corrections.back();
    y = cur + p;
    cur = y.cwiseMax(0.0);
    const Eigen::VectorXd next_p = y - cur;
    change2 += (next_p - p).squaredNorm();
    p = next_p;

    if (change2 <= tol * tol && (cur - start).norm() <= tol) {
      settled = true;
      break;
    }
  }

  const double violation = max_violation(cur, A, b);
  if (!settled && violation > 1e-8) {
    throw InfeasibleError("feasible set is empty (projection residual " + std::to_string(violation) + ")");
  }
  if (opts.projection_polish) detail::polish_projection(x, A, b, corrections, cur);
  return cur;
}

namespace detail {

// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
inline double unit_draw(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

inline bool lexicographically_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

// Ranks runs: converged before not converged, then objective, then x.
inline bool better_run(const QpSolution& a, const QpSolution& b) {
  if (a.converged != b.converged) return a.converged;
  const bool a_finite = a.status != SolveStatus::unbounded && std::isfinite(a.z);
  const bool b_finite = b.status != SolveStatus::unbounded && std::isfinite(b.z);
  if (a_finite != b_finite) return a_finite;
  const double scale = std::max({1.0, std::abs(a.z), std::abs(b.z)});
  if (std::abs(a.z - b.z) > 1e-12 * scale) return a.z < b.z;
  return lexicographically_less(a.x, b.x);
}

inline QpSolution run_projected_gradient(const CrispQP& q, Eigen::VectorXd x, double step,
                                         const SolverOptions& opts) {
  QpSolution s;
  if (opts.record_trace) s.trace.push_back(objective(q, x));
  s.status = SolveStatus::max_iterations;
  for (int k = 1; k <= opts.max_iter; ++k) {
    const Eigen::VectorXd y = x - step * gradient(q, x);
    Eigen::VectorXd next = project(y, q.A, q.b, opts);
    s.iterations = k;
    if (next.cwiseAbs().maxCoeff() > 1e8) {
      x = std::move(next);
      s.status = SolveStatus::unbounded;
      break;
    }
    const double change = (next - x).cwiseAbs().maxCoeff();
    x = std::move(next);
    if (opts.record_trace) s.trace.push_back(objective(q, x));
    if (change <= opts.tol) {
      s.status = SolveStatus::converged;
      break;
    }
  }
  s.converged = s.status == SolveStatus::converged;
  s.z = objective(q, x);
  s.x = std::move(x);
  return s;
}

inline std::vector<Eigen::VectorXd> start_points(const CrispQP& q, bool convex, const SolverOptions& opts) {
  const auto n = q.n();
  std::vector<Eigen::VectorXd> starts;
  starts.push_back(project(Eigen::VectorXd::Zero(n), q.A, q.b, opts));
  if (convex) return starts;
  if (!opts.multistart.empty()) {
    for (const auto& s : opts.multistart) {
      if (s.size() != n) throw DimensionError("multistart point has wrong dimension");
      starts.push_back(project(s, q.A, q.b, opts));
    }
    return starts;
  }
  const double radius = std::max(1.0, q.m() > 0 ? q.b.cwiseAbs().maxCoeff() : 1.0);
  std::mt19937_64 gen(opts.seed);
  for (int k = 0; k < opts.multistart_count; ++k) {
    Eigen::VectorXd p(n);
    for (Eigen::Index j = 0; j < n; ++j) p(j) = radius * unit_draw(gen);
    starts.push_back(project(p, q.A, q.b, opts));
  }
  return starts;
}

}  // namespace detail

/// Projected gradient with fixed step 1/||Q||_2. Convex problems use a single
/// start at the projected origin; indefinite ones try every multistart point
/// and keep the best converged run.
inline QpSolution solve_pg(const CrispQP& q, const SolverOptions& opts = {}) {
  opts.validate();
  require_consistent(q);

  const bool quadratic_free = q.Q.size() == 0 || q.Q.isZero(0.0);
  const double K = lipschitz_constant(q.Q);
  const double step = quadratic_free ? 1.0 / std::max(q.c.norm(), 1.0) : 1.0 / K;
  const bool convex = is_psd(q.Q);

  const auto starts = detail::start_points(q, convex, opts);
  QpSolution best;
  bool have = false;
  for (const auto& x0 : starts) {
    QpSolution run = detail::run_projected_gradient(q, x0, step, opts);
    if (!have || detail::better_run(run, best)) {
      best = std::move(run);
      have = true;
    }
  }
  best.convex = convex;
  best.starts = static_cast<int>(starts.size());

  const double mapping_step = quadratic_free ? step : 1.0 / K;
  const Eigen::VectorXd moved = project(best.x - mapping_step * gradient(q, best.x), q.A, q.b, opts);
  best.stationarity = (best.x - moved).norm() / mapping_step;
  return best;
}

}  // namespace fuzzyqp

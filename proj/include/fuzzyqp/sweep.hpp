#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "fuzzyqp/alpha_extraction.hpp"
#include "fuzzyqp/errors.hpp"
#include "fuzzyqp/problem.hpp"
#include "fuzzyqp/qp_solver.hpp"

namespace fuzzyqp {

/// Bounds closer than this count as coincident.
inline constexpr double kCoincidenceTol = 1e-6;

struct SolveDiagnostics {
  int iterations = 0;
  bool converged = false;
  bool convex = false;
  SolveStatus status = SolveStatus::max_iterations;
  double stationarity = 0.0;
};

inline SolveDiagnostics diagnostics_of(const QpSolution& s) {
  return {s.iterations, s.converged, s.convex, s.status, s.stationarity};
}

/// The objective interval [z_lower, z_upper] at one alpha level.
struct AlphaRecord {
  double alpha = 0.0;
  double z_lower = 0.0;
  double z_upper = 0.0;
  Eigen::VectorXd x_lower;
  Eigen::VectorXd x_upper;
  SolveDiagnostics lower_diag;
  SolveDiagnostics upper_diag;

  bool coincides() const { return std::abs(z_lower - z_upper) <= kCoincidenceTol; }
  bool converged() const { return lower_diag.converged && upper_diag.converged; }
};

struct MembershipCurve {
  std::vector<AlphaRecord> records;  // ascending alpha
  /// First alpha where the two bounds meet, if any.
  std::optional<double> coincided_at;

  bool coincided() const { return coincided_at.has_value(); }
  bool all_converged() const {
    return std::all_of(records.begin(), records.end(), [](const AlphaRecord& r) { return r.converged(); });
  }
};

/// Sorted copy of the grid; rejects values outside [0, 1] and duplicates.
inline std::vector<double> checked_grid(std::vector<double> alphas) {
  if (alphas.empty()) throw DomainError("alpha grid is empty");
  for (double a : alphas) require_alpha(a);
  std::sort(alphas.begin(), alphas.end());
  if (std::adjacent_find(alphas.begin(), alphas.end()) != alphas.end()) {
    throw DomainError("alpha grid contains duplicates");
  }
  return alphas;
}

inline std::vector<double> uniform_grid(int intervals) {
  std::vector<double> g;
  for (int k = 0; k <= intervals; ++k) g.push_back(static_cast<double>(k) / intervals);
  return g;
}

inline std::vector<double> default_grid() { return uniform_grid(10); }

/// Solves the lower and upper endpoint QPs for every alpha on the grid.
/// Every requested level is solved; coincided_at only reports where the
/// bounds first met.
inline MembershipCurve solve_fqp(const FuzzyQP& p, std::vector<double> alphas, const SolverOptions& opts = {}) {
  require_valid(p);
  opts.validate();
  const auto grid = checked_grid(std::move(alphas));

  MembershipCurve curve;
  curve.records.reserve(grid.size());
  for (double a : grid) {
    const AlphaLevel level(a);
    auto solve_side = [&](Endpoint side) {
      try {
        return solve_pg(endpoint_qp(p, level, side), opts);
      } catch (const InfeasibleError& e) {
        throw InfeasibleError(std::string(to_string(side)) + " QP at alpha=" + std::to_string(a) +
                              " is infeasible: " + e.what());
      }
    };
    const QpSolution lo = solve_side(Endpoint::lower);
    const QpSolution up = solve_side(Endpoint::upper);

    AlphaRecord r;
    r.alpha = a;
    r.z_lower = lo.z;
    r.z_upper = up.z;
    r.x_lower = lo.x;
    r.x_upper = up.x;
    r.lower_diag = diagnostics_of(lo);
    r.upper_diag = diagnostics_of(up);
    if (!curve.coincided_at && r.coincides()) curve.coincided_at = a;
    curve.records.push_back(std::move(r));
  }
  return curve;
}

namespace detail {

inline constexpr double kMonotoneSlack = 1e-9;

inline void require_invertible(const MembershipCurve& curve) {
  const auto& r = curve.records;
  if (r.size() < 2 || r.front().alpha != 0.0 || r.back().alpha != 1.0) {
    throw CapabilityError("membership inversion needs at least two alpha levels including 0 and 1");
  }
  for (std::size_t k = 1; k < r.size(); ++k) {
    if (r[k].z_lower < r[k - 1].z_lower - kMonotoneSlack) {
      throw ShapeError("lower branch decreases between alpha=" + std::to_string(r[k - 1].alpha) +
                       " and alpha=" + std::to_string(r[k].alpha));
    }
    if (r[k].z_upper > r[k - 1].z_upper + kMonotoneSlack) {
      throw ShapeError("upper branch increases between alpha=" + std::to_string(r[k - 1].alpha) +
                       " and alpha=" + std::to_string(r[k].alpha));
    }
  }
}

// sup{alpha : branch(alpha) <= z} for a nondecreasing branch (sign = +1), or
// sup{alpha : branch(alpha) >= z} for a nonincreasing one (sign = -1).
template <class Branch>
double branch_level(const std::vector<AlphaRecord>& r, double z, Branch branch, double sign) {
  const auto last = r.size() - 1;
  for (std::size_t k = last + 1; k-- > 0;) {
    const double fk = sign * branch(r[k]);
    if (fk > sign * z) continue;
    if (k == last) return 1.0;
    const double fn = sign * branch(r[k + 1]);
    const double t = (sign * z - fk) / (fn - fk);
    return r[k].alpha + t * (r[k + 1].alpha - r[k].alpha);
  }
  return 0.0;
}

}  // namespace detail

/// Degree to which z belongs to the fuzzy optimal objective, by piecewise-linear
/// interpolation of both branches of the curve.
inline double membership_of_objective(const MembershipCurve& curve, double z) {
  detail::require_invertible(curve);
  const auto& r = curve.records;
  if (z < r.front().z_lower || z > r.front().z_upper) return 0.0;
  const double top_lo = std::min(r.back().z_lower, r.back().z_upper) - kCoincidenceTol;
  const double top_hi = std::max(r.back().z_lower, r.back().z_upper) + kCoincidenceTol;
  if (z >= top_lo && z <= top_hi) return 1.0;
  const double lo = detail::branch_level(r, z, [](const AlphaRecord& a) { return a.z_lower; }, 1.0);
  const double hi = detail::branch_level(r, z, [](const AlphaRecord& a) { return a.z_upper; }, -1.0);
  return std::clamp(std::min(lo, hi), 0.0, 1.0);
}

struct PolylinePoint {
  double z = 0.0;
  double alpha = 0.0;
};

/// Outline of the membership function: (z_lower, alpha) for ascending alpha,
/// then (z_upper, alpha) for descending alpha. A coincident top vertex is
/// emitted once.
inline std::vector<PolylinePoint> membership_polyline(const MembershipCurve& curve) {
  const auto& r = curve.records;
  if (r.empty()) throw CapabilityError("empty membership curve");
  for (std::size_t k = 1; k < r.size(); ++k) {
    if (r[k].z_lower < r[k - 1].z_lower - detail::kMonotoneSlack ||
        r[k].z_upper > r[k - 1].z_upper + detail::kMonotoneSlack) {
      throw ShapeError("membership branches are not monotone in alpha");
    }
  }
  std::vector<PolylinePoint> out;
  for (const auto& rec : r) out.push_back({rec.z_lower, rec.alpha});
  const bool merge_top = r.back().coincides();
  for (std::size_t k = r.size(); k-- > 0;) {
    if (k == r.size() - 1 && merge_top) continue;
    out.push_back({r[k].z_upper, r[k].alpha});
  }
  return out;
}

}  // namespace fuzzyqp

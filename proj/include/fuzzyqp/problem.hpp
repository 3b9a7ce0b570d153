#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "fuzzyqp/errors.hpp"
#include "fuzzyqp/fuzzy_number.hpp"

namespace fuzzyqp {

using TfnVector = std::vector<Tfn>;
using TfnMatrix = std::vector<std::vector<Tfn>>;  // row-major

/// Fuzzy quadratic program
///
///   min  c'x + 1/2 x'Qx   s.t.  Ax <= b,  x >= 0
///
/// with every coefficient a triangular fuzzy number. Q is n x n and must be
/// symmetric triple-by-triple; A is m x n.
struct FuzzyQP {
  std::string name;  // optional metadata, empty when absent
  std::size_t n = 0;
  std::size_t m = 0;
  TfnVector c;
  TfnMatrix Q;
  TfnMatrix A;
  TfnVector b;

  bool is_crisp() const;

  friend bool operator==(const FuzzyQP&, const FuzzyQP&) = default;
};

/// One crisp QP  min c'x + 1/2 x'Qx  s.t. Ax <= b, x >= 0.
struct CrispQP {
  Eigen::VectorXd c;
  Eigen::MatrixXd Q;
  Eigen::MatrixXd A;
  Eigen::VectorXd b;

  Eigen::Index n() const noexcept { return c.size(); }
  Eigen::Index m() const noexcept { return b.size(); }
};

struct Violation {
  std::string entry;    // e.g. "Q_12/Q_21", "A_21", "n"
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

inline std::string one_based(std::size_t i) { return std::to_string(i + 1); }

/// "12" for (0, 1); "10,12" once an index needs two digits.
inline std::string index_label(std::size_t i, std::size_t j) {
  if (i < 9 && j < 9) return one_based(i) + one_based(j);
  return one_based(i) + "," + one_based(j);
}

/// Every invariant a FuzzyQP breaks. Empty exactly when the problem is valid.
inline std::vector<Violation> validate(const FuzzyQP& p) {
  std::vector<Violation> out;
  if (p.n < 1) out.push_back({"n", "need at least one decision variable"});
  if (p.m < 1) out.push_back({"m", "need at least one constraint"});

  auto check_vector = [&](const TfnVector& v, std::size_t len, const char* sym) {
    if (v.size() != len) {
      out.push_back({sym, std::string("expected length ") + std::to_string(len) + ", got " +
                              std::to_string(v.size())});
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_ordered()) {
        out.push_back({std::string(sym) + "_" + one_based(i), "triple must satisfy a1 <= a2 <= a3"});
      }
    }
  };
  auto check_matrix = [&](const TfnMatrix& mat, std::size_t rows, std::size_t cols, const char* sym) {
    if (mat.size() != rows) {
      out.push_back({sym, std::string("expected ") + std::to_string(rows) + " rows, got " +
                              std::to_string(mat.size())});
    }
    for (std::size_t i = 0; i < mat.size(); ++i) {
      if (mat[i].size() != cols) {
        out.push_back({std::string(sym) + " row " + one_based(i),
                       std::string("expected ") + std::to_string(cols) + " columns, got " +
                           std::to_string(mat[i].size())});
      }
      for (std::size_t j = 0; j < mat[i].size(); ++j) {
        if (!mat[i][j].is_ordered()) {
          out.push_back({std::string(sym) + "_" + index_label(i, j),
                         "triple must satisfy a1 <= a2 <= a3"});
        }
      }
    }
  };

  check_vector(p.c, p.n, "c");
  check_matrix(p.Q, p.n, p.n, "Q");
  check_matrix(p.A, p.m, p.n, "A");
  check_vector(p.b, p.m, "b");

  // Symmetry, only where both mirrored entries exist.
  for (std::size_t i = 0; i < p.Q.size(); ++i) {
    for (std::size_t j = i + 1; j < p.Q[i].size(); ++j) {
      if (j < p.Q.size() && i < p.Q[j].size() && !(p.Q[i][j] == p.Q[j][i])) {
        out.push_back({"Q_" + index_label(i, j) + "/Q_" + index_label(j, i),
                       "quadratic matrix must be symmetric"});
      }
    }
  }
  return out;
}

inline std::string describe(const std::vector<Violation>& violations) {
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "; ";
    s += v.entry + ": " + v.message;
  }
  return s;
}

inline void require_valid(const FuzzyQP& p) {
  if (auto v = validate(p); !v.empty()) throw ValidationError("invalid problem: " + describe(v));
}

inline bool FuzzyQP::is_crisp() const {
  auto all = [](const auto& rows) {
    for (const auto& row : rows)
      for (const auto& t : row)
        if (!t.is_crisp()) return false;
    return true;
  };
  auto all_vec = [](const TfnVector& v) {
    for (const auto& t : v)
      if (!t.is_crisp()) return false;
    return true;
  };
  return all_vec(c) && all_vec(b) && all(Q) && all(A);
}

/// Copy of p with Q replaced by (Q + Q')/2, averaged per TFN component.
inline FuzzyQP symmetrized(FuzzyQP p) {
  for (std::size_t i = 0; i < p.Q.size(); ++i) {
    for (std::size_t j = i + 1; j < p.Q[i].size(); ++j) {
      if (j >= p.Q.size() || i >= p.Q[j].size()) continue;
      Tfn& u = p.Q[i][j];
      Tfn& l = p.Q[j][i];
      const Tfn avg{(u.a1 + l.a1) / 2, (u.a2 + l.a2) / 2, (u.a3 + l.a3) / 2};
      u = avg;
      l = avg;
    }
  }
  return p;
}

/// Checks the typed invariants of a crisp instance: consistent sizes, symmetric Q.
inline void require_consistent(const CrispQP& q) {
  const auto n = q.n();
  if (q.Q.rows() != n || q.Q.cols() != n) throw DimensionError("Q must be n x n");
  if (q.A.cols() != n || q.A.rows() != q.m()) throw DimensionError("A must be m x n");
  if (n == 0) return;
  const double scale = std::max(1.0, q.Q.cwiseAbs().maxCoeff());
  if ((q.Q - q.Q.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw ValidationError("Q must be symmetric");
  }
}

}  // namespace fuzzyqp

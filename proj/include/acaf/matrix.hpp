#pragma once

#include <optional>
#include <vector>

#include "acaf/rational.hpp"

namespace acaf {

// Dense matrix of exact rationals, row-major.
struct QMat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  QMat() = default;
  QMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}

  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static QMat identity(int n);
  static QMat zero(int r, int c) { return QMat(r, c); }

  QMat transpose() const;
  bool is_zero() const;
  bool operator==(const QMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

  friend QMat operator*(const QMat& A, const QMat& B);
  friend QMat operator+(const QMat& A, const QMat& B);
  friend QMat operator-(const QMat& A, const QMat& B);
  QMat scaled(const Rat& c) const;

  std::vector<Rat> apply(const std::vector<Rat>& x) const;  // A * x
  QMat cols_subset(const std::vector<int>& idx) const;
  QMat rows_subset(const std::vector<int>& idx) const;
  static QMat hstack(const QMat& A, const QMat& B);
  static QMat vstack(const QMat& A, const QMat& B);
  static QMat from_columns(const std::vector<std::vector<Rat>>& cs);
  std::vector<Rat> column(int j) const;
};

// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(QMat& m);

int rank(QMat m);

// Basis of the right nullspace, one column per basis vector.
QMat nullspace(const QMat& m);

// Basis of the column space: the subset of columns of m that are pivots.
QMat column_space(const QMat& m);

// Exact inverse; throws if singular.
QMat inverse(const QMat& m);

// Solve A x = b. Returns nullopt if inconsistent. A need not be square.
std::optional<std::vector<Rat>> solve(const QMat& A, const std::vector<Rat>& b);

// Repeated exact solves against a fixed injective-column matrix A (m x k,
// rank k). Build cost is one echelon + one k x k inversion; each solve is a
// k x k multiply plus a full residual check.
class LinSolver {
 public:
  explicit LinSolver(const QMat& A);
  // coordinates x with A x = b; nullopt if b is outside the column space
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;
  int domain_dim() const { return k_; }
  // exact left inverse L (k x m) with L A = id; on vectors outside the
  // column space it acts as an unchecked extension
  QMat left_inverse() const;

 private:
  QMat A_;
  QMat binv_;
  std::vector<int> pivot_rows_;
  int k_;
};

// Coordinates of vectors in a subspace given by basis columns.
// in_span checks membership exactly.
struct Subspace {
  QMat basis;  // columns form a basis
  LinSolver solver;
  explicit Subspace(const QMat& basis_cols) : basis(basis_cols), solver(basis_cols) {}
  int dim() const { return basis.cols; }
  bool contains(const std::vector<Rat>& v) const { return solver.solve(v).has_value(); }
};

// Semisimple eigendecomposition over Q: distinct rational eigenvalues and
// exact spectral projectors. Throws if the minimal polynomial is not a
// product of distinct rational linear factors.
struct EigenDecomposition {
  std::vector<Rat> values;
  std::vector<QMat> projectors;  // sum to identity, P_i P_j = delta_ij P_i
};

EigenDecomposition eigen_semisimple(const QMat& M);

// Minimal polynomial of M, monic, as coefficient vector c0 + c1 x + ... + x^d.
std::vector<Rat> minimal_polynomial(const QMat& M);

}  // namespace acaf

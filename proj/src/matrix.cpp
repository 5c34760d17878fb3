#include "acaf/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace acaf {

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::transpose() const {
  QMat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool QMat::is_zero() const {
  for (const auto& x : a)
    if (!acaf::is_zero(x)) return false;
  return true;
}

QMat operator*(const QMat& A, const QMat& B) {
  if (A.cols != B.rows) throw std::invalid_argument("QMat mul: dim mismatch");
  QMat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const Rat& aik = A.at(i, k);
      if (is_zero(aik)) continue;
      for (int j = 0; j < B.cols; ++j) {
        const Rat& bkj = B.at(k, j);
        if (!is_zero(bkj)) C.at(i, j) += aik * bkj;
      }
    }
  return C;
}

QMat operator+(const QMat& A, const QMat& B) {
  if (A.rows != B.rows || A.cols != B.cols) throw std::invalid_argument("QMat add: dim mismatch");
  QMat C = A;
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] += B.a[i];
  return C;
}

QMat operator-(const QMat& A, const QMat& B) {
  if (A.rows != B.rows || A.cols != B.cols) throw std::invalid_argument("QMat sub: dim mismatch");
  QMat C = A;
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] -= B.a[i];
  return C;
}

QMat QMat::scaled(const Rat& c) const {
  QMat C = *this;
  for (auto& x : C.a) x *= c;
  return C;
}

std::vector<Rat> QMat::apply(const std::vector<Rat>& x) const {
  if (static_cast<int>(x.size()) != cols) throw std::invalid_argument("QMat apply: dim mismatch");
  std::vector<Rat> y(rows, Rat(0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const Rat& v = at(i, j);
      if (!acaf::is_zero(v) && !acaf::is_zero(x[j])) y[i] += v * x[j];
    }
  return y;
}

QMat QMat::cols_subset(const std::vector<int>& idx) const {
  QMat m(rows, static_cast<int>(idx.size()));
  for (int i = 0; i < rows; ++i)
    for (size_t j = 0; j < idx.size(); ++j) m.at(i, static_cast<int>(j)) = at(i, idx[j]);
  return m;
}

QMat QMat::rows_subset(const std::vector<int>& idx) const {
  QMat m(static_cast<int>(idx.size()), cols);
  for (size_t i = 0; i < idx.size(); ++i)
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = at(idx[i], j);
  return m;
}

QMat QMat::hstack(const QMat& A, const QMat& B) {
  if (A.rows != B.rows) throw std::invalid_argument("hstack: row mismatch");
  QMat C(A.rows, A.cols + B.cols);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
    for (int j = 0; j < B.cols; ++j) C.at(i, A.cols + j) = B.at(i, j);
  }
  return C;
}

QMat QMat::vstack(const QMat& A, const QMat& B) {
  if (A.cols != B.cols) throw std::invalid_argument("vstack: col mismatch");
  QMat C(A.rows + B.rows, A.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
  for (int i = 0; i < B.rows; ++i)
    for (int j = 0; j < A.cols; ++j) C.at(A.rows + i, j) = B.at(i, j);
  return C;
}

QMat QMat::from_columns(const std::vector<std::vector<Rat>>& cs) {
  if (cs.empty()) return QMat(0, 0);
  QMat m(static_cast<int>(cs[0].size()), static_cast<int>(cs.size()));
  for (size_t j = 0; j < cs.size(); ++j)
    for (size_t i = 0; i < cs[j].size(); ++i)
      m.at(static_cast<int>(i), static_cast<int>(j)) = cs[j][i];
  return m;
}

std::vector<Rat> QMat::column(int j) const {
  std::vector<Rat> c(rows);
  for (int i = 0; i < rows; ++i) c[i] = at(i, j);
  return c;
}

namespace {

// pivot preference: exact +-1 first, then fewest limbs
size_t entry_weight(const Rat& r) {
  if (r == 1 || r == -1) return 0;
  return mpz_size(r.get_num_mpz_t()) + mpz_size(r.get_den_mpz_t());
}

}  // namespace

std::vector<int> rref(QMat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int best = -1;
    size_t bestw = 0;
    for (int i = r; i < m.rows; ++i) {
      const Rat& v = m.at(i, c);
      if (is_zero(v)) continue;
      size_t w = entry_weight(v);
      if (best < 0 || w < bestw) {
        best = i;
        bestw = w;
        if (w == 0) break;
      }
    }
    if (best < 0) continue;
    if (best != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(best, j), m.at(r, j));
    Rat inv = 1 / m.at(r, c);
    for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      const Rat f = m.at(i, c);
      if (is_zero(f)) continue;
      for (int j = c; j < m.cols; ++j)
        if (!is_zero(m.at(r, j))) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(QMat m) { return static_cast<int>(rref(m).size()); }

QMat nullspace(const QMat& m_in) {
  QMat m = m_in;
  std::vector<int> piv = rref(m);
  std::vector<bool> is_piv(m.cols, false);
  for (int p : piv) is_piv[p] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols; ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  QMat ns(m.cols, static_cast<int>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    ns.at(fc, static_cast<int>(k)) = 1;
    for (size_t r = 0; r < piv.size(); ++r)
      ns.at(piv[r], static_cast<int>(k)) = -m.at(static_cast<int>(r), fc);
  }
  return ns;
}

QMat column_space(const QMat& m_in) {
  QMat m = m_in;
  std::vector<int> piv = rref(m);
  return m_in.cols_subset(piv);
}

QMat inverse(const QMat& m_in) {
  if (m_in.rows != m_in.cols) throw std::invalid_argument("inverse: not square");
  QMat aug = QMat::hstack(m_in, QMat::identity(m_in.rows));
  std::vector<int> piv = rref(aug);
  if (static_cast<int>(piv.size()) != m_in.rows || piv.back() != m_in.rows - 1)
    throw std::domain_error("inverse: singular matrix");
  QMat inv(m_in.rows, m_in.cols);
  for (int i = 0; i < m_in.rows; ++i)
    for (int j = 0; j < m_in.cols; ++j) inv.at(i, j) = aug.at(i, m_in.cols + j);
  return inv;
}

std::optional<std::vector<Rat>> solve(const QMat& A, const std::vector<Rat>& b) {
  QMat aug = QMat::hstack(A, QMat::from_columns({b}));
  std::vector<int> piv = rref(aug);
  std::vector<Rat> x(A.cols, Rat(0));
  for (size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == A.cols) return std::nullopt;  // pivot in the RHS column
    x[piv[r]] = aug.at(static_cast<int>(r), A.cols);
  }
  return x;
}

LinSolver::LinSolver(const QMat& A) : A_(A), k_(A.cols) {
  QMat t = A.transpose();
  std::vector<int> piv = rref(t);  // pivot columns of A^T = independent rows of A
  if (static_cast<int>(piv.size()) != k_)
    throw std::domain_error("LinSolver: matrix does not have full column rank");
  pivot_rows_ = piv;
  binv_ = inverse(A.rows_subset(pivot_rows_));
}

QMat LinSolver::left_inverse() const {
  QMat L(k_, A_.rows);
  for (int i = 0; i < k_; ++i)
    for (size_t j = 0; j < pivot_rows_.size(); ++j)
      L.at(i, pivot_rows_[j]) = binv_.at(i, static_cast<int>(j));
  return L;
}

std::optional<std::vector<Rat>> LinSolver::solve(const std::vector<Rat>& b) const {
  std::vector<Rat> br(pivot_rows_.size());
  for (size_t i = 0; i < pivot_rows_.size(); ++i) br[i] = b[pivot_rows_[i]];
  std::vector<Rat> x = binv_.apply(br);
  // full residual check: b must be in the column space
  std::vector<Rat> r = A_.apply(x);
  for (int i = 0; i < A_.rows; ++i)
    if (r[i] != b[i]) return std::nullopt;
  return x;
}

namespace {

// dense univariate polynomial over Q, coefficient vector low-to-high
using QPoly = std::vector<Rat>;

void qp_trim(QPoly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// division with remainder, divisor monic-izable
void qp_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  qp_trim(r);
  q.assign(a.size(), Rat(0));
  QPoly bb = b;
  qp_trim(bb);
  if (bb.empty()) throw std::domain_error("qp_divmod: division by zero");
  while (r.size() >= bb.size()) {
    Rat f = r.back() / bb.back();
    size_t shift = r.size() - bb.size();
    q[shift] += f;
    for (size_t i = 0; i < bb.size(); ++i) r[shift + i] -= f * bb[i];
    qp_trim(r);
  }
  qp_trim(q);
}

QPoly qp_gcd(QPoly a, QPoly b) {
  qp_trim(a);
  qp_trim(b);
  while (!b.empty()) {
    QPoly q, r;
    qp_divmod(a, b, q, r);
    a = b;
    b = r;
  }
  if (!a.empty() && a.back() != 1) {
    Rat inv = 1 / a.back();
    for (auto& c : a) c *= inv;
  }
  return a;
}

QPoly qp_lcm(const QPoly& a, const QPoly& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  QPoly g = qp_gcd(a, b);
  QPoly q, r;
  qp_divmod(a, g, q, r);
  QPoly l = qp_mul(q, b);
  if (!l.empty() && l.back() != 1) {
    Rat inv = 1 / l.back();
    for (auto& c : l) c *= inv;
  }
  return l;
}

// monic annihilator polynomial of v under M (minimal poly of M restricted
// to the Krylov space of v)
QPoly krylov_annihilator(const QMat& M, const std::vector<Rat>& v) {
  std::vector<std::vector<Rat>> kry;
  kry.push_back(v);
  for (;;) {
    QMat K = QMat::from_columns(kry);
    QMat ns = nullspace(K);
    if (ns.cols > 0) {
      // by construction only the last vector can be dependent; nullspace of
      // the full Krylov matrix has dim 1 with last coefficient nonzero
      std::vector<Rat> c = ns.column(ns.cols - 1);
      Rat lead = c.back();
      QPoly p(c.size());
      for (size_t i = 0; i < c.size(); ++i) p[i] = c[i] / lead;
      return p;
    }
    kry.push_back(M.apply(kry.back()));
  }
}

}  // namespace

std::vector<Rat> minimal_polynomial(const QMat& M) {
  if (M.rows != M.cols) throw std::invalid_argument("minimal_polynomial: not square");
  int n = M.rows;
  if (n == 0) return {Rat(1)};
  QPoly m;
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> e(n, Rat(0));
    e[i] = 1;
    m = qp_lcm(m, krylov_annihilator(M, e));
    if (static_cast<int>(m.size()) == n + 1) break;  // cannot exceed degree n
  }
  return m;
}

EigenDecomposition eigen_semisimple(const QMat& M) {
  QPoly m = minimal_polynomial(M);
  // factor into rational linear factors by rational root search
  QPoly rem = m;
  std::vector<Rat> roots;
  while (rem.size() > 1) {
    // candidate roots p/q: p | constant term, q | leading coefficient of the
    // integer-scaled remainder
    mpz_class rden(1);
    for (const auto& c : rem) rden = rden * c.get_den() / gcd(mpz_class(rden), c.get_den());
    std::vector<mpz_class> rc;
    for (const auto& c : rem) rc.push_back(c.get_num() * (rden / c.get_den()));
    size_t lo = 0;
    while (lo < rc.size() && rc[lo] == 0) ++lo;
    if (lo > 0) {  // x = 0 root
      roots.push_back(Rat(0));
      QPoly q(rem.begin() + 1, rem.end());
      rem = q;
      continue;
    }
    mpz_class a0 = abs(rc.front());
    mpz_class an = abs(rc.back());
    bool found = false;
    for (mpz_class p(1); p <= a0 && !found; ++p) {
      if (a0 % p != 0) continue;
      for (mpz_class q(1); q <= an && !found; ++q) {
        if (an % q != 0) continue;
        for (int s : {1, -1}) {
          Rat cand(s * p, q);
          cand.canonicalize();
          // evaluate remainder at cand
          Rat val(0);
          for (size_t i = rem.size(); i-- > 0;) val = val * cand + rem[i];
          if (is_zero(val)) {
            roots.push_back(cand);
            QPoly lin{-cand, Rat(1)};
            QPoly q2, r2;
            qp_divmod(rem, lin, q2, r2);
            if (!r2.empty()) throw std::domain_error("eigen: division failure");
            rem = q2;
            found = true;
            break;
          }
        }
      }
    }
    if (!found)
      throw std::domain_error("eigen_semisimple: minimal polynomial has a non-rational factor");
  }
  // distinctness (semisimplicity over Q with rational spectrum)
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i] == roots[j])
        throw std::domain_error("eigen_semisimple: repeated root in minimal polynomial");

  EigenDecomposition ed;
  ed.values = roots;
  // Lagrange spectral projectors P_i = prod_{j != i} (M - r_j) / (r_i - r_j)
  for (size_t i = 0; i < roots.size(); ++i) {
    QMat P = QMat::identity(M.rows);
    for (size_t j = 0; j < roots.size(); ++j) {
      if (j == i) continue;
      QMat f = M - QMat::identity(M.rows).scaled(roots[j]);
      P = P * f.scaled(1 / (roots[i] - roots[j]));
    }
    ed.projectors.push_back(P);
  }
  return ed;
}

}  // namespace acaf

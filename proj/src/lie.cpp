#include "acaf/lie.hpp"

#include <stdexcept>

namespace acaf {

namespace {

// eps as an n x n rational matrix (same entries as J_lower)
QMat eps_matrix(const Symplectic& J) {
  int n = J.n;
  QMat e(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) e.at(a, b) = J.lower.at({a, b});
  return e;
}

}  // namespace

GradedSp::GradedSp(int n) : n_(n), J_(make_standard_J(n)) {
  if (n < 6 || n % 2 != 0)
    throw std::invalid_argument("GradedSp: n must be even and >= 6");
  int m = n + 2;
  omega_ = QMat(m, m);
  omega_.at(0, m - 1) = 1;
  omega_.at(m - 1, 0) = -1;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) omega_.at(1 + a, 1 + b) = J_.lower.at({a, b});

  QMat eps = eps_matrix(J_);

  // grade -2
  {
    QMat M(m, m);
    M.at(m - 1, 0) = 1;
    basis_.push_back(M);
    grade_.push_back(-2);
  }
  // grade -1: left column X = e_d, bottom row eps X
  for (int d = 0; d < n; ++d) {
    QMat M(m, m);
    M.at(1 + d, 0) = 1;
    for (int c = 0; c < n; ++c) M.at(m - 1, 1 + c) = eps.at(c, d);
    basis_.push_back(M);
    grade_.push_back(-1);
  }
  // grade 0: scalar part diag(1, 0, -1)
  {
    QMat M(m, m);
    M.at(0, 0) = 1;
    M.at(m - 1, m - 1) = -1;
    basis_.push_back(M);
    grade_.push_back(0);
  }
  // grade 0: sp(n) block, basis -eps (e_c e_d^T + e_d e_c^T) for c <= d
  for (int c = 0; c < n; ++c)
    for (int d = c; d < n; ++d) {
      QMat A(n, n);
      for (int r = 0; r < n; ++r) {
        A.at(r, d) -= eps.at(r, c);
        A.at(r, c) -= eps.at(r, d);
      }
      QMat M(m, m);
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) M.at(1 + r, 1 + s) = A.at(r, s);
      basis_.push_back(M);
      grade_.push_back(0);
    }
  // grade +1: top row Y = e_c^T, right column eps Y
  for (int c = 0; c < n; ++c) {
    QMat M(m, m);
    M.at(0, 1 + c) = 1;
    for (int d = 0; d < n; ++d) M.at(1 + d, m - 1) = eps.at(d, c);
    basis_.push_back(M);
    grade_.push_back(1);
  }
  // grade +2
  {
    QMat M(m, m);
    M.at(0, m - 1) = 1;
    basis_.push_back(M);
    grade_.push_back(2);
  }

  if (dim() != (n + 2) * (n + 3) / 2) throw std::logic_error("GradedSp: dimension mismatch");
  // every basis matrix preserves omega infinitesimally
  for (const auto& M : basis_) {
    QMat c = M.transpose() * omega_ + omega_ * M;
    if (!c.is_zero()) throw std::logic_error("GradedSp: basis element not in sp(n+2)");
  }
}

int GradedSp::grade_begin(int g) const {
  for (int i = 0; i < dim(); ++i)
    if (grade_[i] == g) return i;
  return dim();
}

int GradedSp::grade_count(int g) const {
  int c = 0;
  for (int i = 0; i < dim(); ++i)
    if (grade_[i] == g) ++c;
  return c;
}

QMat GradedSp::elt_g2m(const Rat& x) const { return basis_[0].scaled(x); }

QMat GradedSp::elt_lm(const std::vector<Rat>& X) const {
  QMat M(ambient(), ambient());
  for (int d = 0; d < n_; ++d)
    if (!is_zero(X[d])) M = M + basis_[1 + d].scaled(X[d]);
  return M;
}

QMat GradedSp::elt_p0(const Rat& a, const QMat& A) const {
  QMat M(ambient(), ambient());
  M.at(0, 0) = a;
  M.at(ambient() - 1, ambient() - 1) = -a;
  for (int r = 0; r < n_; ++r)
    for (int s = 0; s < n_; ++s) M.at(1 + r, 1 + s) = A.at(r, s);
  if (!in_algebra(M)) throw std::invalid_argument("elt_p0: A is not in sp(n)");
  return M;
}

QMat GradedSp::elt_p1(const std::vector<Rat>& Y) const {
  QMat M(ambient(), ambient());
  int base = grade_begin(1);
  for (int c = 0; c < n_; ++c)
    if (!is_zero(Y[c])) M = M + basis_[base + c].scaled(Y[c]);
  return M;
}

QMat GradedSp::elt_p2(const Rat& z) const { return basis_[grade_begin(2)].scaled(z); }

bool GradedSp::in_algebra(const QMat& M) const {
  QMat c = M.transpose() * omega_ + omega_ * M;
  return c.is_zero();
}

std::vector<Rat> GradedSp::coords(const QMat& M) const {
  if (!in_algebra(M)) throw std::invalid_argument("coords: matrix not in sp(n+2)");
  std::vector<Rat> c(dim(), Rat(0));
  int m = ambient();
  c[0] = M.at(m - 1, 0);                                   // g_{-2}
  for (int d = 0; d < n_; ++d) c[1 + d] = M.at(1 + d, 0);  // l_{-1}
  c[grade_begin(0)] = M.at(0, 0);                          // p0 scalar
  // p0 sp(n) block: with s := eps A, the basis element of the pair (c,d)
  // satisfies eps * basis = e_c e_d^T + e_d e_c^T
  {
    QMat eps = eps_matrix(J_);
    QMat A(n_, n_);
    for (int r = 0; r < n_; ++r)
      for (int s = 0; s < n_; ++s) A.at(r, s) = M.at(1 + r, 1 + s);
    QMat s = eps * A;
    int idx = grade_begin(0) + 1;
    for (int cc = 0; cc < n_; ++cc)
      for (int dd = cc; dd < n_; ++dd) {
        c[idx] = (cc == dd) ? s.at(cc, cc) / 2 : s.at(cc, dd);
        ++idx;
      }
  }
  int p1 = grade_begin(1);
  for (int cc = 0; cc < n_; ++cc) c[p1 + cc] = M.at(0, 1 + cc);
  c[grade_begin(2)] = M.at(0, m - 1);
  if (!(from_coords(c) == M)) throw std::invalid_argument("coords: reconstruction mismatch");
  return c;
}

QMat GradedSp::from_coords(const std::vector<Rat>& c) const {
  QMat M(ambient(), ambient());
  for (int i = 0; i < dim(); ++i)
    if (!is_zero(c[i])) M = M + basis_[i].scaled(c[i]);
  return M;
}

QMat GradedSp::grading_element() const {
  QMat E(ambient(), ambient());
  E.at(0, 0) = 1;
  E.at(ambient() - 1, ambient() - 1) = -1;
  return E;
}

Rat GradedSp::killing(const QMat& A, const QMat& B) const {
  QMat P = A * B;
  Rat tr(0);
  for (int i = 0; i < P.rows; ++i) tr += P.at(i, i);
  return Rat(n_ + 4) * tr;
}

QMat GradedSp::killing_matrix() const {
  QMat K(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    for (int j = i; j < dim(); ++j) K.at(i, j) = K.at(j, i) = killing(basis_[i], basis_[j]);
  return K;
}

Rat GradedSp::dual_bracket(const std::vector<Rat>& X, const std::vector<Rat>& Y) const {
  QMat br = bracket(elt_lm(X), elt_lm(Y));
  return br.at(ambient() - 1, 0);
}

bool GradedSp::is_csp(const QMat& M) const {
  Rat tr(0);
  for (int i = 0; i < n_; ++i) tr += M.at(i, i);
  QMat M0 = M;
  for (int i = 0; i < n_; ++i) M0.at(i, i) -= tr / n_;
  QMat eps = eps_matrix(J_);
  QMat c = M0.transpose() * eps + eps * M0;
  return c.is_zero();
}

QMat GradedSp::embed_csp(const QMat& M) const {
  if (!is_csp(M)) throw std::invalid_argument("embed_csp: not a csp(n) endomorphism");
  Rat tr(0);
  for (int i = 0; i < n_; ++i) tr += M.at(i, i);
  // ad(diag(a, A, -a)) acts on l_{-1} as X -> (A - a) X; choose a = -tr(M)/n
  // so that A = M + a id is traceless (hence in sp) and A - a = M.
  Rat a = -tr / n_;
  QMat A = M;
  for (int i = 0; i < n_; ++i) A.at(i, i) += a;
  return elt_p0(a, A);
}

QMat RepAction::act(const GradedSp& g, const QMat& X) const {
  std::vector<Rat> c = g.coords(X);
  QMat out(dim, dim);
  for (int i = 0; i < g.dim(); ++i)
    if (!is_zero(c[i])) out = out + action[i].scaled(c[i]);
  return out;
}

std::vector<Rat> RepAction::apply(const GradedSp& g, const QMat& X,
                                  const std::vector<Rat>& v) const {
  return act(g, X).apply(v);
}

RepAction standard_rep(const GradedSp& g) {
  RepAction r;
  r.kind = RepAction::Kind::standard;
  r.dim = g.ambient();
  r.action = g.basis();
  return r;
}

RepAction adjoint_rep(const GradedSp& g) {
  RepAction r;
  r.kind = RepAction::Kind::adjoint;
  r.dim = g.dim();
  for (int i = 0; i < g.dim(); ++i) {
    QMat ad(g.dim(), g.dim());
    for (int j = 0; j < g.dim(); ++j) {
      std::vector<Rat> c = g.coords(g.bracket(g.basis(i), g.basis(j)));
      for (int k = 0; k < g.dim(); ++k) ad.at(k, j) = c[k];
    }
    r.action.push_back(ad);
  }
  return r;
}

RepAction density_rep(const GradedSp& g, int w) {
  RepAction r;
  r.kind = RepAction::Kind::density;
  r.w = w;
  r.dim = 1;
  for (int i = 0; i < g.dim(); ++i) {
    QMat a(1, 1);
    if (g.grade(i) == 0) {
      // -(w/n) tr of the adjoint action on l_{-1}
      Rat tr(0);
      for (int d = 0; d < g.n(); ++d) {
        QMat br = g.bracket(g.basis(i), g.basis(1 + d));
        tr += br.at(1 + d, 0);
      }
      a.at(0, 0) = Rat(-w) * tr / g.n();
    }
    r.action.push_back(a);
  }
  return r;
}

}  // namespace acaf

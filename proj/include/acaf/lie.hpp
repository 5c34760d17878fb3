#pragma once

#include <vector>

#include "acaf/matrix.hpp"
#include "acaf/tensor.hpp"

namespace acaf {

// Explicit matrix realization of sp(n+2,R) with its contact grading
//   g = g_{-2} + l_{-1} + p0 + p1 + p2,      l = l_{-1} + p0 + p1 + p2.
// Ambient indices: 0 | 1..n | n+1. The basis is ordered grading-degree-major
// (g_{-2}, l_{-1}, p0 scalar, p0 sp(n) pairs lexicographic, p1, p2), so all
// operator matrices downstream are reproducible bit-for-bit.
class GradedSp {
 public:
  explicit GradedSp(int n);

  int n() const { return n_; }
  int ambient() const { return n_ + 2; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<QMat>& basis() const { return basis_; }
  const QMat& basis(int i) const { return basis_[i]; }
  int grade(int i) const { return grade_[i]; }
  bool in_l(int i) const { return grade_[i] > -2; }
  const Symplectic& J() const { return J_; }
  const QMat& omega() const { return omega_; }  // ambient symplectic form

  // basis index ranges per grade
  int grade_begin(int g) const;
  int grade_count(int g) const;

  // canonical elements
  QMat elt_g2m(const Rat& x) const;                     // grade -2
  QMat elt_lm(const std::vector<Rat>& X) const;         // grade -1, X in R^n
  QMat elt_p0(const Rat& a, const QMat& A) const;       // A in sp(n)
  QMat elt_p1(const std::vector<Rat>& Y) const;         // grade +1, Y in (R^n)*
  QMat elt_p2(const Rat& z) const;                      // grade +2

  QMat bracket(const QMat& A, const QMat& B) const { return A * B - B * A; }

  // exact coordinates in the basis; throws if M is not in sp(n+2)
  std::vector<Rat> coords(const QMat& M) const;
  QMat from_coords(const std::vector<Rat>& c) const;
  bool in_algebra(const QMat& M) const;

  QMat grading_element() const;  // diag(1, 0, .., 0, -1)

  // Killing form kappa(X,Y) = (n+4) tr(XY) for sp(n+2,R)
  Rat killing(const QMat& A, const QMat& B) const;
  QMat killing_matrix() const;  // on the basis

  // {.,.}: pair of l_{-1} chart vectors -> coefficient on the g_{-2} basis
  // element; equals the honest bracket [elt_lm(X), elt_lm(Y)] read in g_{-2}
  Rat dual_bracket(const std::vector<Rat>& X, const std::vector<Rat>& Y) const;

  // chart csp(n) endomorphisms <-> p0: embed_csp(M) is the unique p0 element
  // whose adjoint action on l_{-1} = TM is M; throws if M is not in csp(n)
  bool is_csp(const QMat& M) const;
  QMat embed_csp(const QMat& M) const;

 private:
  int n_;
  Symplectic J_;
  QMat omega_;
  std::vector<QMat> basis_;
  std::vector<int> grade_;
};

// Representation data: one action matrix per algebra basis element.
struct RepAction {
  enum class Kind { standard, adjoint, density };
  Kind kind;
  int w = 0;    // density weight (density kind only)
  int dim = 0;  // module dimension
  std::vector<QMat> action;

  QMat act(const GradedSp& g, const QMat& X) const;  // dtau(X) for X in sp(n+2)
  std::vector<Rat> apply(const GradedSp& g, const QMat& X, const std::vector<Rat>& v) const;
};

RepAction standard_rep(const GradedSp& g);
RepAction adjoint_rep(const GradedSp& g);
RepAction density_rep(const GradedSp& g, int w);

}  // namespace acaf

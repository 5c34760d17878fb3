#pragma once

#include <map>
#include <vector>
#include <string>

#include "acaf/rational.hpp"
#include "acaf/prng.hpp"

namespace acaf {

// Multivariate polynomial over Rat in a fixed number of chart variables.
// Terms are kept in a sorted exponent-vector -> coefficient map with no
// zero coefficients, so equality is structural.
class Poly {
 public:
  using Expo = std::vector<int>;

  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}
  Poly(int nvars, const Rat& c);  // constant polynomial

  static Poly var(int nvars, int i, const Rat& coeff = Rat(1));
  static Poly monomial(int nvars, const Expo& e, const Rat& c);

  int nvars() const { return nvars_; }
  bool zero() const { return terms_.empty(); }
  int degree() const;  // total degree, -1 for the zero polynomial
  const std::map<Expo, Rat>& terms() const { return terms_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const;
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& c, Poly p) { return p.scaled(c); }
  Poly scaled(const Rat& c) const;
  // zero polynomials compare equal regardless of their variable count, so a
  // default-constructed Poly is a universal zero
  bool operator==(const Poly& o) const {
    if (terms_.empty() && o.terms_.empty()) return true;
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  Poly derivative(int var) const;
  Rat eval(const std::vector<Rat>& x) const;
  Rat constant_term() const;

  // coefficient of an exponent vector (zero if absent)
  Rat coeff(const Expo& e) const;
  void set_coeff(const Expo& e, const Rat& c);

  std::string str() const;  // e.g. "1/2 + -3 x1^2 x3"

  static Poly random(int nvars, int maxdeg, SplitMix64& rng, int nterms = 3);

 private:
  int nvars_;
  std::map<Expo, Rat> terms_;
};

}  // namespace acaf

#include "acaf/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace acaf {

Poly::Poly(int nvars, const Rat& c) : nvars_(nvars) {
  if (!is_zero(c)) terms_[Expo(nvars, 0)] = c;
}

Poly Poly::var(int nvars, int i, const Rat& coeff) {
  Expo e(nvars, 0);
  e.at(i) = 1;
  return monomial(nvars, e, coeff);
}

Poly Poly::monomial(int nvars, const Expo& e, const Rat& c) {
  if (static_cast<int>(e.size()) != nvars)
    throw std::invalid_argument("monomial: exponent length mismatch");
  Poly p(nvars);
  if (!is_zero(c)) p.terms_[e] = c;
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += o.operator-(); }

Poly Poly::operator-() const {
  Poly p(nvars_);
  for (const auto& [e, c] : terms_) p.terms_[e] = -c;
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly p(a.nvars_ ? a.nvars_ : b.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Poly::Expo e(ea);
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      auto it = p.terms_.find(e);
      if (it == p.terms_.end()) {
        Rat c = ca * cb;
        if (!is_zero(c)) p.terms_[e] = c;
      } else {
        it->second += ca * cb;
        if (is_zero(it->second)) p.terms_.erase(it);
      }
    }
  return p;
}

Poly Poly::scaled(const Rat& c) const {
  Poly p(nvars_);
  if (is_zero(c)) return p;
  for (const auto& [e, v] : terms_) p.terms_[e] = c * v;
  return p;
}

Poly Poly::derivative(int var) const {
  Poly p(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Expo d(e);
    d[var] -= 1;
    p.terms_[d] = c * e[var];
  }
  return p;
}

Rat Poly::eval(const std::vector<Rat>& x) const {
  Rat out(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    out += t;
  }
  return out;
}

Rat Poly::constant_term() const { return coeff(Expo(nvars_, 0)); }

Rat Poly::coeff(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::set_coeff(const Expo& e, const Rat& c) {
  if (is_zero(c))
    terms_.erase(e);
  else
    terms_[e] = c;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << " x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

Poly Poly::random(int nvars, int maxdeg, SplitMix64& rng, int nterms) {
  Poly p(nvars);
  for (int t = 0; t < nterms; ++t) {
    Expo e(nvars, 0);
    int deg = static_cast<int>(rng.below(static_cast<uint64_t>(maxdeg + 1)));
    for (int d = 0; d < deg; ++d) e[rng.below(static_cast<uint64_t>(nvars))] += 1;
    p += monomial(nvars, e, rng.small_rat());
  }
  return p;
}

}  // namespace acaf

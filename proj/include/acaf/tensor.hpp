#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "acaf/matrix.hpp"
#include "acaf/poly.hpp"
#include "acaf/prng.hpp"
#include "acaf/rational.hpp"

namespace acaf {

enum class Var { lo, up };

inline bool sc_zero(const Rat& r) { return is_zero(r); }
inline bool sc_zero(const Poly& p) { return p.zero(); }
inline Rat sc_scale(const Rat& a, const Rat& c) { return a * c; }
inline Poly sc_scale(const Poly& a, const Rat& c) { return a.scaled(c); }

// Dense tensor over a flat chart: ordered slot variances, an integer
// conformal weight, and n^rank scalar components (row-major).
template <typename S>
struct Tensor {
  int n = 0;
  std::vector<Var> var;
  int weight = 0;
  std::vector<S> c;

  Tensor() = default;
  Tensor(int n_, std::vector<Var> var_, int weight_)
      : n(n_), var(std::move(var_)), weight(weight_) {
    size_t total = 1;
    for (size_t k = 0; k < var.size(); ++k) total *= static_cast<size_t>(n);
    c.assign(total, S());
  }

  int rank() const { return static_cast<int>(var.size()); }
  size_t size() const { return c.size(); }

  size_t flat(const std::vector<int>& idx) const {
    size_t f = 0;
    for (size_t k = 0; k < idx.size(); ++k) f = f * n + idx[k];
    return f;
  }
  std::vector<int> unflat(size_t f) const {
    std::vector<int> idx(rank());
    for (int k = rank() - 1; k >= 0; --k) {
      idx[k] = static_cast<int>(f % n);
      f /= n;
    }
    return idx;
  }
  S& at(const std::vector<int>& idx) { return c[flat(idx)]; }
  const S& at(const std::vector<int>& idx) const { return c[flat(idx)]; }

  bool is_zero() const {
    for (const auto& x : c)
      if (!sc_zero(x)) return false;
    return true;
  }

  bool same_shape(const Tensor& o) const {
    return n == o.n && var == o.var && weight == o.weight;
  }
  bool operator==(const Tensor& o) const { return same_shape(o) && c == o.c; }

  Tensor& operator+=(const Tensor& o) {
    if (!same_shape(o)) throw std::invalid_argument("tensor add: shape mismatch");
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    if (!same_shape(o)) throw std::invalid_argument("tensor sub: shape mismatch");
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  Tensor operator-() const {
    Tensor t = *this;
    for (auto& x : t.c) x = sc_scale(x, Rat(-1));
    return t;
  }
  Tensor scaled(const Rat& r) const {
    Tensor t = *this;
    for (auto& x : t.c) x = sc_scale(x, r);
    return t;
  }

  // gather permutation: result slot i takes the content of slot perm[i]
  Tensor permuted(const std::vector<int>& perm) const {
    Tensor t(n, var, weight);
    for (size_t i = 0; i < perm.size(); ++i) t.var[i] = var[perm[i]];
    std::vector<int> src(rank());
    for (size_t f = 0; f < c.size(); ++f) {
      std::vector<int> dst = unflat(f);
      for (size_t i = 0; i < perm.size(); ++i) src[perm[i]] = dst[i];
      t.c[f] = c[flat(src)];
    }
    return t;
  }
};

using RatTensor = Tensor<Rat>;
using PolyTensor = Tensor<Poly>;

template <typename S>
Tensor<S> tensor_product(const Tensor<S>& a, const Tensor<S>& b) {
  if (a.n != b.n) throw std::invalid_argument("tensor_product: dim mismatch");
  std::vector<Var> var = a.var;
  var.insert(var.end(), b.var.begin(), b.var.end());
  Tensor<S> t(a.n, var, a.weight + b.weight);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (sc_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      if (sc_zero(b.c[j])) continue;
      t.c[i * b.c.size() + j] += a.c[i] * b.c[j];
    }
  }
  return t;
}

// Plain delta-pairing of two slots of one tensor (no variance enforcement;
// use contract_trace for the checked public operation).
template <typename S>
Tensor<S> contract(const Tensor<S>& t, int sa, int sb) {
  if (sa == sb) throw std::invalid_argument("contract: identical slots");
  if (sa > sb) std::swap(sa, sb);
  std::vector<Var> var;
  for (int k = 0; k < t.rank(); ++k)
    if (k != sa && k != sb) var.push_back(t.var[k]);
  Tensor<S> out(t.n, var, t.weight);
  std::vector<int> idx(t.rank());
  for (size_t f = 0; f < out.c.size(); ++f) {
    std::vector<int> oidx = out.unflat(f);
    int p = 0;
    for (int k = 0; k < t.rank(); ++k)
      if (k != sa && k != sb) idx[k] = oidx[p++];
    S sum{};
    for (int i = 0; i < t.n; ++i) {
      idx[sa] = idx[sb] = i;
      sum += t.at(idx);
    }
    out.c[f] = sum;
  }
  return out;
}

// rank drops by 2, weight unchanged; one slot must be upper, one lower
template <typename S>
Tensor<S> contract_trace(const Tensor<S>& t, int upper_slot, int lower_slot) {
  if (t.var.at(upper_slot) != Var::up || t.var.at(lower_slot) != Var::lo)
    throw std::invalid_argument("contract_trace: slots must be upper/lower");
  return contract(t, upper_slot, lower_slot);
}

// Product with a single contraction between slot sa of a and slot sb of b.
template <typename S>
Tensor<S> contract_mul(const Tensor<S>& a, int sa, const Tensor<S>& b, int sb) {
  if (a.n != b.n) throw std::invalid_argument("contract_mul: dim mismatch");
  std::vector<Var> var;
  for (int k = 0; k < a.rank(); ++k)
    if (k != sa) var.push_back(a.var[k]);
  for (int k = 0; k < b.rank(); ++k)
    if (k != sb) var.push_back(b.var[k]);
  Tensor<S> out(a.n, var, a.weight + b.weight);
  std::vector<int> ia(a.rank()), ib(b.rank());
  for (size_t f = 0; f < out.c.size(); ++f) {
    std::vector<int> oidx = out.unflat(f);
    int p = 0;
    for (int k = 0; k < a.rank(); ++k)
      if (k != sa) ia[k] = oidx[p++];
    for (int k = 0; k < b.rank(); ++k)
      if (k != sb) ib[k] = oidx[p++];
    S sum{};
    for (int i = 0; i < a.n; ++i) {
      ia[sa] = i;
      ib[sb] = i;
      if (!sc_zero(a.at(ia)) && !sc_zero(b.at(ib))) sum += a.at(ia) * b.at(ib);
    }
    out.c[f] = sum;
  }
  return out;
}

// The fixed symplectic pair: J_lower carries weight -2 and J_upper weight +2,
// with J_{ab} J^{bd} = -delta_a^d entry-wise.
struct Symplectic {
  int n = 0;
  RatTensor lower;  // J_{ab}
  RatTensor upper;  // J^{bc}
  PolyTensor lower_p, upper_p;  // the same entries as constant polynomials
};

Symplectic make_standard_J(int n);

// Contract slot `pos` of t against slot `jslot` of the rank-2 tensor j;
// the other slot of j becomes slot pos of the result. Weight adds.
template <typename S, typename JT>
Tensor<S> contract_j(const Tensor<S>& t, int pos, const JT& j, int jslot);

template <typename S>
Tensor<S> contract_j(const Tensor<S>& t, int pos, const Tensor<S>& j, int jslot) {
  if (j.rank() != 2) throw std::invalid_argument("contract_j: j must have rank 2");
  int jfree = 1 - jslot;
  Tensor<S> out(t.n, t.var, t.weight + j.weight);
  out.var[pos] = j.var[jfree];
  std::vector<int> idx(t.rank()), jidx(2);
  for (size_t f = 0; f < out.c.size(); ++f) {
    idx = out.unflat(f);
    jidx[jfree] = idx[pos];
    S sum{};
    for (int i = 0; i < t.n; ++i) {
      idx[pos] = i;
      jidx[jslot] = i;
      if (!sc_zero(t.at(idx)) && !sc_zero(j.at(jidx))) sum += t.at(idx) * j.at(jidx);
    }
    out.c[f] = sum;
  }
  return out;
}

inline RatTensor contract_j(const RatTensor& t, int pos, const RatTensor& j, int jslot) {
  return contract_j<Rat>(t, pos, j, jslot);
}
PolyTensor contract_j(const PolyTensor& t, int pos, const RatTensor& j, int jslot);

enum class Adjust { raise, lower };

// Index adjustment with the library convention: both directions contract the
// tensor slot against the FIRST index of the corresponding J tensor, so that
// raise(lower(t)) = lower(raise(t)) = -t. Weight moves by +-2 via J's weight.
template <typename S>
Tensor<S> adjust_index(const Tensor<S>& t, int pos, Adjust dir, const Symplectic& J);

// Printed-display raising: X^d = J^{db} X_b (tensor slot against the SECOND
// index of J_upper). Formula transcriptions from the literature use this.
template <typename S>
Tensor<S> raise_disp(const Tensor<S>& t, int pos, const Symplectic& J);

// Printed-display lowering: X_b = X^a J_{ab}. Identical to the adjust_index
// lowering; provided for symmetry at transcription sites.
template <typename S>
Tensor<S> lower_disp(const Tensor<S>& t, int pos, const Symplectic& J);

enum class SymMode { sym, antisym, trace_free };

// 1/k!-normalized (anti)symmetrization over the given slots; trace_free
// removes every J-trace within the slot group (slots must share variance,
// and for trace_free the group must already be totally symmetric or totally
// antisymmetric — pass the class via `antisym_class`).
template <typename S>
Tensor<S> symmetrize(const Tensor<S>& t, const std::vector<int>& slots, bool antisym);

template <typename S>
Tensor<S> trace_free_project(const Tensor<S>& t, const std::vector<int>& slots,
                             bool antisym_class, const Symplectic& J);

// spec-facing dispatcher
template <typename S>
Tensor<S> symmetrize_project(const Tensor<S>& t, const std::vector<int>& slots, SymMode mode,
                             const Symplectic& J) {
  for (int s : slots)
    if (t.var.at(s) != t.var.at(slots[0]))
      throw std::invalid_argument("symmetrize_project: mixed-variance slot set");
  switch (mode) {
    case SymMode::sym: return symmetrize(t, slots, false);
    case SymMode::antisym: return symmetrize(t, slots, true);
    case SymMode::trace_free: {
      // the declared class is detected from the input (exact check)
      Tensor<S> s = symmetrize(t, slots, false);
      Tensor<S> a = symmetrize(t, slots, true);
      if (s == t) return trace_free_project(t, slots, false, J);
      if (a == t) return trace_free_project(t, slots, true, J);
      throw std::invalid_argument("trace_free: slot group is neither symmetric nor antisymmetric");
    }
  }
  throw std::logic_error("unreachable");
}

PolyTensor to_poly(const RatTensor& t);
RatTensor random_tensor(int n, const std::vector<Var>& var, int weight, SplitMix64& rng);
PolyTensor random_poly_tensor(int n, const std::vector<Var>& var, int weight, int maxdeg,
                              SplitMix64& rng);

// --- template implementations ---

template <typename S>
Tensor<S> adjust_index(const Tensor<S>& t, int pos, Adjust dir, const Symplectic& J) {
  if (dir == Adjust::lower) {
    if (t.var.at(pos) != Var::up)
      throw std::invalid_argument("adjust_index: lowering a non-upper slot");
    return contract_j(t, pos, J.lower, 0);
  }
  if (t.var.at(pos) != Var::lo)
    throw std::invalid_argument("adjust_index: raising a non-lower slot");
  return contract_j(t, pos, J.upper, 0);
}

template <typename S>
Tensor<S> raise_disp(const Tensor<S>& t, int pos, const Symplectic& J) {
  if (t.var.at(pos) != Var::lo) throw std::invalid_argument("raise_disp: slot not lower");
  return contract_j(t, pos, J.upper, 1);
}

template <typename S>
Tensor<S> lower_disp(const Tensor<S>& t, int pos, const Symplectic& J) {
  if (t.var.at(pos) != Var::up) throw std::invalid_argument("lower_disp: slot not upper");
  return contract_j(t, pos, J.lower, 0);
}

namespace detail {
inline void permutations(int k, std::vector<std::vector<int>>& out) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
}
inline int perm_sign(std::vector<int> p) {
  int s = 1;
  for (size_t i = 0; i < p.size(); ++i)
    while (p[i] != static_cast<int>(i)) {
      std::swap(p[i], p[p[i]]);
      s = -s;
    }
  return s;
}
// trace-free projector matrix on the k-slot group space (n^k x n^k)
QMat trace_free_projector(int n, int k, bool antisym_class, const Symplectic& J,
                          const std::vector<Var>& group_var);
}  // namespace detail

template <typename S>
Tensor<S> symmetrize(const Tensor<S>& t, const std::vector<int>& slots, bool antisym) {
  int k = static_cast<int>(slots.size());
  std::vector<std::vector<int>> perms;
  detail::permutations(k, perms);
  Tensor<S> out(t.n, t.var, t.weight);
  std::vector<int> full(t.rank());
  std::iota(full.begin(), full.end(), 0);
  Rat norm = rat(1);
  for (int i = 2; i <= k; ++i) norm /= i;
  for (const auto& p : perms) {
    std::vector<int> perm = full;
    // result slot slots[i] reads from slot slots[p[i]]
    for (int i = 0; i < k; ++i) perm[slots[i]] = slots[p[i]];
    Tensor<S> g = t.permuted(perm);
    int sgn = antisym ? detail::perm_sign(p) : 1;
    out += g.scaled(sgn < 0 ? -norm : norm);
  }
  return out;
}

template <typename S>
Tensor<S> trace_free_project(const Tensor<S>& t, const std::vector<int>& slots,
                             bool antisym_class, const Symplectic& J) {
  int k = static_cast<int>(slots.size());
  if (k < 2) return t;
  QMat P = detail::trace_free_projector(t.n, k, antisym_class, J,
                                        {t.var.at(slots[0])});
  // apply P over the group slots, bystanders fixed
  Tensor<S> out(t.n, t.var, t.weight);
  size_t gsize = 1;
  for (int i = 0; i < k; ++i) gsize *= static_cast<size_t>(t.n);
  // enumerate bystander configurations
  std::vector<int> others;
  for (int s = 0; s < t.rank(); ++s)
    if (std::find(slots.begin(), slots.end(), s) == slots.end()) others.push_back(s);
  size_t osize = 1;
  for (size_t i = 0; i < others.size(); ++i) osize *= static_cast<size_t>(t.n);
  std::vector<int> idx(t.rank(), 0);
  for (size_t of = 0; of < osize; ++of) {
    size_t rem = of;
    for (size_t i = others.size(); i-- > 0;) {
      idx[others[i]] = static_cast<int>(rem % t.n);
      rem /= t.n;
    }
    // gather the group slice
    std::vector<S> slice(gsize);
    for (size_t gf = 0; gf < gsize; ++gf) {
      size_t g = gf;
      for (int i = k; i-- > 0;) {
        idx[slots[i]] = static_cast<int>(g % t.n);
        g /= t.n;
      }
      slice[gf] = t.at(idx);
    }
    for (size_t r = 0; r < gsize; ++r) {
      S acc{};
      for (size_t cc = 0; cc < gsize; ++cc) {
        const Rat& w = P.at(static_cast<int>(r), static_cast<int>(cc));
        if (!is_zero(w) && !sc_zero(slice[cc])) acc += sc_scale(slice[cc], w);
      }
      size_t g = r;
      for (int i = k; i-- > 0;) {
        idx[slots[i]] = static_cast<int>(g % t.n);
        g /= t.n;
      }
      out.at(idx) = acc;
    }
  }
  return out;
}

}  // namespace acaf

#include "acaf/tensor.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace acaf {

Symplectic make_standard_J(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("make_standard_J: n must be even and >= 2");
  Symplectic J;
  J.n = n;
  J.lower = RatTensor(n, {Var::lo, Var::lo}, -2);
  J.upper = RatTensor(n, {Var::up, Var::up}, +2);
  int m = n / 2;
  for (int i = 0; i < m; ++i) {
    J.lower.at({i, m + i}) = 1;
    J.lower.at({m + i, i}) = -1;
    J.upper.at({i, m + i}) = 1;
    J.upper.at({m + i, i}) = -1;
  }
  // construction-time check: J_{ab} J^{bd} = -delta_a^d
  for (int a = 0; a < n; ++a)
    for (int d = 0; d < n; ++d) {
      Rat s(0);
      for (int b = 0; b < n; ++b) s += J.lower.at({a, b}) * J.upper.at({b, d});
      if (s != (a == d ? Rat(-1) : Rat(0)))
        throw std::logic_error("make_standard_J: pairing invariant failed");
    }
  J.lower_p = to_poly(J.lower);
  J.upper_p = to_poly(J.upper);
  return J;
}

PolyTensor to_poly(const RatTensor& t) {
  PolyTensor p(t.n, t.var, t.weight);
  for (size_t i = 0; i < t.c.size(); ++i)
    if (!is_zero(t.c[i])) p.c[i] = Poly(t.n, t.c[i]);
  return p;
}

PolyTensor contract_j(const PolyTensor& t, int pos, const RatTensor& j, int jslot) {
  if (j.rank() != 2) throw std::invalid_argument("contract_j: j must have rank 2");
  int jfree = 1 - jslot;
  PolyTensor out(t.n, t.var, t.weight + j.weight);
  out.var[pos] = j.var[jfree];
  std::vector<int> idx(t.rank()), jidx(2);
  for (size_t f = 0; f < out.c.size(); ++f) {
    idx = out.unflat(f);
    jidx[jfree] = idx[pos];
    Poly sum;
    for (int i = 0; i < t.n; ++i) {
      idx[pos] = i;
      jidx[jslot] = i;
      const Rat& w = j.at(jidx);
      if (!is_zero(w) && !t.at(idx).zero()) sum += t.at(idx).scaled(w);
    }
    out.c[f] = sum;
  }
  return out;
}

RatTensor random_tensor(int n, const std::vector<Var>& var, int weight, SplitMix64& rng) {
  RatTensor t(n, var, weight);
  for (auto& x : t.c) x = rng.small_rat();
  return t;
}

PolyTensor random_poly_tensor(int n, const std::vector<Var>& var, int weight, int maxdeg,
                              SplitMix64& rng) {
  PolyTensor t(n, var, weight);
  for (auto& x : t.c) x = Poly::random(n, maxdeg, rng, 2);
  return t;
}

namespace detail {

// Projector onto the J-trace-free part of the totally (anti)symmetric k-slot
// class. Built once per shape by solving the trace system exactly and cached.
QMat trace_free_projector(int n, int k, bool antisym_class, const Symplectic& J,
                          const std::vector<Var>& group_var) {
  static std::map<std::tuple<int, int, bool, Var>, QMat> cache;
  static std::mutex cache_mu;
  Var v = group_var[0];
  auto key = std::make_tuple(n, k, antisym_class, v);
  {
    std::lock_guard<std::mutex> lk(cache_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  size_t dim = 1;
  for (int i = 0; i < k; ++i) dim *= static_cast<size_t>(n);
  int D = static_cast<int>(dim);
  // J entries used to contract a pair of same-variance slots
  const RatTensor& jpair = (v == Var::lo) ? J.upper : J.lower;
  const RatTensor& jins = (v == Var::lo) ? J.lower : J.upper;

  // contraction map C: group space -> stacked (k choose 2) spaces of rank k-2
  size_t sub = dim / static_cast<size_t>(n) / static_cast<size_t>(n);
  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p < k; ++p)
    for (int q = p + 1; q < k; ++q) pairs.emplace_back(p, q);
  QMat C(static_cast<int>(pairs.size() * sub), D);
  std::vector<int> idx(k);
  for (int col = 0; col < D; ++col) {
    size_t f = static_cast<size_t>(col);
    for (int i = k; i-- > 0;) {
      idx[i] = static_cast<int>(f % n);
      f /= n;
    }
    for (size_t pi = 0; pi < pairs.size(); ++pi) {
      auto [p, q] = pairs[pi];
      Rat w = jpair.at({idx[p], idx[q]});
      if (is_zero(w)) continue;
      // row index: remaining slots flattened
      size_t rf = 0;
      for (int i = 0; i < k; ++i)
        if (i != p && i != q) rf = rf * n + idx[i];
      C.at(static_cast<int>(pi * sub + rf), col) += w;
    }
  }

  // insertion images: class-projection of J (x) (rank k-2 basis) over all pairs
  std::vector<std::vector<int>> perms;
  permutations(k, perms);
  Rat norm = rat(1);
  for (int i = 2; i <= k; ++i) norm /= i;
  std::vector<std::vector<Rat>> ins_cols;
  for (auto [p, q] : pairs) {
    for (size_t bf = 0; bf < sub; ++bf) {
      std::vector<Rat> col(dim, Rat(0));
      // raw tensor: J in slots (p,q), basis multi-index bf in the rest
      std::vector<int> rest(k - 2);
      size_t f = bf;
      for (int i = k - 2; i-- > 0;) {
        rest[i] = static_cast<int>(f % n);
        f /= n;
      }
      std::vector<int> raw(k);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          Rat w = jins.at({a, b});
          if (is_zero(w)) continue;
          raw[p] = a;
          raw[q] = b;
          int r = 0;
          for (int i = 0; i < k; ++i)
            if (i != p && i != q) raw[i] = rest[r++];
          // class projection of the raw basis contribution
          for (const auto& perm : perms) {
            int sgn = antisym_class ? perm_sign(perm) : 1;
            std::vector<int> pidx(k);
            for (int i = 0; i < k; ++i) pidx[i] = raw[perm[i]];
            size_t pf = 0;
            for (int i = 0; i < k; ++i) pf = pf * n + pidx[i];
            col[pf] += (sgn < 0 ? -norm : norm) * w;
          }
        }
      bool nz = false;
      for (const auto& x : col)
        if (!is_zero(x)) {
          nz = true;
          break;
        }
      if (nz) ins_cols.push_back(col);
    }
  }

  QMat P = QMat::identity(D);
  if (!ins_cols.empty()) {
    QMat W = column_space(QMat::from_columns(ins_cols));
    QMat M = C * W;
    if (rank(M) != W.cols)
      throw std::logic_error("trace_free_projector: degenerate trace pairing");
    // P = id - W L C with L an exact left inverse of M = C W; on class
    // members t the correction W L C t solves the trace system exactly
    LinSolver msol(M);
    P = P - W * (msol.left_inverse() * C);
  }
  std::lock_guard<std::mutex> lk(cache_mu);
  cache[key] = P;
  return P;
}

}  // namespace detail

}  // namespace acaf

#include "acaf/connection.hpp"

#include <stdexcept>

namespace acaf {

ChartConnection ChartConnection::flat(int n) {
  return ChartConnection(n, PolyTensor(n, {Var::lo, Var::lo, Var::up}, 0));
}

bool ChartConnection::torsion_free() const {
  return gamma == gamma.permuted({1, 0, 2});
}

PolyTensor covariant_derivative(const ChartConnection& conn, const PolyTensor& t) {
  int n = conn.n;
  if (t.n != n) throw std::invalid_argument("covariant_derivative: dimension mismatch");
  std::vector<Var> var{Var::lo};
  var.insert(var.end(), t.var.begin(), t.var.end());
  PolyTensor out(n, var, t.weight);

  // Gamma trace for the density term
  std::vector<Poly> gtr(n);
  if (t.weight != 0)
    for (int a = 0; a < n; ++a)
      for (int i = 0; i < n; ++i) gtr[a] += conn.gamma.at({a, i, i});
  Rat wfrac = Rat(-t.weight, n);
  std::vector<int> idx(t.rank()), jdx(t.rank());
  for (size_t f = 0; f < out.c.size(); ++f) {
    std::vector<int> oidx = out.unflat(f);
    int a = oidx[0];
    for (int k = 0; k < t.rank(); ++k) idx[k] = oidx[k + 1];
    Poly v = t.at(idx).derivative(a);
    for (int k = 0; k < t.rank(); ++k) {
      jdx = idx;
      if (t.var[k] == Var::up) {
        // + Gamma_{ae}{}^{i_k} t^{..e..}
        for (int e = 0; e < n; ++e) {
          jdx[k] = e;
          const Poly& g = conn.gamma.at({a, e, idx[k]});
          if (!g.zero() && !t.at(jdx).zero()) v += g * t.at(jdx);
        }
      } else {
        // - Gamma_{a i_k}{}^{e} t_{..e..}
        for (int e = 0; e < n; ++e) {
          jdx[k] = e;
          const Poly& g = conn.gamma.at({a, idx[k], e});
          if (!g.zero() && !t.at(jdx).zero()) v -= g * t.at(jdx);
        }
      }
    }
    if (t.weight != 0 && !gtr[a].zero() && !t.at(idx).zero())
      v += (gtr[a] * t.at(idx)).scaled(wfrac);
    out.c[f] = v;
  }
  return out;
}

PolyTensor dj_display(const DJDecomposition& d, const Symplectic& J) {
  PolyTensor out = tensor_product(d.alpha, J.lower_p).scaled(rat(2));
  PolyTensor jb = tensor_product(J.lower_p, d.beta);  // J_{ab} beta_c at (a, b, c)
  out += jb;
  out -= jb.permuted({0, 2, 1});   // J_{ac} beta_b
  out -= d.H.permuted({2, 0, 1});  // H_{bca} placed at (a, b, c)
  out += d.S.permuted({2, 0, 1}).scaled(rat(2));
  return out;
}

namespace {

// trace patterns: pair slots (b,c) or (a,b) of a rank-3 (a,b,c) tensor with J
PolyTensor trace_u(const PolyTensor& t, const Symplectic& J) {
  return contract(contract_j(t, 1, J.upper, 0), 1, 2);
}
PolyTensor trace_v(const PolyTensor& t, const Symplectic& J) {
  return contract(contract_j(t, 0, J.upper, 0), 0, 1);
}

// coefficients of the 2x2 trace system, derived by probing the display with
// basis inputs: u = ua alpha + ub beta, v = va alpha + vb beta
struct TraceSystem {
  Rat ua, ub, va, vb;
};

TraceSystem derive_trace_system(int n, const Symplectic& J) {
  PolyTensor probe(n, {Var::lo}, 0);
  probe.at({0}) = Poly(n, Rat(1));
  PolyTensor zero1(n, {Var::lo}, 0);
  PolyTensor zero3(n, {Var::lo, Var::lo, Var::lo}, -2);
  auto scalar_of = [&](const PolyTensor& form) {
    Rat c = form.at({0}).constant_term();
    if (!(form == probe.scaled(c)))
      throw std::logic_error("trace system probe not proportional");
    return c;
  };
  DJDecomposition da{probe, zero1, zero3, zero3};
  DJDecomposition db{zero1, probe, zero3, zero3};
  PolyTensor Da = dj_display(da, J), Db = dj_display(db, J);
  TraceSystem s;
  s.ua = scalar_of(trace_u(Da, J));
  s.ub = scalar_of(trace_u(Db, J));
  s.va = scalar_of(trace_v(Da, J));
  s.vb = scalar_of(trace_v(Db, J));
  if (is_zero(s.ua * s.vb - s.ub * s.va)) throw std::logic_error("trace system singular");
  return s;
}

}  // namespace

DJDecomposition decompose_DJ(const ChartConnection& D, const Symplectic& J) {
  int n = D.n;
  if (n % 2 != 0) throw std::invalid_argument("decompose_DJ: n must be even");
  PolyTensor DJ = covariant_derivative(D, J.lower_p);  // (a, b, c), weight -2
  if (!(DJ == -DJ.permuted({0, 2, 1})))
    throw std::logic_error("decompose_DJ: D_a J_{bc} not antisymmetric in bc");

  TraceSystem ts = derive_trace_system(n, J);
  PolyTensor u = trace_u(DJ, J), v = trace_v(DJ, J);
  Rat det = ts.ua * ts.vb - ts.ub * ts.va;
  DJDecomposition d;
  d.alpha = u.scaled(ts.vb / det) - v.scaled(ts.ub / det);
  d.beta = v.scaled(ts.ua / det) - u.scaled(ts.va / det);

  PolyTensor zero3(n, {Var::lo, Var::lo, Var::lo}, -2);
  DJDecomposition traces{d.alpha, d.beta, zero3, zero3};
  PolyTensor rest = DJ - dj_display(traces, J);
  // the totally antisymmetric part carries 2S; H has no such part
  PolyTensor S_djorder = symmetrize(rest, {0, 1, 2}, true).scaled(rat(1, 2));
  PolyTensor Hd = S_djorder.scaled(rat(2)) - rest;  // H_{bca} read in (a,b,c) order
  d.S = S_djorder;  // totally antisymmetric, so the same array in (b,c,a) order
  d.H = Hd.permuted({1, 2, 0});

  auto jtrace_zero = [&](const PolyTensor& t, int p, int q) {
    return contract(contract_j(t, q, J.upper, 0), p, q).is_zero();
  };
  bool ok = (d.S == -d.S.permuted({1, 0, 2})) && (d.S == -d.S.permuted({0, 2, 1})) &&
            (d.H == -d.H.permuted({1, 0, 2})) && symmetrize(d.H, {0, 1, 2}, true).is_zero() &&
            jtrace_zero(d.H, 0, 2) && jtrace_zero(d.S, 0, 2) && jtrace_zero(d.H, 0, 1) &&
            jtrace_zero(d.S, 0, 1);
  if (!ok) throw std::logic_error("decompose_DJ: component symmetries failed");
  if (!(dj_display(d, J) == DJ))
    throw std::logic_error("decompose_DJ: reconstruction mismatch");
  return d;
}

namespace {

PolyTensor delta_tensor(int n) {
  PolyTensor d(n, {Var::lo, Var::up}, 0);
  for (int i = 0; i < n; ++i) d.at({i, i}) = Poly(n, Rat(1));
  return d;
}

// ups_a delta_b^d + ups_b delta_a^d as an (a,b,d) difference tensor
PolyTensor sym_delta_term(const PolyTensor& ups) {
  PolyTensor t = tensor_product(ups, delta_tensor(ups.n));
  return t + t.permuted({1, 0, 2});
}

}  // namespace

ChartConnection projective_change(const ChartConnection& c, const PolyTensor& ups) {
  return {c.n, c.gamma + sym_delta_term(ups)};
}

ChartConnection acs_same_geodesics_change(const ChartConnection& c, const PolyTensor& s,
                                          const Symplectic& J) {
  PolyTensor sd = tensor_product(s, delta_tensor(c.n));
  PolyTensor diff = sd - sd.permuted({1, 0, 2});
  diff -= tensor_product(J.lower_p, raise_disp(s, 0, J));  // - J_{ab} s^d
  return {c.n, c.gamma + diff};
}

ChartConnection acs_projective_change(const ChartConnection& c, const PolyTensor& s,
                                      const PolyTensor& beta, const Symplectic& J) {
  PolyTensor bp = tensor_product(beta + s, delta_tensor(c.n));
  PolyTensor bm = tensor_product(beta - s, delta_tensor(c.n));
  PolyTensor diff = bp + bm.permuted({1, 0, 2});
  diff += tensor_product(J.lower_p, raise_disp(beta - s, 0, J));
  return {c.n, c.gamma + diff};
}

ChartConnection weyl_change(const ChartConnection& c, const PolyTensor& beta,
                            const Symplectic& J) {
  PolyTensor diff = sym_delta_term(beta);
  diff += tensor_product(J.lower_p, raise_disp(beta, 0, J));
  return {c.n, c.gamma + diff};
}

ChartConnection nabla_beta_s(const ChartConnection& d_beta, const PolyTensor& s,
                             const PolyTensor& beta, const PolyTensor& H, const PolyTensor& S,
                             const Symplectic& J) {
  int n = d_beta.n;
  PolyTensor sd = tensor_product(s, delta_tensor(n));
  PolyTensor diff = sd - sd.permuted({1, 0, 2});
  diff -= tensor_product(J.lower_p, raise_disp(s, 0, J));
  diff += raise_disp(H, 2, J);  // H_{ab}{}^d: storage order has the pair first
  diff += raise_disp(S, 2, J);
  diff += tensor_product(J.lower_p, raise_disp(beta, 0, J));
  return {n, d_beta.gamma + diff};
}

PolyTensor torsion_of(const ChartConnection& c) {
  return c.gamma - c.gamma.permuted({1, 0, 2});
}

Nabla0Result build_nabla0_full(const ChartConnection& D, const Symplectic& J) {
  if (!D.torsion_free()) throw std::invalid_argument("build_nabla0: input has torsion");
  DJDecomposition dec = decompose_DJ(D, J);
  ChartConnection d0 = projective_change(D, -dec.beta);
  DJDecomposition dec0 = decompose_DJ(d0, J);
  if (!dec0.beta.is_zero() || !dec0.alpha.is_zero())
    throw std::logic_error("build_nabla0: beta = 0 member has residual trace parts");
  PolyTensor zero1(D.n, {Var::lo}, 0);
  ChartConnection nabla0 = nabla_beta_s(d0, zero1, zero1, dec0.H, dec0.S, J);
  if (!covariant_derivative(nabla0, J.lower_p).is_zero())
    throw std::logic_error("build_nabla0: nabla0 J != 0");
  PolyTensor T = torsion_of(nabla0);
  if (!contract(T, 1, 2).is_zero())
    throw std::logic_error("build_nabla0: delta-trace of torsion nonzero");
  if (!contract(contract_j(T, 1, J.upper, 0), 0, 1).is_zero())
    throw std::logic_error("build_nabla0: J-trace of torsion nonzero");
  return {nabla0, d0, dec0};
}

ChartConnection build_nabla0(const ChartConnection& D, const Symplectic& J) {
  return build_nabla0_full(D, J).nabla0;
}

RhoTensor RhoTensor::zero(int n) {
  return {PolyTensor(n, {Var::lo, Var::lo}, 0), PolyTensor(n, {Var::lo}, 2)};
}

RhoTensor rho_transform(const RhoTensor& P, const PolyTensor& ups, const PolyTensor& y,
                        const ChartConnection& weyl_conn, const Symplectic& J) {
  int n = ups.n;
  RhoTensor out = RhoTensor::zero(n);
  PolyTensor grad_ups = covariant_derivative(weyl_conn, ups);  // nabla_a ups_b
  out.P_ab = P.P_ab - tensor_product(ups, ups) + grad_ups + tensor_product(y, J.lower_p);
  PolyTensor ups_up = raise_disp(ups, 0, J);  // ups^b, weight +2
  out.P_a = P.P_a + covariant_derivative(weyl_conn, y) +
            contract_mul(P.P_ab, 1, ups_up, 0).scaled(rat(2)) +
            contract_mul(grad_ups, 1, ups_up, 0) - tensor_product(ups, y).scaled(rat(2));
  return out;
}

ChartConnection random_torsion_free(int n, int maxdeg, SplitMix64& rng) {
  PolyTensor g = random_poly_tensor(n, {Var::lo, Var::lo, Var::up}, 0, maxdeg, rng);
  return {n, symmetrize(g, {0, 1}, false)};
}

ChartConnection random_symplectic(int n, int maxdeg, SplitMix64& rng, const Symplectic& J) {
  PolyTensor T = random_poly_tensor(n, {Var::lo, Var::lo, Var::lo}, -2, maxdeg, rng);
  T = symmetrize(T, {0, 1, 2}, false);
  return {n, raise_disp(T, 2, J)};
}

}  // namespace acaf

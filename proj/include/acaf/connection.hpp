#pragma once

#include "acaf/tensor.hpp"

namespace acaf {

// Linear connection on the flat chart, Gamma_{ab}{}^d with polynomial
// entries (slots: derivative index a, argument index b, output index d).
struct ChartConnection {
  int n = 0;
  PolyTensor gamma;  // (lo, lo, up), weight 0

  ChartConnection() = default;
  ChartConnection(int n_, PolyTensor g) : n(n_), gamma(std::move(g)) {}
  static ChartConnection flat(int n);
  bool torsion_free() const;
};

// nabla_a t: one extra lower slot in front; includes the density term
// -(w/n) Gamma_{ai}{}^i t for weight-w tensors.
PolyTensor covariant_derivative(const ChartConnection& conn, const PolyTensor& t);

// D_a J_{bc} split into its five irreducible parts. H and S are stored with
// the antisymmetric pair first (H_{bca}: slots b, c, a), weight -2.
struct DJDecomposition {
  PolyTensor alpha, beta;  // one-forms, weight 0
  PolyTensor H, S;         // rank 3, weight -2
};

// the display 2 alpha J + J beta - J beta - H + 2S, in (a, b, c) slot order
PolyTensor dj_display(const DJDecomposition& d, const Symplectic& J);

DJDecomposition decompose_DJ(const ChartConnection& D, const Symplectic& J);

// connection changes; each adds exactly the displayed difference tensor
ChartConnection projective_change(const ChartConnection& c, const PolyTensor& ups);
ChartConnection acs_same_geodesics_change(const ChartConnection& c, const PolyTensor& s,
                                          const Symplectic& J);
ChartConnection acs_projective_change(const ChartConnection& c, const PolyTensor& s,
                                      const PolyTensor& beta, const Symplectic& J);
ChartConnection weyl_change(const ChartConnection& c, const PolyTensor& beta,
                            const Symplectic& J);
// difference from the torsion-free member D^beta to the ACS connection
// nabla^{beta,s}; H, S in DJDecomposition storage order
ChartConnection nabla_beta_s(const ChartConnection& d_beta, const PolyTensor& s,
                             const PolyTensor& beta, const PolyTensor& H, const PolyTensor& S,
                             const Symplectic& J);

PolyTensor torsion_of(const ChartConnection& c);  // Gamma_{ab}{}^d - Gamma_{ba}{}^d

struct Nabla0Result {
  ChartConnection nabla0;  // the distinguished ACS connection
  ChartConnection d0;      // the beta = 0 torsion-free member of the class
  DJDecomposition dec;     // decomposition of D^0 (alpha = beta = 0)
};

// torsion-free D -> the unique ACS connection with totally trace-free
// torsion sharing unparametrized geodesics with [D]; verifies nabla0 J = 0
// and the torsion trace conditions exactly.
Nabla0Result build_nabla0_full(const ChartConnection& D, const Symplectic& J);
ChartConnection build_nabla0(const ChartConnection& D, const Symplectic& J);

struct RhoTensor {
  PolyTensor P_ab;  // (lo, lo), weight 0
  PolyTensor P_a;   // (lo), weight +2
  static RhoTensor zero(int n);
};

// Weyl-structure change by (ups, y): y is a weight +2 scalar (rank 0)
RhoTensor rho_transform(const RhoTensor& P, const PolyTensor& ups, const PolyTensor& y,
                        const ChartConnection& weyl_conn, const Symplectic& J);

// deterministic generators used by pipelines and tests
ChartConnection random_torsion_free(int n, int maxdeg, SplitMix64& rng);
ChartConnection random_symplectic(int n, int maxdeg, SplitMix64& rng, const Symplectic& J);

}  // namespace acaf

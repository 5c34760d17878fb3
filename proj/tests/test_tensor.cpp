#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "acaf/matrix.hpp"
#include "acaf/poly.hpp"
#include "acaf/prng.hpp"
#include "acaf/tensor.hpp"

using namespace acaf;

TEST_CASE("poly arithmetic") {
  SplitMix64 rng(7);
  Poly x1 = Poly::var(3, 0);
  Poly x2 = Poly::var(3, 1);
  Poly p = x1 * x2 + Poly(3, rat(1, 2));
  CHECK(p.degree() == 2);
  CHECK(p.derivative(0) == x2);
  CHECK(p.eval({rat(2), rat(3), rat(0)}) == rat(13, 2));
  for (int it = 0; it < 30; ++it) {
    Poly a = Poly::random(3, 3, rng), b = Poly::random(3, 3, rng), c = Poly::random(3, 3, rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).derivative(1) == a.derivative(1) * b + a * b.derivative(1));
    CHECK(a - a == Poly(3));
  }
}

TEST_CASE("exact linear algebra kernel") {
  QMat A(3, 3);
  // [[1,2,0],[0,1,1],[1,3,1]] is singular (row3 = row1+row2)
  A.at(0, 0) = 1; A.at(0, 1) = 2;
  A.at(1, 1) = 1; A.at(1, 2) = 1;
  A.at(2, 0) = 1; A.at(2, 1) = 3; A.at(2, 2) = 1;
  CHECK(rank(A) == 2);
  QMat ns = nullspace(A);
  CHECK(ns.cols == 1);
  CHECK((A * ns).is_zero());

  QMat B(2, 2);
  B.at(0, 0) = rat(1, 2); B.at(0, 1) = 1;
  B.at(1, 0) = 1; B.at(1, 1) = rat(3);
  QMat Binv = inverse(B);
  CHECK(B * Binv == QMat::identity(2));

  auto x = solve(B, {rat(1), rat(0)});
  REQUIRE(x.has_value());
  CHECK(B.apply(*x) == std::vector<Rat>{rat(1), rat(0)});

  // eigen: diag(2,2,-3) in a sheared basis
  QMat D = QMat::zero(3, 3);
  D.at(0, 0) = 2; D.at(1, 1) = 2; D.at(2, 2) = -3;
  QMat S = QMat::identity(3);
  S.at(0, 1) = 1; S.at(1, 2) = rat(-2);
  QMat M = S * D * inverse(S);
  auto ed = eigen_semisimple(M);
  REQUIRE(ed.values.size() == 2);
  QMat sum = ed.projectors[0] + ed.projectors[1];
  CHECK(sum == QMat::identity(3));
  for (size_t i = 0; i < ed.values.size(); ++i) {
    QMat MP = M * ed.projectors[i];
    CHECK(MP == ed.projectors[i].scaled(ed.values[i]));
  }
}

TEST_CASE("standard symplectic pair") {
  Symplectic J2 = make_standard_J(2);
  CHECK(J2.lower.at({0, 1}) == 1);
  CHECK(J2.lower.at({1, 0}) == -1);
  CHECK(J2.lower.at({0, 0}) == 0);

  Symplectic J = make_standard_J(6);
  CHECK(J.lower.at({0, 3}) == 1);   // (J_lower)_{1,4} = 1, one-based
  CHECK(J.lower.at({3, 0}) == -1);
  for (int i = 0; i < 6; ++i) CHECK(J.lower.at({i, i}) == 0);
  // skew-symmetry
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) CHECK(J.lower.at({a, b}) + J.lower.at({b, a}) == 0);

  CHECK_THROWS(make_standard_J(5));
  CHECK_THROWS(make_standard_J(0));
}

TEST_CASE("index adjustment round-trips are -id") {
  for (int n : {4, 6, 8}) {
    Symplectic J = make_standard_J(n);
    SplitMix64 rng(42 + n);
    RatTensor t = random_tensor(n, {Var::up, Var::lo, Var::up}, 1, rng);
    for (int pos : {0, 2}) {
      RatTensor down = adjust_index(t, pos, Adjust::lower, J);
      CHECK(down.weight == t.weight - 2);
      RatTensor back = adjust_index(down, pos, Adjust::raise, J);
      CHECK(back == -t);
    }
    RatTensor up1 = adjust_index(t, 1, Adjust::raise, J);
    CHECK(up1.weight == t.weight + 2);
    CHECK(adjust_index(up1, 1, Adjust::lower, J) == -t);
    CHECK_THROWS(adjust_index(t, 0, Adjust::raise, J));  // slot already upper
  }
}

TEST_CASE("lowering e1 lands in slot n/2+1") {
  Symplectic J = make_standard_J(6);
  RatTensor xi(6, {Var::up}, 0);
  xi.at({0}) = 1;
  RatTensor lo = adjust_index(xi, 0, Adjust::lower, J);
  for (int b = 0; b < 6; ++b) CHECK(lo.at({b}) == (b == 3 ? Rat(1) : Rat(0)));
}

TEST_CASE("zero tensor adjusts weight only") {
  Symplectic J = make_standard_J(4);
  RatTensor z(4, {Var::lo}, 3);
  RatTensor up = adjust_index(z, 0, Adjust::raise, J);
  CHECK(up.is_zero());
  CHECK(up.weight == 5);
}

TEST_CASE("contract_trace") {
  int n = 6;
  RatTensor delta(n, {Var::lo, Var::up}, 0);
  for (int i = 0; i < n; ++i) delta.at({i, i}) = 1;
  RatTensor tr = contract_trace(delta, 1, 0);
  CHECK(tr.rank() == 0);
  CHECK(tr.c[0] == n);

  SplitMix64 rng(5);
  RatTensor xi = random_tensor(n, {Var::up}, 0, rng);
  RatTensor up = random_tensor(n, {Var::lo}, 0, rng);
  RatTensor prod = tensor_product(xi, up);
  Rat expect(0);
  for (int i = 0; i < n; ++i) expect += xi.at({i}) * up.at({i});
  CHECK(contract_trace(prod, 0, 1).c[0] == expect);
  CHECK(prod.weight == xi.weight + up.weight);

  // brute-force loop oracle on a random rank-3 tensor at n = 4
  RatTensor t = random_tensor(4, {Var::up, Var::lo, Var::lo}, -2, rng);
  RatTensor got = contract_trace(t, 0, 2);
  CHECK(got.weight == -2);
  for (int b = 0; b < 4; ++b) {
    Rat s(0);
    for (int i = 0; i < 4; ++i) s += t.at({i, b, i});
    CHECK(got.at({b}) == s);
  }
  CHECK_THROWS(contract_trace(t, 1, 2));  // same variance
}

TEST_CASE("symmetrize and project") {
  int n = 6;
  Symplectic J = make_standard_J(n);
  SplitMix64 rng(11);

  // antisymmetrizing a symmetric pair gives zero
  RatTensor s = random_tensor(n, {Var::lo, Var::lo}, 0, rng);
  RatTensor ssym = symmetrize(s, {0, 1}, false);
  CHECK(symmetrize(ssym, {0, 1}, true).is_zero());

  // idempotence on random tensors
  for (int it = 0; it < 50; ++it) {
    RatTensor t = random_tensor(n, {Var::lo, Var::lo, Var::lo}, 0, rng);
    RatTensor p1 = symmetrize(t, {0, 2}, true);
    CHECK(symmetrize(p1, {0, 2}, true) == p1);
    RatTensor p2 = symmetrize(t, {0, 1, 2}, false);
    CHECK(symmetrize(p2, {0, 1, 2}, false) == p2);
  }

  // trace-free projection kills every J-trace in the group
  for (int it = 0; it < 5; ++it) {
    RatTensor t = random_tensor(n, {Var::lo, Var::lo, Var::lo}, 0, rng);
    RatTensor a = symmetrize(t, {0, 1, 2}, true);
    RatTensor tf = symmetrize_project(a, {0, 1, 2}, SymMode::trace_free, J);
    for (int p = 0; p < 3; ++p)
      for (int q = p + 1; q < 3; ++q) {
        RatTensor up = contract_j(tf, q, J.upper, 1);
        up.var[q] = Var::up;
        CHECK(contract(up, p, q).is_zero());
      }
    // projection is idempotent and fixes the trace-free part
    CHECK(symmetrize_project(tf, {0, 1, 2}, SymMode::trace_free, J) == tf);
  }

  // rank-2 antisym group
  RatTensor t2 = symmetrize(random_tensor(n, {Var::lo, Var::lo}, -2, rng), {0, 1}, true);
  RatTensor tf2 = symmetrize_project(t2, {0, 1}, SymMode::trace_free, J);
  RatTensor up2 = contract_j(tf2, 1, J.upper, 1);
  CHECK(contract(up2, 0, 1).is_zero());
  CHECK(tf2.weight == t2.weight);

  CHECK_THROWS(symmetrize_project(random_tensor(n, {Var::lo, Var::up}, 0, rng), {0, 1},
                                  SymMode::sym, J));
}

TEST_CASE("weight bookkeeping") {
  int n = 4;
  SplitMix64 rng(3);
  RatTensor a = random_tensor(n, {Var::up}, 1, rng);
  RatTensor b = random_tensor(n, {Var::lo, Var::lo}, -2, rng);
  CHECK(tensor_product(a, b).weight == -1);
  CHECK(contract_trace(tensor_product(a, b), 0, 1).weight == -1);
}

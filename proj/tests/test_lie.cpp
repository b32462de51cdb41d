#include "doctest.h"
#include "inhomcs/errors.hpp"
#include "inhomcs/lie.hpp"

using namespace inhomcs;

namespace {

Matrix unit(int n, int i, int j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

Matrix combine(const LieAlgebraData::Bracket& b, const std::vector<Matrix>& basis) {
  Matrix m(basis[0].rows(), basis[0].cols());
  for (const auto& t : b) m += t.coeff * basis[t.index];
  return m;
}

// Checks brackets and metric against explicit matrices: [X_i, X_j] must be
// the commutator and <X_i, X_j> the trace form.
void check_against_matrices(const LieAlgebraData& g, const std::vector<Matrix>& basis,
                            const Rational& form_scale) {
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) {
      CHECK(combine(g.bracket(i, j), basis) == commutator(basis[i], basis[j]));
      CHECK(g.metric()(i, j) == form_scale * (basis[i] * basis[j]).trace());
    }
}

// Bracket of two sparse vectors.
std::vector<Rational> bracket(const LieAlgebraData& g, const std::vector<Rational>& a,
                              const std::vector<Rational>& b) {
  std::vector<Rational> out(g.dim());
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) {
      if (sgn(a[i]) == 0 || sgn(b[j]) == 0) continue;
      for (const auto& t : g.bracket(i, j)) out[t.index] += a[i] * b[j] * t.coeff;
    }
  return out;
}

std::vector<Rational> basis_vector(int d, int i) {
  std::vector<Rational> v(d);
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("gl(n) matches matrix units") {
  for (int n = 1; n <= 3; ++n) {
    LieAlgebraData g = build_gl(n);
    REQUIRE(g.dim() == n * n);
    std::vector<Matrix> basis;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) basis.push_back(unit(n, i, j));
    check_against_matrices(g, basis, 1);
    CHECK(g.metric() * g.metric_inverse() == Matrix::identity(g.dim()));
  }
  CHECK(build_gl(2).labels()[1] == "E12");
  CHECK_THROWS_AS(build_gl(0), InvalidArgument);
}

TEST_CASE("sl(2) matches its defining matrices") {
  LieAlgebraData g = build_sl2();
  Matrix h(2, 2), e = unit(2, 0, 1), f = unit(2, 1, 0);
  h(0, 0) = 1;
  h(1, 1) = -1;
  check_against_matrices(g, {h, e, f}, 1);
}

TEST_CASE("lowered structure constants are totally antisymmetric") {
  for (const LieAlgebraData& g : {build_gl(2), build_sl2(), make_double(build_gl(2)).algebra}) {
    const int d = g.dim();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          Rational direct = 0;
          for (const auto& t : g.bracket(i, j)) direct += t.coeff * g.metric()(t.index, k);
          CHECK(g.f(i, j, k) == direct);
          CHECK(g.f(j, i, k) == -g.f(i, j, k));
          CHECK(g.f(j, k, i) == g.f(i, j, k));
        }
  }
}

TEST_CASE("the double: brackets, metric and Jacobi") {
  LieAlgebraData g = build_gl(2);
  DoubleAlgebra l0 = make_double(g);
  const int d = g.dim();
  REQUIRE(l0.algebra.dim() == 2 * d);
  CHECK(l0.algebra.labels()[l0.bar(0)] == g.labels()[0] + "bar");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      // bar copy is abelian
      CHECK(l0.algebra.bracket(l0.bar(i), l0.bar(j)).empty());
      // [X_i, Xbar_j] is the bar of [X_i, X_j]
      auto plain = g.bracket(i, j);
      auto mixed = l0.algebra.bracket(i, l0.bar(j));
      std::vector<Rational> a(2 * d), b(2 * d);
      for (const auto& t : plain) a[l0.bar(t.index)] += t.coeff;
      for (const auto& t : mixed) b[t.index] += t.coeff;
      CHECK(a == b);
      // metric is hyperbolic
      CHECK(sgn(l0.algebra.metric()(i, j)) == 0);
      CHECK(sgn(l0.algebra.metric()(l0.bar(i), l0.bar(j))) == 0);
      CHECK(l0.algebra.metric()(i, l0.bar(j)) == g.metric()(i, j));
    }
  // Jacobi, recomputed from the sparse brackets.
  const int D = l0.algebra.dim();
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j)
      for (int k = 0; k < D; ++k) {
        auto x = basis_vector(D, i), y = basis_vector(D, j), z = basis_vector(D, k);
        auto s1 = bracket(l0.algebra, x, bracket(l0.algebra, y, z));
        auto s2 = bracket(l0.algebra, y, bracket(l0.algebra, z, x));
        auto s3 = bracket(l0.algebra, z, bracket(l0.algebra, x, y));
        for (int c = 0; c < D; ++c) CHECK(s1[c] + s2[c] + s3[c] == 0);
      }
}

TEST_CASE("construction rejects bad structure data") {
  Matrix one = Matrix::identity(1);
  // 1-dim abelian algebra is fine.
  CHECK_NOTHROW(LieAlgebraData("u1", {"X"}, {{}}, one));
  // degenerate metric
  CHECK_THROWS_AS(LieAlgebraData("u1", {"X"}, {{}}, Matrix(1, 1)), InvalidArgument);
  // wrong number of brackets
  CHECK_THROWS_AS(LieAlgebraData("u1", {"X"}, {}, one), InvalidArgument);
  // [X, X] = X is not antisymmetric
  CHECK_THROWS_AS(LieAlgebraData("bad", {"X"}, {{{0, 1}}}, one), InvalidArgument);
  // Take sl(2) and break invariance by rescaling one metric entry.
  LieAlgebraData s = build_sl2();
  std::vector<LieAlgebraData::Bracket> br;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) br.push_back(s.bracket(i, j));
  Matrix m = s.metric();
  m(0, 0) = 3;
  CHECK_THROWS_AS(LieAlgebraData("bad", s.labels(), br, m), InvalidArgument);
  // Break Jacobi: [H,E] = 2E, [H,F] = -2F, [E,F] = F.
  auto br2 = br;
  br2[1 * 3 + 2] = {{2, 1}};
  br2[2 * 3 + 1] = {{2, -1}};
  CHECK_THROWS_AS(LieAlgebraData("bad", s.labels(), br2, s.metric()), InvalidArgument);
  // Asymmetric metric.
  Matrix a = s.metric();
  a(1, 2) = 2;
  CHECK_THROWS_AS(LieAlgebraData("bad", s.labels(), br, a), InvalidArgument);
}

TEST_CASE("representations are homomorphisms") {
  LieAlgebraData g = build_gl(2);
  DoubleAlgebra l0 = make_double(g);
  Representation B = defining_gl(g, 2);
  std::vector<Rational> phi = {1, 0, 0, 1};
  Representation R = rep_R(B, l0), Rphi = rep_R(B, l0, phi);
  Representation P = tensor_product(l0.algebra, R, Rphi);
  CHECK(R.dim() == 4);
  CHECK(P.dim() == 16);
  for (const Representation* rho : {&R, &Rphi, &P}) {
    const auto& a = l0.algebra;
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j)
        CHECK(combine(a.bracket(i, j), rho->matrices()) ==
              commutator((*rho)(i), (*rho)(j)));
  }
  // Under R the bar copy is strictly block upper triangular, so products of
  // two bar elements vanish.
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK((R(l0.bar(i)) * R(l0.bar(j))).is_zero());
  // A character that does not vanish on [g, g] is rejected.
  CHECK_THROWS_AS(rep_R(B, l0, {0, 1, 0, 0}), InvalidArgument);
  CHECK_THROWS_AS(rep_R(B, l0, {1, 0}), InvalidArgument);
}

TEST_CASE("adjoint and defining representations of sl(2)") {
  LieAlgebraData s = build_sl2();
  Representation ad = adjoint(s), def = defining_sl2(s);
  CHECK(ad.dim() == 3);
  CHECK(def.dim() == 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::vector<Rational> col(3);
      for (const auto& t : s.bracket(i, j)) col[t.index] += t.coeff;
      for (int k = 0; k < 3; ++k) CHECK(ad(i)(k, j) == col[k]);
    }
  // A matrix family that is not a representation is rejected.
  std::vector<Matrix> wrong = def.matrices();
  wrong[1] = wrong[2];
  CHECK_THROWS_AS(Representation(s, "wrong", wrong), InvalidArgument);
}

TEST_CASE("algebra specs") {
  AlgebraWithRep a = build_from_spec({"gl", 3, "defining"});
  CHECK(a.algebra.dim() == 9);
  CHECK(a.rep.dim() == 3);
  AlgebraWithRep s = build_from_spec({"sl2", 0, "adjoint"});
  CHECK(s.rep.dim() == 3);
  CHECK_THROWS_AS(build_from_spec({"so", 3, "defining"}), InvalidArgument);
  CHECK_THROWS_AS(build_from_spec({"gl", 2, "spin"}), InvalidArgument);
}

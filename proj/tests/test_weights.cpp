#include <random>

#include "doctest.h"
#include "inhomcs/canonical.hpp"
#include "inhomcs/corpus.hpp"
#include "inhomcs/errors.hpp"
#include "inhomcs/orientations.hpp"
#include "inhomcs/weights.hpp"
#include "oracles.hpp"

using namespace inhomcs;

namespace {

struct Gl2Double {
  LieAlgebraData g = build_gl(2);
  Representation B = defining_gl(g, 2);
  DoubleAlgebra l0 = make_double(g);
  Representation R = rep_R(B, l0);
  Representation Rphi = rep_R(B, l0, {1, 0, 0, 1});
  Representation P = tensor_product(l0.algebra, R, Rphi);
};

const Gl2Double& gl2d() {
  static const Gl2Double x;
  return x;
}

}  // namespace

TEST_CASE("enveloping tensors") {
  EnvelopingTensor t;
  t.add_word({0, 1}, 2);
  t.add_word({0, 1}, -2);
  CHECK(t.empty());
  t.add_word({1}, Rational(1, 2));
  EnvelopingTensor u = t;
  u += t;
  CHECK(u.coefficient({{1}}) == 1);
  u *= 0;
  CHECK(u.empty());
  CHECK(EnvelopingTensor::unit().coefficient({{}}) == 1);
  CHECK_THROWS_AS(t.add({{1}, {2}}, 1), InvalidArgument);
}

TEST_CASE("theta weight in gl(2) is 4") {
  const auto& x = gl2d();
  JacobiDiagram theta = make_theta_power(1, SkeletonKind::Circle);
  CHECK(weight_circle(theta, x.g, x.B) == 4);
  CHECK(oracle::brute_weight(theta, x.g, x.B).trace() == 4);
  // Casimir of gl(n) on the defining representation is n times identity.
  LieAlgebraData g3 = build_gl(3);
  Representation b3 = defining_gl(g3, 3);
  CHECK(weight_interval(make_theta_power(1, SkeletonKind::Interval), g3, b3) ==
        Rational(3) * Matrix::identity(3));
}

TEST_CASE("weights agree with the brute-force contraction on the corpus") {
  const auto& x = gl2d();
  LieAlgebraData s = build_sl2();
  Representation ad = adjoint(s);
  for (SkeletonKind sk : {SkeletonKind::Circle, SkeletonKind::Interval}) {
    DiagramCorpus corpus = enumerate_diagrams(3, sk);
    for (const auto& e : corpus.entries) {
      JacobiDiagram d = diagram_from_key(e.key);
      CAPTURE(to_string(e.key));
      if (sk == SkeletonKind::Circle) {
        CHECK(weight_circle(d, x.g, x.B) == oracle::brute_weight(d, x.g, x.B).trace());
        CHECK(weight_circle(d, s, ad) == oracle::brute_weight(d, s, ad).trace());
      } else {
        CHECK(weight_interval(d, x.g, x.B) == oracle::brute_weight(d, x.g, x.B));
      }
    }
  }
}

TEST_CASE("directed contraction agrees with the brute force in the double") {
  const auto& x = gl2d();
  for (SkeletonKind sk : {SkeletonKind::Circle, SkeletonKind::Interval}) {
    DiagramCorpus corpus = enumerate_diagrams(2, sk);
    for (const auto& e : corpus.entries) {
      JacobiDiagram d = diagram_from_key(e.key);
      for (const auto& o : legal_orientations(d).orientations) {
        for (const Representation* rho : {&x.R, &x.Rphi}) {
          Matrix brute = oracle::brute_weight(o, x.l0, *rho);
          if (sk == SkeletonKind::Circle) CHECK(weight_circle(o, x.l0, *rho) == brute.trace());
          else CHECK(weight_interval(o, x.l0, *rho) == brute);
        }
      }
    }
  }
  // The 3-wheel as well, which has six edges.
  DirectedJacobiDiagram w3 = make_directed_wheel(3, SkeletonKind::Interval);
  CHECK(weight_interval(w3, x.l0, x.Rphi) == oracle::brute_weight(w3, x.l0, x.Rphi));
}

TEST_CASE("wheel weights in gl(2)") {
  const auto& x = gl2d();
  CHECK(weight_circle(make_wheel(2, SkeletonKind::Circle), x.g, x.B) == 12);
  CHECK(weight_circle(make_wheel(3, SkeletonKind::Circle), x.g, x.B) == 12);
  CHECK(weight_circle(make_wheel(4, SkeletonKind::Circle), x.g, x.B) == 36);
  CHECK(oracle::brute_weight(make_wheel(4, SkeletonKind::Circle), x.g, x.B).trace() == 36);
}

TEST_CASE("AS: reversing one vertex negates the weight") {
  const auto& x = gl2d();
  JacobiDiagram w = make_wheel(3, SkeletonKind::Interval);
  auto verts = w.vertices();
  std::swap(verts[0][1], verts[0][2]);
  JacobiDiagram flipped(w.skeleton(), w.legs(), verts, w.edges());
  CHECK(weight_interval(flipped, x.g, x.B) == Rational(-1) * weight_interval(w, x.g, x.B));
}

TEST_CASE("circle weight is the trace of the interval weight, at any cut") {
  const auto& x = gl2d();
  DiagramCorpus corpus = enumerate_diagrams(3, SkeletonKind::Interval);
  for (const auto& e : corpus.entries) {
    JacobiDiagram d = diagram_from_key(e.key);
    const Rational t = weight_interval(d, x.g, x.B).trace();
    CHECK(weight_circle(close_interval(d), x.g, x.B) == t);
    // Cutting the circle elsewhere: rotate the legs, same trace.
    std::vector<int> rot(d.leg_count());
    for (int p = 0; p < d.leg_count(); ++p) rot[p] = (p + 1) % d.leg_count();
    CHECK(weight_interval(permute_legs(d, rot), x.g, x.B).trace() == t);
  }
}

TEST_CASE("the double needs directed input") {
  const auto& x = gl2d();
  DirectedJacobiDiagram w = make_directed_wheel(2, SkeletonKind::Circle);
  CHECK_THROWS_AS(contract_l(w, x.g), InvalidArgument);
}

TEST_CASE("orientation sum equals the undirected weight in the double") {
  const auto& x = gl2d();
  DiagramCorpus corpus = enumerate_diagrams(3, SkeletonKind::Circle);
  int nonzero = 0;
  for (const auto& e : corpus.entries) {
    JacobiDiagram d = diagram_from_key(e.key);
    for (const Representation* rho : {&x.R, &x.Rphi, &x.P}) {
      Rational a = directed_weight_sum(d, x.l0, *rho);
      CHECK(a == weight_circle(d, x.l0.algebra, *rho));
      if (!is_zero(a)) ++nonzero;
    }
    // Under R every value is zero: each term traces a product containing a
    // strictly upper triangular factor.
    CHECK(is_zero(weight_circle(d, x.l0.algebra, x.R)));
  }
  CHECK(nonzero > 0);
}

TEST_CASE("undirected STU holds in gl(2) on the interval") {
  // U = S - T read off the directed expansion with the arrows forgotten.
  const auto& x = gl2d();
  DiagramCorpus corpus = enumerate_diagrams(3, SkeletonKind::Interval);
  int checked = 0;
  for (const auto& e : corpus.entries) {
    JacobiDiagram d = diagram_from_key(e.key);
    auto orientations = legal_orientations(d).orientations;
    if (orientations.empty()) continue;
    const auto& o = orientations.front();
    for (int leg = 0; leg < d.leg_count(); ++leg) {
      StuApplication app;
      try {
        app = apply_directed_stu(o, leg, StuMode::Expand);
      } catch (const NotApplicable&) {
        continue;
      }
      Matrix rhs(2, 2);
      for (const auto& t : app.terms) rhs += t.coeff * weight_interval(t.diagram.base(), x.g, x.B);
      CHECK(weight_interval(d, x.g, x.B) == rhs);
      ++checked;
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("directed STU holds in the double under every representation") {
  const auto& x = gl2d();
  int checked = 0, nonzero = 0;
  for (SkeletonKind sk : {SkeletonKind::Circle, SkeletonKind::Interval}) {
    DiagramCorpus corpus = enumerate_diagrams(2, sk);
    for (const auto& e : corpus.entries) {
      JacobiDiagram d = diagram_from_key(e.key);
      for (const auto& o : legal_orientations(d).orientations)
        for (int leg = 0; leg < d.leg_count(); ++leg) {
          StuApplication app;
          try {
            app = apply_directed_stu(o, leg);
          } catch (const NotApplicable&) {
            continue;
          }
          DiagramSum lhs;
          lhs.add(o);
          for (const Representation* rho : {&x.R, &x.Rphi, &x.P}) {
            WeightSystem ws(x.l0, *rho);
            if (sk == SkeletonKind::Circle) {
              Rational a = pair_circle(lhs, ws);
              CHECK(a == pair_circle(app.rhs(), ws));
              if (!is_zero(a)) ++nonzero;
            } else {
              Matrix a = pair_interval(lhs, ws);
              CHECK(a == pair_interval(app.rhs(), ws));
              if (!a.is_zero()) ++nonzero;
            }
          }
          ++checked;
        }
    }
  }
  CHECK(checked > 10);
  CHECK(nonzero > 0);
}

TEST_CASE("pairing rejects keys on the wrong skeleton") {
  const auto& x = gl2d();
  DiagramSum s;
  s.add(make_wheel(2, SkeletonKind::Interval));
  CHECK_THROWS_AS(pair_circle(s, WeightSystem(x.g, x.B)), InvalidArgument);
}

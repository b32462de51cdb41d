#include <random>

#include "doctest.h"
#include "inhomcs/canonical.hpp"
#include "inhomcs/corpus.hpp"
#include "inhomcs/diagram.hpp"
#include "inhomcs/errors.hpp"
#include "oracles.hpp"

using namespace inhomcs;

TEST_CASE("builders produce the expected shapes") {
  JacobiDiagram w = make_wheel(4, SkeletonKind::Circle);
  CHECK(w.leg_count() == 4);
  CHECK(w.vertex_count() == 4);
  CHECK(w.edge_count() == 8);
  CHECK(degree(w) == 4);
  CHECK(w.is_primitive());

  JacobiDiagram t3 = make_theta_power(3, SkeletonKind::Circle);
  CHECK(degree(t3) == 3);
  CHECK(t3.leg_count() == 6);
  CHECK_FALSE(t3.is_primitive());
  CHECK(make_theta_power(1, SkeletonKind::Interval).is_primitive());

  JacobiDiagram tri = make_tripod(SkeletonKind::Interval);
  CHECK(degree(tri) == 2);
  CHECK(tri.leg_count() == 3);

  DirectedJacobiDiagram dw = make_directed_wheel(3, SkeletonKind::Circle, false);
  CHECK(dw.is_legal());
  for (int p = 0; p < 3; ++p) CHECK(dw.is_head(p));
}

TEST_CASE("construction rejects malformed diagrams") {
  using T = JacobiDiagram::Triple;
  // no legs
  CHECK_THROWS_AS(JacobiDiagram(SkeletonKind::Circle, {}, {T{0, 1, 2}, T{3, 4, 5}},
                                {{0, 3}, {1, 4}, {2, 5}}),
                  InvalidArgument);
  // duplicate half-edge id
  CHECK_THROWS_AS(JacobiDiagram(SkeletonKind::Circle, {0, 0}, {}, {{0, 0}}), InvalidArgument);
  // unpaired half-edge
  CHECK_THROWS_AS(JacobiDiagram(SkeletonKind::Circle, {0, 1, 2}, {}, {{0, 1}}), InvalidArgument);
  // edge to an unknown id
  CHECK_THROWS_AS(JacobiDiagram(SkeletonKind::Circle, {0, 1}, {}, {{0, 7}}), InvalidArgument);
  // self-paired half-edge
  CHECK_THROWS_AS(JacobiDiagram(SkeletonKind::Circle, {0, 1}, {}, {{0, 0}}), InvalidArgument);
  // a closed component not touching the skeleton (theta graph floating free)
  CHECK_THROWS_AS(JacobiDiagram(SkeletonKind::Circle, {0, 1},
                                {T{10, 11, 12}, T{13, 14, 15}},
                                {{0, 1}, {10, 13}, {11, 14}, {12, 15}}),
                  InvalidArgument);
  CHECK_THROWS_AS(make_wheel(1, SkeletonKind::Circle), InvalidArgument);
  CHECK_THROWS_AS(make_theta_power(0, SkeletonKind::Circle), InvalidArgument);
}

TEST_CASE("directed diagrams validate their arrows") {
  JacobiDiagram t = make_theta_power(1, SkeletonKind::Circle);
  CHECK_THROWS_AS(DirectedJacobiDiagram(t, {}), InvalidArgument);
  DirectedJacobiDiagram a(t, {0}), b(t, {1});
  CHECK(a.is_legal());
  CHECK(a.tail(0) == 1);
  CHECK(b.head(0) == 1);

  // All three arrows into the tripod vertex: not legal.
  JacobiDiagram tri = make_tripod(SkeletonKind::Circle);
  std::vector<HalfEdge> heads;
  for (int e = 0; e < tri.edge_count(); ++e) {
    auto [x, y] = tri.edges()[e];
    heads.push_back(x >= tri.leg_count() ? x : y);
  }
  CHECK_FALSE(DirectedJacobiDiagram(tri, heads).is_legal());
}

TEST_CASE("leg permutation and closing the interval") {
  JacobiDiagram w = make_wheel(3, SkeletonKind::Interval);
  CHECK_THROWS_AS(permute_legs(w, {0, 1}), InvalidArgument);
  CHECK_THROWS_AS(permute_legs(w, {0, 0, 1}), InvalidArgument);
  JacobiDiagram id = permute_legs(w, {0, 1, 2});
  CHECK(canonicalize(id).key == canonicalize(w).key);
  CHECK(close_interval(w).skeleton() == SkeletonKind::Circle);
  CHECK_THROWS_AS(close_interval(close_interval(w)), InvalidArgument);
  // Rotating the legs is an isomorphism on the circle only.
  JacobiDiagram cw = close_interval(make_tripod(SkeletonKind::Interval));
  CHECK(canonicalize(permute_legs(cw, {1, 2, 0})).key == canonicalize(cw).key);
}

TEST_CASE("canonical keys agree with brute-force isomorphism under relabeling") {
  std::mt19937_64 rng(7);
  for (SkeletonKind sk : {SkeletonKind::Circle, SkeletonKind::Interval}) {
    DiagramCorpus corpus = enumerate_diagrams(3, sk);
    for (const auto& e : corpus.entries) {
      JacobiDiagram d = diagram_from_key(e.key);
      Canonical c = canonicalize(d);
      REQUIRE(c.sign == 1);
      for (int trial = 0; trial < 3; ++trial) {
        oracle::Relabeled r = oracle::relabel(d, rng, true);
        Canonical cr = canonicalize(r.diagram);
        CHECK(cr.key == c.key);
        CHECK(cr.sign == (r.reversals % 2 ? -1 : 1));
        if (e.vertices <= 3) {
          const int signs = oracle::isomorphism_signs(r.diagram, d);
          CHECK(signs == (r.reversals % 2 ? 2 : 1));
        }
      }
    }
  }
}

TEST_CASE("distinct corpus keys are pairwise non-isomorphic") {
  for (SkeletonKind sk : {SkeletonKind::Circle, SkeletonKind::Interval}) {
    DiagramCorpus corpus = enumerate_diagrams(2, sk);
    std::vector<JacobiDiagram> ds;
    for (const auto& e : corpus.entries) ds.push_back(diagram_from_key(e.key));
    for (std::size_t i = 0; i < ds.size(); ++i)
      for (std::size_t j = 0; j < ds.size(); ++j)
        CHECK((oracle::isomorphism_signs(ds[i], ds[j]) != 0) == (i == j));
  }
}

TEST_CASE("AS: an orientation-reversing automorphism gives sign 0") {
  // A chord plus a vertex with a self-loop on one leg has such a symmetry.
  using T = JacobiDiagram::Triple;
  JacobiDiagram tadpole(SkeletonKind::Circle, {0, 1, 2}, {T{10, 11, 12}},
                        {{0, 2}, {1, 10}, {11, 12}});
  CHECK(canonicalize(tadpole).sign == 0);
  CHECK(oracle::isomorphism_signs(tadpole, tadpole) == 3);
  DiagramSum s;
  s.add(tadpole, 5);
  CHECK(s.empty());

  // The wheel has no such symmetry; reversing every vertex flips sign by (-1)^m.
  for (int m = 2; m <= 4; ++m) {
    JacobiDiagram w = make_wheel(m, SkeletonKind::Circle);
    std::vector<JacobiDiagram::Triple> rev;
    for (auto t : w.vertices()) rev.push_back({t[0], t[2], t[1]});
    JacobiDiagram wr(w.skeleton(), w.legs(), rev, w.edges());
    CHECK(canonicalize(wr).key == canonicalize(w).key);
    CHECK(canonicalize(wr).sign == canonicalize(w).sign * (m % 2 ? -1 : 1));
  }
}

TEST_CASE("diagram sums combine by canonical key") {
  JacobiDiagram w = make_wheel(2, SkeletonKind::Circle);
  std::mt19937_64 rng(3);
  DiagramSum s;
  s.add(w, 2);
  oracle::Relabeled r = oracle::relabel(w, rng, false);
  s.add(r.diagram, -2);
  CHECK(s.empty());
  s.add(w, Rational(1, 3));
  CHECK(s.size() == 1);
  // Stored against the canonical representative, carrying its sign.
  const Canonical cw = canonicalize(w);
  CHECK(s.coefficient(cw.key) == Rational(cw.sign) / 3);
  DiagramSum t = s + s;
  CHECK(t.coefficient(cw.key) == Rational(2 * cw.sign) / 3);
  CHECK((t - s - s).empty());
}

TEST_CASE("directed keys distinguish orientations") {
  DirectedJacobiDiagram f = make_directed_wheel(3, SkeletonKind::Circle, true);
  DirectedJacobiDiagram b = make_directed_wheel(3, SkeletonKind::Circle, false);
  Canonical cf = canonicalize(f), cb = canonicalize(b);
  CHECK(cf.key.directed());
  CHECK(cf.key != cb.key);
  CHECK(canonicalize(f.base()).key == canonicalize(b.base()).key);
  DirectedJacobiDiagram back = directed_from_key(cf.key);
  CHECK(canonicalize(back).key == cf.key);
  CHECK(canonicalize(back).sign == 1);
}

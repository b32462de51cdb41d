#include "doctest.h"
#include "inhomcs/canonical.hpp"
#include "inhomcs/corpus.hpp"
#include "inhomcs/errors.hpp"
#include "inhomcs/orientations.hpp"

using namespace inhomcs;

namespace {

// Every arrow assignment, filtered by the one-in two-out rule.
int brute_legal_count(const JacobiDiagram& d) {
  const int E = d.edge_count();
  int count = 0;
  for (long mask = 0; mask < (1L << E); ++mask) {
    std::vector<HalfEdge> heads(E);
    for (int e = 0; e < E; ++e) heads[e] = mask >> e & 1 ? d.edges()[e].first : d.edges()[e].second;
    std::vector<int> in(d.vertex_count(), 0);
    for (HalfEdge h : heads)
      if (h >= d.leg_count()) ++in[(h - d.leg_count()) / 3];
    bool ok = true;
    for (int c : in) ok = ok && c == 1;
    count += ok;
  }
  return count;
}

std::vector<std::string> rules(const WheelReduction& r) {
  std::vector<std::string> out;
  for (const auto& s : r.trace) out.push_back(s.rule + " " + s.site);
  return out;
}

}  // namespace

TEST_CASE("legal orientation counts of small diagrams") {
  CHECK(legal_orientations(make_theta_power(1, SkeletonKind::Circle)).size() == 2);
  CHECK(legal_orientations(make_wheel(2, SkeletonKind::Circle)).size() == 2);
  CHECK(legal_orientations(make_tripod(SkeletonKind::Circle)).size() == 3);
  CHECK(legal_orientations(make_theta_power(3, SkeletonKind::Interval)).size() == 8);
  for (int m = 2; m <= 5; ++m) {
    OrientationSum s = legal_orientations(make_wheel(m, SkeletonKind::Circle));
    CHECK(s.size() == 2);
    for (const auto& o : s.orientations) CHECK(o.is_legal());
  }
}

TEST_CASE("orientation enumeration matches brute force over all arrow assignments") {
  for (SkeletonKind sk : {SkeletonKind::Circle, SkeletonKind::Interval}) {
    DiagramCorpus corpus = enumerate_diagrams(3, sk);
    for (const auto& e : corpus.entries) {
      JacobiDiagram d = diagram_from_key(e.key);
      OrientationSum s = legal_orientations(d);
      CHECK(static_cast<int>(s.size()) == brute_legal_count(d));
      CHECK(e.legally_orientable == !s.empty());
    }
  }
}

TEST_CASE("leg bound: legs >= degree for every legal orientation") {
  for (SkeletonKind sk : {SkeletonKind::Circle, SkeletonKind::Interval}) {
    DiagramCorpus corpus = enumerate_diagrams(4, sk);
    for (const auto& e : corpus.entries) {
      JacobiDiagram d = diagram_from_key(e.key);
      for (const auto& o : legal_orientations(d).orientations) {
        LegBoundReport r = verify_leg_bound(o);
        CHECK(r.holds);
        CHECK(r.legs >= r.degree);
        CHECK(r.degree == e.degree);
      }
    }
  }
  // Illegal input is refused.
  JacobiDiagram tri = make_tripod(SkeletonKind::Circle);
  std::vector<HalfEdge> heads;
  for (const auto& [a, b] : tri.edges()) heads.push_back(a >= tri.leg_count() ? a : b);
  CHECK_THROWS_AS(verify_leg_bound(DirectedJacobiDiagram(tri, heads)), InvalidArgument);
}

TEST_CASE("directed STU expansion at a vertex") {
  DirectedJacobiDiagram w = make_directed_wheel(2, SkeletonKind::Circle);
  StuApplication app = apply_directed_stu(w, 0, StuMode::Expand);
  CHECK(app.variant == "du");
  REQUIRE(app.terms.size() == 2);
  CHECK(app.terms[0].coeff == 1);
  CHECK(app.terms[1].coeff == -1);
  for (const auto& t : app.terms) {
    CHECK(t.diagram.base().leg_count() == 3);
    CHECK(degree(t.diagram) == 2);
    CHECK(t.diagram.is_legal());
  }
  // Leg of a chord: no vertex behind it.
  DirectedJacobiDiagram chord = legal_orientations(make_theta_power(1, SkeletonKind::Circle))
                                    .orientations.front();
  CHECK_THROWS_AS(apply_directed_stu(chord, 0, StuMode::Expand), NotApplicable);
}

TEST_CASE("directed STU swap of two inward legs") {
  // Two chords on an interval, both pointing into the skeleton at legs 1, 2.
  JacobiDiagram d = make_chord_diagram({{0, 2}, {1, 3}}, SkeletonKind::Interval);
  std::vector<HalfEdge> heads(2);
  for (int e = 0; e < 2; ++e) {
    auto [a, b] = d.edges()[e];
    heads[e] = (a == 1 || a == 2) ? a : b;
  }
  DirectedJacobiDiagram o(d, heads);
  StuApplication app = apply_directed_stu(o, 1, StuMode::Swap);
  CHECK(app.variant == "dd");
  REQUIRE(app.terms.size() == 1);
  CHECK(app.terms[0].coeff == 1);
  CHECK(canonicalize(app.terms[0].diagram.base()).key ==
        canonicalize(make_chord_diagram({{0, 1}, {2, 3}}, SkeletonKind::Interval)).key);
  CHECK_THROWS_AS(apply_directed_stu(o, 0, StuMode::Swap), NotApplicable);
  // Last leg of an interval has no right neighbour.
  CHECK_THROWS_AS(apply_directed_stu(o, 3, StuMode::Swap), NotApplicable);
}

TEST_CASE("zero pattern detection") {
  // Tripod with the arrow into its vertex from the middle leg: the two
  // outgoing edges end on legs 0 and 2, which are adjacent on a circle of
  // three legs but not on an interval.
  for (SkeletonKind sk : {SkeletonKind::Circle, SkeletonKind::Interval}) {
    JacobiDiagram tri = make_tripod(sk);
    std::vector<HalfEdge> heads;
    for (const auto& [a, b] : tri.edges()) {
      HalfEdge leg = a < tri.leg_count() ? a : b, slot = a < tri.leg_count() ? b : a;
      heads.push_back(leg == 1 ? slot : leg);
    }
    DirectedJacobiDiagram o(tri, heads);
    REQUIRE(o.is_legal());
    ZeroPattern z;
    CHECK(find_zero_pattern(o, z) == (sk == SkeletonKind::Circle));
    if (sk == SkeletonKind::Circle) CHECK((z.leg_a == 0 && z.leg_b == 2));
  }
  CHECK_FALSE(detect_zero_pattern(make_directed_wheel(3, SkeletonKind::Circle)));
}

TEST_CASE("wheel reduction traces") {
  WheelReduction r2 = reduce_wheel_on_circle(2);
  CHECK(r2.result.empty());
  CHECK(rules(r2) == std::vector<std::string>{"directed-stu:du leg 0",
                                              "zero-relation vertex 0 legs 0,2",
                                              "zero-relation vertex 0 legs 1,2"});
  WheelReduction r3 = reduce_wheel_on_circle(3);
  CHECK(r3.result.empty());
  CHECK(r3.trace.size() == 4);
  WheelReduction r4 = reduce_wheel_on_circle(4);
  CHECK(r4.result.empty());
  CHECK(rules(r4) == std::vector<std::string>{"directed-stu:du leg 0",
                                              "zero-relation vertex 2 legs 0,4",
                                              "commute-inward-legs legs 1,2",
                                              "commute-inward-legs legs 2,3",
                                              "zero-relation vertex 2 legs 3,4"});
  for (int m = 2; m <= 6; ++m) {
    CHECK(reduce_wheel_on_circle(m, SkeletonKind::Circle, true).result.empty());
    CHECK(reduce_wheel_on_circle(m, SkeletonKind::Circle, false).result.empty());
  }
  CHECK_THROWS_AS(reduce_wheel_on_circle(1), InvalidArgument);
  CHECK_THROWS_AS(reduce_wheel_on_circle(3, SkeletonKind::Interval), NotApplicable);
}

TEST_CASE("every step of a reduction is an STU or zero-relation consequence") {
  // The live terms after the first step are the STU expansion of the input.
  WheelReduction r = reduce_wheel_on_circle(4);
  StuApplication app = apply_directed_stu(r.input, 0, StuMode::Expand);
  DiagramSum first;
  for (const auto& t : r.trace.front().terms) first.add(t.diagram, t.coeff);
  CHECK(first == app.rhs());
  // Zero-relation steps remove exactly terms that show the pattern.
  for (std::size_t i = 1; i < r.trace.size(); ++i) {
    const auto& step = r.trace[i];
    if (step.rule != "zero-relation") continue;
    CHECK(step.terms.size() < r.trace[i - 1].terms.size());
  }
}

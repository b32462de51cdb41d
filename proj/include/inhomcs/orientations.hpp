#pragma once

#include <string>
#include <vector>

#include "inhomcs/canonical.hpp"
#include "inhomcs/diagram.hpp"
#include "inhomcs/rational.hpp"

namespace inhomcs {

/// All legal directings of one diagram, in a fixed enumeration order.
struct OrientationSum {
  std::vector<DirectedJacobiDiagram> orientations;

  std::size_t size() const { return orientations.size(); }
  bool empty() const { return orientations.empty(); }
  // Each orientation with coefficient +1, merged by canonical key.
  DiagramSum as_sum() const;
};

OrientationSum legal_orientations(const JacobiDiagram& d);

/// Result of pushing every edge's +1 along its arrow. leg_labels[p] is what
/// lands on leg p; vertex_residuals[v] is -1 plus the labels absorbed at v.
struct LegBoundReport {
  int degree = 0;
  int legs = 0;
  std::vector<int> leg_labels;
  std::vector<int> vertex_residuals;
  bool holds = false;  // legs >= degree
};

// Throws InvalidArgument when the orientation is not legal.
LegBoundReport verify_leg_bound(const DirectedJacobiDiagram& d);

enum class StuMode {
  Auto,    // expand at a vertex, otherwise commute two inward legs
  Expand,  // U = S - T at the vertex behind the leg
  Swap,    // two adjacent legs whose arrows both point at the skeleton
};

struct SignedDiagram {
  Rational coeff;
  DirectedJacobiDiagram diagram;
};

/// One directed STU application at a skeleton position. `variant` names the
/// arrows of the two legs produced by the rewrite (left then right, "u" away
/// from the skeleton, "d" towards it). `terms` is the right-hand side, which
/// equals the input in the directed algebra.
struct StuApplication {
  std::string variant;
  int leg = 0;
  std::vector<SignedDiagram> terms;

  DiagramSum rhs() const;
};

// Throws NotApplicable when the chosen rewrite has no site at `leg`.
StuApplication apply_directed_stu(const DirectedJacobiDiagram& d, int leg,
                                  StuMode mode = StuMode::Auto);

/// A vertex whose two outgoing edges end on skeleton-adjacent legs, if any.
struct ZeroPattern {
  int vertex = -1;
  int leg_a = -1;
  int leg_b = -1;
};

bool detect_zero_pattern(const DirectedJacobiDiagram& d);
bool find_zero_pattern(const DirectedJacobiDiagram& d, ZeroPattern& where);

struct RewriteStep {
  std::string rule;  // "directed-stu", "zero-relation", "commute-inward-legs"
  std::string site;
  std::vector<SignedDiagram> terms;  // diagrams live after the step
};

struct WheelReduction {
  int m = 0;
  DirectedJacobiDiagram input;
  std::vector<RewriteStep> trace;
  DiagramSum result;  // empty when the procedure reaches zero
};

/// Reduces the directed m-wheel on a circle: one directed STU, the zero
/// relation on one tree, transport of a crossed leg across inward legs, the
/// zero relation on the other. Throws InvalidArgument for m < 2 and
/// NotApplicable on an interval.
WheelReduction reduce_wheel_on_circle(int m, SkeletonKind skeleton = SkeletonKind::Circle,
                                      bool forward = true);

}  // namespace inhomcs

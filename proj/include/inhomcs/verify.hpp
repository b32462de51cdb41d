#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "inhomcs/geometry.hpp"
#include "inhomcs/io.hpp"
#include "inhomcs/lie.hpp"

namespace inhomcs {

/// Outcome of one verification run. `pass` is true iff every asserted
/// identity held; `report` is the machine-readable record of what was
/// computed, including informational values that are not asserted.
struct CheckResult {
  bool pass = false;
  std::string summary;
  Json report;
};

/// The double of a base algebra with the three representations used by the
/// checks: R(B); R_phi(B) with phi = trace, where bar elements act through a
/// central shift; and R(B) (x) R_phi(B).
struct DoubleBank {
  explicit DoubleBank(const AlgebraSpec& base = {});

  LieAlgebraData g;
  Representation B;
  DoubleAlgebra l0;
  Representation R, R_phi, R_product;

  struct Named {
    std::string name;
    const Representation* rep;
  };
  std::vector<Named> all() const;
};

// Directed STU + zero relations and directed_weight_sum under R, per m.
CheckResult check_wheel_vanish(const std::vector<int>& ms, const AlgebraSpec& base = {});

// W(theta) under R is nonzero and W(theta^k) * d^(k-1) = W(theta)^k for
// k <= max_power, d the representation dimension. The same numbers under
// R_phi are reported alongside without being asserted.
CheckResult check_framing(int max_power, const AlgebraSpec& base = {});

// Every legal orientation of every corpus diagram up to max_degree, on both
// skeletons, has at least `degree` legs.
CheckResult check_leg_bound(int max_degree, int jobs = 1);

// directed_weight_sum = weight_circle on every circle corpus class up to
// max_degree, under each representation of the bank.
CheckResult check_orientation_equivalence(int max_degree, const AlgebraSpec& base = {},
                                          int jobs = 1);

struct SigmaOptions {
  bool check_chi = true;       // Sigma_m = W_{gl(n),B}(chi(m-wheel))
  bool check_fast = true;      // sigma_wheel_fast = sigma_m
  bool check_leading = true;   // degree m + 1 and leading coefficient m (even m)
  bool check_orientations = true;  // both legal orientations agree
  int chi_max_n = 3;           // chi weights are only evaluated for n <= this
};

// Sigma_m(l(directed m-wheel)) in gl(n) defining for each n, with
// interpolation in n.
CheckResult check_sigma(int m, const std::vector<int>& ns, const SigmaOptions& opts = {});

// Random directed STU applications over the corpus up to max_degree, both
// skeletons; both sides paired under every representation of the bank.
CheckResult check_stu_random(int count, std::uint64_t seed, int max_degree = 3,
                             const AlgebraSpec& base = {});

// Exact writhe; with mc_samples > 0 also a Monte Carlo estimate, asserted to
// agree within 3 standard errors.
CheckResult check_writhe(const PolygonalCurve& c, double clearance, std::int64_t mc_samples,
                         std::uint64_t seed, int jobs = 1);

// Gauss linking number, asserted within tol of an integer.
CheckResult check_link(const PolygonalCurve& a, const PolygonalCurve& b, double clearance,
                       double tol = 1e-6);

}  // namespace inhomcs

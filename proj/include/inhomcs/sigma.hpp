#pragma once

#include <vector>

#include "inhomcs/canonical.hpp"
#include "inhomcs/diagram.hpp"
#include "inhomcs/lie.hpp"
#include "inhomcs/matrix.hpp"
#include "inhomcs/weights.hpp"

namespace inhomcs {

/// A 2n x 2n matrix viewed as [[A, B], [C, D]] with n x n blocks.
class BlockMatrix2n {
 public:
  explicit BlockMatrix2n(Matrix m);
  static BlockMatrix2n from_blocks(const Matrix& a, const Matrix& b, const Matrix& c,
                                   const Matrix& d);

  int n() const { return full_.rows() / 2; }
  const Matrix& full() const { return full_; }
  Matrix a() const { return full_.block(0, 0, n(), n()); }
  Matrix b() const { return full_.block(0, n(), n(), n()); }
  Matrix c() const { return full_.block(n(), 0, n(), n()); }
  Matrix d() const { return full_.block(n(), n(), n(), n()); }

  friend bool operator==(const BlockMatrix2n&, const BlockMatrix2n&) = default;

 private:
  Matrix full_;
};

// [[0, 0], [I, 0]]
BlockMatrix2n block_C(int n);

// Coproduct applied m-1 times: each letter goes to one of m slots, keeping
// the relative order within a slot.
EnvelopingTensor delta_m(const EnvelopingTensor& w, int m);

// tau_1 C tau_2 C ... tau_m C
BlockMatrix2n lambda_C(const std::vector<BlockMatrix2n>& taus);

// Trace of the upper-left block.
Rational half_trace(const BlockMatrix2n& m);

/// Tr_1/2(lambda(R^{(x)m}(Delta^m(w)))) computed lazily word by word: slots
/// are filled left to right and a branch is dropped as soon as a slot
/// product or a partial lambda product is zero.
Rational sigma_m(const EnvelopingTensor& w, const Representation& R, int m);

// The same value from a materialized delta_m; only practical for small input.
Rational sigma_m_reference(const EnvelopingTensor& w, const Representation& R, int m);

// Sum over all leg orders, with multiplicity.
DiagramSum chi(const JacobiDiagram& d);
DiagramSum chi(const DirectedJacobiDiagram& d);
// Number of permutations chi sums over (before canonical collapse).
long long chi_term_count(const JacobiDiagram& d);

/// Sigma_m of l(directed m-wheel) using only the m! one-letter-per-slot
/// terms: sum over sigma of Tr_B(u_sigma(1) ... u_sigma(m)). Throws
/// std::logic_error if the contracted wheel has a plain-copy letter.
Rational sigma_wheel_fast(int m, const LieAlgebraData& g, const Representation& B,
                          bool forward = true);

// Full pipeline value Sigma_m(l(directed m-wheel)) for the double of g with R(B).
Rational sigma_wheel(int m, const LieAlgebraData& g, const Representation& B,
                     bool forward = true);

/// Dense univariate polynomial with rational coefficients, lowest degree
/// first, no trailing zeros (the zero polynomial is empty).
struct Polynomial {
  std::vector<Rational> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Rational leading() const { return coeffs.empty() ? Rational(0) : coeffs.back(); }
  Rational operator()(const Rational& x) const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

std::string to_string(const Polynomial& p, const char* var = "n");

// Exact Lagrange interpolation through all points. Duplicate abscissae throw
// InvalidArgument.
Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points);

/// Interpolates through the first degree_bound + 1 points and checks the
/// rest. consistent is false when some extra point is off the polynomial.
struct InterpolationResult {
  Polynomial poly;
  bool consistent = true;
};
InterpolationResult interpolate_bounded(const std::vector<std::pair<Rational, Rational>>& points,
                                        int degree_bound);

}  // namespace inhomcs

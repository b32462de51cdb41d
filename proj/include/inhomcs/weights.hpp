#pragma once

#include <map>
#include <vector>

#include "inhomcs/canonical.hpp"
#include "inhomcs/diagram.hpp"
#include "inhomcs/lie.hpp"
#include "inhomcs/matrix.hpp"
#include "inhomcs/rational.hpp"

namespace inhomcs {

using Word = std::vector<int>;

/// Formal sum of m-tuples of words in the basis indices of an algebra, i.e.
/// an element of U^{(x)m}. Words are raw (no normal ordering).
class EnvelopingTensor {
 public:
  using Key = std::vector<Word>;
  using Terms = std::map<Key, Rational>;

  explicit EnvelopingTensor(int arity = 1);
  static EnvelopingTensor unit(int arity = 1);

  int arity() const { return arity_; }
  void add(const Key& key, const Rational& coeff);
  void add_word(const Word& word, const Rational& coeff) { add(Key{word}, coeff); }

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Key& key) const;

  EnvelopingTensor& operator+=(const EnvelopingTensor& o);
  EnvelopingTensor& operator*=(const Rational& s);
  friend bool operator==(const EnvelopingTensor&, const EnvelopingTensor&) = default;

 private:
  int arity_;
  Terms terms_;
};

/// The labeling and contracting map: a structure-constant tensor f_abc per
/// vertex (slots in triple order), an inverse metric per edge, free indices
/// at the legs read in skeleton order. A circle diagram is cut just before
/// leg 0. The directed overload restricts each half-edge to the plain copy
/// (tail) or the bar copy (head) of the double.
EnvelopingTensor contract_l(const JacobiDiagram& d, const LieAlgebraData& algebra);
EnvelopingTensor contract_l(const DirectedJacobiDiagram& d, const DoubleAlgebra& algebra);
// Always throws InvalidArgument: arrows only make sense for a double.
EnvelopingTensor contract_l(const DirectedJacobiDiagram& d, const LieAlgebraData& algebra);

// sum_w c_w rho(w_1) ... rho(w_k) for an arity-1 tensor.
Matrix represent(const EnvelopingTensor& w, const Representation& rho);
// Tr of the above, without forming the last product.
Rational trace(const EnvelopingTensor& w, const Representation& rho);

Rational weight_circle(const JacobiDiagram& d, const LieAlgebraData& algebra,
                       const Representation& rho);
Rational weight_circle(const DirectedJacobiDiagram& d, const DoubleAlgebra& algebra,
                       const Representation& rho);
// Sum over legal orientations of the two-index contraction, traced.
Rational directed_weight_sum(const JacobiDiagram& d, const DoubleAlgebra& algebra,
                             const Representation& rho);

Matrix weight_interval(const JacobiDiagram& d, const LieAlgebraData& algebra,
                       const Representation& rho);
Matrix weight_interval(const DirectedJacobiDiagram& d, const DoubleAlgebra& algebra,
                       const Representation& rho);

/// Weight system used to pair with formal diagram sums. Directed keys need
/// the double; undirected keys are contracted in `algebra` (which is the
/// double's algebra when one is given).
struct WeightSystem {
  const LieAlgebraData* algebra = nullptr;
  const DoubleAlgebra* dbl = nullptr;
  const Representation* rho = nullptr;

  WeightSystem(const LieAlgebraData& g, const Representation& r) : algebra(&g), rho(&r) {}
  WeightSystem(const DoubleAlgebra& l0, const Representation& r)
      : algebra(&l0.algebra), dbl(&l0), rho(&r) {}
};

// Circle keys are traced; every key must be on a circle.
Rational pair_circle(const DiagramSum& sum, const WeightSystem& ws);
// Interval keys give matrices; every key must be on an interval.
Matrix pair_interval(const DiagramSum& sum, const WeightSystem& ws);

}  // namespace inhomcs

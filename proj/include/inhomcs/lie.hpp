#pragma once

#include <string>
#include <vector>

#include "inhomcs/matrix.hpp"
#include "inhomcs/rational.hpp"

namespace inhomcs {

struct StructureTerm {
  int index;
  Rational coeff;
};

// One nonzero entry of a rank-3 or rank-2 tensor in the chosen basis.
struct TensorEntry3 {
  int i, j, k;
  Rational value;
};
struct TensorEntry2 {
  int i, j;
  Rational value;
};

/// A finite-dimensional metrized Lie algebra over Q in a fixed basis.
///
/// Brackets are stored sparsely: bracket(i, j) lists the c^k_ij. The metric
/// t_ij and its inverse t^ij are dense. The lowered structure constants
/// f_ijk = <[X_i, X_j], X_k> are precomputed as a nonzero list. Construction
/// validates antisymmetry, the Jacobi identity, nondegeneracy and
/// ad-invariance exactly and throws InvalidArgument on the first failure.
class LieAlgebraData {
 public:
  using Bracket = std::vector<StructureTerm>;

  LieAlgebraData(std::string name, std::vector<std::string> labels,
                 std::vector<Bracket> brackets, Matrix metric);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }

  const Bracket& bracket(int i, int j) const { return brackets_[i * dim() + j]; }
  const Matrix& metric() const { return metric_; }
  const Matrix& metric_inverse() const { return metric_inverse_; }

  const std::vector<TensorEntry3>& lowered_structure() const { return lowered_; }
  const std::vector<TensorEntry2>& inverse_metric_entries() const { return inverse_entries_; }

  // f_ijk, looked up from the dense cache.
  const Rational& f(int i, int j, int k) const { return dense_f_[(i * dim() + j) * dim() + k]; }

 private:
  void validate() const;

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Bracket> brackets_;
  Matrix metric_;
  Matrix metric_inverse_;
  std::vector<Rational> dense_f_;
  std::vector<TensorEntry3> lowered_;
  std::vector<TensorEntry2> inverse_entries_;
};

/// gl(n): basis E_ij in lexicographic order (index i*n + j, labels "E11",
/// "E12", ...), metric from the trace of the defining representation.
LieAlgebraData build_gl(int n);

/// sl(2): basis H, E, F with [H,E]=2E, [H,F]=-2F, [E,F]=H; trace-form metric.
LieAlgebraData build_sl2();

/// The inhomogeneous double of g: basis X_0..X_{d-1}, Xbar_0..Xbar_{d-1}.
/// [X,X] is g's bracket, [X_i, Xbar_j] = bar([X_i,X_j]), the bar copy is
/// abelian; the metric pairs X_i with Xbar_j through g's metric only.
struct DoubleAlgebra {
  LieAlgebraData base;
  LieAlgebraData algebra;

  int base_dim() const { return base.dim(); }
  int bar(int i) const { return base.dim() + i; }
  bool is_bar(int index) const { return index >= base.dim(); }
};

DoubleAlgebra make_double(const LieAlgebraData& g);

/// Matrices of a representation, one per basis element, validated against the
/// algebra's brackets at construction.
class Representation {
 public:
  Representation(const LieAlgebraData& g, std::string name, std::vector<Matrix> matrices);

  const std::string& name() const { return name_; }
  int algebra_dim() const { return static_cast<int>(matrices_.size()); }
  int dim() const { return dim_; }
  const Matrix& operator()(int basis_index) const { return matrices_[basis_index]; }
  const std::vector<Matrix>& matrices() const { return matrices_; }

 private:
  std::string name_;
  int dim_ = 0;
  std::vector<Matrix> matrices_;
};

Representation defining_gl(const LieAlgebraData& gl_n, int n);
Representation defining_sl2(const LieAlgebraData& sl2);
Representation adjoint(const LieAlgebraData& g);

/// The 2n-dimensional representation of the double built from an
/// n-dimensional representation B of the base algebra:
///   R(X)    = [[B(X), 0   ], [0, B(X)]]
///   R(Xbar) = [[0,    B(X)], [0, 0   ]]
/// A nonempty central_character phi adds phi(X) * identity to R(Xbar); this is
/// a representation exactly when phi vanishes on [g, g].
Representation rep_R(const Representation& B, const DoubleAlgebra& L0,
                     const std::vector<Rational>& central_character = {});

// rho1 (x) 1 + 1 (x) rho2.
Representation tensor_product(const LieAlgebraData& g, const Representation& a,
                              const Representation& b);

/// Named algebra with its defining representation, as selected on the command
/// line or in an algebra spec file.
struct AlgebraSpec {
  std::string family = "gl";  // "gl" or "sl2"
  int n = 2;
  std::string rep = "defining";
};

struct AlgebraWithRep {
  LieAlgebraData algebra;
  Representation rep;
};

AlgebraWithRep build_from_spec(const AlgebraSpec& spec);

}  // namespace inhomcs

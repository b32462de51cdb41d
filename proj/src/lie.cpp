#include "inhomcs/lie.hpp"

#include <string>

#include "inhomcs/errors.hpp"

namespace inhomcs {

namespace {

using Vec = std::vector<Rational>;

Vec bracket_vec(const LieAlgebraData& g, const Vec& a, int j) {
  Vec out(g.dim());
  for (int i = 0; i < g.dim(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (const auto& t : g.bracket(i, j)) out[t.index] += a[i] * t.coeff;
  }
  return out;
}

Vec basis_bracket(const LieAlgebraData& g, int i, int j) {
  Vec out(g.dim());
  for (const auto& t : g.bracket(i, j)) out[t.index] += t.coeff;
  return out;
}

std::string idx(int i) { return std::to_string(i); }

}  // namespace

LieAlgebraData::LieAlgebraData(std::string name, std::vector<std::string> labels,
                               std::vector<Bracket> brackets, Matrix metric)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      brackets_(std::move(brackets)),
      metric_(std::move(metric)) {
  const int d = dim();
  if (d < 1) throw InvalidArgument("Lie algebra needs a nonempty basis");
  if (static_cast<int>(brackets_.size()) != d * d)
    throw InvalidArgument("bracket table must have dim^2 entries");
  if (metric_.rows() != d || metric_.cols() != d)
    throw InvalidArgument("metric must be dim x dim");
  for (const auto& b : brackets_)
    for (const auto& t : b)
      if (t.index < 0 || t.index >= d) throw InvalidArgument("bracket refers to unknown basis index");

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (metric_(i, j) != metric_(j, i))
        throw InvalidArgument("metric is not symmetric at (" + idx(i) + "," + idx(j) + ")");
  try {
    metric_inverse_ = inverse(metric_);
  } catch (const InvalidArgument&) {
    throw InvalidArgument("metric of " + name_ + " is degenerate");
  }

  dense_f_.assign(static_cast<std::size_t>(d) * d * d, Rational(0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (const auto& t : bracket(i, j))
        for (int k = 0; k < d; ++k)
          if (sgn(metric_(t.index, k)) != 0)
            dense_f_[(i * d + j) * d + k] += t.coeff * metric_(t.index, k);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (sgn(f(i, j, k)) != 0) lowered_.push_back({i, j, k, f(i, j, k)});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (sgn(metric_inverse_(i, j)) != 0) inverse_entries_.push_back({i, j, metric_inverse_(i, j)});

  validate();
}

void LieAlgebraData::validate() const {
  const int d = dim();
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Vec a = basis_bracket(*this, i, j);
      Vec b = basis_bracket(*this, j, i);
      for (int k = 0; k < d; ++k)
        if (a[k] != -b[k])
          throw InvalidArgument(name_ + ": bracket not antisymmetric at (" + idx(i) + "," +
                                idx(j) + ")");
    }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        // [[i,j],k] + [[j,k],i] + [[k,i],j]
        Vec s = bracket_vec(*this, basis_bracket(*this, i, j), k);
        Vec t = bracket_vec(*this, basis_bracket(*this, j, k), i);
        Vec u = bracket_vec(*this, basis_bracket(*this, k, i), j);
        for (int l = 0; l < d; ++l)
          if (sgn(s[l] + t[l] + u[l]) != 0)
            throw InvalidArgument(name_ + ": Jacobi identity fails at (" + idx(i) + "," +
                                  idx(j) + "," + idx(k) + ")");
      }
  for (const auto& e : lowered_) {
    if (f(e.j, e.i, e.k) != -e.value || f(e.j, e.k, e.i) != e.value)
      throw InvalidArgument(name_ + ": metric is not ad-invariant at (" + idx(e.i) + "," +
                            idx(e.j) + "," + idx(e.k) + ")");
  }
}

LieAlgebraData build_gl(int n) {
  if (n < 1) throw InvalidArgument("gl(n) needs n >= 1, got " + std::to_string(n));
  const int d = n * n;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) labels.push_back("E" + idx(i + 1) + idx(j + 1));
  std::vector<LieAlgebraData::Bracket> br(d * d);
  auto E = [n](int i, int j) { return i * n + j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          auto& b = br[E(i, j) * d + E(k, l)];
          // [E_ij, E_kl] = d_jk E_il - d_li E_kj
          if (j == k && l == i) {
            if (i != k) {
              b.push_back({E(i, l), 1});
              b.push_back({E(k, j), -1});
            }
          } else if (j == k) {
            b.push_back({E(i, l), 1});
          } else if (l == i) {
            b.push_back({E(k, j), -1});
          }
        }
  Matrix metric(d, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) metric(E(i, j), E(j, i)) = 1;
  return LieAlgebraData("gl(" + idx(n) + ")", labels, br, metric);
}

LieAlgebraData build_sl2() {
  // 0 = H, 1 = E, 2 = F
  std::vector<LieAlgebraData::Bracket> br(9);
  br[0 * 3 + 1] = {{1, 2}};
  br[1 * 3 + 0] = {{1, -2}};
  br[0 * 3 + 2] = {{2, -2}};
  br[2 * 3 + 0] = {{2, 2}};
  br[1 * 3 + 2] = {{0, 1}};
  br[2 * 3 + 1] = {{0, -1}};
  Matrix metric(3, 3);
  metric(0, 0) = 2;
  metric(1, 2) = 1;
  metric(2, 1) = 1;
  return LieAlgebraData("sl(2)", {"H", "E", "F"}, br, metric);
}

DoubleAlgebra make_double(const LieAlgebraData& g) {
  const int d = g.dim();
  const int D = 2 * d;
  std::vector<std::string> labels;
  for (const auto& l : g.labels()) labels.push_back(l);
  for (const auto& l : g.labels()) labels.push_back(l + "bar");
  std::vector<LieAlgebraData::Bracket> br(D * D);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      br[i * D + j] = g.bracket(i, j);
      LieAlgebraData::Bracket barred;
      for (const auto& t : g.bracket(i, j)) barred.push_back({d + t.index, t.coeff});
      br[i * D + (d + j)] = barred;
      LieAlgebraData::Bracket neg;
      for (const auto& t : barred) neg.push_back({t.index, -t.coeff});
      br[(d + j) * D + i] = neg;
    }
  Matrix metric(D, D);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      metric(i, d + j) = g.metric()(i, j);
      metric(d + j, i) = g.metric()(i, j);
    }
  LieAlgebraData algebra("double(" + g.name() + ")", labels, br, metric);
  return DoubleAlgebra{g, std::move(algebra)};
}

Representation::Representation(const LieAlgebraData& g, std::string name,
                               std::vector<Matrix> matrices)
    : name_(std::move(name)), matrices_(std::move(matrices)) {
  if (static_cast<int>(matrices_.size()) != g.dim())
    throw InvalidArgument("representation " + name_ + " needs one matrix per basis element");
  dim_ = matrices_.front().rows();
  for (const auto& m : matrices_)
    if (m.rows() != dim_ || m.cols() != dim_)
      throw InvalidArgument("representation " + name_ + " has inconsistent matrix sizes");
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      Matrix lhs(dim_, dim_);
      for (const auto& t : g.bracket(i, j)) lhs += t.coeff * matrices_[t.index];
      if (lhs != commutator(matrices_[i], matrices_[j]))
        throw InvalidArgument("representation " + name_ + " does not respect the bracket [" +
                              g.labels()[i] + "," + g.labels()[j] + "]");
    }
}

Representation defining_gl(const LieAlgebraData& gl_n, int n) {
  if (gl_n.dim() != n * n) throw InvalidArgument("defining_gl: dimension mismatch");
  std::vector<Matrix> ms;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix m(n, n);
      m(i, j) = 1;
      ms.push_back(std::move(m));
    }
  return Representation(gl_n, "defining", std::move(ms));
}

Representation defining_sl2(const LieAlgebraData& sl2) {
  Matrix h(2, 2), e(2, 2), f(2, 2);
  h(0, 0) = 1;
  h(1, 1) = -1;
  e(0, 1) = 1;
  f(1, 0) = 1;
  return Representation(sl2, "defining", {h, e, f});
}

Representation adjoint(const LieAlgebraData& g) {
  const int d = g.dim();
  std::vector<Matrix> ms;
  for (int i = 0; i < d; ++i) {
    Matrix m(d, d);
    for (int j = 0; j < d; ++j)
      for (const auto& t : g.bracket(i, j)) m(t.index, j) += t.coeff;
    ms.push_back(std::move(m));
  }
  return Representation(g, "adjoint", std::move(ms));
}

Representation rep_R(const Representation& B, const DoubleAlgebra& L0,
                     const std::vector<Rational>& central_character) {
  const int d = L0.base_dim();
  const int n = B.dim();
  if (B.algebra_dim() != d) throw InvalidArgument("rep_R: B is not a representation of the base");
  if (!central_character.empty() && static_cast<int>(central_character.size()) != d)
    throw InvalidArgument("rep_R: central character needs one value per base element");
  std::vector<Matrix> ms(2 * d, Matrix(2 * n, 2 * n));
  for (int i = 0; i < d; ++i) {
    ms[i].set_block(0, 0, B(i));
    ms[i].set_block(n, n, B(i));
    ms[d + i].set_block(0, n, B(i));
    if (!central_character.empty() && sgn(central_character[i]) != 0)
      for (int r = 0; r < 2 * n; ++r) ms[d + i](r, r) = central_character[i];
  }
  std::string name = central_character.empty() ? "R(" + B.name() + ")"
                                               : "R_phi(" + B.name() + ")";
  return Representation(L0.algebra, name, std::move(ms));
}

Representation tensor_product(const LieAlgebraData& g, const Representation& a,
                              const Representation& b) {
  if (a.algebra_dim() != g.dim() || b.algebra_dim() != g.dim())
    throw InvalidArgument("tensor_product: representations of a different algebra");
  const int p = a.dim();
  const int q = b.dim();
  std::vector<Matrix> ms;
  for (int x = 0; x < g.dim(); ++x) {
    Matrix m(p * q, p * q);
    for (int i = 0; i < p; ++i)
      for (int k = 0; k < p; ++k) {
        if (sgn(a(x)(i, k)) == 0) continue;
        for (int j = 0; j < q; ++j) m(i * q + j, k * q + j) += a(x)(i, k);
      }
    for (int j = 0; j < q; ++j)
      for (int l = 0; l < q; ++l) {
        if (sgn(b(x)(j, l)) == 0) continue;
        for (int i = 0; i < p; ++i) m(i * q + j, i * q + l) += b(x)(j, l);
      }
    ms.push_back(std::move(m));
  }
  return Representation(g, a.name() + "*" + b.name(), std::move(ms));
}

AlgebraWithRep build_from_spec(const AlgebraSpec& spec) {
  if (spec.rep != "defining" && spec.rep != "adjoint")
    throw InvalidArgument("unknown representation '" + spec.rep + "'");
  if (spec.family == "gl") {
    LieAlgebraData g = build_gl(spec.n);
    Representation r = spec.rep == "adjoint" ? adjoint(g) : defining_gl(g, spec.n);
    return {std::move(g), std::move(r)};
  }
  if (spec.family == "sl2") {
    LieAlgebraData g = build_sl2();
    Representation r = spec.rep == "adjoint" ? adjoint(g) : defining_sl2(g);
    return {std::move(g), std::move(r)};
  }
  throw InvalidArgument("unknown algebra family '" + spec.family + "'");
}

}  // namespace inhomcs

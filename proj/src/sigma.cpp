#include "inhomcs/sigma.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "inhomcs/errors.hpp"

namespace inhomcs {

BlockMatrix2n::BlockMatrix2n(Matrix m) : full_(std::move(m)) {
  if (full_.rows() != full_.cols() || full_.rows() % 2 != 0)
    throw InvalidArgument("block matrix must be square of even size");
}

BlockMatrix2n BlockMatrix2n::from_blocks(const Matrix& a, const Matrix& b, const Matrix& c,
                                         const Matrix& d) {
  const int n = a.rows();
  for (const Matrix* x : {&a, &b, &c, &d})
    if (x->rows() != n || x->cols() != n) throw InvalidArgument("blocks must all be n x n");
  Matrix m(2 * n, 2 * n);
  m.set_block(0, 0, a);
  m.set_block(0, n, b);
  m.set_block(n, 0, c);
  m.set_block(n, n, d);
  return BlockMatrix2n(std::move(m));
}

BlockMatrix2n block_C(int n) {
  Matrix m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) m(n + i, i) = 1;
  return BlockMatrix2n(std::move(m));
}

EnvelopingTensor delta_m(const EnvelopingTensor& w, int m) {
  if (m < 1) throw InvalidArgument("delta_m needs m >= 1, got " + std::to_string(m));
  if (w.arity() != 1) throw InvalidArgument("delta_m expects an arity-1 tensor");
  EnvelopingTensor out(m);
  for (const auto& [key, coeff] : w.terms()) {
    const Word& word = key[0];
    const std::size_t k = word.size();
    std::vector<int> slot(k, 0);
    while (true) {
      EnvelopingTensor::Key t(m);
      for (std::size_t i = 0; i < k; ++i) t[slot[i]].push_back(word[i]);
      out.add(t, coeff);
      std::size_t i = 0;
      while (i < k && ++slot[i] == m) slot[i++] = 0;
      if (i == k) break;
    }
  }
  return out;
}

BlockMatrix2n lambda_C(const std::vector<BlockMatrix2n>& taus) {
  if (taus.empty()) throw InvalidArgument("lambda needs at least one factor");
  const int n = taus.front().n();
  const Matrix c = block_C(n).full();
  Matrix acc = Matrix::identity(2 * n);
  for (const auto& t : taus) {
    if (t.n() != n) throw InvalidArgument("lambda factors have different sizes");
    acc = acc * t.full() * c;
  }
  return BlockMatrix2n(std::move(acc));
}

Rational half_trace(const BlockMatrix2n& m) {
  Rational t = 0;
  for (int i = 0; i < m.n(); ++i) t += m.full()(i, i);
  return t;
}

namespace {

// Row-sparse rational matrix for the slot products, which stay very sparse.
struct Sparse {
  int dim = 0;
  std::vector<std::vector<std::pair<int, Rational>>> rows;

  explicit Sparse(int n = 0) : dim(n), rows(n) {}

  static Sparse identity(int n) {
    Sparse s(n);
    for (int i = 0; i < n; ++i) s.rows[i].emplace_back(i, 1);
    return s;
  }
  static Sparse of(const Matrix& m) {
    Sparse s(m.rows());
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        if (sgn(m(r, c)) != 0) s.rows[r].emplace_back(c, m(r, c));
    return s;
  }
  bool zero() const {
    for (const auto& r : rows)
      if (!r.empty()) return false;
    return true;
  }
};

Sparse mul(const Sparse& a, const Sparse& b) {
  Sparse out(a.dim);
  std::vector<Rational> acc(a.dim);
  std::vector<char> touched(a.dim, 0);
  std::vector<int> cols;
  Rational t;
  for (int i = 0; i < a.dim; ++i) {
    cols.clear();
    for (const auto& [k, av] : a.rows[i])
      for (const auto& [j, bv] : b.rows[k]) {
        mpq_mul(t.get_mpq_t(), av.get_mpq_t(), bv.get_mpq_t());
        acc[j] += t;
        if (!touched[j]) {
          touched[j] = 1;
          cols.push_back(j);
        }
      }
    std::sort(cols.begin(), cols.end());
    for (int j : cols) {
      if (sgn(acc[j]) != 0) out.rows[i].emplace_back(j, acc[j]);
      acc[j] = 0;
      touched[j] = 0;
    }
  }
  return out;
}

// M * C with C = [[0,0],[I,0]]: column n + c of M moves to column c.
Sparse times_C(const Sparse& m) {
  const int n = m.dim / 2;
  Sparse out(m.dim);
  for (int r = 0; r < m.dim; ++r)
    for (const auto& [c, v] : m.rows[r])
      if (c >= n) out.rows[r].emplace_back(c - n, v);
  return out;
}

// Tr_1/2(M * C) = sum_i M(i, n + i).
Rational half_trace_times_C(const Sparse& m) {
  const int n = m.dim / 2;
  Rational t = 0;
  for (int i = 0; i < n; ++i)
    for (const auto& [c, v] : m.rows[i])
      if (c == n + i) t += v;
  return t;
}

class LazySigma {
 public:
  LazySigma(const Representation& R, int m) : m_(m), dim_(R.dim()) {
    for (const auto& x : R.matrices()) reps_.push_back(Sparse::of(x));
  }

  Rational run(const Word& word) {
    word_ = &word;
    total_ = 0;
    slot(0, 0, Sparse::identity(dim_));
    return total_;
  }

 private:
  using Mask = unsigned long long;

  void slot(int s, Mask used, const Sparse& prefix) {
    const int k = static_cast<int>(word_->size());
    if (s == m_ - 1) {
      Sparse tau = Sparse::identity(dim_);
      for (int i = 0; i < k; ++i) {
        if (used >> i & 1) continue;
        tau = mul(tau, reps_[(*word_)[i]]);
        if (tau.zero()) return;
      }
      total_ += half_trace_times_C(mul(prefix, tau));
      return;
    }
    choose(s, 0, used, 0, Sparse::identity(dim_), prefix);
  }

  void choose(int s, int i, Mask used, Mask chosen, const Sparse& tau, const Sparse& prefix) {
    const int k = static_cast<int>(word_->size());
    if (i == k) {
      Sparse next = times_C(mul(prefix, tau));
      if (!next.zero()) slot(s + 1, used | chosen, next);
      return;
    }
    if (used >> i & 1) {
      choose(s, i + 1, used, chosen, tau, prefix);
      return;
    }
    choose(s, i + 1, used, chosen, tau, prefix);
    Sparse with = mul(tau, reps_[(*word_)[i]]);
    if (!with.zero()) choose(s, i + 1, used, chosen | (Mask(1) << i), with, prefix);
  }

  int m_;
  int dim_;
  std::vector<Sparse> reps_;
  const Word* word_ = nullptr;
  Rational total_;
};

void check_sigma_input(const EnvelopingTensor& w, const Representation& R, int m) {
  if (m < 1) throw InvalidArgument("sigma_m needs m >= 1, got " + std::to_string(m));
  if (w.arity() != 1) throw InvalidArgument("sigma_m expects an arity-1 tensor");
  if (R.dim() % 2 != 0) throw InvalidArgument("sigma_m needs an even-dimensional representation");
}

}  // namespace

Rational sigma_m(const EnvelopingTensor& w, const Representation& R, int m) {
  check_sigma_input(w, R, m);
  LazySigma lazy(R, m);
  Rational total = 0;
  for (const auto& [key, coeff] : w.terms()) {
    if (key[0].size() > 63) throw InvalidArgument("word too long for sigma_m");
    for (int x : key[0])
      if (x < 0 || x >= R.algebra_dim()) throw InvalidArgument("word letter outside the algebra");
    Rational v = lazy.run(key[0]);
    if (sgn(v) != 0) total += coeff * v;
  }
  return total;
}

Rational sigma_m_reference(const EnvelopingTensor& w, const Representation& R, int m) {
  check_sigma_input(w, R, m);
  EnvelopingTensor dm = delta_m(w, m);
  Rational total = 0;
  for (const auto& [key, coeff] : dm.terms()) {
    std::vector<BlockMatrix2n> taus;
    for (const Word& part : key) {
      EnvelopingTensor single(1);
      single.add_word(part, 1);
      taus.emplace_back(represent(single, R));
    }
    total += coeff * half_trace(lambda_C(taus));
  }
  return total;
}

DiagramSum chi(const JacobiDiagram& d) {
  std::vector<int> order(d.leg_count());
  std::iota(order.begin(), order.end(), 0);
  DiagramSum s;
  do {
    s.add(permute_legs(d, order), 1);
  } while (std::next_permutation(order.begin(), order.end()));
  return s;
}

DiagramSum chi(const DirectedJacobiDiagram& d) {
  std::vector<int> order(d.base().leg_count());
  std::iota(order.begin(), order.end(), 0);
  DiagramSum s;
  do {
    s.add(permute_legs(d, order), 1);
  } while (std::next_permutation(order.begin(), order.end()));
  return s;
}

long long chi_term_count(const JacobiDiagram& d) {
  long long f = 1;
  for (int i = 2; i <= d.leg_count(); ++i) f *= i;
  return f;
}

Rational sigma_wheel_fast(int m, const LieAlgebraData& g, const Representation& B,
                          bool forward) {
  if (B.algebra_dim() != g.dim())
    throw InvalidArgument("B is not a representation of " + g.name());
  DoubleAlgebra l0 = make_double(g);
  EnvelopingTensor w = contract_l(make_directed_wheel(m, SkeletonKind::Interval, forward), l0);
  const int d = g.dim();
  EnvelopingTensor permuted(1);
  std::vector<int> order(m);
  for (const auto& [key, coeff] : w.terms()) {
    Word base(m);
    for (int i = 0; i < m; ++i) {
      if (key[0][i] < d) throw std::logic_error("contracted wheel has a plain-copy letter");
      base[i] = key[0][i] - d;
    }
    std::iota(order.begin(), order.end(), 0);
    do {
      Word u(m);
      for (int s = 0; s < m; ++s) u[s] = base[order[s]];
      permuted.add_word(u, coeff);
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return trace(permuted, B);
}

Rational sigma_wheel(int m, const LieAlgebraData& g, const Representation& B, bool forward) {
  DoubleAlgebra l0 = make_double(g);
  Representation R = rep_R(B, l0);
  EnvelopingTensor w = contract_l(make_directed_wheel(m, SkeletonKind::Interval, forward), l0);
  return sigma_m(w, R, m);
}

// ---------------------------------------------------------------------------

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string to_string(const Polynomial& p, const char* var) {
  if (p.coeffs.empty()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coeffs[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) out += sgn(c) < 0 ? "-" : "";
    else out += sgn(c) < 0 ? " - " : " + ";
    bool unit = mag == 1 && k > 0;
    if (!unit) out += mag.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  std::set<Rational> xs;
  for (const auto& [x, y] : points)
    if (!xs.insert(x).second)
      throw InvalidArgument("duplicate interpolation abscissa " + x.get_str());
  const std::size_t k = points.size();
  std::vector<Rational> total(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rational> basis{1};
    Rational denom = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      // basis *= (x - x_j)
      std::vector<Rational> next(basis.size() + 1);
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= basis[t] * points[j].first;
      }
      basis = std::move(next);
      denom *= points[i].first - points[j].first;
    }
    Rational scale = points[i].second / denom;
    for (std::size_t t = 0; t < basis.size(); ++t) total[t] += basis[t] * scale;
  }
  while (!total.empty() && sgn(total.back()) == 0) total.pop_back();
  return Polynomial{total};
}

InterpolationResult interpolate_bounded(const std::vector<std::pair<Rational, Rational>>& points,
                                        int degree_bound) {
  if (degree_bound < 0) throw InvalidArgument("degree bound must be >= 0");
  if (static_cast<int>(points.size()) < degree_bound + 1)
    throw InvalidArgument("need at least degree_bound + 1 points");
  std::vector<std::pair<Rational, Rational>> head(points.begin(),
                                                  points.begin() + degree_bound + 1);
  InterpolationResult r{interpolate(head), true};
  std::set<Rational> xs;
  for (const auto& [x, y] : points)
    if (!xs.insert(x).second)
      throw InvalidArgument("duplicate interpolation abscissa " + x.get_str());
  for (std::size_t i = degree_bound + 1; i < points.size(); ++i)
    if (r.poly(points[i].first) != points[i].second) r.consistent = false;
  return r;
}

}  // namespace inhomcs

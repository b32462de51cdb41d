#include "inhomcs/weights.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "inhomcs/errors.hpp"
#include "inhomcs/orientations.hpp"

namespace inhomcs {

// ---------------------------------------------------------------------------
// EnvelopingTensor

EnvelopingTensor::EnvelopingTensor(int arity) : arity_(arity) {
  if (arity < 1) throw InvalidArgument("enveloping tensor arity must be >= 1");
}

EnvelopingTensor EnvelopingTensor::unit(int arity) {
  EnvelopingTensor t(arity);
  t.add(Key(arity), 1);
  return t;
}

void EnvelopingTensor::add(const Key& key, const Rational& coeff) {
  if (static_cast<int>(key.size()) != arity_)
    throw InvalidArgument("word tuple does not match tensor arity");
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational EnvelopingTensor::coefficient(const Key& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

EnvelopingTensor& EnvelopingTensor::operator+=(const EnvelopingTensor& o) {
  if (o.arity_ != arity_) throw InvalidArgument("adding tensors of different arity");
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

EnvelopingTensor& EnvelopingTensor::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

// ---------------------------------------------------------------------------
// Sparse factor contraction.
//
// Every half-edge is an index variable. Assignments of up to 16 variables are
// packed 8 bits each into one 128-bit key, so algebras up to dimension 255 fit.

namespace {

using Packed = unsigned __int128;
constexpr int kMaxVars = 16;
constexpr int kMaxIndex = 255;

struct PackedHash {
  std::size_t operator()(Packed k) const {
    auto lo = static_cast<std::uint64_t>(k);
    auto hi = static_cast<std::uint64_t>(k >> 64);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x632BE59BD9B4E019ULL + (lo << 6));
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

inline int get(Packed k, int pos) { return static_cast<int>((k >> (8 * pos)) & 0xff); }
inline Packed put(int pos, int value) { return static_cast<Packed>(value) << (8 * pos); }

Packed drop(Packed k, int pos) {
  Packed low_mask = pos == 0 ? Packed(0) : ((Packed(1) << (8 * pos)) - 1);
  Packed low = k & low_mask;
  Packed high = pos + 1 >= kMaxVars ? Packed(0) : (k >> (8 * (pos + 1))) << (8 * pos);
  return low | high;
}

struct Factor {
  std::vector<int> vars;
  std::vector<std::pair<Packed, Rational>> entries;
};

Factor multiply(const Factor& a, const Factor& b) {
  std::vector<std::pair<int, int>> shared;  // (pos in a, pos in b)
  std::vector<std::pair<int, int>> fresh;   // (pos in b, pos in out)
  Factor out;
  out.vars = a.vars;
  for (int pb = 0; pb < static_cast<int>(b.vars.size()); ++pb) {
    auto it = std::find(a.vars.begin(), a.vars.end(), b.vars[pb]);
    if (it != a.vars.end()) {
      shared.emplace_back(static_cast<int>(it - a.vars.begin()), pb);
    } else {
      fresh.emplace_back(pb, static_cast<int>(out.vars.size()));
      out.vars.push_back(b.vars[pb]);
    }
  }
  if (static_cast<int>(out.vars.size()) > kMaxVars)
    throw InvalidArgument("contraction needs an intermediate tensor of more than 16 indices");

  std::unordered_map<Packed, std::vector<std::size_t>, PackedHash> index;
  for (std::size_t e = 0; e < b.entries.size(); ++e) {
    Packed s = 0;
    for (std::size_t i = 0; i < shared.size(); ++i)
      s |= put(static_cast<int>(i), get(b.entries[e].first, shared[i].second));
    index[s].push_back(e);
  }
  Rational t;
  for (const auto& [ka, va] : a.entries) {
    Packed s = 0;
    for (std::size_t i = 0; i < shared.size(); ++i)
      s |= put(static_cast<int>(i), get(ka, shared[i].first));
    auto it = index.find(s);
    if (it == index.end()) continue;
    for (std::size_t e : it->second) {
      const auto& [kb, vb] = b.entries[e];
      Packed k = ka;
      for (const auto& [pb, po] : fresh) k |= put(po, get(kb, pb));
      mpq_mul(t.get_mpq_t(), va.get_mpq_t(), vb.get_mpq_t());
      out.entries.emplace_back(k, t);
    }
  }
  return out;
}

Factor sum_out(const Factor& f, int var) {
  auto it = std::find(f.vars.begin(), f.vars.end(), var);
  const int pos = static_cast<int>(it - f.vars.begin());
  Factor out;
  out.vars = f.vars;
  out.vars.erase(out.vars.begin() + pos);
  std::unordered_map<Packed, Rational, PackedHash> acc;
  for (const auto& [k, v] : f.entries) acc[drop(k, pos)] += v;
  out.entries.reserve(acc.size());
  for (auto& [k, v] : acc)
    if (sgn(v) != 0) out.entries.emplace_back(k, std::move(v));
  return out;
}

// Restriction of a half-edge to one copy of the double: -1 none, 0 plain, 1 bar.
using Restriction = std::vector<int>;

bool allowed(int index, int restriction, int base_dim) {
  if (restriction < 0) return true;
  return (index >= base_dim) == (restriction == 1);
}

EnvelopingTensor contract(const JacobiDiagram& d, const LieAlgebraData& g,
                          const Restriction& restrict, int base_dim) {
  if (g.dim() > kMaxIndex) throw InvalidArgument("algebra dimension above 255 is not supported");
  std::vector<Factor> factors;
  for (const auto& tri : d.vertices()) {
    Factor f;
    f.vars = {tri[0], tri[1], tri[2]};
    for (const auto& e : g.lowered_structure()) {
      if (!allowed(e.i, restrict[tri[0]], base_dim) || !allowed(e.j, restrict[tri[1]], base_dim) ||
          !allowed(e.k, restrict[tri[2]], base_dim))
        continue;
      f.entries.emplace_back(put(0, e.i) | put(1, e.j) | put(2, e.k), e.value);
    }
    factors.push_back(std::move(f));
  }
  for (const auto& [a, b] : d.edges()) {
    Factor f;
    f.vars = {a, b};
    for (const auto& e : g.inverse_metric_entries()) {
      if (!allowed(e.i, restrict[a], base_dim) || !allowed(e.j, restrict[b], base_dim)) continue;
      f.entries.emplace_back(put(0, e.i) | put(1, e.j), e.value);
    }
    factors.push_back(std::move(f));
  }

  EnvelopingTensor out(1);
  const int legs = d.leg_count();
  std::vector<int> pending;
  for (int h = legs; h < d.half_edge_count(); ++h) pending.push_back(h);

  while (!pending.empty()) {
    // Greedy: eliminate the variable whose merged factor is smallest.
    int best = -1;
    std::pair<std::size_t, std::size_t> best_cost{SIZE_MAX, SIZE_MAX};
    for (int v : pending) {
      std::vector<int> uni;
      std::size_t work = 1;
      for (const auto& f : factors) {
        if (std::find(f.vars.begin(), f.vars.end(), v) == f.vars.end()) continue;
        for (int x : f.vars)
          if (std::find(uni.begin(), uni.end(), x) == uni.end()) uni.push_back(x);
        work = std::min<std::size_t>(work * std::max<std::size_t>(f.entries.size(), 1), SIZE_MAX / 1024);
      }
      std::pair<std::size_t, std::size_t> cost{uni.size(), work};
      if (cost < best_cost) {
        best_cost = cost;
        best = v;
      }
    }
    pending.erase(std::find(pending.begin(), pending.end(), best));

    std::vector<Factor> touching;
    std::vector<Factor> rest;
    for (auto& f : factors) {
      if (std::find(f.vars.begin(), f.vars.end(), best) != f.vars.end())
        touching.push_back(std::move(f));
      else
        rest.push_back(std::move(f));
    }
    std::sort(touching.begin(), touching.end(),
              [](const Factor& x, const Factor& y) { return x.entries.size() < y.entries.size(); });
    Factor merged = std::move(touching.front());
    for (std::size_t i = 1; i < touching.size(); ++i) merged = multiply(merged, touching[i]);
    merged = sum_out(merged, best);
    if (merged.entries.empty()) return out;
    rest.push_back(std::move(merged));
    factors = std::move(rest);
  }

  Factor total;
  total.entries.emplace_back(Packed(0), Rational(1));
  for (const auto& f : factors) {
    total = multiply(total, f);
    if (total.entries.empty()) return out;
  }
  for (const auto& [k, v] : total.entries) {
    Word w(legs);
    for (int i = 0; i < static_cast<int>(total.vars.size()); ++i) w[total.vars[i]] = get(k, i);
    out.add_word(w, v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation of words in a representation.

struct SparseRep {
  int dim = 0;
  // rows[x][r] lists (column, value) of the nonzero entries of row r of rho(x).
  std::vector<std::vector<std::vector<std::pair<int, Rational>>>> rows;

  explicit SparseRep(const Representation& rho) : dim(rho.dim()) {
    rows.resize(rho.algebra_dim());
    for (int x = 0; x < rho.algebra_dim(); ++x) {
      rows[x].resize(dim);
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
          if (sgn(rho(x)(r, c)) != 0) rows[x][r].emplace_back(c, rho(x)(r, c));
    }
  }
};

// out = p * rho(x); returns false when the product is zero.
bool mul_into(const Matrix& p, const SparseRep& rep, int x, Matrix& out) {
  const int n = rep.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = 0;
  bool nonzero = false;
  Rational t;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Rational& pik = p(i, k);
      if (sgn(pik) == 0) continue;
      for (const auto& [c, v] : rep.rows[x][k]) {
        mpq_mul(t.get_mpq_t(), pik.get_mpq_t(), v.get_mpq_t());
        out(i, c) += t;
        nonzero = true;
      }
    }
  return nonzero;
}

Rational trace_mul(const Matrix& p, const SparseRep& rep, int x) {
  Rational t = 0;
  for (int k = 0; k < rep.dim; ++k)
    for (const auto& [c, v] : rep.rows[x][k])
      if (sgn(p(c, k)) != 0) t += p(c, k) * v;
  return t;
}

// Walks the words in sorted order keeping prefix products on a stack.
template <typename Leaf>
void walk_words(const EnvelopingTensor& w, const Representation& rho, Leaf&& leaf) {
  if (w.arity() != 1) throw InvalidArgument("expected an arity-1 tensor");
  SparseRep rep(rho);
  std::vector<Matrix> stack{Matrix::identity(rep.dim)};
  std::vector<bool> alive{true};
  const Word* prev = nullptr;
  for (const auto& [key, coeff] : w.terms()) {
    const Word& word = key[0];
    for (int x : word)
      if (x < 0 || x >= rho.algebra_dim())
        throw InvalidArgument("word letter outside the representation's algebra");
    std::size_t common = 0;
    if (prev)
      while (common < prev->size() && common < word.size() && (*prev)[common] == word[common])
        ++common;
    std::size_t depth = std::min(common, stack.size() - 1);
    stack.resize(depth + 1, Matrix());
    alive.resize(depth + 1);
    leaf(word, coeff, rep, stack, alive);
    prev = &word;
  }
}

void extend(const Word& word, std::size_t upto, const SparseRep& rep, std::vector<Matrix>& stack,
            std::vector<bool>& alive) {
  while (stack.size() - 1 < upto) {
    std::size_t k = stack.size() - 1;
    if (!alive[k]) {
      stack.emplace_back();
      alive.push_back(false);
      continue;
    }
    Matrix next(rep.dim, rep.dim);
    bool nz = mul_into(stack[k], rep, word[k], next);
    stack.push_back(std::move(next));
    alive.push_back(nz);
  }
}

void check_rep(const LieAlgebraData& g, const Representation& rho) {
  if (rho.algebra_dim() != g.dim())
    throw InvalidArgument("representation " + rho.name() + " is not a representation of " + g.name());
}

}  // namespace

EnvelopingTensor contract_l(const JacobiDiagram& d, const LieAlgebraData& algebra) {
  return contract(d, algebra, Restriction(d.half_edge_count(), -1), 0);
}

EnvelopingTensor contract_l(const DirectedJacobiDiagram& d, const DoubleAlgebra& algebra) {
  const JacobiDiagram& b = d.base();
  Restriction r(b.half_edge_count());
  for (int h = 0; h < b.half_edge_count(); ++h) r[h] = d.is_head(h) ? 1 : 0;
  return contract(b, algebra.algebra, r, algebra.base_dim());
}

EnvelopingTensor contract_l(const DirectedJacobiDiagram&, const LieAlgebraData& algebra) {
  throw InvalidArgument("directed diagrams need a double algebra, got " + algebra.name());
}

Matrix represent(const EnvelopingTensor& w, const Representation& rho) {
  Matrix total(rho.dim(), rho.dim());
  walk_words(w, rho, [&](const Word& word, const Rational& coeff, const SparseRep& rep,
                         std::vector<Matrix>& stack, std::vector<bool>& alive) {
    extend(word, word.size(), rep, stack, alive);
    if (!alive[word.size()]) return;
    const Matrix& m = stack[word.size()];
    for (int i = 0; i < rep.dim; ++i)
      for (int j = 0; j < rep.dim; ++j)
        if (sgn(m(i, j)) != 0) total(i, j) += coeff * m(i, j);
  });
  return total;
}

Rational trace(const EnvelopingTensor& w, const Representation& rho) {
  Rational total = 0;
  walk_words(w, rho, [&](const Word& word, const Rational& coeff, const SparseRep& rep,
                         std::vector<Matrix>& stack, std::vector<bool>& alive) {
    if (word.empty()) {
      total += coeff * rep.dim;
      return;
    }
    extend(word, word.size() - 1, rep, stack, alive);
    if (!alive[word.size() - 1]) return;
    total += coeff * trace_mul(stack[word.size() - 1], rep, word.back());
  });
  return total;
}

Rational weight_circle(const JacobiDiagram& d, const LieAlgebraData& algebra,
                       const Representation& rho) {
  check_rep(algebra, rho);
  return trace(contract_l(d, algebra), rho);
}

Rational weight_circle(const DirectedJacobiDiagram& d, const DoubleAlgebra& algebra,
                       const Representation& rho) {
  check_rep(algebra.algebra, rho);
  return trace(contract_l(d, algebra), rho);
}

Rational directed_weight_sum(const JacobiDiagram& d, const DoubleAlgebra& algebra,
                             const Representation& rho) {
  check_rep(algebra.algebra, rho);
  Rational total = 0;
  for (const auto& o : legal_orientations(d).orientations) total += weight_circle(o, algebra, rho);
  return total;
}

Matrix weight_interval(const JacobiDiagram& d, const LieAlgebraData& algebra,
                       const Representation& rho) {
  check_rep(algebra, rho);
  return represent(contract_l(d, algebra), rho);
}

Matrix weight_interval(const DirectedJacobiDiagram& d, const DoubleAlgebra& algebra,
                       const Representation& rho) {
  check_rep(algebra.algebra, rho);
  return represent(contract_l(d, algebra), rho);
}

Rational pair_circle(const DiagramSum& sum, const WeightSystem& ws) {
  Rational total = 0;
  for (const auto& [key, coeff] : sum.terms()) {
    if (key.skeleton() != SkeletonKind::Circle)
      throw InvalidArgument("pair_circle: term on an interval skeleton");
    if (key.directed()) {
      if (!ws.dbl) throw InvalidArgument("directed term paired with a non-double algebra");
      total += coeff * weight_circle(directed_from_key(key), *ws.dbl, *ws.rho);
    } else {
      total += coeff * weight_circle(diagram_from_key(key), *ws.algebra, *ws.rho);
    }
  }
  return total;
}

Matrix pair_interval(const DiagramSum& sum, const WeightSystem& ws) {
  Matrix total(ws.rho->dim(), ws.rho->dim());
  for (const auto& [key, coeff] : sum.terms()) {
    if (key.skeleton() != SkeletonKind::Interval)
      throw InvalidArgument("pair_interval: term on a circle skeleton");
    if (key.directed()) {
      if (!ws.dbl) throw InvalidArgument("directed term paired with a non-double algebra");
      total += coeff * weight_interval(directed_from_key(key), *ws.dbl, *ws.rho);
    } else {
      total += coeff * weight_interval(diagram_from_key(key), *ws.algebra, *ws.rho);
    }
  }
  return total;
}

}  // namespace inhomcs

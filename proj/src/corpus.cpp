#include "inhomcs/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "inhomcs/errors.hpp"
#include "inhomcs/lie.hpp"
#include "inhomcs/matrix.hpp"
#include "inhomcs/orientations.hpp"
#include "inhomcs/weights.hpp"
#include "json.hpp"

namespace inhomcs {

std::map<std::pair<int, int>, int> DiagramCorpus::counts() const {
  std::map<std::pair<int, int>, int> c;
  for (const auto& e : entries) ++c[{e.degree, e.legs}];
  return c;
}

std::vector<const CorpusEntry*> DiagramCorpus::of_degree(int degree) const {
  std::vector<const CorpusEntry*> out;
  for (const auto& e : entries)
    if (e.degree == degree) out.push_back(&e);
  return out;
}

namespace {

struct StratumResult {
  std::map<DiagramKey, CorpusEntry> classes;
  std::map<DiagramKey, int> vanishing;  // value unused, keys deduplicate
};

// All connected pairings with L legs and V vertices, one per labeled shape
// up to the order in which vertices and their slots are first reached.
class StratumGenerator {
 public:
  StratumGenerator(int legs, int vertices, SkeletonKind skeleton, GenerationOrder order)
      : L_(legs), V_(vertices), skeleton_(skeleton), reverse_(order == GenerationOrder::Reverse),
        partner_(legs + 3 * vertices, -1) {}

  StratumResult run() {
    rec();
    return std::move(out_);
  }

 private:
  int slot_id(int v, int s) const { return L_ + 3 * v + s; }
  bool is_free(int h) const { return partner_[h] < 0; }

  // Next free half-edge already connected to the skeleton.
  int pick() const {
    std::vector<int> order;
    for (int p = 0; p < L_; ++p) order.push_back(p);
    for (int v = 0; v < touched_; ++v)
      for (int s = 0; s < 3; ++s) order.push_back(slot_id(v, s));
    if (reverse_) {
      std::reverse(order.begin(), order.begin() + L_);
    }
    for (int h : order)
      if (is_free(h)) return h;
    return -1;
  }

  int first_free_slot(int v, int except) const {
    for (int k = 0; k < 3; ++k) {
      int s = reverse_ ? 2 - k : k;
      int h = slot_id(v, s);
      if (h != except && is_free(h)) return h;
    }
    return -1;
  }

  void rec() {
    const int h = pick();
    if (h < 0) {
      if (touched_ == V_) emit();
      return;
    }
    std::vector<int> candidates;
    for (int p = 0; p < L_; ++p)
      if (p != h && is_free(p)) candidates.push_back(p);
    for (int v = 0; v < touched_; ++v) {
      int s = first_free_slot(v, h);
      if (s >= 0) candidates.push_back(s);
    }
    if (touched_ < V_) candidates.push_back(slot_id(touched_, reverse_ ? 2 : 0));
    if (reverse_) std::reverse(candidates.begin(), candidates.end());

    for (int q : candidates) {
      const bool fresh = q >= slot_id(touched_, 0) && touched_ < V_;
      if (fresh) ++touched_;
      partner_[h] = q;
      partner_[q] = h;
      rec();
      partner_[h] = -1;
      partner_[q] = -1;
      if (fresh) --touched_;
    }
  }

  void emit() {
    std::vector<HalfEdge> legs(L_);
    for (int p = 0; p < L_; ++p) legs[p] = p;
    std::vector<JacobiDiagram::Triple> verts(V_);
    for (int v = 0; v < V_; ++v) verts[v] = {slot_id(v, 0), slot_id(v, 1), slot_id(v, 2)};
    std::vector<JacobiDiagram::Edge> edges;
    for (int h = 0; h < static_cast<int>(partner_.size()); ++h)
      if (h < partner_[h]) edges.emplace_back(h, partner_[h]);
    JacobiDiagram d(skeleton_, legs, verts, edges);
    Canonical c = canonicalize(d);
    if (c.sign == 0) {
      out_.vanishing.emplace(c.key, 1);
      return;
    }
    if (out_.classes.count(c.key)) return;
    CorpusEntry e;
    e.key = c.key;
    e.degree = degree(d);
    e.legs = d.leg_count();
    e.vertices = d.vertex_count();
    e.primitive = d.is_primitive();
    e.legally_orientable = !legal_orientations(d).empty();
    out_.classes.emplace(c.key, std::move(e));
  }

  int L_, V_;
  SkeletonKind skeleton_;
  bool reverse_;
  std::vector<int> partner_;
  int touched_ = 0;
  StratumResult out_;
};

template <typename Fn>
void parallel_for(int count, int jobs, Fn&& fn) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) fn(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace

DiagramCorpus enumerate_diagrams(int max_degree, SkeletonKind skeleton, GenerationOrder order,
                                 int jobs) {
  if (max_degree < 1 || max_degree > kMaxCorpusDegree)
    throw InvalidArgument("corpus degree bound must be in 1.." + std::to_string(kMaxCorpusDegree) +
                          ", got " + std::to_string(max_degree));
  // legs + vertices = 2 * degree
  std::vector<std::pair<int, int>> strata;
  for (int n = 1; n <= max_degree; ++n)
    for (int legs = 1; legs <= 2 * n; ++legs) strata.emplace_back(legs, 2 * n - legs);
  if (order == GenerationOrder::Reverse) std::reverse(strata.begin(), strata.end());

  std::vector<StratumResult> results(strata.size());
  parallel_for(static_cast<int>(strata.size()), jobs, [&](int i) {
    results[i] = StratumGenerator(strata[i].first, strata[i].second, skeleton, order).run();
  });

  DiagramCorpus corpus;
  corpus.skeleton = skeleton;
  corpus.max_degree = max_degree;
  for (auto& r : results) {
    for (auto& [k, e] : r.classes) corpus.entries.push_back(std::move(e));
    for (const auto& [k, unused] : r.vanishing) ++corpus.vanishing[{k.degree(), k.leg_count()}];
  }
  std::sort(corpus.entries.begin(), corpus.entries.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) {
              return std::tie(a.degree, a.legs, a.key) < std::tie(b.degree, b.legs, b.key);
            });
  return corpus;
}

std::string corpus_to_jsonl(const DiagramCorpus& corpus) {
  std::ostringstream out;
  for (const auto& e : corpus.entries) {
    nlohmann::json j = {{"key", to_string(e.key)},
                        {"skeleton", to_string(corpus.skeleton)},
                        {"degree", e.degree},
                        {"legs", e.legs},
                        {"vertices", e.vertices},
                        {"primitive", e.primitive},
                        {"legally_orientable", e.legally_orientable}};
    out << j.dump() << '\n';
  }
  return out.str();
}

namespace {

struct Functional {
  std::string name;
  std::function<Rational(const JacobiDiagram&)> eval;
};

// Weight systems for the pairing: plain Lie algebras, and the double of
// gl(2) in representations where its bar copy does not act nilpotently.
struct FunctionalBank {
  LieAlgebraData gl2 = build_gl(2), gl3 = build_gl(3), gl4 = build_gl(4), sl2 = build_sl2();
  Representation gl2_def = defining_gl(gl2, 2), gl3_def = defining_gl(gl3, 3),
                 gl4_def = defining_gl(gl4, 4), sl2_def = defining_sl2(sl2), sl2_adj = adjoint(sl2);
  DoubleAlgebra l0 = make_double(gl2);
  Representation r_plain = rep_R(gl2_def, l0);
  Representation r_central = rep_R(gl2_def, l0, {1, 0, 0, 1});
  Representation r_product = tensor_product(l0.algebra, r_plain, r_central);

  std::vector<Functional> list() const {
    auto w = [](const LieAlgebraData& g, const Representation& r) {
      return [&g, &r](const JacobiDiagram& d) { return weight_circle(d, g, r); };
    };
    return {{"gl(2) defining", w(gl2, gl2_def)},
            {"gl(3) defining", w(gl3, gl3_def)},
            {"gl(4) defining", w(gl4, gl4_def)},
            {"sl(2) defining", w(sl2, sl2_def)},
            {"sl(2) adjoint", w(sl2, sl2_adj)},
            {"double(gl(2)) R_phi", w(l0.algebra, r_central)},
            {"double(gl(2)) R (x) R_phi", w(l0.algebra, r_product)}};
  }
};

}  // namespace

PrimitiveAudit primitive_audit(const DiagramCorpus& corpus, int degree, int jobs) {
  if (corpus.skeleton != SkeletonKind::Circle)
    throw InvalidArgument("primitive audit is about circle diagrams");
  if (degree < 1 || degree > corpus.max_degree)
    throw InvalidArgument("corpus does not cover degree " + std::to_string(degree));

  static const FunctionalBank bank;
  const auto functionals = bank.list();

  PrimitiveAudit a;
  a.degree = degree;
  for (const auto& f : functionals) a.functionals.push_back(f.name);

  std::vector<const CorpusEntry*> prims;
  for (const auto* e : corpus.of_degree(degree))
    if (e->primitive) prims.push_back(e);
  a.primitive_classes = static_cast<int>(prims.size());

  const DiagramKey wheel_key =
      degree >= 2 ? canonicalize(make_wheel(degree, SkeletonKind::Circle)).key : DiagramKey{};
  for (const auto* e : prims) {
    if (!e->legally_orientable) continue;
    ++a.orientable_by_legs[e->legs];
    if (e->legs == degree) {
      a.top_classes.push_back(e->key);
      a.top_is_wheel.push_back(degree >= 2 && e->key == wheel_key);
    }
  }

  std::vector<std::vector<Rational>> rows(prims.size());
  parallel_for(static_cast<int>(prims.size()), jobs, [&](int i) {
    JacobiDiagram d = diagram_from_key(prims[i]->key);
    for (const auto& f : functionals) rows[i].push_back(f.eval(d));
  });
  auto rank_where = [&](auto&& keep) {
    std::vector<std::vector<Rational>> sel;
    for (std::size_t i = 0; i < prims.size(); ++i)
      if (keep(*prims[i])) sel.push_back(rows[i]);
    return rank(sel);
  };
  a.rank_below = rank_where([&](const CorpusEntry& e) { return e.legs <= degree - 1; });
  a.rank_top = rank_where([&](const CorpusEntry& e) { return e.legs <= degree; });
  a.rank_all = rank_where([](const CorpusEntry&) { return true; });

  std::ostringstream s;
  if (degree == 1) {
    a.holds = prims.size() == 1 && prims[0]->legs == 2 && a.rank_all == 1;
    s << "degree 1: " << prims.size() << " primitive class(es), pairing rank " << a.rank_all;
  } else {
    std::vector<std::vector<Rational>> sel;
    for (std::size_t i = 0; i < prims.size(); ++i)
      if (prims[i]->legs <= degree - 1) sel.push_back(rows[i]);
    JacobiDiagram wheel = make_wheel(degree, SkeletonKind::Circle);
    std::vector<Rational> wrow;
    for (const auto& f : functionals) wrow.push_back(f.eval(wheel));
    sel.push_back(wrow);
    a.rank_below_plus_wheel = rank(sel);
    if (degree % 2 == 0) {
      a.holds = a.rank_all == a.rank_top && a.rank_top - a.rank_below == 1 &&
                a.rank_below_plus_wheel == a.rank_top;
    } else {
      a.holds = a.rank_all == a.rank_below;
    }
    s << "degree " << degree << ": ranks below=" << a.rank_below << " top=" << a.rank_top
      << " all=" << a.rank_all << " below+wheel=" << a.rank_below_plus_wheel;
  }
  a.summary = s.str();
  return a;
}

}  // namespace inhomcs

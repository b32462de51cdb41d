#include "inhomcs/orientations.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "inhomcs/errors.hpp"

namespace inhomcs {

namespace {

// Mutable copy of a directed diagram in terms of raw half-edge ids; rebuilt
// into a validated diagram after a rewrite.
struct Draft {
  SkeletonKind skeleton;
  std::vector<HalfEdge> legs;
  std::vector<JacobiDiagram::Triple> vertices;
  std::vector<JacobiDiagram::Edge> edges;
  std::vector<HalfEdge> heads;  // raw id of each edge's head

  DirectedJacobiDiagram build() const {
    JacobiDiagram base(skeleton, legs, vertices, edges);
    std::vector<HalfEdge> dense(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e)
      dense[e] = heads[e] == edges[e].first ? base.edges()[e].first : base.edges()[e].second;
    return DirectedJacobiDiagram(std::move(base), std::move(dense));
  }
};

bool adjacent(int i, int j, int legs, SkeletonKind skeleton) {
  if (std::abs(i - j) == 1) return true;
  return skeleton == SkeletonKind::Circle && legs > 2 && std::abs(i - j) == legs - 1;
}

int vertex_of(const JacobiDiagram& d, HalfEdge h) { return (h - d.leg_count()) / 3; }

}  // namespace

DiagramSum OrientationSum::as_sum() const {
  DiagramSum s;
  for (const auto& o : orientations) s.add(o, 1);
  return s;
}

OrientationSum legal_orientations(const JacobiDiagram& d) {
  const int L = d.leg_count();
  const int V = d.vertex_count();
  // in_slot[v]: which slot of v receives the arrow.
  std::vector<int> in_slot(V, -1);
  std::vector<int> chords;
  for (int e = 0; e < d.edge_count(); ++e)
    if (d.edges()[e].first < L && d.edges()[e].second < L) chords.push_back(e);

  auto head_at = [&](HalfEdge h) {
    int v = vertex_of(d, h);
    return in_slot[v] == (h - L) % 3;
  };
  // Edges whose both ends are vertex slots, checked once both are assigned.
  auto consistent_up_to = [&](int v) {
    for (int s = 0; s < 3; ++s) {
      HalfEdge h = d.vertices()[v][s];
      HalfEdge q = d.partner(h);
      if (q < L) continue;
      if (vertex_of(d, q) > v) continue;
      if (head_at(h) == head_at(q)) return false;
    }
    return true;
  };

  OrientationSum out;
  auto emit = [&]() {
    std::vector<HalfEdge> heads(d.edge_count());
    for (int e = 0; e < d.edge_count(); ++e) {
      auto [a, b] = d.edges()[e];
      if (a >= L) heads[e] = head_at(a) ? a : b;
      else if (b >= L) heads[e] = head_at(b) ? b : a;
      else heads[e] = a;  // chord, fixed below
    }
    const int c = static_cast<int>(chords.size());
    for (int mask = 0; mask < (1 << c); ++mask) {
      for (int i = 0; i < c; ++i) {
        auto [a, b] = d.edges()[chords[i]];
        heads[chords[i]] = (mask >> i) & 1 ? b : a;
      }
      out.orientations.emplace_back(d, heads);
    }
  };
  auto rec = [&](auto&& self, int v) -> void {
    if (v == V) {
      emit();
      return;
    }
    for (int s = 0; s < 3; ++s) {
      in_slot[v] = s;
      if (consistent_up_to(v)) self(self, v + 1);
    }
    in_slot[v] = -1;
  };
  rec(rec, 0);
  return out;
}

LegBoundReport verify_leg_bound(const DirectedJacobiDiagram& d) {
  if (!d.is_legal()) throw InvalidArgument("verify_leg_bound needs a legal orientation");
  const JacobiDiagram& b = d.base();
  LegBoundReport r;
  r.degree = degree(b);
  r.legs = b.leg_count();
  r.leg_labels.assign(b.leg_count(), 0);
  r.vertex_residuals.assign(b.vertex_count(), -1);
  for (HalfEdge h : d.heads()) {
    if (h < b.leg_count()) ++r.leg_labels[h];
    else ++r.vertex_residuals[vertex_of(b, h)];
  }
  int pushed = std::accumulate(r.leg_labels.begin(), r.leg_labels.end(), 0);
  int residual = std::accumulate(r.vertex_residuals.begin(), r.vertex_residuals.end(), 0);
  if (pushed + residual != r.degree)
    throw std::logic_error("label push did not conserve the degree");
  for (int x : r.vertex_residuals)
    if (x != 0) throw std::logic_error("legal vertex kept a nonzero label");
  r.holds = r.legs >= r.degree;
  return r;
}

DiagramSum StuApplication::rhs() const {
  DiagramSum s;
  for (const auto& t : terms) s.add(t.diagram, t.coeff);
  return s;
}

StuApplication apply_directed_stu(const DirectedJacobiDiagram& d, int leg, StuMode mode) {
  const JacobiDiagram& b = d.base();
  const int L = b.leg_count();
  if (leg < 0 || leg >= L)
    throw InvalidArgument("leg " + std::to_string(leg) + " is not a skeleton position");
  const HalfEdge stem = b.partner(leg);
  const bool at_vertex = stem >= L;

  if (mode == StuMode::Auto) mode = at_vertex ? StuMode::Expand : StuMode::Swap;

  StuApplication app;
  app.leg = leg;
  if (mode == StuMode::Swap) {
    int next = leg + 1;
    if (next == L) {
      if (b.skeleton() != SkeletonKind::Circle)
        throw NotApplicable("no leg after the last interval position");
      next = 0;
    }
    if (next == leg || !d.is_head(leg) || !d.is_head(next))
      throw NotApplicable("legs " + std::to_string(leg) + "," + std::to_string(next) +
                          " are not two arrows pointing at the skeleton");
    std::vector<int> order(L);
    std::iota(order.begin(), order.end(), 0);
    std::swap(order[leg], order[next]);
    app.variant = "dd";
    app.terms.push_back({1, permute_legs(d, order)});
    return app;
  }

  if (!at_vertex)
    throw NotApplicable("leg " + std::to_string(leg) + " is not attached to an internal vertex");
  const int v = vertex_of(b, stem);
  const int s = (stem - L) % 3;
  const HalfEdge a = b.vertices()[v][(s + 1) % 3];
  const HalfEdge c = b.vertices()[v][(s + 2) % 3];
  const bool a_in = d.is_head(a);
  const bool c_in = d.is_head(c);
  app.variant = std::string(a_in ? "d" : "u") + (c_in ? "d" : "u");

  const HalfEdge fresh_x = b.half_edge_count();
  const HalfEdge fresh_y = fresh_x + 1;
  const int ea = b.edge_of(a);
  const int ec = b.edge_of(c);
  const int es = b.edge_of(stem);

  // first = the slot attached at position leg, second at leg + 1.
  auto rewrite = [&](HalfEdge first, HalfEdge second) {
    Draft t{b.skeleton(), {}, {}, {}, {}};
    for (int p = 0; p < L; ++p) {
      if (p == leg) {
        t.legs.push_back(fresh_x);
        t.legs.push_back(fresh_y);
      } else {
        t.legs.push_back(p);
      }
    }
    for (int u = 0; u < b.vertex_count(); ++u)
      if (u != v) t.vertices.push_back(b.vertices()[u]);
    for (int e = 0; e < b.edge_count(); ++e) {
      if (e == ea || e == ec || e == es) continue;
      t.edges.push_back(b.edges()[e]);
      t.heads.push_back(d.heads()[e]);
    }
    auto slot_leg = [&](HalfEdge slot) { return slot == first ? fresh_x : fresh_y; };
    if (ea == ec) {
      // a and c form a loop at v: it becomes a chord between the new legs.
      t.edges.emplace_back(fresh_x, fresh_y);
      t.heads.push_back(slot_leg(a_in ? a : c));
    } else {
      for (HalfEdge slot : {first, second}) {
        HalfEdge far = b.partner(slot);
        t.edges.emplace_back(slot_leg(slot), far);
        t.heads.push_back(d.is_head(slot) ? slot_leg(slot) : far);
      }
    }
    return t.build();
  };
  app.terms.push_back({1, rewrite(a, c)});
  app.terms.push_back({-1, rewrite(c, a)});
  return app;
}

bool find_zero_pattern(const DirectedJacobiDiagram& d, ZeroPattern& where) {
  const JacobiDiagram& b = d.base();
  const int L = b.leg_count();
  for (int v = 0; v < b.vertex_count(); ++v) {
    std::vector<int> out_legs;
    bool all_out_to_legs = true;
    for (HalfEdge h : b.vertices()[v]) {
      if (d.is_head(h)) continue;
      HalfEdge q = b.partner(h);
      if (q < L) out_legs.push_back(q);
      else all_out_to_legs = false;
    }
    if (!all_out_to_legs || out_legs.size() != 2) continue;
    if (adjacent(out_legs[0], out_legs[1], L, b.skeleton())) {
      where = {v, std::min(out_legs[0], out_legs[1]), std::max(out_legs[0], out_legs[1])};
      return true;
    }
  }
  return false;
}

bool detect_zero_pattern(const DirectedJacobiDiagram& d) {
  ZeroPattern z;
  return find_zero_pattern(d, z);
}

namespace {

std::string zero_site(const ZeroPattern& z) {
  return "vertex " + std::to_string(z.vertex) + " legs " + std::to_string(z.leg_a) + "," +
         std::to_string(z.leg_b);
}

// Plan for carrying one outgoing leg of a vertex next to its sibling across
// inward legs only. Returns the sequence of swap sites, empty if none exists.
std::vector<int> transport_plan(const DirectedJacobiDiagram& d) {
  const JacobiDiagram& b = d.base();
  const int L = b.leg_count();
  std::vector<int> best;
  bool found = false;
  for (int v = 0; v < b.vertex_count(); ++v) {
    std::vector<int> out_legs;
    for (HalfEdge h : b.vertices()[v])
      if (!d.is_head(h) && b.partner(h) < L) out_legs.push_back(b.partner(h));
    if (out_legs.size() != 2) continue;
    int i = std::min(out_legs[0], out_legs[1]);
    int j = std::max(out_legs[0], out_legs[1]);
    // Forward gap i+1..j-1: move leg i towards j, swapping at i, i+1, ...
    auto gap_clear = [&](int from, int steps, int dir) {
      for (int k = 1; k <= steps; ++k)
        if (!d.is_head(((from + dir * k) % L + L) % L)) return false;
      return true;
    };
    std::vector<std::vector<int>> candidates;
    if (gap_clear(i, j - i - 1, +1)) {
      std::vector<int> plan;
      for (int k = 0; k < j - i - 1; ++k) plan.push_back(i + k);
      candidates.push_back(plan);
    }
    if (b.skeleton() == SkeletonKind::Circle && gap_clear(i, L - (j - i) - 1, -1)) {
      // Move leg i backwards around the circle towards j.
      std::vector<int> plan;
      int pos = i;
      for (int k = 0; k < L - (j - i) - 1; ++k) {
        int prev = (pos - 1 + L) % L;
        plan.push_back(prev);  // swap prev and prev + 1
        pos = prev;
      }
      candidates.push_back(plan);
    }
    for (auto& c : candidates)
      if (!found || c.size() < best.size()) {
        best = c;
        found = true;
      }
  }
  return best;
}

}  // namespace

WheelReduction reduce_wheel_on_circle(int m, SkeletonKind skeleton, bool forward) {
  if (m < 2) throw InvalidArgument("wheel needs at least 2 spokes, got " + std::to_string(m));
  if (skeleton != SkeletonKind::Circle)
    throw NotApplicable("the wheel reduction moves legs around a circle; no interval version");
  WheelReduction r{m, make_directed_wheel(m, skeleton, forward), {}, {}};

  StuApplication stu = apply_directed_stu(r.input, 0, StuMode::Expand);
  r.trace.push_back({"directed-stu:" + stu.variant, "leg 0", stu.terms});

  std::vector<SignedDiagram> live = stu.terms;
  std::vector<SignedDiagram> stuck;
  while (!live.empty()) {
    SignedDiagram t = live.front();
    live.erase(live.begin());
    ZeroPattern z;
    if (find_zero_pattern(t.diagram, z)) {
      std::vector<SignedDiagram> after = live;
      after.insert(after.end(), stuck.begin(), stuck.end());
      r.trace.push_back({"zero-relation", zero_site(z), after});
      continue;
    }
    std::vector<int> plan = transport_plan(t.diagram);
    if (plan.empty()) {
      stuck.push_back(t);
      continue;
    }
    for (int site : plan) {
      StuApplication sw = apply_directed_stu(t.diagram, site, StuMode::Swap);
      t = {t.coeff * sw.terms.front().coeff, sw.terms.front().diagram};
      std::vector<SignedDiagram> after{t};
      after.insert(after.end(), live.begin(), live.end());
      after.insert(after.end(), stuck.begin(), stuck.end());
      const int L = t.diagram.base().leg_count();
      r.trace.push_back({"commute-inward-legs",
                         "legs " + std::to_string(site) + "," + std::to_string((site + 1) % L),
                         after});
    }
    live.insert(live.begin(), t);
  }
  for (const auto& t : stuck) r.result.add(t.diagram, t.coeff);
  return r;
}

}  // namespace inhomcs

#include "inhomcs/diagram.hpp"

#include <numeric>
#include <string>
#include <unordered_map>

#include "inhomcs/errors.hpp"

namespace inhomcs {

const char* to_string(SkeletonKind kind) {
  return kind == SkeletonKind::Circle ? "circle" : "interval";
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

JacobiDiagram::JacobiDiagram(SkeletonKind skeleton, std::vector<HalfEdge> legs,
                             std::vector<Triple> vertices, std::vector<Edge> edges)
    : skeleton_(skeleton) {
  const int L = static_cast<int>(legs.size());
  const int V = static_cast<int>(vertices.size());
  const int H = L + 3 * V;
  if (L == 0) throw InvalidArgument("diagram has no legs on the skeleton");

  std::unordered_map<HalfEdge, HalfEdge> dense;
  auto claim = [&](HalfEdge user, HalfEdge id) {
    if (!dense.emplace(user, id).second)
      throw InvalidArgument("half-edge " + std::to_string(user) +
                            " belongs to more than one leg/vertex slot");
  };
  for (int p = 0; p < L; ++p) claim(legs[p], p);
  for (int v = 0; v < V; ++v)
    for (int s = 0; s < 3; ++s) claim(vertices[v][s], L + 3 * v + s);

  if (static_cast<int>(edges.size()) * 2 != H)
    throw InvalidArgument("edge count " + std::to_string(edges.size()) +
                          " does not pair up " + std::to_string(H) + " half-edges");

  partner_.assign(H, -1);
  edge_of_.assign(H, -1);
  edges_.reserve(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto lookup = [&](HalfEdge user) {
      auto it = dense.find(user);
      if (it == dense.end())
        throw InvalidArgument("edge refers to unknown half-edge " + std::to_string(user));
      return it->second;
    };
    HalfEdge a = lookup(edges[e].first);
    HalfEdge b = lookup(edges[e].second);
    if (a == b)
      throw InvalidArgument("edge joins half-edge " + std::to_string(edges[e].first) +
                            " to itself");
    for (HalfEdge h : {a, b}) {
      if (edge_of_[h] != -1)
        throw InvalidArgument("half-edge lies on more than one edge");
      edge_of_[h] = static_cast<int>(e);
    }
    partner_[a] = b;
    partner_[b] = a;
    edges_.emplace_back(a, b);
  }

  legs_.resize(L);
  std::iota(legs_.begin(), legs_.end(), 0);
  vertices_.resize(V);
  for (int v = 0; v < V; ++v)
    for (int s = 0; s < 3; ++s) vertices_[v][s] = L + 3 * v + s;

  // Connectivity with the skeleton included: nodes are legs then vertices.
  UnionFind uf(L + V);
  for (int p = 1; p < L; ++p) uf.unite(0, p);
  auto node = [&](HalfEdge h) { return h < L ? h : L + (h - L) / 3; };
  for (const auto& [a, b] : edges_) uf.unite(node(a), node(b));
  for (int n = 1; n < L + V; ++n)
    if (uf.find(n) != uf.find(0))
      throw InvalidArgument("diagram is not connected through its skeleton");

  if (edge_count() - vertex_count() < 1)
    throw InvalidArgument("diagram degree is below 1");
}

Endpoint JacobiDiagram::endpoint(HalfEdge h) const {
  const int L = leg_count();
  if (h < L) return {Endpoint::Kind::Leg, h, 0};
  return {Endpoint::Kind::Vertex, (h - L) / 3, (h - L) % 3};
}

bool JacobiDiagram::is_primitive() const {
  const int L = leg_count();
  const int V = vertex_count();
  UnionFind uf(L + V);
  auto node = [&](HalfEdge h) { return h < L ? h : L + (h - L) / 3; };
  for (const auto& [a, b] : edges_) uf.unite(node(a), node(b));
  for (int n = 1; n < L + V; ++n)
    if (uf.find(n) != uf.find(0)) return false;
  return true;
}

int degree(const JacobiDiagram& d) { return d.edge_count() - d.vertex_count(); }
int external_leg_count(const JacobiDiagram& d) { return d.leg_count(); }

DirectedJacobiDiagram::DirectedJacobiDiagram(JacobiDiagram base,
                                             std::vector<HalfEdge> heads)
    : base_(std::move(base)), heads_(std::move(heads)) {
  if (static_cast<int>(heads_.size()) != base_.edge_count())
    throw InvalidArgument("need exactly one arrow per edge");
  for (int e = 0; e < base_.edge_count(); ++e) {
    const auto& [a, b] = base_.edges()[e];
    if (heads_[e] != a && heads_[e] != b)
      throw InvalidArgument("arrow head of edge " + std::to_string(e) +
                            " is not one of its endpoints");
  }
}

bool DirectedJacobiDiagram::is_legal() const {
  for (const auto& triple : base_.vertices()) {
    int in = 0;
    for (HalfEdge h : triple) in += is_head(h) ? 1 : 0;
    if (in != 1) return false;
  }
  return true;
}

int degree(const DirectedJacobiDiagram& d) { return degree(d.base()); }
int external_leg_count(const DirectedJacobiDiagram& d) { return d.base().leg_count(); }

JacobiDiagram make_wheel(int m, SkeletonKind skeleton) {
  if (m < 2) throw InvalidArgument("wheel needs at least 2 spokes, got " + std::to_string(m));
  std::vector<HalfEdge> legs(m);
  std::iota(legs.begin(), legs.end(), 0);
  std::vector<JacobiDiagram::Triple> vertices(m);
  std::vector<JacobiDiagram::Edge> edges;
  auto spoke = [m](int k) { return m + 3 * k; };
  auto hub_in = [m](int k) { return m + 3 * k + 1; };
  auto hub_out = [m](int k) { return m + 3 * k + 2; };
  for (int k = 0; k < m; ++k) {
    vertices[k] = {spoke(k), hub_in(k), hub_out(k)};
    edges.emplace_back(k, spoke(k));
  }
  for (int k = 0; k < m; ++k) edges.emplace_back(hub_out(k), hub_in((k + 1) % m));
  return JacobiDiagram(skeleton, legs, vertices, edges);
}

DirectedJacobiDiagram make_directed_wheel(int m, SkeletonKind skeleton, bool forward) {
  JacobiDiagram base = make_wheel(m, skeleton);
  std::vector<HalfEdge> heads(base.edge_count());
  for (int k = 0; k < m; ++k) heads[k] = k;  // spokes point at the skeleton
  for (int k = 0; k < m; ++k) {
    const auto& [out_k, in_next] = base.edges()[m + k];
    heads[m + k] = forward ? in_next : out_k;
  }
  return DirectedJacobiDiagram(std::move(base), std::move(heads));
}

JacobiDiagram make_theta_power(int k, SkeletonKind skeleton) {
  if (k < 1) throw InvalidArgument("theta power needs k >= 1, got " + std::to_string(k));
  std::vector<std::pair<int, int>> chords;
  for (int i = 0; i < k; ++i) chords.emplace_back(2 * i, 2 * i + 1);
  return make_chord_diagram(chords, skeleton);
}

JacobiDiagram make_tripod(SkeletonKind skeleton) {
  return JacobiDiagram(skeleton, {0, 1, 2}, {{3, 4, 5}}, {{0, 3}, {1, 4}, {2, 5}});
}

JacobiDiagram make_chord_diagram(const std::vector<std::pair<int, int>>& chords,
                                 SkeletonKind skeleton) {
  std::vector<HalfEdge> legs(2 * chords.size());
  std::iota(legs.begin(), legs.end(), 0);
  std::vector<JacobiDiagram::Edge> edges(chords.begin(), chords.end());
  return JacobiDiagram(skeleton, legs, {}, edges);
}

JacobiDiagram with_skeleton(const JacobiDiagram& d, SkeletonKind skeleton) {
  return JacobiDiagram(skeleton, d.legs(), d.vertices(), d.edges());
}

JacobiDiagram close_interval(const JacobiDiagram& d) {
  if (d.skeleton() != SkeletonKind::Interval)
    throw InvalidArgument("close_interval expects an interval skeleton");
  return with_skeleton(d, SkeletonKind::Circle);
}

DirectedJacobiDiagram close_interval(const DirectedJacobiDiagram& d) {
  return DirectedJacobiDiagram(close_interval(d.base()), d.heads());
}

JacobiDiagram permute_legs(const JacobiDiagram& d, const std::vector<int>& order) {
  const int L = d.leg_count();
  if (static_cast<int>(order.size()) != L)
    throw InvalidArgument("leg permutation has wrong length");
  std::vector<char> seen(L, 0);
  std::vector<HalfEdge> legs(L);
  for (int p = 0; p < L; ++p) {
    if (order[p] < 0 || order[p] >= L || seen[order[p]])
      throw InvalidArgument("leg order is not a permutation");
    seen[order[p]] = 1;
    legs[p] = d.legs()[order[p]];
  }
  return JacobiDiagram(d.skeleton(), legs, d.vertices(), d.edges());
}

DirectedJacobiDiagram permute_legs(const DirectedJacobiDiagram& d,
                                   const std::vector<int>& order) {
  JacobiDiagram base = permute_legs(d.base(), order);
  // Old leg half-edge order[p] is now half-edge p; vertex half-edges keep ids.
  const int L = d.base().leg_count();
  std::vector<HalfEdge> relabel(d.base().half_edge_count());
  std::iota(relabel.begin(), relabel.end(), 0);
  for (int p = 0; p < L; ++p) relabel[order[p]] = p;
  std::vector<HalfEdge> heads(d.heads().size());
  for (std::size_t e = 0; e < heads.size(); ++e) heads[e] = relabel[d.heads()[e]];
  return DirectedJacobiDiagram(std::move(base), std::move(heads));
}

}  // namespace inhomcs

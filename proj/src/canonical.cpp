#include "inhomcs/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "inhomcs/errors.hpp"

namespace inhomcs {

SkeletonKind DiagramKey::skeleton() const {
  return code.at(0) == 0 ? SkeletonKind::Circle : SkeletonKind::Interval;
}

int DiagramKey::degree() const {
  const int L = leg_count();
  const int V = vertex_count();
  return (L + 3 * V) / 2 - V;
}

std::string to_string(const DiagramKey& key) {
  std::ostringstream out;
  out << (key.skeleton() == SkeletonKind::Circle ? 'C' : 'I')
      << (key.directed() ? "d" : "") << ':' << key.leg_count() << ':'
      << key.vertex_count() << ':';
  for (std::size_t i = 4; i + 2 < key.code.size(); i += 3) {
    if (i > 4) out << ',';
    out << key.code[i] << (key.code[i + 2] == 0 ? "-" : key.code[i + 2] == 1 ? ">" : "<")
        << key.code[i + 1];
  }
  return out.str();
}

namespace {

constexpr int kTail = 0;
constexpr int kHead = 1;
constexpr int kPlain = 2;

struct Incidence {
  int neighbor;  // node id: legs first, then vertices
  int role;      // kTail / kHead / kPlain, seen from this vertex
};

struct Shape {
  int L = 0;
  int V = 0;
  bool circle = true;
  bool directed = false;
  bool plain_self_loop = false;
  std::vector<std::array<Incidence, 3>> incidences;
  // Per edge: node of tail and head (or of the two ends if undirected).
  std::vector<std::array<int, 2>> edge_nodes;
  std::vector<std::array<HalfEdge, 2>> edge_halves;  // (tail, head) when directed
  std::vector<int> edge_of;
  std::vector<char> half_is_head;
};

Shape make_shape(const JacobiDiagram& d, const std::vector<HalfEdge>* heads) {
  Shape s;
  s.L = d.leg_count();
  s.V = d.vertex_count();
  s.circle = d.skeleton() == SkeletonKind::Circle;
  s.directed = heads != nullptr;
  const int L = s.L;
  auto node = [L](HalfEdge h) { return h < L ? h : L + (h - L) / 3; };
  s.incidences.resize(s.V);
  s.edge_of.resize(d.half_edge_count());
  s.half_is_head.assign(d.half_edge_count(), 0);
  for (int e = 0; e < d.edge_count(); ++e) {
    auto [a, b] = d.edges()[e];
    if (heads) {
      if ((*heads)[e] == a) std::swap(a, b);  // a = tail, b = head
      s.half_is_head[b] = 1;
    }
    s.edge_nodes.push_back({node(a), node(b)});
    s.edge_halves.push_back({a, b});
    s.edge_of[a] = s.edge_of[b] = e;
    if (node(a) == node(b) && !heads) s.plain_self_loop = true;
  }
  for (int v = 0; v < s.V; ++v) {
    for (int slot = 0; slot < 3; ++slot) {
      HalfEdge h = L + 3 * v + slot;
      HalfEdge other = d.partner(h);
      int role = kPlain;
      if (heads) role = s.half_is_head[h] ? kHead : kTail;
      s.incidences[v][slot] = {node(other), role};
    }
  }
  return s;
}

struct Best {
  bool set = false;
  bool zero = false;
  std::vector<int> encoding;
  int sign = 0;
};

class Canonicalizer {
 public:
  explicit Canonicalizer(const Shape& s) : s_(s) {}

  Best run() {
    const int rotations = s_.circle ? s_.L : 1;
    for (rotation_ = 0; rotation_ < rotations; ++rotation_) {
      std::vector<int> colors(s_.V, s_.L);
      search(colors);
    }
    return best_;
  }

 private:
  int leg_color(int leg) const { return (leg - rotation_ + s_.L) % s_.L; }

  int node_color(int n, const std::vector<int>& colors) const {
    return n < s_.L ? leg_color(n) : colors[n - s_.L];
  }

  static int count_cells(const std::vector<int>& colors) {
    std::vector<int> c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  // Re-rank vertices by signature until no cell splits. Signatures start with
  // the current color, so cells only ever split.
  void refine(std::vector<int>& colors) const {
    int cells = count_cells(colors);
    while (true) {
      std::vector<std::vector<int>> sigs(s_.V);
      for (int v = 0; v < s_.V; ++v) {
        std::array<std::pair<int, int>, 3> nb;
        for (int k = 0; k < 3; ++k)
          nb[k] = {node_color(s_.incidences[v][k].neighbor, colors),
                   s_.incidences[v][k].role};
        std::sort(nb.begin(), nb.end());
        sigs[v] = {colors[v]};
        for (auto [c, r] : nb) {
          sigs[v].push_back(c);
          sigs[v].push_back(r);
        }
      }
      std::vector<std::vector<int>> sorted = sigs;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (int v = 0; v < s_.V; ++v)
        colors[v] = s_.L + static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(),
                                                             sigs[v]) - sorted.begin());
      int now = static_cast<int>(sorted.size());
      if (now == cells) break;
      cells = now;
    }
  }

  void search(std::vector<int> colors) {
    refine(colors);
    // First non-singleton cell, by color.
    std::vector<int> count(s_.L + s_.V, 0);
    for (int c : colors) ++count[c];
    int target = -1;
    for (int c = s_.L; c < s_.L + s_.V; ++c)
      if (count[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      leaf(colors);
      return;
    }
    for (int v = 0; v < s_.V; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> next(s_.V);
      for (int w = 0; w < s_.V; ++w)
        next[w] = 2 * colors[w] + ((w == v || colors[w] != target) ? 0 : 1);
      // Compress back to L.. range.
      std::vector<int> ranks = next;
      std::sort(ranks.begin(), ranks.end());
      ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
      for (int w = 0; w < s_.V; ++w)
        next[w] = s_.L + static_cast<int>(std::lower_bound(ranks.begin(), ranks.end(),
                                                           next[w]) - ranks.begin());
      search(std::move(next));
    }
  }

  void leaf(const std::vector<int>& colors) {
    const int E = static_cast<int>(s_.edge_nodes.size());
    std::vector<std::array<int, 3>> desc(E);
    for (int e = 0; e < E; ++e) {
      int a = node_color(s_.edge_nodes[e][0], colors);
      int b = node_color(s_.edge_nodes[e][1], colors);
      if (!s_.directed) {
        desc[e] = {std::min(a, b), std::max(a, b), 0};
      } else {
        // a is the tail, b the head
        desc[e] = {std::min(a, b), std::max(a, b), a <= b ? 1 : 2};
      }
    }
    std::vector<int> order(E);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return desc[x] < desc[y]; });
    std::vector<int> encoding;
    encoding.reserve(3 * E);
    std::vector<int> rank(E);
    for (int i = 0; i < E; ++i) {
      rank[order[i]] = i;
      encoding.insert(encoding.end(), desc[order[i]].begin(), desc[order[i]].end());
    }

    int sign = 1;
    for (int v = 0; v < s_.V; ++v) {
      std::array<int, 3> keys;
      for (int slot = 0; slot < 3; ++slot) {
        HalfEdge h = s_.L + 3 * v + slot;
        int e = s_.edge_of[h];
        keys[slot] = 2 * rank[e] + (s_.directed && s_.half_is_head[h] ? 1 : 0);
      }
      int inversions = (keys[0] > keys[1]) + (keys[0] > keys[2]) + (keys[1] > keys[2]);
      if (inversions % 2) sign = -sign;
    }

    if (!best_.set || encoding < best_.encoding) {
      best_.set = true;
      best_.zero = false;
      best_.encoding = std::move(encoding);
      best_.sign = sign;
    } else if (encoding == best_.encoding && sign != best_.sign) {
      best_.zero = true;
    }
  }

  const Shape& s_;
  int rotation_ = 0;
  Best best_;
};

Canonical canonicalize_shape(const Shape& s) {
  Best best = Canonicalizer(s).run();
  Canonical out;
  out.key.code = {s.circle ? 0 : 1, s.directed ? 1 : 0, s.L, s.V};
  out.key.code.insert(out.key.code.end(), best.encoding.begin(), best.encoding.end());
  out.sign = (best.zero || s.plain_self_loop) ? 0 : best.sign;
  return out;
}

struct Rebuilt {
  JacobiDiagram diagram;
  std::vector<HalfEdge> heads;
};

Rebuilt rebuild(const DiagramKey& key) {
  const auto& c = key.code;
  if (c.size() < 4 || (c.size() - 4) % 3 != 0) throw InvalidArgument("malformed diagram key");
  const int L = c[2];
  const int V = c[3];
  const bool directed = c[1] != 0;
  const int E = static_cast<int>((c.size() - 4) / 3);
  std::vector<int> next_slot(V, 0);
  auto take = [&](int n) -> HalfEdge {
    if (n < 0 || n >= L + V) throw InvalidArgument("diagram key node out of range");
    if (n < L) return n;
    int v = n - L;
    if (next_slot[v] >= 3) throw InvalidArgument("diagram key overfills a vertex");
    return L + 3 * v + next_slot[v]++;
  };
  std::vector<JacobiDiagram::Edge> edges;
  std::vector<HalfEdge> heads;
  for (int e = 0; e < E; ++e) {
    int a = c[4 + 3 * e], b = c[5 + 3 * e], flag = c[6 + 3 * e];
    int tail = a, head = b;
    if (flag == 2) std::swap(tail, head);
    HalfEdge ht = take(tail);
    HalfEdge hh = take(head);
    edges.emplace_back(ht, hh);
    heads.push_back(hh);
  }
  std::vector<HalfEdge> legs(L);
  std::iota(legs.begin(), legs.end(), 0);
  std::vector<JacobiDiagram::Triple> vertices(V);
  for (int v = 0; v < V; ++v) vertices[v] = {L + 3 * v, L + 3 * v + 1, L + 3 * v + 2};
  JacobiDiagram d(key.skeleton(), legs, vertices, edges);
  if (!directed) heads.clear();
  return {std::move(d), std::move(heads)};
}

}  // namespace

Canonical canonicalize(const JacobiDiagram& d) { return canonicalize_shape(make_shape(d, nullptr)); }

Canonical canonicalize(const DirectedJacobiDiagram& d) {
  return canonicalize_shape(make_shape(d.base(), &d.heads()));
}

JacobiDiagram diagram_from_key(const DiagramKey& key) {
  if (key.directed()) throw InvalidArgument("key describes a directed diagram");
  return rebuild(key).diagram;
}

DirectedJacobiDiagram directed_from_key(const DiagramKey& key) {
  if (!key.directed()) throw InvalidArgument("key describes an undirected diagram");
  Rebuilt r = rebuild(key);
  return DirectedJacobiDiagram(std::move(r.diagram), std::move(r.heads));
}

void DiagramSum::add_key(const DiagramKey& key, const Rational& coeff) {
  if (is_zero(coeff)) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (is_zero(it->second)) terms_.erase(it);
  }
}

void DiagramSum::add(const JacobiDiagram& d, const Rational& coeff) {
  Canonical c = canonicalize(d);
  if (c.sign != 0) add_key(c.key, c.sign * coeff);
}

void DiagramSum::add(const DirectedJacobiDiagram& d, const Rational& coeff) {
  Canonical c = canonicalize(d);
  if (c.sign != 0) add_key(c.key, c.sign * coeff);
}

DiagramSum& DiagramSum::operator+=(const DiagramSum& other) {
  for (const auto& [k, c] : other.terms_) add_key(k, c);
  return *this;
}

DiagramSum& DiagramSum::operator-=(const DiagramSum& other) {
  for (const auto& [k, c] : other.terms_) add_key(k, -c);
  return *this;
}

DiagramSum& DiagramSum::operator*=(const Rational& s) {
  if (is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

Rational DiagramSum::coefficient(const DiagramKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

DiagramSum operator+(DiagramSum a, const DiagramSum& b) { return a += b; }
DiagramSum operator-(DiagramSum a, const DiagramSum& b) { return a -= b; }

}  // namespace inhomcs

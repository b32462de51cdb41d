#pragma once

#include <array>
#include <utility>
#include <vector>

namespace inhomcs {

enum class SkeletonKind { Circle, Interval };

const char* to_string(SkeletonKind kind);

using HalfEdge = int;

// Owner of a half-edge: either a skeleton leg or one slot of a trivalent vertex.
struct Endpoint {
  enum class Kind { Leg, Vertex };
  Kind kind;
  int index;  // leg position or vertex index
  int slot;   // 0..2 for vertices, 0 for legs
};

/// A Jacobi diagram on a circle or interval skeleton.
///
/// Half-edges are stored densely: leg at position p owns half-edge p, and
/// slot s of vertex v owns half-edge legs().size() + 3 v + s. The order of a
/// vertex's triple is its cyclic orientation. Construction validates every
/// structural invariant and throws InvalidArgument naming the first one that
/// fails; arbitrary half-edge ids supplied by callers are relabeled.
class JacobiDiagram {
 public:
  using Triple = std::array<HalfEdge, 3>;
  using Edge = std::pair<HalfEdge, HalfEdge>;

  JacobiDiagram(SkeletonKind skeleton, std::vector<HalfEdge> legs,
                std::vector<Triple> vertices, std::vector<Edge> edges);

  SkeletonKind skeleton() const { return skeleton_; }
  const std::vector<HalfEdge>& legs() const { return legs_; }
  const std::vector<Triple>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  int leg_count() const { return static_cast<int>(legs_.size()); }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int half_edge_count() const { return leg_count() + 3 * vertex_count(); }

  Endpoint endpoint(HalfEdge h) const;
  HalfEdge partner(HalfEdge h) const { return partner_[h]; }
  int edge_of(HalfEdge h) const { return edge_of_[h]; }

  // Connected after deleting the skeleton.
  bool is_primitive() const;

  friend bool operator==(const JacobiDiagram&, const JacobiDiagram&) = default;

 private:
  SkeletonKind skeleton_;
  std::vector<HalfEdge> legs_;
  std::vector<Triple> vertices_;
  std::vector<Edge> edges_;
  std::vector<HalfEdge> partner_;
  std::vector<int> edge_of_;
};

// #internal edges - #internal vertices.
int degree(const JacobiDiagram& d);
int external_leg_count(const JacobiDiagram& d);

/// A Jacobi diagram with an arrow on every edge. heads()[e] is whichever
/// endpoint of edge e the arrow points into.
class DirectedJacobiDiagram {
 public:
  DirectedJacobiDiagram(JacobiDiagram base, std::vector<HalfEdge> heads);

  const JacobiDiagram& base() const { return base_; }
  const std::vector<HalfEdge>& heads() const { return heads_; }

  HalfEdge head(int e) const { return heads_[e]; }
  HalfEdge tail(int e) const { return base_.partner(heads_[e]); }
  // True if the arrow of h's edge points into h's owner.
  bool is_head(HalfEdge h) const { return heads_[base_.edge_of(h)] == h; }

  // Every internal vertex has exactly one ingoing and two outgoing half-edges.
  bool is_legal() const;

  friend bool operator==(const DirectedJacobiDiagram&,
                         const DirectedJacobiDiagram&) = default;

 private:
  JacobiDiagram base_;
  std::vector<HalfEdge> heads_;
};

int degree(const DirectedJacobiDiagram& d);
int external_leg_count(const DirectedJacobiDiagram& d);

// Builders.

/// The m-wheel: m legs, a hub m-cycle, one spoke per leg. Vertex k has the
/// triple (spoke, hub-in, hub-out) and hub edge k joins hub-out of k to hub-in
/// of k+1. Throws InvalidArgument for m < 2.
JacobiDiagram make_wheel(int m, SkeletonKind skeleton);

/// The wheel with its hub directed k -> k+1 (forward) or k+1 -> k, spokes
/// pointing into the skeleton. Both are legal.
DirectedJacobiDiagram make_directed_wheel(int m, SkeletonKind skeleton,
                                          bool forward = true);

/// k isolated chords side by side: chord i joins legs 2i and 2i+1.
JacobiDiagram make_theta_power(int k, SkeletonKind skeleton);

/// One internal vertex joined to three consecutive legs.
JacobiDiagram make_tripod(SkeletonKind skeleton);

/// Chord diagram from a list of leg-position pairs covering 0..2k-1.
JacobiDiagram make_chord_diagram(const std::vector<std::pair<int, int>>& chords,
                                 SkeletonKind skeleton);

// Same combinatorics with the leg order read cyclically.
JacobiDiagram close_interval(const JacobiDiagram& d);
DirectedJacobiDiagram close_interval(const DirectedJacobiDiagram& d);

// Leg at new position p is the old leg at position order[p].
JacobiDiagram permute_legs(const JacobiDiagram& d, const std::vector<int>& order);
DirectedJacobiDiagram permute_legs(const DirectedJacobiDiagram& d,
                                   const std::vector<int>& order);

// Same diagram with the skeleton kind replaced (no validation of intent).
JacobiDiagram with_skeleton(const JacobiDiagram& d, SkeletonKind skeleton);

}  // namespace inhomcs

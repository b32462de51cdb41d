#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "inhomcs/diagram.hpp"
#include "inhomcs/rational.hpp"

namespace inhomcs {

/// Canonical encoding of a (directed) Jacobi diagram up to relabeling of
/// vertices and half-edges, and rotation of the legs on a circle.
///
/// Layout: [skeleton, directed, legs, vertices, then one (a, b, flag) triple
/// per edge in sorted order]. Nodes 0..legs-1 are the legs in skeleton order,
/// the rest are vertices. flag is 0 for an undirected edge, 1 for a -> b and
/// 2 for b -> a.
struct DiagramKey {
  std::vector<int> code;

  SkeletonKind skeleton() const;
  bool directed() const { return code.at(1) != 0; }
  int leg_count() const { return code.at(2); }
  int vertex_count() const { return code.at(3); }
  int degree() const;

  auto operator<=>(const DiagramKey&) const = default;
};

std::string to_string(const DiagramKey& key);

struct Canonical {
  DiagramKey key;
  // +1 or -1 relative to the orientation reconstructed from the key; 0 when
  // the diagram has an orientation-reversing automorphism and vanishes by AS.
  int sign = 0;
};

Canonical canonicalize(const JacobiDiagram& d);
Canonical canonicalize(const DirectedJacobiDiagram& d);

// Representative whose canonicalization has sign +1.
JacobiDiagram diagram_from_key(const DiagramKey& key);
DirectedJacobiDiagram directed_from_key(const DiagramKey& key);

/// A finite linear combination of canonical diagrams with rational
/// coefficients. Zero coefficients are never stored.
class DiagramSum {
 public:
  using Terms = std::map<DiagramKey, Rational>;

  DiagramSum() = default;

  void add(const JacobiDiagram& d, const Rational& coeff = 1);
  void add(const DirectedJacobiDiagram& d, const Rational& coeff = 1);
  void add_key(const DiagramKey& key, const Rational& coeff);

  DiagramSum& operator+=(const DiagramSum& other);
  DiagramSum& operator-=(const DiagramSum& other);
  DiagramSum& operator*=(const Rational& s);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const DiagramKey& key) const;

  friend bool operator==(const DiagramSum&, const DiagramSum&) = default;

 private:
  Terms terms_;
};

DiagramSum operator+(DiagramSum a, const DiagramSum& b);
DiagramSum operator-(DiagramSum a, const DiagramSum& b);

}  // namespace inhomcs

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "inhomcs/canonical.hpp"
#include "inhomcs/diagram.hpp"

namespace inhomcs {

struct CorpusEntry {
  DiagramKey key;
  int degree = 0;
  int legs = 0;
  int vertices = 0;
  bool primitive = false;  // connected once the skeleton is removed
  bool legally_orientable = false;
};

/// One entry per isomorphism class of diagrams of degree 1..max_degree,
/// sorted by (degree, legs, key). Classes with an orientation-reversing
/// symmetry vanish by AS; they are only counted, in `vanishing`.
struct DiagramCorpus {
  SkeletonKind skeleton = SkeletonKind::Circle;
  int max_degree = 0;
  std::vector<CorpusEntry> entries;
  std::map<std::pair<int, int>, int> vanishing;  // (degree, legs) -> count

  // (degree, legs) -> number of classes.
  std::map<std::pair<int, int>, int> counts() const;
  std::vector<const CorpusEntry*> of_degree(int degree) const;
};

enum class GenerationOrder { Forward, Reverse };

inline constexpr int kMaxCorpusDegree = 5;

/// Exhaustive generation: half-edges are paired one at a time, always
/// extending the part already connected to the skeleton, and classes are
/// merged by canonical key. The two orders pick the next half-edge and its
/// partners from opposite ends. Throws InvalidArgument if max_degree is
/// outside 1..5.
DiagramCorpus enumerate_diagrams(int max_degree, SkeletonKind skeleton,
                                 GenerationOrder order = GenerationOrder::Forward, int jobs = 1);

// One JSON object per line.
std::string corpus_to_jsonl(const DiagramCorpus& corpus);

/// Audit of the primitive classes of one degree, using ranks of the weight
/// pairing over a fixed set of weight systems.
struct PrimitiveAudit {
  int degree = 0;
  int primitive_classes = 0;  // nonvanishing primitive classes
  // legally orientable primitive classes by leg count
  std::map<int, int> orientable_by_legs;
  // classes with exactly `degree` legs that are legally orientable
  std::vector<DiagramKey> top_classes;
  std::vector<bool> top_is_wheel;
  int rank_below = 0;             // primitives with <= degree - 1 legs
  int rank_top = 0;               // primitives with <= degree legs
  int rank_all = 0;               // all primitives
  int rank_below_plus_wheel = 0;  // <= degree - 1 legs together with the wheel
  std::vector<std::string> functionals;
  bool holds = false;
  std::string summary;
};

PrimitiveAudit primitive_audit(const DiagramCorpus& corpus, int degree, int jobs = 1);

}  // namespace inhomcs

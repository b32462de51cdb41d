#pragma once

#include <optional>
#include <string>

#include "inhomcs/canonical.hpp"
#include "inhomcs/diagram.hpp"
#include "inhomcs/lie.hpp"
#include "inhomcs/orientations.hpp"
#include "inhomcs/weights.hpp"
#include "json.hpp"

namespace inhomcs {

using Json = nlohmann::json;

// {"skeleton", "legs", "vertices", "edges"} plus "directions" as
// [[tail, head], ...] for directed diagrams.
Json to_json(const JacobiDiagram& d);
Json to_json(const DirectedJacobiDiagram& d);

struct ParsedDiagram {
  std::optional<JacobiDiagram> plain;
  std::optional<DirectedJacobiDiagram> directed;

  const JacobiDiagram& base() const { return directed ? directed->base() : *plain; }
};

// Throws InvalidInput naming the first problem found.
ParsedDiagram parse_diagram(const Json& j);
ParsedDiagram load_diagram(const std::string& path);

/// Named diagrams: "theta", "theta^K", "tripod", "wheel-M", and
/// "directed-wheel-M" (forward hub). Throws InvalidInput for unknown names.
ParsedDiagram builtin_diagram(const std::string& name, SkeletonKind skeleton);

SkeletonKind parse_skeleton(const std::string& text);

// [{"coeff": "p/q", "key": "...", "diagram": {...}}, ...]
Json to_json(const DiagramSum& sum);
Json to_json(const std::vector<SignedDiagram>& terms);
// [{"word": [...], "coeff": "p/q"}, ...] for arity 1, "words" for higher arity.
Json to_json(const EnvelopingTensor& t);
Json to_json(const WheelReduction& r);
Json to_json(const LegBoundReport& r);

// Structure constants, metric and labels for external audit.
Json algebra_dump(const LieAlgebraData& g);

// {"family": "gl"|"sl2", "n": int, "rep": "defining"}
AlgebraSpec parse_algebra_spec(const Json& j);
AlgebraSpec load_algebra_spec(const std::string& path);

Json read_json_file(const std::string& path);

}  // namespace inhomcs

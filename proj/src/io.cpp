#include "inhomcs/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "inhomcs/errors.hpp"

namespace inhomcs {

namespace {

Json base_json(const JacobiDiagram& d) {
  Json legs = Json::array();
  for (HalfEdge h : d.legs()) legs.push_back(h);
  Json verts = Json::array();
  for (const auto& t : d.vertices()) verts.push_back({t[0], t[1], t[2]});
  Json edges = Json::array();
  for (const auto& [a, b] : d.edges()) edges.push_back({a, b});
  return {{"skeleton", to_string(d.skeleton())}, {"legs", legs}, {"vertices", verts},
          {"edges", edges}};
}

int as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InvalidInput(what + " must be an integer");
  return j.get<int>();
}

const Json& field(const Json& j, const char* name) {
  if (!j.contains(name)) throw InvalidInput(std::string("diagram JSON lacks \"") + name + "\"");
  return j[name];
}

int parse_positive(const std::string& text, const std::string& name) {
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::logic_error&) {
    throw InvalidInput("bad number in builtin diagram name '" + name + "'");
  }
}

}  // namespace

SkeletonKind parse_skeleton(const std::string& text) {
  if (text == "circle") return SkeletonKind::Circle;
  if (text == "interval") return SkeletonKind::Interval;
  throw InvalidInput("skeleton must be \"circle\" or \"interval\", got \"" + text + "\"");
}

Json to_json(const JacobiDiagram& d) { return base_json(d); }

Json to_json(const DirectedJacobiDiagram& d) {
  Json j = base_json(d.base());
  Json dirs = Json::array();
  for (int e = 0; e < d.base().edge_count(); ++e) dirs.push_back({d.tail(e), d.head(e)});
  j["directions"] = dirs;
  return j;
}

ParsedDiagram parse_diagram(const Json& j) {
  if (!j.is_object()) throw InvalidInput("diagram JSON must be an object");
  const Json& sk = field(j, "skeleton");
  if (!sk.is_string()) throw InvalidInput("\"skeleton\" must be a string");
  SkeletonKind skeleton = parse_skeleton(sk.get<std::string>());

  const Json& jl = field(j, "legs");
  const Json& jv = field(j, "vertices");
  const Json& je = field(j, "edges");
  if (!jl.is_array() || !jv.is_array() || !je.is_array())
    throw InvalidInput("\"legs\", \"vertices\" and \"edges\" must be arrays");
  std::vector<HalfEdge> legs;
  for (const auto& x : jl) legs.push_back(as_int(x, "leg half-edge"));
  std::vector<JacobiDiagram::Triple> verts;
  for (const auto& v : jv) {
    if (!v.is_array() || v.size() != 3)
      throw InvalidInput("vertex " + std::to_string(verts.size()) + " is not a triple");
    verts.push_back({as_int(v[0], "half-edge"), as_int(v[1], "half-edge"), as_int(v[2], "half-edge")});
  }
  std::vector<JacobiDiagram::Edge> edges;
  for (const auto& e : je) {
    if (!e.is_array() || e.size() != 2)
      throw InvalidInput("edge " + std::to_string(edges.size()) + " is not a pair");
    edges.emplace_back(as_int(e[0], "half-edge"), as_int(e[1], "half-edge"));
  }

  ParsedDiagram out;
  try {
    JacobiDiagram d(skeleton, legs, verts, edges);
    if (!j.contains("directions")) {
      out.plain = std::move(d);
      return out;
    }
    // Map user half-edge ids to the dense ids the diagram uses.
    std::map<HalfEdge, HalfEdge> dense;
    for (std::size_t p = 0; p < legs.size(); ++p) dense[legs[p]] = static_cast<HalfEdge>(p);
    for (std::size_t v = 0; v < verts.size(); ++v)
      for (int s = 0; s < 3; ++s) dense[verts[v][s]] = d.leg_count() + 3 * static_cast<int>(v) + s;
    const Json& jd = j["directions"];
    if (!jd.is_array()) throw InvalidInput("\"directions\" must be an array");
    std::vector<HalfEdge> heads(d.edge_count(), -1);
    for (const auto& arrow : jd) {
      if (!arrow.is_array() || arrow.size() != 2)
        throw InvalidInput("each direction must be [tail, head]");
      HalfEdge tail = as_int(arrow[0], "tail"), head = as_int(arrow[1], "head");
      if (!dense.count(tail) || !dense.count(head))
        throw InvalidInput("direction refers to an unknown half-edge");
      HalfEdge t = dense[tail], h = dense[head];
      if (d.partner(h) != t)
        throw InvalidInput("direction [" + std::to_string(tail) + ", " + std::to_string(head) +
                           "] is not an edge");
      int e = d.edge_of(h);
      if (heads[e] != -1) throw InvalidInput("edge given two directions");
      heads[e] = h;
    }
    for (int e = 0; e < d.edge_count(); ++e)
      if (heads[e] == -1) throw InvalidInput("edge " + std::to_string(e) + " has no direction");
    out.directed = DirectedJacobiDiagram(std::move(d), std::move(heads));
    return out;
  } catch (const InvalidArgument& e) {
    throw InvalidInput(std::string("invalid diagram: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

ParsedDiagram load_diagram(const std::string& path) { return parse_diagram(read_json_file(path)); }

ParsedDiagram builtin_diagram(const std::string& name, SkeletonKind skeleton) {
  ParsedDiagram out;
  try {
    if (name == "theta") {
      out.plain = make_theta_power(1, skeleton);
    } else if (name.rfind("theta^", 0) == 0) {
      out.plain = make_theta_power(parse_positive(name.substr(6), name), skeleton);
    } else if (name == "tripod") {
      out.plain = make_tripod(skeleton);
    } else if (name.rfind("wheel-", 0) == 0) {
      out.plain = make_wheel(parse_positive(name.substr(6), name), skeleton);
    } else if (name.rfind("directed-wheel-", 0) == 0) {
      out.directed = make_directed_wheel(parse_positive(name.substr(15), name), skeleton, true);
    } else {
      throw InvalidInput("unknown builtin diagram '" + name +
                         "' (theta, theta^K, tripod, wheel-M, directed-wheel-M)");
    }
  } catch (const InvalidArgument& e) {
    throw InvalidInput(name + ": " + e.what());
  }
  return out;
}

Json to_json(const DiagramSum& sum) {
  Json out = Json::array();
  for (const auto& [key, coeff] : sum.terms()) {
    Json d = key.directed() ? to_json(directed_from_key(key)) : to_json(diagram_from_key(key));
    out.push_back({{"coeff", to_string(coeff)}, {"key", to_string(key)}, {"diagram", d}});
  }
  return out;
}

Json to_json(const std::vector<SignedDiagram>& terms) {
  Json out = Json::array();
  for (const auto& t : terms) {
    Canonical c = canonicalize(t.diagram);
    out.push_back({{"coeff", to_string(t.coeff)},
                   {"key", to_string(c.key)},
                   {"zero_pattern", detect_zero_pattern(t.diagram)},
                   {"diagram", to_json(t.diagram)}});
  }
  return out;
}

Json to_json(const EnvelopingTensor& t) {
  Json out = Json::array();
  for (const auto& [key, coeff] : t.terms()) {
    if (t.arity() == 1) out.push_back({{"word", key[0]}, {"coeff", to_string(coeff)}});
    else out.push_back({{"words", key}, {"coeff", to_string(coeff)}});
  }
  return out;
}

Json to_json(const WheelReduction& r) {
  Json steps = Json::array();
  for (const auto& s : r.trace)
    steps.push_back({{"rule", s.rule}, {"site", s.site}, {"terms", to_json(s.terms)}});
  return {{"m", r.m},
          {"input", to_json(r.input)},
          {"trace", steps},
          {"result", to_json(r.result)},
          {"vanishes", r.result.empty()}};
}

Json to_json(const LegBoundReport& r) {
  return {{"degree", r.degree}, {"legs", r.legs}, {"leg_labels", r.leg_labels},
          {"vertex_residuals", r.vertex_residuals}, {"holds", r.holds}};
}

Json algebra_dump(const LieAlgebraData& g) {
  Json brackets = Json::array();
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j)
      for (const auto& t : g.bracket(i, j))
        brackets.push_back({{"i", i}, {"j", j}, {"k", t.index}, {"coeff", to_string(t.coeff)}});
  auto dense = [&](const Matrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
      rows.push_back(row);
    }
    return rows;
  };
  return {{"name", g.name()},
          {"dim", g.dim()},
          {"labels", g.labels()},
          {"brackets", brackets},
          {"metric", dense(g.metric())},
          {"metric_inverse", dense(g.metric_inverse())}};
}

AlgebraSpec parse_algebra_spec(const Json& j) {
  if (!j.is_object()) throw InvalidInput("algebra spec must be an object");
  AlgebraSpec s;
  if (j.contains("family")) {
    if (!j["family"].is_string()) throw InvalidInput("\"family\" must be a string");
    s.family = j["family"].get<std::string>();
  }
  if (j.contains("n")) s.n = as_int(j["n"], "\"n\"");
  if (j.contains("rep")) {
    if (!j["rep"].is_string()) throw InvalidInput("\"rep\" must be a string");
    s.rep = j["rep"].get<std::string>();
  }
  if (s.family != "gl" && s.family != "sl2")
    throw InvalidInput("unknown algebra family \"" + s.family + "\"");
  if (s.family == "gl" && s.n < 1) throw InvalidInput("gl(n) needs n >= 1");
  return s;
}

AlgebraSpec load_algebra_spec(const std::string& path) {
  return parse_algebra_spec(read_json_file(path));
}

}  // namespace inhomcs

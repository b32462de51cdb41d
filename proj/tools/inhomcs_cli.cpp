#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "inhomcs/corpus.hpp"
#include "inhomcs/errors.hpp"
#include "inhomcs/geometry.hpp"
#include "inhomcs/io.hpp"
#include "inhomcs/orientations.hpp"
#include "inhomcs/verify.hpp"
#include "inhomcs/weights.hpp"

using namespace inhomcs;

namespace {

enum ExitCode {
  kPass = 0,
  kFail = 1,
  kInvalidArgument = 2,
  kInvalidInput = 3,
  kNumericalDegeneracy = 4,
  kNotApplicable = 5,
};

struct Globals {
  std::string algebra_path;
  std::string out_path;
  int jobs = 1;
  std::uint64_t seed = 12345;
};

// "2..4", "1,3,5" or a mix such as "1..3,6".
std::vector<int> parse_range(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  auto to_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad " + what + " range '" + text + "'");
    }
  };
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_int(item));
      continue;
    }
    int lo = to_int(item.substr(0, dots)), hi = to_int(item.substr(dots + 2));
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw InvalidArgument("empty " + what + " range '" + text + "'");
  if (std::set<int>(out.begin(), out.end()).size() != out.size())
    throw InvalidArgument("duplicate " + what + " values in '" + text + "'");
  return out;
}

AlgebraSpec algebra_of(const Globals& g) {
  return g.algebra_path.empty() ? AlgebraSpec{} : load_algebra_spec(g.algebra_path);
}

void emit(const Globals& g, const Json& report) {
  const std::string text = report.dump(2) + "\n";
  if (g.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.out_path);
  if (!out) throw InvalidInput("cannot write " + g.out_path);
  out << text;
}

int finish(const Globals& g, const std::string& command, const std::vector<CheckResult>& results,
           Json extra = Json::object()) {
  bool pass = true;
  Json checks = Json::array();
  for (const auto& r : results) {
    pass = pass && r.pass;
    checks.push_back(r.report);
    std::cerr << (r.pass ? "PASS " : "FAIL ") << r.report.value("check", command) << ": "
              << r.summary << "\n";
  }
  Json report = {{"command", command}, {"pass", pass}};
  if (!results.empty()) report["checks"] = checks;
  for (auto& [k, v] : extra.items()) report[k] = v;
  emit(g, report);
  return pass ? kPass : kFail;
}

ParsedDiagram diagram_source(const std::string& source, const std::string& skeleton) {
  if (source.size() > 5 && source.substr(source.size() - 5) == ".json") return load_diagram(source);
  return builtin_diagram(source, parse_skeleton(skeleton));
}

// ---------------------------------------------------------------------------

int cmd_weight(const Globals& g, const std::string& source, const std::string& skeleton,
               bool use_double, const std::string& rep_name, bool dump_tensor, bool dump_algebra,
               int theta_powers) {
  const AlgebraSpec spec = algebra_of(g);
  std::vector<CheckResult> results;
  if (theta_powers > 0) results.push_back(check_framing(theta_powers, spec));
  Json extra = Json::object();
  if (!source.empty()) {
    ParsedDiagram d = diagram_source(source, skeleton);
    const bool circle = d.base().skeleton() == SkeletonKind::Circle;
    Json value;
    Json tensor;
    std::string algebra_name, rep_used;
    if (use_double || d.directed) {
      DoubleBank bank(spec);
      const Representation* rep = &bank.R;
      if (rep_name == "R_phi") rep = &bank.R_phi;
      else if (rep_name == "product") rep = &bank.R_product;
      else if (rep_name != "R") throw InvalidArgument("--rep must be R, R_phi or product");
      algebra_name = bank.l0.algebra.name();
      rep_used = rep->name();
      if (d.directed) {
        value = circle ? Json(to_string(weight_circle(*d.directed, bank.l0, *rep)))
                       : Json(to_string(weight_interval(*d.directed, bank.l0, *rep)));
        if (dump_tensor) tensor = to_json(contract_l(*d.directed, bank.l0));
      } else {
        value = circle ? Json(to_string(weight_circle(*d.plain, bank.l0.algebra, *rep)))
                       : Json(to_string(weight_interval(*d.plain, bank.l0.algebra, *rep)));
        if (circle)
          extra["directed_weight_sum"] = to_string(directed_weight_sum(*d.plain, bank.l0, *rep));
        if (dump_tensor) tensor = to_json(contract_l(*d.plain, bank.l0.algebra));
      }
      if (dump_algebra) extra["algebra_dump"] = algebra_dump(bank.l0.algebra);
    } else {
      AlgebraWithRep a = build_from_spec(spec);
      algebra_name = a.algebra.name();
      rep_used = a.rep.name();
      value = circle ? Json(to_string(weight_circle(*d.plain, a.algebra, a.rep)))
                     : Json(to_string(weight_interval(*d.plain, a.algebra, a.rep)));
      if (dump_tensor) tensor = to_json(contract_l(*d.plain, a.algebra));
      if (dump_algebra) extra["algebra_dump"] = algebra_dump(a.algebra);
    }
    extra["diagram"] = d.directed ? to_json(*d.directed) : to_json(*d.plain);
    extra["algebra"] = algebra_name;
    extra["representation"] = rep_used;
    extra["weight"] = value;
    if (dump_tensor) extra["tensor"] = tensor;
  } else if (dump_algebra) {
    extra["algebra_dump"] = algebra_dump(build_from_spec(spec).algebra);
  }
  return finish(g, "weight", results, extra);
}

int cmd_orientations(const Globals& g, const std::string& source, const std::string& skeleton,
                     int leg_bound_degree, int equivalence_degree, int stu_samples,
                     int stu_degree) {
  const AlgebraSpec spec = algebra_of(g);
  std::vector<CheckResult> results;
  Json extra = Json::object();
  if (!source.empty()) {
    ParsedDiagram d = diagram_source(source, skeleton);
    CheckResult r;
    r.pass = true;
    Json list = Json::array();
    std::vector<DirectedJacobiDiagram> orientations;
    if (d.directed) orientations.push_back(*d.directed);
    else orientations = legal_orientations(*d.plain).orientations;
    for (const auto& o : orientations) {
      LegBoundReport lb = verify_leg_bound(o);
      r.pass = r.pass && lb.holds;
      list.push_back({{"diagram", to_json(o)},
                      {"key", to_string(canonicalize(o).key)},
                      {"zero_pattern", detect_zero_pattern(o)},
                      {"leg_bound", to_json(lb)}});
    }
    r.summary = std::to_string(orientations.size()) + " legal orientation(s)";
    r.report = {{"check", "diagram-orientations"}, {"count", orientations.size()},
                {"orientations", list}, {"pass", r.pass}};
    results.push_back(std::move(r));
  }
  if (leg_bound_degree > 0) results.push_back(check_leg_bound(leg_bound_degree, g.jobs));
  if (equivalence_degree > 0)
    results.push_back(check_orientation_equivalence(equivalence_degree, spec, g.jobs));
  if (stu_samples > 0) results.push_back(check_stu_random(stu_samples, g.seed, stu_degree, spec));
  if (results.empty())
    throw InvalidArgument(
        "nothing to do: give --diagram, --leg-bound-degree, --equivalence-degree or --stu-samples");
  return finish(g, "orientations", results, extra);
}

int cmd_corpus(const Globals& g, int max_degree, const std::string& skeleton,
               const std::string& order, const std::string& jsonl, bool audit) {
  const SkeletonKind sk = parse_skeleton(skeleton);
  if (order != "forward" && order != "reverse" && order != "both")
    throw InvalidArgument("--order must be forward, reverse or both");
  const GenerationOrder primary =
      order == "reverse" ? GenerationOrder::Reverse : GenerationOrder::Forward;
  DiagramCorpus corpus = enumerate_diagrams(max_degree, sk, primary, g.jobs);

  auto counts_json = [](const std::map<std::pair<int, int>, int>& c) {
    Json out = Json::array();
    for (const auto& [dl, n] : c) out.push_back({{"degree", dl.first}, {"legs", dl.second}, {"count", n}});
    return out;
  };
  std::vector<CheckResult> results;
  Json extra = {{"skeleton", to_string(sk)},
                {"max_degree", max_degree},
                {"classes", corpus.entries.size()},
                {"counts", counts_json(corpus.counts())},
                {"vanishing_counts", counts_json(corpus.vanishing)}};
  if (order == "both") {
    DiagramCorpus other = enumerate_diagrams(max_degree, sk, GenerationOrder::Reverse, g.jobs);
    CheckResult r;
    std::vector<DiagramKey> a, b;
    for (const auto& e : corpus.entries) a.push_back(e.key);
    for (const auto& e : other.entries) b.push_back(e.key);
    r.pass = a == b && corpus.vanishing == other.vanishing;
    r.summary = std::to_string(a.size()) + " classes forward, " + std::to_string(b.size()) +
                " reverse, " + (r.pass ? "identical" : "DIFFERENT");
    r.report = {{"check", "generation-order-stability"}, {"forward", a.size()},
                {"reverse", b.size()}, {"pass", r.pass}};
    results.push_back(std::move(r));
  }
  if (audit) {
    if (sk != SkeletonKind::Circle) throw InvalidArgument("--audit needs the circle skeleton");
    for (int n = 1; n <= std::min(max_degree, 4); ++n) {
      PrimitiveAudit a = primitive_audit(corpus, n, g.jobs);
      CheckResult r;
      r.pass = a.holds;
      r.summary = a.summary;
      Json by_legs = Json::object();
      for (const auto& [legs, c] : a.orientable_by_legs) by_legs[std::to_string(legs)] = c;
      Json top = Json::array();
      for (std::size_t i = 0; i < a.top_classes.size(); ++i)
        top.push_back({{"key", to_string(a.top_classes[i])}, {"is_wheel", bool(a.top_is_wheel[i])}});
      r.report = {{"check", "primitive-audit"},
                  {"degree", n},
                  {"primitive_classes", a.primitive_classes},
                  {"legally_orientable_by_legs", by_legs},
                  {"top_leg_classes", top},
                  {"rank_below", a.rank_below},
                  {"rank_top", a.rank_top},
                  {"rank_all", a.rank_all},
                  {"rank_below_plus_wheel", a.rank_below_plus_wheel},
                  {"functionals", a.functionals},
                  {"pass", a.holds}};
      results.push_back(std::move(r));
    }
  }
  if (!jsonl.empty()) {
    std::ofstream out(jsonl);
    if (!out) throw InvalidInput("cannot write " + jsonl);
    out << corpus_to_jsonl(corpus);
    extra["jsonl"] = jsonl;
  }
  return finish(g, "corpus", results, extra);
}

PolygonalCurve curve_for_writhe(const std::string& path, bool closed) {
  PolygonalCurve c = load_curve(path, closed);
  if (!c.closed())
    throw InvalidInput(path + " describes an open curve; pass --closed to join its ends");
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diagram spaces, weight systems and framing checks for inhomogeneous Chern-Simons"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--algebra", g.algebra_path, "Algebra spec JSON {family, n, rep}")
      ->check(CLI::ExistingFile);
  app.add_option("--out", g.out_path, "Write the JSON report here instead of stdout");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for sampling and Monte Carlo");

  std::string m_text = "2..4";
  auto* wv = app.add_subcommand("wheel-vanish", "Directed wheels on the circle reduce to zero");
  wv->add_option("--m", m_text, "Wheel sizes, e.g. 2..4 or 2,4");

  int sigma_m = 0;
  std::string n_text;
  bool no_fast = false, no_chi = false;
  int chi_max_n = 3;
  auto* sg = app.add_subcommand("sigma", "Sigma_m of the directed m-wheel in gl(n), interpolated in n");
  sg->add_option("--m", sigma_m, "Wheel size")->required();
  sg->add_option("--n", n_text, "Values of n (default 1..m+2)");
  sg->add_flag("--no-fast", no_fast, "Skip the fast-path comparison");
  sg->add_flag("--no-chi", no_chi, "Skip the chi weight comparison");
  sg->add_option("--chi-max-n", chi_max_n, "Largest n for the chi weight comparison");

  std::string diagram, skeleton = "circle", rep_name = "R";
  bool use_double = false, dump_tensor = false, dump_algebra = false;
  int theta_powers = 0;
  auto* wt = app.add_subcommand("weight", "Weight of a diagram; theta framing check");
  wt->add_option("--diagram", diagram, "Builtin name (theta, theta^K, tripod, wheel-M, directed-wheel-M) or .json file");
  wt->add_option("--skeleton", skeleton, "circle or interval (builtin diagrams)");
  wt->add_flag("--double", use_double, "Evaluate in the double of the algebra");
  wt->add_option("--rep", rep_name, "Representation of the double: R, R_phi or product");
  wt->add_flag("--dump-tensor", dump_tensor, "Include the contracted tensor");
  wt->add_flag("--dump-algebra", dump_algebra, "Include structure constants and metric");
  wt->add_option("--theta-powers", theta_powers, "Check theta^1..K in the double under R");

  int leg_bound_degree = 0, equivalence_degree = 0, stu_samples = 0, stu_degree = 3;
  auto* ot = app.add_subcommand("orientations", "Legal orientations, leg bound, directed STU");
  ot->add_option("--diagram", diagram, "Builtin name or .json file");
  ot->add_option("--skeleton", skeleton, "circle or interval (builtin diagrams)");
  ot->add_option("--leg-bound-degree", leg_bound_degree, "Exhaustive leg bound up to this degree");
  ot->add_option("--equivalence-degree", equivalence_degree,
                 "Directed sum against undirected weight up to this degree");
  ot->add_option("--stu-samples", stu_samples, "Random directed STU sites to check");
  ot->add_option("--stu-degree", stu_degree, "Corpus degree for STU sites");

  int max_degree = 4;
  std::string order = "both", jsonl;
  bool audit = false;
  auto* cp = app.add_subcommand("corpus", "Enumerate diagram classes");
  cp->add_option("--max-degree", max_degree, "Degree bound (at most 5)");
  cp->add_option("--skeleton", skeleton, "circle or interval");
  cp->add_option("--order", order, "forward, reverse or both");
  cp->add_option("--jsonl", jsonl, "Write the corpus as JSON lines");
  cp->add_flag("--audit", audit, "Primitive audit up to degree 4 (circle)");

  std::string curve_path, curve_path2;
  bool closed = false;
  double clearance = kDefaultClearance;
  std::int64_t mc_samples = 0;
  auto* wr = app.add_subcommand("writhe", "Writhe of a closed polygon");
  wr->add_option("curve", curve_path, "CSV or JSON curve")->required()->check(CLI::ExistingFile);
  wr->add_flag("--closed", closed, "Join the last point to the first");
  wr->add_option("--clearance", clearance, "Contact threshold relative to the bounding box");
  wr->add_option("--mc-samples", mc_samples, "Monte Carlo cross-check sample count");

  double tolerance = 1e-6;
  auto* lk = app.add_subcommand("link", "Gauss linking number of two closed polygons");
  lk->add_option("first", curve_path, "CSV or JSON curve")->required()->check(CLI::ExistingFile);
  lk->add_option("second", curve_path2, "CSV or JSON curve")->required()->check(CLI::ExistingFile);
  lk->add_flag("--closed", closed, "Join the last point to the first");
  lk->add_option("--clearance", clearance, "Contact threshold relative to the bounding box");
  lk->add_option("--tolerance", tolerance, "Allowed distance from an integer");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInvalidArgument;
  }

  auto error = [&](const char* kind, const std::exception& e, int code) {
    std::cerr << kind << ": " << e.what() << "\n";
    try {
      emit(g, {{"pass", false}, {"error", kind}, {"message", e.what()}});
    } catch (const std::exception&) {
    }
    return code;
  };

  try {
    if (*wv) {
      return finish(g, "wheel-vanish",
                    {check_wheel_vanish(parse_range(m_text, "m"), algebra_of(g))});
    }
    if (*sg) {
      if (!g.algebra_path.empty() && algebra_of(g).family != "gl")
        throw InvalidArgument("sigma runs over gl(n); the algebra spec must name family gl");
      std::vector<int> ns =
          n_text.empty() ? parse_range("1.." + std::to_string(sigma_m + 2), "n")
                         : parse_range(n_text, "n");
      SigmaOptions opts;
      opts.check_fast = !no_fast;
      opts.check_chi = !no_chi;
      opts.chi_max_n = chi_max_n;
      return finish(g, "sigma", {check_sigma(sigma_m, ns, opts)});
    }
    if (*wt) {
      if (diagram.empty() && theta_powers == 0 && !dump_algebra)
        throw InvalidArgument("weight needs --diagram, --theta-powers or --dump-algebra");
      return cmd_weight(g, diagram, skeleton, use_double, rep_name, dump_tensor, dump_algebra,
                        theta_powers);
    }
    if (*ot) {
      return cmd_orientations(g, diagram, skeleton, leg_bound_degree, equivalence_degree,
                              stu_samples, stu_degree);
    }
    if (*cp) return cmd_corpus(g, max_degree, skeleton, order, jsonl, audit);
    if (*wr) {
      PolygonalCurve c = curve_for_writhe(curve_path, closed);
      try {
        return finish(g, "writhe", {check_writhe(c, clearance, mc_samples, g.seed, g.jobs)});
      } catch (const NumericalDegeneracy& e) {
        // A contact between segments means the input is not an embedded knot.
        throw InvalidInput(std::string("curve self-intersects within clearance: ") + e.what());
      }
    }
    if (*lk) {
      PolygonalCurve a = load_curve(curve_path, closed), b = load_curve(curve_path2, closed);
      if (!a.closed() || !b.closed())
        throw InvalidInput("linking needs closed curves; pass --closed to join ends");
      return finish(g, "link", {check_link(a, b, clearance, tolerance)});
    }
  } catch (const InvalidArgument& e) {
    return error("invalid-argument", e, kInvalidArgument);
  } catch (const InvalidInput& e) {
    return error("invalid-input", e, kInvalidInput);
  } catch (const NumericalDegeneracy& e) {
    return error("numerical-degeneracy", e, kNumericalDegeneracy);
  } catch (const NotApplicable& e) {
    return error("not-applicable", e, kNotApplicable);
  }
  return kInvalidArgument;
}

#include "inhomcs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <atomic>

#include "inhomcs/corpus.hpp"
#include "inhomcs/errors.hpp"
#include "inhomcs/orientations.hpp"
#include "inhomcs/sigma.hpp"
#include "inhomcs/weights.hpp"

namespace inhomcs {

namespace {

std::string trimmed(std::string text) {
  while (!text.empty() && (text.back() == ' ' || text.back() == ';')) text.pop_back();
  return text;
}

std::vector<Rational> trace_character(const Representation& B) {
  std::vector<Rational> phi;
  for (const auto& m : B.matrices()) phi.push_back(m.trace());
  return phi;
}

Json rational_list(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

Rational power(const Rational& x, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

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

const SkeletonKind kSkeletons[] = {SkeletonKind::Circle, SkeletonKind::Interval};

}  // namespace

DoubleBank::DoubleBank(const AlgebraSpec& base)
    : g(build_from_spec(base).algebra),
      B(build_from_spec(base).rep),
      l0(make_double(g)),
      R(rep_R(B, l0)),
      R_phi(rep_R(B, l0, trace_character(B))),
      R_product(tensor_product(l0.algebra, R, R_phi)) {}

std::vector<DoubleBank::Named> DoubleBank::all() const {
  return {{R.name(), &R}, {R_phi.name(), &R_phi}, {"R (x) R_phi", &R_product}};
}

CheckResult check_wheel_vanish(const std::vector<int>& ms, const AlgebraSpec& base) {
  if (ms.empty()) throw InvalidArgument("empty m range");
  DoubleBank bank(base);
  CheckResult out;
  out.pass = true;
  Json runs = Json::array();
  std::ostringstream s;
  for (int m : ms) {
    WheelReduction red = reduce_wheel_on_circle(m);
    JacobiDiagram wheel = make_wheel(m, SkeletonKind::Circle);
    Rational dsum = directed_weight_sum(wheel, bank.l0, bank.R);
    Json info;
    info["R_phi"] = to_string(directed_weight_sum(wheel, bank.l0, bank.R_phi));
    info["R (x) R_phi"] = to_string(directed_weight_sum(wheel, bank.l0, bank.R_product));
    const bool ok = red.result.empty() && is_zero(dsum);
    out.pass = out.pass && ok;
    runs.push_back({{"m", m},
                    {"rewrite", to_json(red)},
                    {"directed_weight_sum", to_string(dsum)},
                    {"representation", bank.R.name()},
                    {"not_asserted", info},
                    {"pass", ok}});
    s << "m=" << m << (ok ? " zero" : " NONZERO") << " (" << red.trace.size() << " steps, sum "
      << to_string(dsum) << ") ";
  }
  out.summary = trimmed(s.str());
  out.report = {{"check", "wheel-vanish"}, {"algebra", bank.l0.algebra.name()}, {"runs", runs},
                {"pass", out.pass}};
  return out;
}

CheckResult check_framing(int max_power, const AlgebraSpec& base) {
  if (max_power < 1) throw InvalidArgument("theta power bound must be >= 1");
  DoubleBank bank(base);
  auto series = [&](const Representation& rep) {
    std::vector<Rational> w;
    for (int k = 1; k <= max_power; ++k)
      w.push_back(weight_circle(make_theta_power(k, SkeletonKind::Circle), bank.l0.algebra, rep));
    return w;
  };
  auto pattern = [&](const std::vector<Rational>& w, int dim) {
    for (int k = 1; k <= max_power; ++k)
      if (w[k - 1] * power(Rational(dim), k - 1) != power(w[0], k)) return false;
    return true;
  };
  std::vector<Rational> wr = series(bank.R), wc = series(bank.R_phi);
  const bool nonzero = !is_zero(wr[0]);
  const bool powers = pattern(wr, bank.R.dim());
  CheckResult out;
  out.pass = nonzero && powers;
  out.summary = "W(theta) = " + to_string(wr[0]) + " under " + bank.R.name() +
                (powers ? ", power pattern holds" : ", power pattern fails") + "; under " +
                bank.R_phi.name() + " W(theta) = " + to_string(wc[0]) +
                (pattern(wc, bank.R_phi.dim()) ? ", power pattern holds" : ", power pattern fails");
  out.report = {{"check", "framing"},
                {"algebra", bank.l0.algebra.name()},
                {"representation", bank.R.name()},
                {"theta_powers", rational_list(wr)},
                {"theta_nonzero", nonzero},
                {"power_pattern", powers},
                {"pattern", "W(theta^k) * dim^(k-1) = W(theta)^k"},
                {"not_asserted",
                 {{"representation", bank.R_phi.name()},
                  {"theta_powers", rational_list(wc)},
                  {"power_pattern", pattern(wc, bank.R_phi.dim())}}},
                {"pass", out.pass}};
  return out;
}

CheckResult check_leg_bound(int max_degree, int jobs) {
  CheckResult out;
  out.pass = true;
  Json per = Json::array();
  std::ostringstream s;
  for (SkeletonKind sk : kSkeletons) {
    DiagramCorpus corpus = enumerate_diagrams(max_degree, sk, GenerationOrder::Forward, jobs);
    const int count = static_cast<int>(corpus.entries.size());
    std::vector<int> orientations(count, 0);
    std::vector<Json> bad(count);
    parallel_for(count, jobs, [&](int i) {
      JacobiDiagram d = diagram_from_key(corpus.entries[i].key);
      for (const auto& o : legal_orientations(d).orientations) {
        ++orientations[i];
        LegBoundReport r = verify_leg_bound(o);
        if (!r.holds)
          bad[i] = {{"key", to_string(corpus.entries[i].key)}, {"report", to_json(r)}};
      }
    });
    long total = 0;
    Json violations = Json::array();
    for (int i = 0; i < count; ++i) {
      total += orientations[i];
      if (!bad[i].is_null()) violations.push_back(bad[i]);
    }
    out.pass = out.pass && violations.empty();
    per.push_back({{"skeleton", to_string(sk)},
                   {"classes", count},
                   {"orientations_checked", total},
                   {"violations", violations}});
    s << to_string(sk) << ": " << count << " classes, " << total << " orientations, "
      << violations.size() << " violations; ";
  }
  out.summary = trimmed(s.str());
  out.report = {{"check", "leg-bound"}, {"max_degree", max_degree}, {"skeletons", per},
                {"pass", out.pass}};
  return out;
}

CheckResult check_orientation_equivalence(int max_degree, const AlgebraSpec& base, int jobs) {
  DoubleBank bank(base);
  DiagramCorpus corpus = enumerate_diagrams(max_degree, SkeletonKind::Circle,
                                            GenerationOrder::Forward, jobs);
  const auto reps = bank.all();
  const int count = static_cast<int>(corpus.entries.size());
  // [class][rep] -> (directed, plain)
  std::vector<std::vector<std::pair<Rational, Rational>>> values(count);
  parallel_for(count, jobs, [&](int i) {
    JacobiDiagram d = diagram_from_key(corpus.entries[i].key);
    for (const auto& r : reps)
      values[i].emplace_back(directed_weight_sum(d, bank.l0, *r.rep),
                             weight_circle(d, bank.l0.algebra, *r.rep));
  });
  CheckResult out;
  out.pass = true;
  Json per = Json::array();
  std::ostringstream s;
  for (std::size_t k = 0; k < reps.size(); ++k) {
    int mismatches = 0, nonzero = 0;
    Json bad = Json::array();
    for (int i = 0; i < count; ++i) {
      const auto& [a, b] = values[i][k];
      if (!is_zero(b)) ++nonzero;
      if (a != b) {
        ++mismatches;
        bad.push_back({{"key", to_string(corpus.entries[i].key)},
                       {"directed_sum", to_string(a)},
                       {"weight", to_string(b)}});
      }
    }
    out.pass = out.pass && mismatches == 0;
    per.push_back({{"representation", reps[k].name},
                   {"classes", count},
                   {"nonzero_weights", nonzero},
                   {"mismatches", bad}});
    s << reps[k].name << ": " << mismatches << " mismatches (" << nonzero << "/" << count
      << " nonzero); ";
  }
  out.summary = trimmed(s.str());
  out.report = {{"check", "orientation-equivalence"},
                {"algebra", bank.l0.algebra.name()},
                {"max_degree", max_degree},
                {"representations", per},
                {"pass", out.pass}};
  return out;
}

CheckResult check_sigma(int m, const std::vector<int>& ns, const SigmaOptions& opts) {
  if (m < 2) throw InvalidArgument("sigma needs m >= 2");
  if (ns.empty()) throw InvalidArgument("empty n range");
  if (std::set<int>(ns.begin(), ns.end()).size() != ns.size())
    throw InvalidArgument("duplicate n values");
  for (int n : ns)
    if (n < 1) throw InvalidArgument("n must be >= 1");

  CheckResult out;
  out.pass = true;
  bool fast_ok = true, chi_ok = true;
  std::vector<std::pair<Rational, Rational>> points;
  Json values = Json::array();
  std::ostringstream s;
  for (int n : ns) {
    LieAlgebraData g = build_gl(n);
    Representation B = defining_gl(g, n);
    Rational v = sigma_wheel(m, g, B, true);
    points.emplace_back(n, v);
    Json entry = {{"n", n}, {"value", to_string(v)}};
    if (opts.check_fast) {
      Rational f = sigma_wheel_fast(m, g, B, true);
      entry["fast_value"] = to_string(f);
      fast_ok = fast_ok && f == v;
    }
    if (opts.check_orientations) {
      Rational b = sigma_wheel_fast(m, g, B, false);
      entry["reversed_orientation_value"] = to_string(b);
      out.pass = out.pass && b == v;
    }
    if (opts.check_chi && n <= opts.chi_max_n) {
      DiagramSum c = chi(make_wheel(m, SkeletonKind::Interval));
      Rational w = pair_interval(c, WeightSystem(g, B)).trace();
      entry["chi_weight"] = to_string(w);
      chi_ok = chi_ok && w == v;
    }
    values.push_back(entry);
  }
  out.pass = out.pass && fast_ok && chi_ok;

  Json interp;
  const int bound = m + 1;
  if (static_cast<int>(points.size()) >= bound + 1) {
    InterpolationResult r = interpolate_bounded(points, bound);
    const bool even = m % 2 == 0;
    const bool degree_ok = r.poly.degree() == bound;
    const bool leading_ok = r.poly.leading() == m;
    interp = {{"degree_bound", bound},
              {"consistent", r.consistent},
              {"interpolated_polynomial_coefficients", rational_list(r.poly.coeffs)},
              {"polynomial", to_string(r.poly)},
              {"degree", r.poly.degree()},
              {"leading_coefficient", to_string(r.poly.leading())},
              {"expected_degree", bound},
              {"expected_leading_coefficient", m}};
    out.pass = out.pass && r.consistent;
    if (opts.check_leading && even) {
      interp["leading_asserted"] = true;
      interp["leading_matches"] = degree_ok && leading_ok;
      out.pass = out.pass && degree_ok && leading_ok;
    } else {
      interp["leading_asserted"] = false;
    }
    s << "Sigma_" << m << "(n) = " << to_string(r.poly)
      << (r.consistent ? "" : " (inconsistent with degree bound)");
    if (opts.check_leading && even)
      s << (degree_ok && leading_ok ? "; leading term matches " : "; expected leading term ")
        << m << "*n^" << bound;
  } else {
    Polynomial p = interpolate(points);
    interp = {{"degree_bound", bound},
              {"consistent", nullptr},
              {"interpolated_polynomial_coefficients", rational_list(p.coeffs)},
              {"polynomial", to_string(p)},
              {"leading_asserted", false},
              {"note", "fewer than m + 2 points; polynomial is the exact fit"}};
    s << "Sigma_" << m << " at n =";
    for (std::size_t i = 0; i < points.size(); ++i)
      s << (i ? ", " : " ") << points[i].first.get_str() << ": " << to_string(points[i].second);
    if (opts.check_chi) s << (chi_ok ? "; chi weight agrees" : "; chi weight differs");
    if (opts.check_fast) s << (fast_ok ? "; fast path agrees" : "; fast path differs");
  }
  out.summary = trimmed(s.str());
  out.report = {{"check", "sigma"}, {"m", m}, {"n", ns}, {"values", values},
                {"interpolation", interp}, {"pass", out.pass}};
  return out;
}

CheckResult check_stu_random(int count, std::uint64_t seed, int max_degree,
                             const AlgebraSpec& base) {
  if (count < 1) throw InvalidArgument("STU sample count must be >= 1");
  DoubleBank bank(base);
  struct Site {
    DirectedJacobiDiagram diagram;
    int leg;
  };
  std::vector<Site> sites;
  for (SkeletonKind sk : kSkeletons) {
    DiagramCorpus corpus = enumerate_diagrams(max_degree, sk);
    for (const auto& e : corpus.entries) {
      JacobiDiagram d = diagram_from_key(e.key);
      for (const auto& o : legal_orientations(d).orientations)
        for (int leg = 0; leg < d.leg_count(); ++leg) {
          try {
            apply_directed_stu(o, leg);
            sites.push_back({o, leg});
          } catch (const NotApplicable&) {
          }
        }
    }
  }
  std::vector<Site> chosen;
  std::mt19937_64 rng(seed);
  std::sample(sites.begin(), sites.end(), std::back_inserter(chosen),
              std::min<std::size_t>(count, sites.size()), rng);

  CheckResult out;
  out.pass = static_cast<int>(chosen.size()) == count;
  Json runs = Json::array();
  int nonvacuous = 0, failures = 0;
  for (const auto& site : chosen) {
    StuApplication app = apply_directed_stu(site.diagram, site.leg);
    DiagramSum lhs;
    lhs.add(site.diagram, 1);
    DiagramSum rhs = app.rhs();
    const bool circle = site.diagram.base().skeleton() == SkeletonKind::Circle;
    Json per = Json::object();
    bool ok = true, any_nonzero = false;
    for (const auto& r : bank.all()) {
      WeightSystem ws(bank.l0, *r.rep);
      if (circle) {
        Rational a = pair_circle(lhs, ws), b = pair_circle(rhs, ws);
        per[r.name] = {{"lhs", to_string(a)}, {"rhs", to_string(b)}};
        ok = ok && a == b;
        any_nonzero = any_nonzero || !is_zero(a);
      } else {
        Matrix a = pair_interval(lhs, ws), b = pair_interval(rhs, ws);
        per[r.name] = {{"lhs", to_string(a)}, {"rhs", to_string(b)}};
        ok = ok && a == b;
        any_nonzero = any_nonzero || !a.is_zero();
      }
    }
    if (any_nonzero) ++nonvacuous;
    if (!ok) ++failures;
    out.pass = out.pass && ok;
    runs.push_back({{"skeleton", to_string(site.diagram.base().skeleton())},
                    {"diagram", to_string(canonicalize(site.diagram).key)},
                    {"leg", site.leg},
                    {"variant", app.variant},
                    {"rhs_terms", app.terms.size()},
                    {"pairings", per},
                    {"pass", ok}});
  }
  std::ostringstream s;
  s << chosen.size() << " of " << sites.size() << " sites sampled, " << failures
    << " disagreements, " << nonvacuous << " with a nonzero pairing";
  out.summary = trimmed(s.str());
  out.report = {{"check", "directed-stu"},
                {"algebra", bank.l0.algebra.name()},
                {"seed", seed},
                {"max_degree", max_degree},
                {"available_sites", sites.size()},
                {"sites", runs},
                {"pass", out.pass}};
  return out;
}

CheckResult check_writhe(const PolygonalCurve& c, double clearance, std::int64_t mc_samples,
                         std::uint64_t seed, int jobs) {
  CheckResult out;
  const double w = writhe_exact(c, clearance);
  out.report = {{"check", "writhe"},
                {"segments", c.segment_count()},
                {"writhe", w},
                {"clearance", clearance}};
  std::ostringstream s;
  s.precision(12);
  s << "writhe " << w;
  out.pass = true;
  if (mc_samples > 0) {
    MonteCarloEstimate e = writhe_monte_carlo(c, mc_samples, seed, jobs);
    const double z = std::abs(w - e.value) / e.standard_error;
    out.pass = z <= 3.0;
    out.report["monte_carlo"] = {{"value", e.value},
                                 {"standard_error", e.standard_error},
                                 {"samples", e.samples},
                                 {"seed", seed},
                                 {"deviation_in_standard_errors", z},
                                 {"tolerance_standard_errors", 3}};
    s.precision(6);
    s << ", Monte Carlo " << e.value << " +- " << e.standard_error << " (" << z << " se)";
  }
  out.report["pass"] = out.pass;
  out.summary = trimmed(s.str());
  return out;
}

CheckResult check_link(const PolygonalCurve& a, const PolygonalCurve& b, double clearance,
                       double tol) {
  CheckResult out;
  const double lk = linking_gauss(a, b, clearance);
  const double nearest = std::round(lk);
  out.pass = std::abs(lk - nearest) <= tol;
  out.report = {{"check", "link"},
                {"linking_number", lk},
                {"nearest_integer", static_cast<long long>(nearest)},
                {"deviation", std::abs(lk - nearest)},
                {"tolerance", tol},
                {"clearance", clearance},
                {"pass", out.pass}};
  std::ostringstream s;
  s.precision(12);
  s << "linking number " << lk;
  out.summary = trimmed(s.str());
  return out;
}

}  // namespace inhomcs

// Prints one PASS/FAIL line per acceptance criterion; exit status is nonzero
// if any criterion fails. With --json PATH the full reports are written too.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "inhomcs/geometry.hpp"
#include "inhomcs/verify.hpp"

using namespace inhomcs;

namespace {

const std::string kData = INHOMCS_TEST_DATA;

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<CheckResult()> run;
};

CheckResult combine(const std::string& name, const std::vector<CheckResult>& parts) {
  CheckResult out;
  out.pass = true;
  Json reports = Json::array();
  std::ostringstream s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out.pass = out.pass && parts[i].pass;
    reports.push_back(parts[i].report);
    s << (i ? "; " : "") << parts[i].summary;
  }
  out.summary = s.str();
  out.report = {{"check", name}, {"parts", reports}, {"pass", out.pass}};
  return out;
}

CheckResult geometric_framing() {
  std::vector<CheckResult> parts;

  PolygonalCurve square = load_curve(kData + "/square.csv", false);
  CheckResult planar;
  const double w = writhe_exact(square);
  planar.pass = std::abs(w) <= 1e-12;
  planar.summary = "square writhe " + std::to_string(w);
  planar.report = {{"check", "planar-writhe"}, {"writhe", w}, {"tolerance", 1e-12},
                   {"pass", planar.pass}};
  parts.push_back(planar);

  parts.push_back(check_link(load_curve(kData + "/hopf_a.json", false),
                             load_curve(kData + "/hopf_b.json", false), kDefaultClearance, 1e-6));
  CheckResult& hopf = parts.back();
  const double lk = hopf.report["linking_number"].get<double>();
  hopf.pass = hopf.pass && std::abs(std::abs(lk) - 1) <= 1e-6;
  hopf.report["pass"] = hopf.pass;

  parts.push_back(check_writhe(load_curve(kData + "/trefoil.csv", true), kDefaultClearance,
                               10'000'000, 12345, 4));
  return combine("geometric-framing", parts);
}

}  // namespace

int main(int argc, char** argv) {
  std::string json_path;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--json") json_path = argv[i + 1];

  SigmaOptions identity_only;
  identity_only.check_fast = false;
  identity_only.check_leading = false;
  identity_only.check_orientations = false;
  SigmaOptions leading_only;
  leading_only.check_chi = false;
  leading_only.check_fast = false;
  leading_only.check_orientations = false;
  SigmaOptions fast_only;
  fast_only.check_chi = false;
  fast_only.check_leading = false;
  fast_only.check_orientations = false;

  std::vector<Criterion> criteria = {
      {1, "wheel vanishing on the circle, m = 2, 3, 4", 30,
       [] { return check_wheel_vanish({2, 3, 4}); }},
      {2, "theta weight in double(gl(2)) under R is nonzero, powers k <= 3", 5,
       [] { return check_framing(3); }},
      {3, "leg bound over the degree <= 4 corpus", 120, [] { return check_leg_bound(4, 4); }},
      {4, "orientation sum equals undirected weight, degree <= 3", 120,
       [] { return check_orientation_equivalence(3, {}, 4); }},
      {5, "Sigma_m equals the gl(n) weight of chi(m-wheel), m in {2,4}, n in {2,3}", 60,
       [&] {
         return combine("observable-identity",
                        {check_sigma(2, {2, 3}, identity_only), check_sigma(4, {2, 3}, identity_only)});
       }},
      {6, "Sigma_m over n = 1..m+2 has degree m+1 and leading coefficient m, m = 2, 4", 300,
       [&] {
         return combine("leading-term", {check_sigma(2, {1, 2, 3, 4}, leading_only),
                                         check_sigma(4, {1, 2, 3, 4, 5, 6}, leading_only)});
       }},
      {7, "fast path equals the full pipeline on the inputs of criterion 5", 60,
       [&] {
         return combine("fast-path",
                        {check_sigma(2, {2, 3}, fast_only), check_sigma(4, {2, 3}, fast_only)});
       }},
      {8, "directed STU at 20 random corpus sites, double(gl(2))", 60,
       [] { return check_stu_random(20, 2024, 4); }},
      {9, "planar writhe, Hopf linking, trefoil against Monte Carlo", 120, geometric_framing},
  };

  bool all = true;
  Json reports = Json::array();
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.pass = false;
      r.summary = std::string("error: ") + e.what();
      r.report = {{"error", e.what()}};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = dt <= c.budget_seconds;
    const bool pass = r.pass && in_budget;
    all = all && pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", dt, c.budget_seconds);
    std::cout << "criterion " << c.number << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title
              << "  [" << timing << (in_budget ? "" : ", over budget") << "]  " << r.summary
              << std::endl;
    reports.push_back({{"criterion", c.number}, {"pass", pass}, {"seconds", dt}, {"report", r.report}});
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    out << reports.dump(2) << "\n";
  }
  return all ? 0 : 1;
}

#include "inhomcs/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "inhomcs/errors.hpp"
#include "json.hpp"

namespace inhomcs {

namespace {

constexpr double kPi = 3.14159265358979323846;

Point3 sub(const Point3& a, const Point3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Point3 add(const Point3& a, const Point3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Point3 scale(const Point3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }
double dot(const Point3& a, const Point3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Point3 cross(const Point3& a, const Point3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double norm(const Point3& a) { return std::sqrt(dot(a, a)); }

// Neumaier's compensated sum.
class Accumulator {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) comp_ += (sum_ - t) + x;
    else comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0;
  double comp_ = 0;
};

std::string pair_name(const char* a, int i, const char* b, int j) {
  return std::string(a) + " segment " + std::to_string(i) + " and " + b + " segment " +
         std::to_string(j);
}

bool all_finite(const Point3& p) {
  return std::isfinite(p[0]) && std::isfinite(p[1]) && std::isfinite(p[2]);
}

}  // namespace

PolygonalCurve::PolygonalCurve(std::vector<Point3> points, bool closed)
    : points_(std::move(points)), closed_(closed) {
  if (points_.size() < 3)
    throw InvalidArgument("a polygonal curve needs at least 3 points, got " +
                          std::to_string(points_.size()));
  for (const auto& p : points_)
    if (!all_finite(p)) throw InvalidArgument("curve has a non-finite coordinate");
  for (int s = 0; s < segment_count(); ++s)
    if (norm(sub(end(s), start(s))) == 0)
      throw InvalidArgument("curve points " + std::to_string(s) + " and " +
                            std::to_string((s + 1) % points_.size()) + " coincide");
}

int PolygonalCurve::segment_count() const {
  const int n = static_cast<int>(points_.size());
  return closed_ ? n : n - 1;
}

double PolygonalCurve::length() const {
  Accumulator acc;
  for (int s = 0; s < segment_count(); ++s) acc.add(norm(sub(end(s), start(s))));
  return acc.value();
}

double PolygonalCurve::bbox_diameter() const {
  Point3 lo = points_.front(), hi = points_.front();
  for (const auto& p : points_)
    for (int k = 0; k < 3; ++k) {
      lo[k] = std::min(lo[k], p[k]);
      hi[k] = std::max(hi[k], p[k]);
    }
  return norm(sub(hi, lo));
}

double segment_distance(const Point3& p1, const Point3& q1, const Point3& p2, const Point3& q2) {
  // Closest points of two segments, clamped parametrization.
  const Point3 d1 = sub(q1, p1);
  const Point3 d2 = sub(q2, p2);
  const Point3 r = sub(p1, p2);
  const double a = dot(d1, d1);
  const double e = dot(d2, d2);
  const double f = dot(d2, r);
  const double c = dot(d1, r);
  const double b = dot(d1, d2);
  const double denom = a * e - b * b;
  double s = denom > 0 ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
  double t = (b * s + f) / e;
  if (t < 0) {
    t = 0;
    s = std::clamp(-c / a, 0.0, 1.0);
  } else if (t > 1) {
    t = 1;
    s = std::clamp((b - c) / a, 0.0, 1.0);
  }
  return norm(sub(add(p1, scale(d1, s)), add(p2, scale(d2, t))));
}

namespace {

// Signed solid angle of the spherical triangle spanned by a, b, c
// (Van Oosterom and Strackee), well conditioned near coplanarity.
double triangle_solid_angle(const Point3& a, const Point3& b, const Point3& c) {
  const double la = norm(a), lb = norm(b), lc = norm(c);
  const double num = dot(a, cross(b, c));
  const double den = la * lb * lc + dot(a, b) * lc + dot(a, c) * lb + dot(b, c) * la;
  return 2 * std::atan2(num, den);
}

}  // namespace

double pair_linking(const Point3& p1, const Point3& p2, const Point3& p3, const Point3& p4) {
  // The directions p - q, p on the second segment and q on the first, sweep
  // the spherical quadrilateral r13, r14, r24, r23.
  const Point3 r13 = sub(p3, p1), r14 = sub(p4, p1), r23 = sub(p3, p2), r24 = sub(p4, p2);
  const double omega = triangle_solid_angle(r13, r14, r24) + triangle_solid_angle(r13, r24, r23);
  return -omega / (4 * kPi);
}

double writhe_exact(const PolygonalCurve& c, double clearance) {
  if (!c.closed()) throw InvalidArgument("writhe needs a closed curve");
  const int n = c.segment_count();
  const double tol = clearance * c.bbox_diameter();
  Accumulator acc;
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segment_distance(c.start(i), c.end(i), c.start(j), c.end(j)) <= tol)
        throw NumericalDegeneracy(pair_name("curve", i, "curve", j) +
                                  " come within the clearance");
      acc.add(pair_linking(c.start(i), c.end(i), c.start(j), c.end(j)));
    }
  return 2 * acc.value();
}

double linking_gauss(const PolygonalCurve& a, const PolygonalCurve& b, double clearance) {
  if (!a.closed() || !b.closed()) throw InvalidArgument("linking needs two closed curves");
  const double tol = clearance * std::max(a.bbox_diameter(), b.bbox_diameter());
  Accumulator acc;
  for (int i = 0; i < a.segment_count(); ++i)
    for (int j = 0; j < b.segment_count(); ++j) {
      if (segment_distance(a.start(i), a.end(i), b.start(j), b.end(j)) <= tol)
        throw NumericalDegeneracy(pair_name("first", i, "second", j) +
                                  " come within the clearance");
      acc.add(pair_linking(a.start(i), a.end(i), b.start(j), b.end(j)));
    }
  return acc.value();
}

MonteCarloEstimate writhe_monte_carlo(const PolygonalCurve& c, std::int64_t samples,
                                      std::uint64_t seed, int jobs) {
  if (!c.closed()) throw InvalidArgument("writhe needs a closed curve");
  if (samples < 2) throw InvalidArgument("need at least 2 Monte Carlo samples");
  jobs = std::max(1, jobs);
  const int n = c.segment_count();
  std::vector<double> cumulative(n + 1, 0.0);
  std::vector<Point3> tangent(n);
  for (int s = 0; s < n; ++s) {
    Point3 d = sub(c.end(s), c.start(s));
    double len = norm(d);
    cumulative[s + 1] = cumulative[s] + len;
    tangent[s] = scale(d, 1 / len);
  }
  const double total = cumulative[n];
  const double weight = total * total / (4 * kPi);

  struct Partial {
    Accumulator sum, sum_sq;
  };
  // Fixed streams so the estimate depends on the seed only, not on jobs.
  constexpr int kStreams = 64;
  std::vector<Partial> parts(kStreams);
  auto run = [&](int k) {
    std::int64_t count = samples / kStreams + (k < samples % kStreams ? 1 : 0);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(k)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(0.0, total);
    auto locate = [&](double s, Point3& p) {
      int seg = static_cast<int>(std::upper_bound(cumulative.begin(), cumulative.end(), s) -
                                 cumulative.begin()) - 1;
      seg = std::clamp(seg, 0, n - 1);
      p = add(c.start(seg), scale(tangent[seg], s - cumulative[seg]));
      return seg;
    };
    for (std::int64_t i = 0; i < count; ++i) {
      Point3 x, y;
      int a = locate(unit(rng), x);
      int b = locate(unit(rng), y);
      double v = 0;
      if (a != b) {
        Point3 r = sub(x, y);
        double dist = norm(r);
        if (dist > 0) v = weight * dot(cross(tangent[a], tangent[b]), r) / (dist * dist * dist);
      }
      parts[k].sum.add(v);
      parts[k].sum_sq.add(v * v);
    }
  };
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int k = next++; k < kStreams; k = next++) run(k);
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < std::min(jobs, kStreams); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  Accumulator sum, sum_sq;
  for (const auto& p : parts) {
    sum.add(p.sum.value());
    sum_sq.add(p.sum_sq.value());
  }
  const double mean = sum.value() / static_cast<double>(samples);
  const double var = std::max(0.0, (sum_sq.value() / static_cast<double>(samples) - mean * mean) *
                                       static_cast<double>(samples) / (samples - 1));
  return {mean, std::sqrt(var / static_cast<double>(samples)), samples};
}

PolygonalCurve subdivide(const PolygonalCurve& c, int k) {
  if (k < 1) throw InvalidArgument("subdivision factor must be >= 1");
  std::vector<Point3> pts;
  for (int s = 0; s < c.segment_count(); ++s)
    for (int i = 0; i < k; ++i)
      pts.push_back(add(c.start(s), scale(sub(c.end(s), c.start(s)), static_cast<double>(i) / k)));
  if (!c.closed()) pts.push_back(c.points().back());
  return PolygonalCurve(std::move(pts), c.closed());
}

PolygonalCurve circle_polygon(const Point3& centre, const Point3& u, const Point3& v, double r,
                              int n) {
  std::vector<Point3> pts;
  for (int i = 0; i < n; ++i) {
    double t = 2 * kPi * i / n;
    pts.push_back(add(centre, add(scale(u, r * std::cos(t)), scale(v, r * std::sin(t)))));
  }
  return PolygonalCurve(std::move(pts), true);
}

namespace {

PolygonalCurve finish(std::vector<Point3> pts, bool closed) {
  if (pts.size() >= 2 && pts.front() == pts.back()) {
    pts.pop_back();
    closed = true;
  }
  try {
    return PolygonalCurve(std::move(pts), closed);
  } catch (const InvalidArgument& e) {
    throw InvalidInput(e.what());
  }
}

Point3 json_point(const nlohmann::json& p) {
  if (!p.is_array() || p.size() != 3) throw InvalidInput("each point must be [x, y, z]");
  Point3 q;
  for (int k = 0; k < 3; ++k) {
    if (!p[k].is_number()) throw InvalidInput("point coordinates must be numbers");
    q[k] = p[k].get<double>();
  }
  return q;
}

}  // namespace

PolygonalCurve parse_curve(const std::string& text, bool json, bool force_closed) {
  std::vector<Point3> pts;
  bool closed = force_closed;
  if (json) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InvalidInput(std::string("curve JSON: ") + e.what());
    }
    const nlohmann::json* arr = &doc;
    if (doc.is_object()) {
      if (!doc.contains("points")) throw InvalidInput("curve JSON needs a \"points\" array");
      arr = &doc["points"];
      if (doc.contains("closed")) {
        if (!doc["closed"].is_boolean()) throw InvalidInput("\"closed\" must be a boolean");
        closed = closed || doc["closed"].get<bool>();
      }
    }
    if (!arr->is_array()) throw InvalidInput("curve points must be an array");
    for (const auto& p : *arr) pts.push_back(json_point(p));
    return finish(std::move(pts), closed);
  }

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    Point3 p;
    if (!(row >> p[0] >> p[1] >> p[2])) {
      if (pts.empty() && lineno == 1) continue;  // header
      throw InvalidInput("line " + std::to_string(lineno) + ": expected x,y,z");
    }
    std::string extra;
    if (row >> extra) throw InvalidInput("line " + std::to_string(lineno) + ": too many columns");
    pts.push_back(p);
  }
  return finish(std::move(pts), closed);
}

PolygonalCurve load_curve(const std::string& path, bool force_closed) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open curve file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
  return parse_curve(buf.str(), json, force_closed);
}

}  // namespace inhomcs

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace inhomcs {

using Point3 = std::array<double, 3>;

/// A polygon in R^3. Closed curves have an implicit segment from the last
/// point back to the first. Construction checks the point count and that
/// consecutive points differ; self-avoidance is checked by the integrals,
/// which see every segment pair anyway.
class PolygonalCurve {
 public:
  PolygonalCurve(std::vector<Point3> points, bool closed);

  const std::vector<Point3>& points() const { return points_; }
  bool closed() const { return closed_; }
  int segment_count() const;
  const Point3& start(int s) const { return points_[s]; }
  const Point3& end(int s) const { return points_[(s + 1) % points_.size()]; }
  double length() const;
  double bbox_diameter() const;

 private:
  std::vector<Point3> points_;
  bool closed_;
};

// Default clearance, relative to the bounding-box diameter.
inline constexpr double kDefaultClearance = 1e-9;

/// Self-linking (writhe) of a closed polygon: twice the sum over
/// non-adjacent segment pairs of the signed quadrilateral solid angle, over
/// 4 pi. Throws InvalidArgument on an open curve and NumericalDegeneracy
/// naming the pair when two segments come within the clearance.
double writhe_exact(const PolygonalCurve& c, double clearance = kDefaultClearance);

/// Gauss linking number of two closed polygons (not rounded).
double linking_gauss(const PolygonalCurve& a, const PolygonalCurve& b,
                     double clearance = kDefaultClearance);

/// Signed solid angle subtended by segment pair (p1,p2), (p3,p4), divided
/// by 4 pi. Zero for coplanar pairs.
double pair_linking(const Point3& p1, const Point3& p2, const Point3& p3, const Point3& p4);

// Distance between two closed segments.
double segment_distance(const Point3& p1, const Point3& p2, const Point3& p3, const Point3& p4);

struct MonteCarloEstimate {
  double value = 0;
  double standard_error = 0;
  std::int64_t samples = 0;
};

/// Gauss double integral of the curve against itself, sampled uniformly in
/// arc length. jobs > 1 splits the samples over threads with derived seeds;
/// the result depends only on (samples, seed, jobs).
MonteCarloEstimate writhe_monte_carlo(const PolygonalCurve& c, std::int64_t samples,
                                      std::uint64_t seed, int jobs = 1);

// Every segment cut into k equal pieces.
PolygonalCurve subdivide(const PolygonalCurve& c, int k);

// Regular N-gon on the circle centre + r (cos t u + sin t v).
PolygonalCurve circle_polygon(const Point3& centre, const Point3& u, const Point3& v, double r,
                              int n);

/// Reads x,y,z rows (CSV, optional header) or JSON ({"points": [...],
/// "closed": bool} or a bare array). A repeated first point at the end marks
/// the curve closed; force_closed closes it regardless. Throws InvalidInput.
PolygonalCurve load_curve(const std::string& path, bool force_closed);
PolygonalCurve parse_curve(const std::string& text, bool json, bool force_closed);

}  // namespace inhomcs

#pragma once

// Exact convex hulls in dimension <= 3 and normalized volumes of lattice
// polytopes (d! times the Euclidean volume).

#include "dmdeg/integer_matrix.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace dmdeg {

class UnsupportedDimension : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Point = std::vector<Integer>;

namespace detail {

inline Integer cross2(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Andrew's monotone chain; strictly convex vertex cycle, counter-clockwise.
inline std::vector<Point> hull2(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

inline Integer det3(const Point& a, const Point& b, const Point& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

inline Point sub(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Point cross3(const Point& a, const Point& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Integer dot(const Point& a, const Point& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Normalized volume of a full-dimensional 3-polytope: facets are found by
/// testing every plane through three points, each facet polygon is ordered
/// by a 2D hull of its projection and fan-triangulated, and every triangle
/// is coned from a fixed hull vertex.
inline Integer normalized_volume3(const std::vector<Point>& pts_in) {
  std::vector<Point> pts = pts_in;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  std::set<std::vector<Integer>> seen;  // normalized (normal, offset)
  const Point& apex = pts[0];
  Integer total = 0;
  bool full = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Point nrm = cross3(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
        if (nrm[0] == 0 && nrm[1] == 0 && nrm[2] == 0) continue;
        Integer off = dot(nrm, pts[i]);
        int sign = 0;
        bool facet = true;
        std::vector<Point> on;
        for (const auto& p : pts) {
          Integer s = dot(nrm, p) - off;
          if (s == 0) {
            on.push_back(p);
            continue;
          }
          int sg = s > 0 ? 1 : -1;
          full = true;
          if (sign == 0) sign = sg;
          if (sg != sign) {
            facet = false;
            break;
          }
        }
        if (!facet || sign == 0) continue;
        Integer g = 0;
        for (auto& v : nrm) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        std::vector<Integer> key;
        for (auto& v : nrm) key.push_back(v / g * sign);
        key.push_back(off / g * sign);
        if (!seen.insert(key).second) continue;
        // Order the facet polygon via a 2D projection dropping a coordinate
        // on which the normal is nonzero.
        int drop = nrm[0] != 0 ? 0 : (nrm[1] != 0 ? 1 : 2);
        std::vector<Point> proj;
        for (const auto& p : on) {
          Point q;
          for (int c = 0; c < 3; ++c)
            if (c != drop) q.push_back(p[c]);
          q.push_back(0);  // placeholder index slot
          proj.push_back(q);
        }
        for (std::size_t t = 0; t < on.size(); ++t) proj[t][2] = static_cast<long>(t);
        std::vector<Point> flat;
        for (const auto& q : proj) flat.push_back({q[0], q[1], q[2]});
        auto ring2 = hull2(flat);
        for (std::size_t t = 1; t + 1 < ring2.size(); ++t) {
          const Point& a = on[ring2[0][2].get_si()];
          const Point& b = on[ring2[t][2].get_si()];
          const Point& c = on[ring2[t + 1][2].get_si()];
          total += abs(det3(sub(a, apex), sub(b, apex), sub(c, apex)));
        }
      }
  if (!full) return 0;
  return total;
}

}  // namespace detail

/// d! * vol(conv{0, columns of A}) for d <= 3.
inline Integer normalized_volume_hull(const IntMatrix& a) {
  const int d = static_cast<int>(a.size());
  if (d == 0) throw std::invalid_argument("normalized_volume: empty matrix");
  if (d > 3) throw UnsupportedDimension("normalized_volume: hull path supports d <= 3, got d = " + std::to_string(d));
  const int n = static_cast<int>(a[0].size());
  std::vector<Point> pts{Point(d, 0)};
  for (int j = 0; j < n; ++j) {
    Point p;
    for (int i = 0; i < d; ++i) p.push_back(a[i][j]);
    pts.push_back(p);
  }
  if (d == 1) {
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
    return (*hi)[0] - (*lo)[0];
  }
  if (d == 2) {
    auto h = detail::hull2(pts);
    Integer s = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      const auto& p = h[i];
      const auto& q = h[(i + 1) % h.size()];
      s += p[0] * q[1] - p[1] * q[0];
    }
    return abs(s);
  }
  return detail::normalized_volume3(pts);
}

}  // namespace dmdeg

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include <Eigen/Geometry>

#include "sphere_internal.hpp"
#include "stellar/arrangements.hpp"

namespace stellar {

namespace internal {

Eigen::Vector3d cap_centre(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& c,
                           const Eigen::Vector3d& side) {
  Eigen::Vector3d n = (b - a).cross(c - a);
  const double len = n.norm();
  if (!(len > 0.0)) return side.normalized();
  n /= len;
  return n.dot(side) >= 0.0 ? n : Eigen::Vector3d(-n);
}

std::vector<VoronoiVertex> voronoi_vertices(const std::vector<Eigen::Vector3d>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<VoronoiVertex> out;
  constexpr double kSlack = 1e-12;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const auto& a = pts[static_cast<std::size_t>(i)];
        Eigen::Vector3d normal = (pts[static_cast<std::size_t>(j)] - a).cross(pts[static_cast<std::size_t>(k)] - a);
        const double len = normal.norm();
        if (!(len > 1e-300)) continue;
        normal /= len;
        const double h = normal.dot(a);
        bool above = false;
        bool below = false;
        for (int m = 0; m < n && !(above && below); ++m) {
          if (m == i || m == j || m == k) continue;
          const double s = normal.dot(pts[static_cast<std::size_t>(m)]) - h;
          if (s > kSlack) above = true;
          if (s < -kSlack) below = true;
        }
        // The cap on the side with no points is empty.
        if (!above) out.push_back({{i, j, k}, normal, std::sqrt(std::max(0.0, 2.0 - 2.0 * h))});
        if (!below) out.push_back({{i, j, k}, -normal, std::sqrt(std::max(0.0, 2.0 + 2.0 * h))});
      }
    }
  }
  return out;
}

double covering_radius_exact(const std::vector<Eigen::Vector3d>& pts) {
  if (pts.empty()) throw std::invalid_argument("covering radius of an empty arrangement");
  if (pts.size() == 1) return 2.0;
  if (pts.size() == 2) {
    // Farthest point is opposite the midpoint direction.
    const double c = std::clamp(pts[0].dot(pts[1]), -1.0, 1.0);
    return std::sqrt(2.0 + std::sqrt(2.0 + 2.0 * c));
  }
  double best = 0.0;
  for (const auto& v : voronoi_vertices(pts)) best = std::max(best, v.radius);
  return best;
}

}  // namespace internal

namespace {

std::vector<Eigen::Vector3d> build_geodesic(int level) {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Eigen::Vector3d> v = {
      {-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0}, {0, -1, t}, {0, 1, t},
      {0, -1, -t}, {0, 1, -t}, {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
  for (auto& p : v) p.normalize();
  std::vector<std::array<int, 3>> faces = {
      {0, 11, 5}, {0, 5, 1}, {0, 1, 7}, {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
      {11, 10, 2}, {10, 7, 6}, {7, 1, 8}, {3, 9, 4}, {3, 4, 2}, {3, 2, 6}, {3, 6, 8},
      {3, 8, 9}, {4, 9, 5}, {2, 4, 11}, {6, 2, 10}, {8, 6, 7}, {9, 8, 1}};
  for (int l = 0; l < level; ++l) {
    std::map<std::pair<int, int>, int> midpoints;
    const auto midpoint = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      const auto it = midpoints.find(key);
      if (it != midpoints.end()) return it->second;
      v.push_back((v[static_cast<std::size_t>(a)] + v[static_cast<std::size_t>(b)]).normalized());
      const int idx = static_cast<int>(v.size()) - 1;
      midpoints.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      const int ab = midpoint(f[0], f[1]);
      const int bc = midpoint(f[1], f[2]);
      const int ca = midpoint(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }
  return v;
}

const std::vector<Eigen::Vector3d>& cached_geodesic(int level) {
  static std::mutex mutex;
  static std::map<int, std::vector<Eigen::Vector3d>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(level);
  if (it == cache.end()) it = cache.emplace(level, build_geodesic(level)).first;
  return it->second;
}

double min_distance(const std::vector<Eigen::Vector3d>& pts, const Eigen::Vector3d& r) {
  double best = 4.0;
  for (const auto& p : pts) best = std::min(best, (p - r).squaredNorm());
  return std::sqrt(best);
}

}  // namespace

std::vector<Eigen::Vector3d> geodesic_sphere_vertices(int level) {
  if (level < 0 || level > 8) throw std::invalid_argument("geodesic_sphere_vertices: level must be in [0, 8]");
  return cached_geodesic(level);
}

double covering_objective(const Arrangement& a, int mesh_level) {
  if (mesh_level < 0 || mesh_level > 8) throw std::invalid_argument("covering_objective: mesh_level must be in [0, 8]");
  const auto& pts = a.vectors();
  const int n = a.n_points();
  if (n <= 2) return internal::covering_radius_exact(pts);

  const auto& mesh = cached_geodesic(mesh_level);
  double best = 0.0;
  std::vector<std::pair<double, int>> near(static_cast<std::size_t>(n));
  for (const auto& r : mesh) {
    for (int i = 0; i < n; ++i) near[static_cast<std::size_t>(i)] = {(pts[static_cast<std::size_t>(i)] - r).squaredNorm(), i};
    std::partial_sort(near.begin(), near.begin() + 3, near.end());
    best = std::max(best, std::sqrt(near[0].first));
    // The three nearest points around a far mesh node bound the Voronoi
    // region it sits in; their cap centre is the exact local maximum.
    const Eigen::Vector3d c = internal::cap_centre(pts[static_cast<std::size_t>(near[0].second)],
                                                   pts[static_cast<std::size_t>(near[1].second)],
                                                   pts[static_cast<std::size_t>(near[2].second)], r);
    best = std::max(best, min_distance(pts, c));
  }
  return best;
}

}  // namespace stellar

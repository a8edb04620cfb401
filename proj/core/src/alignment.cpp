#include "stellar/alignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include <Eigen/Geometry>
#include <Eigen/SVD>

namespace stellar {

namespace {

struct Matching {
  std::vector<int> permutation;
  double max_distance = std::numeric_limits<double>::infinity();
};

Matching greedy_match(std::span<const Eigen::Vector3d> a, std::span<const Eigen::Vector3d> b) {
  std::vector<std::tuple<double, int, int>> pairs;
  pairs.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      pairs.emplace_back((a[i] - b[j]).norm(), static_cast<int>(i), static_cast<int>(j));
    }
  }
  std::sort(pairs.begin(), pairs.end());
  Matching m;
  m.permutation.assign(a.size(), -1);
  std::vector<bool> used(b.size(), false);
  m.max_distance = 0.0;
  std::size_t matched = 0;
  for (const auto& [d, i, j] : pairs) {
    if (m.permutation[static_cast<std::size_t>(i)] >= 0 || used[static_cast<std::size_t>(j)]) continue;
    m.permutation[static_cast<std::size_t>(i)] = j;
    used[static_cast<std::size_t>(j)] = true;
    m.max_distance = std::max(m.max_distance, d);
    if (++matched == a.size()) break;
  }
  return m;
}

std::vector<Eigen::Vector3d> transform(std::span<const Eigen::Vector3d> pts, const Eigen::Matrix3d& r) {
  std::vector<Eigen::Vector3d> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(r * p);
  return out;
}

// Orthonormal frame with e1 = u and e2 in the (u, v) plane.
Eigen::Matrix3d frame(const Eigen::Vector3d& u, const Eigen::Vector3d& v) {
  const Eigen::Vector3d e1 = u.normalized();
  const Eigen::Vector3d e2 = (v - v.dot(e1) * e1).normalized();
  Eigen::Matrix3d f;
  f.col(0) = e1;
  f.col(1) = e2;
  f.col(2) = e1.cross(e2);
  return f;
}

Eigen::Matrix3d kabsch(std::span<const Eigen::Vector3d> a, std::span<const Eigen::Vector3d> b,
                       const std::vector<int>& perm, bool allow_reflection) {
  Eigen::Matrix3d h = Eigen::Matrix3d::Zero();
  for (std::size_t i = 0; i < a.size(); ++i) h += a[i] * b[static_cast<std::size_t>(perm[i])].transpose();
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d d = Eigen::Matrix3d::Identity();
  if (!allow_reflection && (svd.matrixV() * svd.matrixU().transpose()).determinant() < 0.0) d(2, 2) = -1.0;
  return svd.matrixV() * d * svd.matrixU().transpose();
}

}  // namespace

Alignment align_point_sets(std::span<const Eigen::Vector3d> from, std::span<const Eigen::Vector3d> to,
                           bool allow_reflection) {
  Alignment best;
  best.max_distance = std::numeric_limits<double>::infinity();
  if (from.size() != to.size() || from.empty()) return best;

  auto consider = [&](const Eigen::Matrix3d& r0) {
    Eigen::Matrix3d r = r0;
    auto m = greedy_match(transform(from, r), to);
    // Two Kabsch passes usually settle the matching.
    for (int pass = 0; pass < 2; ++pass) {
      const Eigen::Matrix3d rk = kabsch(from, to, m.permutation, allow_reflection);
      auto mk = greedy_match(transform(from, rk), to);
      if (mk.max_distance > m.max_distance) break;
      r = rk;
      m = std::move(mk);
    }
    if (m.max_distance < best.max_distance) {
      best.rotation = r;
      best.max_distance = m.max_distance;
      best.permutation = std::move(m.permutation);
    }
  };

  const Eigen::Vector3d b0 = to[0];
  std::size_t ref = 0;
  for (std::size_t j = 1; j < to.size(); ++j) {
    const double c = b0.cross(to[j]).norm();
    // Prefer a close, well-conditioned partner for the reference pair.
    if (c > 1e-3 && (ref == 0 || (to[j] - b0).norm() < (to[ref] - b0).norm() - 1e-9)) {
      ref = j;
    }
  }

  if (ref == 0) {
    // Every target point lies on one axis: align a single point.
    for (const auto& a : from) {
      consider(Eigen::Quaterniond::FromTwoVectors(a, b0).toRotationMatrix());
      if (allow_reflection) {
        consider(-Eigen::Quaterniond::FromTwoVectors(a, -b0).toRotationMatrix());
      }
    }
    return best;
  }

  const Eigen::Vector3d b1 = to[ref];
  const double ref_dot = b0.dot(b1);
  const Eigen::Matrix3d fb = frame(b0, b1);
  Eigen::Matrix3d fb_mirror = fb;
  fb_mirror.col(2) *= -1.0;
  for (std::size_t i = 0; i < from.size(); ++i) {
    for (std::size_t j = 0; j < from.size(); ++j) {
      if (i == j) continue;
      if (std::abs(from[i].dot(from[j]) - ref_dot) > 0.1) continue;
      if (from[i].cross(from[j]).norm() < 1e-6) continue;
      const Eigen::Matrix3d fa = frame(from[i], from[j]);
      consider(fb * fa.transpose());
      if (allow_reflection) consider(fb_mirror * fa.transpose());
    }
  }
  return best;
}

std::vector<int> min_cost_assignment(const Eigen::MatrixXd& cost) {
  // Shortest augmenting path formulation with potentials, 1-based internally.
  const int n = static_cast<int>(cost.rows());
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(static_cast<std::size_t>(n) + 1, 0.0), v(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<int> p(static_cast<std::size_t>(n) + 1, 0), way(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(static_cast<std::size_t>(n) + 1, inf);
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    do {
      used[static_cast<std::size_t>(j0)] = true;
      const int i0 = p[static_cast<std::size_t>(j0)];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[static_cast<std::size_t>(i0)] - v[static_cast<std::size_t>(j)];
        if (cur < minv[static_cast<std::size_t>(j)]) {
          minv[static_cast<std::size_t>(j)] = cur;
          way[static_cast<std::size_t>(j)] = j0;
        }
        if (minv[static_cast<std::size_t>(j)] < delta) {
          delta = minv[static_cast<std::size_t>(j)];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) {
          u[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += delta;
          v[static_cast<std::size_t>(j)] -= delta;
        } else {
          minv[static_cast<std::size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (p[static_cast<std::size_t>(j0)] != 0);
    do {
      const int j1 = way[static_cast<std::size_t>(j0)];
      p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> assignment(static_cast<std::size_t>(n), -1);
  for (int j = 1; j <= n; ++j) {
    if (p[static_cast<std::size_t>(j)] > 0) assignment[static_cast<std::size_t>(p[static_cast<std::size_t>(j)] - 1)] = j - 1;
  }
  return assignment;
}

}  // namespace stellar

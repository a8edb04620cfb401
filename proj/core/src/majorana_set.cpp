#include "stellar/majorana_set.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace stellar {

MajoranaSet::MajoranaSet(std::vector<BlochPoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("MajoranaSet: need at least one point");
}

std::vector<Eigen::Vector3d> MajoranaSet::vectors() const {
  std::vector<Eigen::Vector3d> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p.to_vector());
  return out;
}

double greedy_matching_distance(std::span<const Eigen::Vector3d> a,
                                std::span<const Eigen::Vector3d> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
  pairs.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) pairs.emplace_back((a[i] - b[j]).norm(), i, j);
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<bool> used_a(a.size(), false), used_b(b.size(), false);
  double worst = 0.0;
  std::size_t matched = 0;
  for (const auto& [d, i, j] : pairs) {
    if (used_a[i] || used_b[j]) continue;
    used_a[i] = used_b[j] = true;
    worst = std::max(worst, d);
    if (++matched == a.size()) break;
  }
  return worst;
}

bool approx_equal(const MajoranaSet& a, const MajoranaSet& b, double tol) {
  if (a.n_qubits() != b.n_qubits()) return false;
  const auto va = a.vectors();
  const auto vb = b.vectors();
  return greedy_matching_distance(va, vb) <= tol;
}

}  // namespace stellar

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "stellar/entanglement.hpp"
#include "stellar/symmetric_state.hpp"

namespace stellar {

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

double average_overlap_quadrature(const DickeVector& d, int nodes) {
  const int n = d.n_qubits();
  if (nodes < n + 1) {
    throw std::invalid_argument("average_overlap_quadrature: need at least N + 1 nodes");
  }
  const auto rule = gauss_legendre(nodes);
  double total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double theta = std::acos(rule.nodes[i]);
    double row = 0.0;
    for (int j = 0; j < nodes; ++j) {
      row += overlap_sq(d, BlochPoint(theta, 2.0 * std::numbers::pi * j / nodes));
    }
    total += rule.weights[i] * row;
  }
  // (1 / 4 pi) * sum_i w_i * (2 pi / M) * sum_j f
  return total / (2.0 * nodes);
}

}  // namespace stellar

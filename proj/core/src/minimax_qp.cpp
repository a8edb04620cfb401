#include "stellar/detail/minimax_qp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <Eigen/Cholesky>
#include <Eigen/QR>

namespace stellar::detail {

namespace {

constexpr int kEnumerationLimit = 12;

double dual_value(const Eigen::VectorXd& f, const Eigen::MatrixXd& m, const Eigen::VectorXd& lambda) {
  return f.dot(lambda) - 0.5 * lambda.dot(m * lambda);
}

Eigen::VectorXd enumerate_supports(const Eigen::VectorXd& f, const Eigen::MatrixXd& m, int max_support) {
  const int count = static_cast<int>(f.size());
  Eigen::VectorXd best = Eigen::VectorXd::Zero(count);
  double best_value = -std::numeric_limits<double>::infinity();
  for (unsigned mask = 1; mask < (1u << count); ++mask) {
    const int size = std::popcount(mask);
    if (size > max_support) continue;
    std::vector<int> idx;
    for (int j = 0; j < count; ++j) {
      if (mask & (1u << j)) idx.push_back(j);
    }
    // Stationarity on the face: M_S lambda_S + nu 1 = f_S, 1' lambda_S = 1.
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(size + 1, size + 1);
    Eigen::VectorXd rhs(size + 1);
    for (int a = 0; a < size; ++a) {
      for (int b = 0; b < size; ++b) kkt(a, b) = m(idx[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(b)]);
      kkt(a, size) = 1.0;
      kkt(size, a) = 1.0;
      rhs(a) = f(idx[static_cast<std::size_t>(a)]);
    }
    rhs(size) = 1.0;
    const Eigen::VectorXd sol = kkt.completeOrthogonalDecomposition().solve(rhs);
    Eigen::VectorXd lambda = Eigen::VectorXd::Zero(count);
    bool feasible = true;
    for (int a = 0; a < size; ++a) {
      const double v = sol(a);
      if (!std::isfinite(v) || v < -1e-12) {
        feasible = false;
        break;
      }
      lambda(idx[static_cast<std::size_t>(a)]) = std::max(v, 0.0);
    }
    if (!feasible || lambda.sum() <= 0.0) continue;
    lambda /= lambda.sum();
    const double value = dual_value(f, m, lambda);
    if (value > best_value) {
      best_value = value;
      best = lambda;
    }
  }
  return best;
}

Eigen::VectorXd accelerated_projection(const Eigen::VectorXd& f, const Eigen::MatrixXd& m) {
  const int count = static_cast<int>(f.size());
  const double lipschitz = std::max(m.diagonal().sum(), 1e-300);
  Eigen::VectorXd lambda = Eigen::VectorXd::Constant(count, 1.0 / count);
  Eigen::VectorXd y = lambda;
  double t = 1.0;
  for (int it = 0; it < 20000; ++it) {
    const Eigen::VectorXd next = project_to_simplex(y + (f - m * y) / lipschitz);
    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    y = next + ((t - 1.0) / t_next) * (next - lambda);
    const double change = (next - lambda).lpNorm<Eigen::Infinity>();
    lambda = next;
    t = t_next;
    if (change < 1e-15) break;
  }
  return lambda;
}

}  // namespace

Eigen::VectorXd project_to_simplex(const Eigen::VectorXd& v) {
  const auto n = v.size();
  std::vector<double> u(v.data(), v.data() + n);
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0;
  double tau = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    cumulative += u[static_cast<std::size_t>(k)];
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (u[static_cast<std::size_t>(k)] - candidate > 0.0) tau = candidate;
  }
  return (v.array() - tau).max(0.0).matrix();
}

MinimaxStep solve_minimax_qp(const Eigen::VectorXd& values, const Eigen::MatrixXd& gradients,
                             const Eigen::MatrixXd& hessian) {
  if (values.size() == 0 || gradients.cols() != values.size() || hessian.rows() != gradients.rows()) {
    throw std::invalid_argument("solve_minimax_qp: inconsistent dimensions");
  }
  const Eigen::LLT<Eigen::MatrixXd> llt(hessian);
  if (llt.info() != Eigen::Success) throw std::invalid_argument("solve_minimax_qp: hessian not positive definite");
  const Eigen::MatrixXd binv_g = llt.solve(gradients);
  const Eigen::MatrixXd m = gradients.transpose() * binv_g;

  const int dim = static_cast<int>(gradients.rows());
  MinimaxStep out;
  out.multipliers = values.size() <= kEnumerationLimit
                        ? enumerate_supports(values, m, std::min<int>(static_cast<int>(values.size()), dim + 1))
                        : accelerated_projection(values, m);
  out.step = -binv_g * out.multipliers;
  out.model_value = (values + gradients.transpose() * out.step).maxCoeff();
  return out;
}

}  // namespace stellar::detail

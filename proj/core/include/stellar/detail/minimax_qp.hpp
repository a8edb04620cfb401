#pragma once

#include <Eigen/Core>

namespace stellar::detail {

struct MinimaxStep {
  Eigen::VectorXd step;
  Eigen::VectorXd multipliers;  // on the simplex
  // max_j (values_j + gradients_j . step): the linear model at the step.
  double model_value = 0.0;
};

/// Solves min_s max_j (values_j + gradients.col(j) . s) + 1/2 s' B s for a
/// symmetric positive definite B through its dual over the simplex:
///   max_lambda  values' lambda - 1/2 lambda' G' B^-1 G lambda.
/// Small problems are solved exactly by support enumeration, larger ones by
/// accelerated projected gradient.
MinimaxStep solve_minimax_qp(const Eigen::VectorXd& values, const Eigen::MatrixXd& gradients,
                             const Eigen::MatrixXd& hessian);

// Euclidean projection onto {x >= 0, sum x = 1}.
Eigen::VectorXd project_to_simplex(const Eigen::VectorXd& v);

}  // namespace stellar::detail

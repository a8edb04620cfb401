#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stellar {

struct ScalingRow {
  int n = 0;
  double e_g = 0.0;
};

/// (n, E_G) samples, n strictly increasing.
class ScalingDataset {
 public:
  ScalingDataset() = default;
  explicit ScalingDataset(std::vector<ScalingRow> rows);

  const std::vector<ScalingRow>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }

 private:
  std::vector<ScalingRow> rows_;
};

enum class ScalingModel { inverse_n_plus_1, sqrt_over_n_plus_1 };

std::string_view to_string(ScalingModel model);
ScalingModel scaling_model_from_string(std::string_view name);

// 1/(n+1) or sqrt(2 pi n)/(n+1)
double scaling_regressor(ScalingModel model, int n);

struct ScalingFit {
  ScalingModel model = ScalingModel::inverse_n_plus_1;
  double constant = 0.0;
  double rms_residual = 0.0;

  double predict(int n) const { return 1.0 - constant * scaling_regressor(model, n); }
};

/// Least squares through the origin of (1 - e_g) on the model regressor.
/// Needs at least three rows and a nonzero regressor.
ScalingFit fit_scaling(const ScalingDataset& data, ScalingModel model);

// e_g - predict(n) per row.
std::vector<std::pair<int, double>> residual_report(const ScalingDataset& data,
                                                    const ScalingFit& fit);

// CSV with header "n,e_g" (further columns ignored).
ScalingDataset parse_scaling_csv(std::string_view text);
std::string format_scaling_csv(const ScalingDataset& data);

}  // namespace stellar

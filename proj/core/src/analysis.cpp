#include "stellar/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "stellar/errors.hpp"
#include "stellar/io.hpp"

namespace stellar {

ScalingDataset::ScalingDataset(std::vector<ScalingRow> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& r = rows_[i];
    if (r.n < 1) throw std::invalid_argument("ScalingDataset: n must be positive");
    if (!(r.e_g >= 0.0 && r.e_g < 1.0)) throw std::invalid_argument("ScalingDataset: e_g must lie in [0, 1)");
    if (i > 0 && r.n <= rows_[i - 1].n) throw std::invalid_argument("ScalingDataset: n must be strictly increasing");
  }
}

std::string_view to_string(ScalingModel model) {
  return model == ScalingModel::inverse_n_plus_1 ? "inverse_n_plus_1" : "sqrt_over_n_plus_1";
}

ScalingModel scaling_model_from_string(std::string_view name) {
  if (name == "inverse_n_plus_1") return ScalingModel::inverse_n_plus_1;
  if (name == "sqrt_over_n_plus_1") return ScalingModel::sqrt_over_n_plus_1;
  throw std::invalid_argument("unknown scaling model '" + std::string(name) + "'");
}

double scaling_regressor(ScalingModel model, int n) {
  if (model == ScalingModel::inverse_n_plus_1) return 1.0 / (n + 1.0);
  return std::sqrt(2.0 * std::numbers::pi * n) / (n + 1.0);
}

ScalingFit fit_scaling(const ScalingDataset& data, ScalingModel model) {
  if (data.size() < 3) throw std::invalid_argument("fit_scaling: at least three rows required");
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& r : data.rows()) {
    const double x = scaling_regressor(model, r.n);
    sxx += x * x;
    sxy += x * (1.0 - r.e_g);
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("fit_scaling: degenerate regressor");
  ScalingFit fit{model, sxy / sxx, 0.0};
  double ss = 0.0;
  for (const auto& r : data.rows()) {
    const double res = r.e_g - fit.predict(r.n);
    ss += res * res;
  }
  fit.rms_residual = std::sqrt(ss / static_cast<double>(data.size()));
  return fit;
}

std::vector<std::pair<int, double>> residual_report(const ScalingDataset& data, const ScalingFit& fit) {
  std::vector<std::pair<int, double>> out;
  out.reserve(data.size());
  for (const auto& r : data.rows()) out.emplace_back(r.n, r.e_g - fit.predict(r.n));
  return out;
}

namespace {

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    auto cell = line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) cell.remove_prefix(1);
    while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t' || cell.back() == '\r')) cell.remove_suffix(1);
    out.push_back(cell);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

ScalingDataset parse_scaling_csv(std::string_view text) {
  std::vector<ScalingRow> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  int col_n = -1;
  int col_e = -1;
  while (pos < text.size()) {
    std::size_t next = text.find('\n', pos);
    if (next == std::string_view::npos) next = text.size();
    const std::string_view line = text.substr(pos, next - pos);
    pos = next + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    const auto cells = split_commas(line);
    if (col_n < 0) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i] == "n") col_n = static_cast<int>(i);
        if (cells[i] == "e_g") col_e = static_cast<int>(i);
      }
      if (col_n < 0 || col_e < 0) throw ParseError("header must name columns 'n' and 'e_g'", line_no);
      continue;
    }
    if (static_cast<int>(cells.size()) <= std::max(col_n, col_e)) throw ParseError("missing columns", line_no);
    ScalingRow row;
    const auto cn = cells[static_cast<std::size_t>(col_n)];
    const auto ce = cells[static_cast<std::size_t>(col_e)];
    auto rn = std::from_chars(cn.data(), cn.data() + cn.size(), row.n);
    if (rn.ec != std::errc() || rn.ptr != cn.data() + cn.size()) throw ParseError("malformed n '" + std::string(cn) + "'", line_no);
    auto re = std::from_chars(ce.data(), ce.data() + ce.size(), row.e_g);
    if (re.ec != std::errc() || re.ptr != ce.data() + ce.size()) {
      throw ParseError("malformed e_g '" + std::string(ce) + "'", line_no);
    }
    if (row.n < 1 || !(row.e_g >= 0.0 && row.e_g < 1.0)) throw ParseError("value out of range", line_no);
    if (!rows.empty() && row.n <= rows.back().n) throw ParseError("n must be strictly increasing", line_no);
    rows.push_back(row);
  }
  if (col_n < 0) throw ParseError("empty CSV");
  return ScalingDataset(std::move(rows));
}

std::string format_scaling_csv(const ScalingDataset& data) {
  std::string out = "n,e_g\n";
  for (const auto& r : data.rows()) out += std::to_string(r.n) + "," + format_double(r.e_g) + "\n";
  return out;
}

}  // namespace stellar

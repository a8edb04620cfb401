#include "stellar/binomial.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace stellar {

namespace {

constexpr int kExactLimit = 60;

std::uint64_t exact_binomial(int n, int k) {
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  // r * (n - k + i) / i stays integral and below 2^64 for n <= 60.
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

void check_args(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw std::invalid_argument("binomial: need 0 <= k <= n");
  }
}

}  // namespace

double binomial(int n, int k) {
  check_args(n, k);
  if (n <= kExactLimit) return static_cast<double>(exact_binomial(n, k));
  return std::exp(log_binomial(n, k));
}

double log_binomial(int n, int k) {
  check_args(n, k);
  if (n <= kExactLimit) return std::log(static_cast<double>(exact_binomial(n, k)));
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

std::vector<double> sqrt_binomials(int n) {
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    out[static_cast<std::size_t>(k)] =
        n <= kExactLimit ? std::sqrt(binomial(n, k)) : std::exp(0.5 * log_binomial(n, k));
  }
  return out;
}

}  // namespace stellar

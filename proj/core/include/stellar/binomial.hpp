#pragma once

#include <vector>

namespace stellar {

// Binomial coefficient C(n, k) as a double. Exact integer arithmetic for
// n <= 60, log-gamma above that.
double binomial(int n, int k);

double log_binomial(int n, int k);

// sqrt(C(n, k)) for k = 0..n.
std::vector<double> sqrt_binomials(int n);

}  // namespace stellar

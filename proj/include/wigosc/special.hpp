#pragma once

#include <cstddef>
#include <vector>

namespace wigosc {

/// Generalized Laguerre polynomial L_n^k(x) by the three-term recurrence in n.
double laguerre(std::size_t n, std::size_t k, double x);

/// L_0^k(x) ... L_{count-1}^k(x).
std::vector<double> laguerre_sequence(std::size_t count, std::size_t k, double x);

/// e^{-x/2} L_j(x) for j < count. The scaled recurrence stays finite for
/// arguments where L_j itself would overflow.
std::vector<double> laguerre_function_sequence(std::size_t count, double x);

/// log(n!)
double log_factorial(std::size_t n);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

}  // namespace wigosc

#include "wigosc/special.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <stdexcept>

namespace wigosc {

double laguerre(std::size_t n, std::size_t k, double x) {
  const double kd = static_cast<double>(k);
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + kd - x;
  for (std::size_t j = 1; j < n; ++j) {
    const double jd = static_cast<double>(j);
    const double next = ((2.0 * jd + 1.0 + kd - x) * cur - (jd + kd) * prev) / (jd + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> laguerre_sequence(std::size_t count, std::size_t k, double x) {
  std::vector<double> out(count);
  if (count == 0) return out;
  const double kd = static_cast<double>(k);
  out[0] = 1.0;
  if (count > 1) out[1] = 1.0 + kd - x;
  for (std::size_t j = 1; j + 1 < count; ++j) {
    const double jd = static_cast<double>(j);
    out[j + 1] = ((2.0 * jd + 1.0 + kd - x) * out[j] - (jd + kd) * out[j - 1]) / (jd + 1.0);
  }
  return out;
}

std::vector<double> laguerre_function_sequence(std::size_t count, double x) {
  std::vector<double> out(count);
  if (count == 0) return out;
  const double scale = std::exp(-0.5 * x);
  out[0] = scale;
  if (count > 1) out[1] = (1.0 - x) * scale;
  for (std::size_t j = 1; j + 1 < count; ++j) {
    const double jd = static_cast<double>(j);
    out[j + 1] = ((2.0 * jd + 1.0 - x) * out[j] - jd * out[j - 1]) / (jd + 1.0);
  }
  return out;
}

double log_factorial(std::size_t n) {
  return boost::math::lgamma(static_cast<double>(n) + 1.0);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
  return boost::math::lgamma(x);
}

}  // namespace wigosc

#pragma once

#include <cstddef>
#include <functional>
#include <limits>

namespace wigosc {

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  unsigned max_depth = 40;         ///< bisection levels per piece
  std::size_t max_intervals = 2000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Globally adaptive Gauss-Kronrod (15-point) integration over [a, b]; either
/// bound may be infinite (mapped onto [0, 1) by x = a + t/(1-t)). The piece
/// with the largest error is bisected until the summed estimate is below
/// max(abs_tol, rel_tol * L1) or max_intervals is reached, in which case
/// ConvergenceError is thrown.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts = {});

/// Nested adaptive integration of f(x, y) over x in [a, b], y in [lo(x), hi(x)].
/// The reported error is the outer estimate plus the outer-weighted worst
/// inner estimate.
QuadratureResult integrate_2d(const std::function<double(double, double)>& f, double a, double b,
                              const std::function<double(double)>& lo,
                              const std::function<double(double)>& hi,
                              const QuadratureOptions& opts = {});

/// Rectangle convenience form of integrate_2d.
QuadratureResult integrate_2d(const std::function<double(double, double)>& f, double a, double b,
                              double c, double d, const QuadratureOptions& opts = {});

}  // namespace wigosc

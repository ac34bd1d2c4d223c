#include "wigosc/quadrature.hpp"

#include "wigosc/types.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <limits>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

namespace wigosc {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
using Gauss = boost::math::quadrature::gauss<double, 7>;

struct Piece {
  double a, b, value, error, l1;
  unsigned depth;
  bool operator<(const Piece& o) const { return error < o.error; }
};

// Kronrod weights for the Gauss nodes, which sit at the even positions of the
// Kronrod abscissa list (0 first).
struct Nodes {
  std::vector<double> x, wk, wg;
  Nodes() {
    const auto& kx = Kronrod::abscissa();
    const auto& kw = Kronrod::weights();
    const auto& gx = Gauss::abscissa();
    const auto& gw = Gauss::weights();
    x.assign(kx.begin(), kx.end());
    wk.assign(kw.begin(), kw.end());
    wg.assign(x.size(), 0.0);
    for (std::size_t i = 0; i < gx.size(); ++i) {
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (std::abs(x[j] - gx[i]) < 1e-14) wg[j] = gw[i];
      }
    }
  }
};

// One 15-point Kronrod / 7-point Gauss pair. The error is |K - G| with a
// roundoff floor relative to the piece's own L1 norm.
Piece rule(const std::function<double(double)>& f, double a, double b, unsigned depth) {
  static const Nodes nodes;
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double f0 = f(c);
  double k = nodes.wk[0] * f0;
  double g = nodes.wg[0] * f0;
  double l1 = nodes.wk[0] * std::abs(f0);
  for (std::size_t j = 1; j < nodes.x.size(); ++j) {
    const double fl = f(c - h * nodes.x[j]);
    const double fr = f(c + h * nodes.x[j]);
    k += nodes.wk[j] * (fl + fr);
    g += nodes.wg[j] * (fl + fr);
    l1 += nodes.wk[j] * (std::abs(fl) + std::abs(fr));
  }
  k *= h;
  g *= h;
  l1 *= std::abs(h);
  const double err = std::max(std::abs(k - g), 50.0 * std::numeric_limits<double>::epsilon() * l1);
  return {a, b, k, err, l1, depth};
}

// Global adaptive bisection on a finite interval: always split the piece with
// the largest error estimate, up to opts.max_intervals pieces.
QuadratureResult adapt(const std::function<double(double)>& f, double a, double b, const QuadratureOptions& opts,
                       double report_a, double report_b) {
  std::priority_queue<Piece> heap;
  heap.push(rule(f, a, b, 0));
  double value = heap.top().value;
  double error = heap.top().error;
  double l1 = heap.top().l1;
  std::vector<Piece> frozen;  // pieces at maximum depth
  double frozen_error = 0.0;
  auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * l1); };

  while (error > target() && !heap.empty() && heap.size() + frozen.size() < opts.max_intervals) {
    const Piece p = heap.top();
    heap.pop();
    if (p.depth >= opts.max_depth) {
      frozen.push_back(p);
      frozen_error += p.error;
      continue;
    }
    const double mid = 0.5 * (p.a + p.b);
    const Piece left = rule(f, p.a, mid, p.depth + 1);
    const Piece right = rule(f, mid, p.b, p.depth + 1);
    value += left.value + right.value - p.value;
    l1 += left.l1 + right.l1 - p.l1;
    heap.push(left);
    heap.push(right);
    // Re-sum the error so cancellation in the running total cannot drift.
    error = frozen_error;
    auto copy = heap;
    while (!copy.empty()) {
      error += copy.top().error;
      copy.pop();
    }
  }
  if (!std::isfinite(value) || error > target()) {
    std::ostringstream msg;
    msg << "adaptive quadrature on [" << report_a << ", " << report_b << "] did not converge: value=" << value
        << " error estimate=" << error;
    throw ConvergenceError(msg.str());
  }
  return {value, error};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts) {
  if (a == b) return {0.0, 0.0};
  if (a > b) {
    const auto r = integrate(f, b, a, opts);
    return {-r.value, r.error};
  }
  const bool inf_a = std::isinf(a);
  const bool inf_b = std::isinf(b);
  if (inf_a && inf_b) {
    QuadratureOptions half = opts;
    half.abs_tol = 0.5 * opts.abs_tol;
    const auto lo = integrate(f, a, 0.0, half);
    const auto hi = integrate(f, 0.0, b, half);
    return {lo.value + hi.value, lo.error + hi.error};
  }
  if (inf_b) {
    // x = a + t/(1-t)
    auto g = [&](double t) {
      if (t >= 1.0) return 0.0;
      const double s = 1.0 - t;
      return f(a + t / s) / (s * s);
    };
    return adapt(g, 0.0, 1.0, opts, a, b);
  }
  if (inf_a) {
    auto g = [&](double t) {
      if (t >= 1.0) return 0.0;
      const double s = 1.0 - t;
      return f(b - t / s) / (s * s);
    };
    return adapt(g, 0.0, 1.0, opts, a, b);
  }
  return adapt(f, a, b, opts, a, b);
}

QuadratureResult integrate_2d(const std::function<double(double, double)>& f, double a, double b,
                              const std::function<double(double)>& lo,
                              const std::function<double(double)>& hi,
                              const QuadratureOptions& opts) {
  // Inner integrals are solved tighter so their noise stays below what the
  // outer rule has to resolve.
  QuadratureOptions inner_opts = opts;
  inner_opts.rel_tol = 0.1 * opts.rel_tol;
  inner_opts.abs_tol = 0.1 * opts.abs_tol;
  double worst_inner = 0.0;
  auto inner = [&](double x) {
    const auto r = integrate([&](double y) { return f(x, y); }, lo(x), hi(x), inner_opts);
    worst_inner = std::max(worst_inner, r.error);
    return r.value;
  };
  const auto outer = integrate(inner, a, b, opts);
  double span = b - a;
  if (!std::isfinite(span)) span = 1.0;
  return {outer.value, outer.error + worst_inner * span};
}

QuadratureResult integrate_2d(const std::function<double(double, double)>& f, double a, double b,
                              double c, double d, const QuadratureOptions& opts) {
  return integrate_2d(
      f, a, b, [c](double) { return c; }, [d](double) { return d; }, opts);
}

}  // namespace wigosc

#include "wigosc/phase_operator.hpp"

#include "wigosc/special.hpp"
#include "wigosc/types.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace wigosc {

namespace {

constexpr double kPiSquaredOverThree = kPi * kPi / 3.0;

std::complex<double> i_power(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// sum_{n>k} n^{-s} by Euler-Maclaurin; k is large here, so a few terms give
// full double precision.
double zeta_tail(double s, double k) {
  const double ks = std::pow(k, -s);
  return k * ks / (s - 1.0) - 0.5 * ks + s * ks / (12.0 * k) -
         s * (s + 1.0) * (s + 2.0) * ks / (720.0 * k * k * k);
}

// Upper-tail terms behave like n^{-p} (a + b/n + c/n^2 + ...) with p = 3/2
// for even m and 5/2 for odd m. Fit the amplitudes from terms at k/4, k/2, k
// and sum the remainder.
struct TailFit {
  double value;
  double uncertainty;
};

TailFit asymptotic_tail(double p, std::size_t k, double t_quarter, double t_half, double t_k) {
  const double n1 = static_cast<double>(k / 4);
  const double n2 = static_cast<double>(k / 2);
  const double n3 = static_cast<double>(k);
  const double y1 = t_quarter * std::pow(n1, p);
  const double y2 = t_half * std::pow(n2, p);
  const double y3 = t_k * std::pow(n3, p);
  // Two-term fit from n2, n3.
  const double b2 = (y2 - y3) / (1.0 / n2 - 1.0 / n3);
  const double a2 = y3 - b2 / n3;
  const double two = a2 * zeta_tail(p, n3) + b2 * zeta_tail(p + 1.0, n3);
  // Three-term fit from n1, n2, n3 (Lagrange in 1/n).
  const double u1 = 1.0 / n1, u2 = 1.0 / n2, u3 = 1.0 / n3;
  const double c3 = ((y1 - y2) / (u1 - u2) - (y2 - y3) / (u2 - u3)) / (u1 - u3);
  const double b3 = (y2 - y3) / (u2 - u3) - c3 * (u2 + u3);
  const double a3 = y3 - b3 * u3 - c3 * u3 * u3;
  const double three = a3 * zeta_tail(p, n3) + b3 * zeta_tail(p + 1.0, n3) + c3 * zeta_tail(p + 2.0, n3);
  return {three, std::abs(three - two)};
}

}  // namespace

FockMatrix::FockMatrix(Eigen::MatrixXcd entries, bool hermitian)
    : entries_(std::move(entries)), hermitian_(hermitian) {
  if (entries_.rows() < 1 || entries_.rows() != entries_.cols()) {
    throw std::invalid_argument("FockMatrix: entries must be square with dim >= 1");
  }
  if (hermitian_ && hermiticity_defect() > 1e-12) {
    throw std::invalid_argument("FockMatrix: flagged hermitian but entries are not");
  }
}

double FockMatrix::hermiticity_defect() const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

double g_coefficient(std::size_t m, std::size_t n) {
  const std::size_t lo = std::min(m, n);
  const std::size_t hi = std::max(m, n);
  const double s = (lo % 2 == 0) ? 0.5 : 1.0;
  const double d = static_cast<double>(hi - lo);
  const double log_g = -0.5 * d * std::log(2.0) + log_gamma(0.5 * static_cast<double>(lo) + s) -
                       log_gamma(0.5 * static_cast<double>(hi) + s) +
                       0.5 * (log_factorial(hi) - log_factorial(lo));
  return std::exp(log_g);
}

FockMatrix phi_matrix(std::size_t dim) {
  if (dim < 1) throw std::invalid_argument("phi_matrix: dim must be >= 1");
  const auto d = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index m = 0; m < d; ++m) {
    for (Eigen::Index n = m + 1; n < d; ++n) {
      const double g = g_coefficient(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
      const double diff = static_cast<double>(m - n);
      e(m, n) = i_power(static_cast<long>(n - m + 1)) * (g / diff);
      e(n, m) = std::conj(e(m, n));
    }
  }
  return FockMatrix(std::move(e), true);
}

PhiSquaredDiagonal phi_squared_diagonal(std::size_t m, std::size_t tail_terms, double tolerance) {
  if (tail_terms < 1) throw std::invalid_argument("phi_squared_diagonal: tail_terms must be >= 1");

  double head = 0.0;
  for (std::size_t n = 1; n <= m; ++n) {
    const double g = g_coefficient(m, m - n);
    head += g * g / (static_cast<double>(n) * static_cast<double>(n));
  }

  const std::size_t half = tail_terms / 2;
  const std::size_t quarter = half / 2;
  double upper = 0.0;
  double t_quarter = 0.0;
  double t_half = 0.0;
  double t_last = 0.0;
  // g(m, h + 2) = g(m, h) sqrt((h + 1)(h + 2)) / (h + 2s), s = 1/2 or 1 by
  // the parity of m; two interleaved chains seeded from the closed form.
  const double two_s = (m % 2 == 0) ? 1.0 : 2.0;
  double chain[2] = {g_coefficient(m, m + 1), tail_terms >= 2 ? g_coefficient(m, m + 2) : 0.0};
  for (std::size_t n = 1; n <= tail_terms; ++n) {
    double& link = chain[(n - 1) % 2];
    const double g = link;
    const double h = static_cast<double>(m + n);
    link *= std::sqrt((h + 1.0) * (h + 2.0)) / (h + two_s);
    const double t = g * g / (static_cast<double>(n) * static_cast<double>(n));
    upper += t;
    if (n == quarter) t_quarter = t;
    if (n == half) t_half = t;
    if (n == tail_terms) t_last = t;
  }

  PhiSquaredDiagonal out;
  out.tail_terms = tail_terms;
  out.partial_sum = head + upper;
  if (tail_terms >= 8) {
    const double p = (m % 2 == 0) ? 1.5 : 2.5;
    const TailFit fit = asymptotic_tail(p, tail_terms, t_quarter, t_half, t_last);
    out.tail_estimate = fit.value;
    out.tail_uncertainty = fit.uncertainty;
  } else {
    out.tail_estimate = 0.0;
    out.tail_uncertainty = std::numeric_limits<double>::infinity();
  }
  out.value = out.partial_sum + out.tail_estimate;
  if (out.tail_uncertainty > tolerance) {
    std::ostringstream msg;
    msg << "phi_squared_diagonal(m=" << m << "): tail uncertainty " << out.tail_uncertainty
        << " exceeds tolerance " << tolerance << " at " << tail_terms << " terms";
    throw ConvergenceError(msg.str());
  }
  return out;
}

SpectrumReport phi_spectrum(std::size_t dim) {
  if (dim < 2) throw std::invalid_argument("phi_spectrum: dim must be >= 2");
  const FockMatrix phi = phi_matrix(dim);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(phi.entries(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("phi_spectrum: Hermitian eigensolver failed");
  }
  SpectrumReport report;
  report.dim = dim;
  const Eigen::VectorXd& ev = solver.eigenvalues();
  report.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  std::sort(report.eigenvalues.begin(), report.eigenvalues.end());
  report.spread = report.eigenvalues.back() - report.eigenvalues.front();
  return report;
}

PhiSquaredRadialProfile::PhiSquaredRadialProfile(std::size_t dim, double tolerance)
    : tolerance_(tolerance) {
  if (dim < 1) throw std::invalid_argument("PhiSquaredRadialProfile: dim must be >= 1");
  diagonal_.reserve(dim);
  for (std::size_t m = 0; m < dim; ++m) diagonal_.push_back(phi_squared_diagonal(m).value);
}

RadialAverage PhiSquaredRadialProfile::operator()(double r) const {
  if (!(r >= 0.0)) throw std::invalid_argument("phi_squared radial average: r must be >= 0");
  const std::size_t dim = diagonal_.size();
  const std::vector<double> lag = laguerre_function_sequence(dim, 2.0 * r * r);
  const std::size_t window = std::min(kCesaroWindow, dim);

  double partial = 0.0;
  double window_sum = 0.0;
  double last = 0.0;
  for (std::size_t m = 0; m < dim; ++m) {
    const double sign = (m % 2 == 0) ? 2.0 : -2.0;
    last = (diagonal_[m] - kPiSquaredOverThree) * sign * lag[m];
    partial += last;
    if (m + window >= dim) window_sum += partial;
  }
  RadialAverage out;
  out.value = kPiSquaredOverThree + window_sum / static_cast<double>(window);
  out.last_term = std::abs(last);
  out.converged = out.last_term <= tolerance_;
  return out;
}

RadialAverage phi_squared_weyl_radial_average(double r, std::size_t dim) {
  return PhiSquaredRadialProfile(dim)(r);
}

}  // namespace wigosc

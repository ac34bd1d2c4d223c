#pragma once

// Monte Carlo ensembles of Langevin trajectories, used as an independent check
// on the closed forms. Times are dimensionless (omega t); only N enters.

#include "wigosc/noise.hpp"
#include "wigosc/rng.hpp"
#include "wigosc/types.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace wigosc {

struct EnsembleConfig {
  std::size_t trajectories = 100000;
  double dt_fraction = 1.0 / 200.0;  ///< step as a fraction of the period
  std::uint64_t seed = 42;
  std::size_t partitions = 1;        ///< worker threads

  /// Largest step fraction the stepper accepts (omega dt <= 0.1).
  static constexpr double kMaxDtFraction = 0.1 / kTwoPi;

  void validate() const;
};

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t trajectories = 0;
};

/// Mean and standard error of per-trajectory values, summed pairwise in index
/// order so the result depends only on the values.
Estimate estimate_from(std::span<const double> values);

/// Pairwise (fixed-topology) sum.
double pairwise_sum(std::span<const double> values);

/// Ground Wigner sample from two standard normals: each coordinate has
/// variance 1/2.
inline PhasePoint sample_ground_wigner(double g1, double g2) {
  constexpr double kScale = 0.70710678118654752440;
  return {kScale * g1, kScale * g2};
}

/// Runs `trajectories` independent evaluations of fn(index, stream, out), each
/// writing `width` observables into out. Storage is [index * width + k].
/// Workers own contiguous index ranges; each trajectory's randomness depends
/// only on (seed, index).
std::vector<double> run_ensemble(const EnsembleConfig& cfg, std::size_t width,
                                 const std::function<void(std::size_t, NormalStream&, double*)>& fn);

/// Evolve one trajectory from `start` over omega_t; the stream supplies one
/// normal per step.
PhasePoint evolve_noisy(PhasePoint start, const NoiseSpec& noise, double omega_t, const EnsembleConfig& cfg,
                        NormalStream& stream);

/// Mean of 2 exp(-R(t)^2) over trajectories started from the ground Wigner
/// density.
Estimate estimate_survival(const NoiseSpec& noise, double omega_t, const EnsembleConfig& cfg);

struct PhaseMoments {
  Estimate mean_phi;     ///< int phi P dphi/(2pi)
  Estimate phi_squared;  ///< int phi^2 P dphi/(2pi)
};

/// Angle moments of the ground state after omega_t, from trajectory endpoint
/// angles. Endpoints from ground Wigner samples have covariance I/2 + C, whose
/// angle marginal is exactly P/(2pi).
PhaseMoments estimate_phase_moments(const NoiseSpec& noise, double omega_t, const EnsembleConfig& cfg);

struct KernelEstimate {
  Estimate mean[2];      ///< (x, y)
  Estimate cov_xx;
  Estimate cov_xy;
  Estimate cov_yy;
};

/// Spread of trajectories started at one fixed point.
KernelEstimate estimate_kernel_moments(const NoiseSpec& noise, double omega_t, const EnsembleConfig& cfg,
                                       PhasePoint fixed_start);

struct FreeParticleEstimate {
  Estimate mean_p;
  Estimate mean_q;
  Estimate var_p;
  Estimate cov_pq;
  Estimate var_q;
};

/// Kicked free particle in physical units, round(1/dt_fraction) steps over t.
FreeParticleEstimate estimate_free_particle_moments(double mu, double mass, double t, const EnsembleConfig& cfg,
                                                    PhysicalPoint start = {});

}  // namespace wigosc

#ifndef STOSTAB_SWEEP_HPP
#define STOSTAB_SWEEP_HPP

#include "stostab/criteria.hpp"
#include "stostab/report.hpp"
#include "stostab/system.hpp"

#include <optional>
#include <vector>

namespace stostab {

struct NoSignChange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SweepResult {
    std::vector<double> intensities;          ///< squared amplitudes
    std::vector<Verdict> analytic_verdicts;
    std::vector<Verdict> oracle_verdicts;     ///< mean-square moment oracle
    double analytic_bound = 0.0;
    std::optional<double> empirical_threshold;
};

/// Copies the template drift and sets the diffusion coefficients named
/// by the pattern to sqrt(intensity). Throws UnsupportedPattern for
/// NoNoise/Unsupported.
SystemSpec instantiate_pattern(const SystemSpec& spec_template, NoisePattern pattern,
                               double intensity);

/// Evaluates the analytic criterion and the moment oracle over an
/// ascending nonnegative grid of squared intensities; locates the
/// oracle threshold by bisection between the last Stable and first
/// Unstable grid points when a sign change exists.
SweepResult sweep(const SystemSpec& spec_template, NoisePattern pattern,
                  const std::vector<double>& grid, StabilityNotion notion);

/// Bisects the squared intensity on the moment oracle. Requires a
/// Stable verdict at lo and Unstable at hi.
double find_threshold_bisect(const SystemSpec& spec_template, NoisePattern pattern,
                             double lo, double hi);

} // namespace stostab

#endif

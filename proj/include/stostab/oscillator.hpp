#ifndef STOSTAB_OSCILLATOR_HPP
#define STOSTAB_OSCILLATOR_HPP

#include "stostab/quadratic_form.hpp"
#include "stostab/report.hpp"
#include "stostab/system.hpp"

namespace stostab {

struct CaseNotCovered : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegenerateDenominator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Damped harmonic oscillator with white-noise-perturbed eigenfrequency
/// (amplitude sigma1) and damping coefficient (amplitude sigma2):
/// x'' + (k + sigma2 W') x' + (omega^2 + sigma1 W') x = 0.
struct OscillatorSpec {
    double k = 1.0;
    double omega = 1.0;
    double sigma1 = 0.0;
    double sigma2 = 0.0;
    Calculus calculus = Calculus::Ito;
};

enum class OscillatorCase { FrequencyNoise, DampingNoise, EqualNoise }; // a), b), c)

/// First-order form: a=0, b=1, c=-omega^2, m=-k, e=f=0, g=-sigma1,
/// h=-sigma2, same calculus tag.
SystemSpec oscillator_to_system(const OscillatorSpec& osc);

/// Exact mean-square threshold for the Ito oscillator:
/// a) sigma1^2 < 2 k omega^2, b) sigma2^2 < 2k,
/// c) sigma^2 < 2 k omega^2 / (omega^2 + 1).
BifurcationBound prop1_threshold(const OscillatorSpec& osc);

/// Exact mean-square threshold for the Stratonovich oscillator:
/// a) sigma1^2 < 2 k omega^2, b) sigma2^2 < k,
/// c) sigma^2 < omega^2 + (k+1)/2 - sqrt(omega^4 + (1-k) omega^2 + (k+1)^2/4).
BifurcationBound prop2_threshold(const OscillatorSpec& osc);

/// Lyapunov certificate for the given Proposition 1 case; throws
/// DegenerateDenominator at the bifurcation value.
QuadraticForm oscillator_certificate(const OscillatorSpec& osc, OscillatorCase which);

} // namespace stostab

#endif

#ifndef STOSTAB_SYSTEM_HPP
#define STOSTAB_SYSTEM_HPP

#include <array>
#include <stdexcept>
#include <string>

namespace stostab {

enum class Calculus { Ito, Stratonovich };

/// Diffusion structure of the system, following the two case families
/// (single nonzero coefficient, or two equal nonzero coefficients).
enum class NoisePattern {
    NoNoise,
    OnlyE,
    OnlyF,
    OnlyG,
    OnlyH,
    EqualEF,
    EqualEG,
    EqualEH,
    EqualFG,
    EqualFH,
    EqualGH,
    Unsupported,
};

std::string to_string(NoisePattern p);
std::string to_string(Calculus c);

/// Two-dimensional linear system
///   dx = (a x + b y) dt + (e x + f y) dW
///   dy = (c x + m y) dt + (g x + h y) dW
/// with a single scalar Wiener process, read in the tagged calculus.
struct SystemSpec {
    double a = 0, b = 0, c = 0, m = 0;
    double e = 0, f = 0, g = 0, h = 0;
    Calculus calculus = Calculus::Ito;

    bool finite() const;
};

/// Thrown when an operation receives a spec in the wrong calculus.
struct CalculusError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Exact Ito-equivalent of a Stratonovich-tagged spec: the drift gains
/// the correction (e^2+fg)/2, f(e+h)/2, g(e+h)/2, (h^2+fg)/2 (one half
/// of the squared diffusion matrix); diffusion is unchanged.
SystemSpec stratonovich_to_ito(const SystemSpec& spec);

/// Ensure Ito form: converts Stratonovich specs, passes Ito through.
SystemSpec ensure_ito(const SystemSpec& spec);

/// Deterministic-part asymptotic stability: a+m < 0 and am - bc > 0.
bool routh_hurwitz(const SystemSpec& spec);

/// Classify the diffusion coefficients against the supported cases.
/// Two nonzero coefficients must agree within tol to count as equal;
/// any structure outside the enumerated list is Unsupported.
NoisePattern classify_noise_pattern(const SystemSpec& spec, double tol = 0.0);

/// Coordinate swap x<->y: (a,b,c,m) -> (m,c,b,a), (e,f,g,h) -> (h,g,f,e).
/// An involution; stability properties are invariant under it.
SystemSpec dual_transform(const SystemSpec& spec);

/// Mirror image of a pattern under dual_transform.
NoisePattern dual_pattern(NoisePattern p);

} // namespace stostab

#endif

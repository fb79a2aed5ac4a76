#ifndef STOSTAB_CRITERIA_HPP
#define STOSTAB_CRITERIA_HPP

#include "stostab/report.hpp"

namespace stostab {

struct WrongPattern : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct HypothesisViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Margin (relative to 1 + |bound|) inside which a strict inequality is
/// reported as Boundary rather than decided.
inline constexpr double kBoundaryMargin = 1e-12;

// Stability-in-probability criteria (sufficient conditions).
StabilityReport thm1_prob_e(const SystemSpec& spec);        // Ito, only e
StabilityReport thm2_prob_e_strat(const SystemSpec& spec);  // Stratonovich, only e
StabilityReport thm6_prob_f(const SystemSpec& spec);        // only f (both calculi)
StabilityReport thm8_prob_ef(const SystemSpec& spec);       // Ito, e = f
StabilityReport thm12_prob_eg(const SystemSpec& spec);      // Ito, e = g
StabilityReport thm13_prob_eg_strat(const SystemSpec& spec);// Stratonovich, e = g
StabilityReport thm14_prob_eh(const SystemSpec& spec);      // Ito, e = h
StabilityReport thm15_prob_fg(const SystemSpec& spec);      // Ito, f = g

// Mean-square exponential stability criteria (necessary and sufficient).
StabilityReport thm3_ms_e(const SystemSpec& spec);          // Ito, only e
StabilityReport thm4_ms_e_strat(const SystemSpec& spec);    // Stratonovich, only e, c=0
StabilityReport thm5_ms_e_strat(const SystemSpec& spec);    // Stratonovich, only e, m=0
StabilityReport thm7_ms_f(const SystemSpec& spec);          // only f (both calculi)
StabilityReport thm9_ms_ef(const SystemSpec& spec);         // Ito, e = f
StabilityReport thm10_ms_ef_strat(const SystemSpec& spec);  // Stratonovich, e = f, m=0
StabilityReport thm11_ms_ef_strat(const SystemSpec& spec);  // Stratonovich, e = f, b=c=m

/// Dispatch: classifies the pattern, applies the dual transform and/or
/// the calculus conversion as required, and runs the applicable
/// criterion. NoNoise reduces to the Routh-Hurwitz verdict; Unsupported
/// patterns yield Inconclusive (with an oracle advisory attached by the
/// caller when desired).
StabilityReport analyze(const SystemSpec& spec, StabilityNotion notion,
                        double pattern_tol = 0.0);

} // namespace stostab

#endif

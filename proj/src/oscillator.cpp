#include "stostab/oscillator.hpp"

#include <cmath>

namespace stostab {

namespace {

void check_positive(const OscillatorSpec& osc) {
    if (!(osc.k > 0) || !(osc.omega > 0))
        throw std::invalid_argument("oscillator requires k > 0 and omega > 0");
}

OscillatorCase classify_case(const OscillatorSpec& osc) {
    if (osc.sigma1 == osc.sigma2) return OscillatorCase::EqualNoise;
    if (osc.sigma2 == 0) return OscillatorCase::FrequencyNoise;
    if (osc.sigma1 == 0) return OscillatorCase::DampingNoise;
    throw CaseNotCovered("unequal nonzero sigma1, sigma2 not covered");
}

} // namespace

SystemSpec oscillator_to_system(const OscillatorSpec& osc) {
    check_positive(osc);
    SystemSpec s;
    s.a = 0.0;
    s.b = 1.0;
    s.c = -osc.omega * osc.omega;
    s.m = -osc.k;
    s.g = -osc.sigma1;
    s.h = -osc.sigma2;
    s.calculus = osc.calculus;
    return s;
}

BifurcationBound prop1_threshold(const OscillatorSpec& osc) {
    check_positive(osc);
    if (osc.calculus != Calculus::Ito)
        throw CalculusError("prop1_threshold expects an Ito oscillator");
    const double k = osc.k, w2 = osc.omega * osc.omega;
    BifurcationBound bb{.kind = BifurcationBound::Kind::Exact};
    switch (classify_case(osc)) {
        case OscillatorCase::FrequencyNoise: bb.bound = 2.0 * k * w2; break;
        case OscillatorCase::DampingNoise: bb.bound = 2.0 * k; break;
        case OscillatorCase::EqualNoise: bb.bound = 2.0 * k * w2 / (w2 + 1.0); break;
    }
    bb.trace = {{"bound_sigma2", bb.bound}};
    return bb;
}

BifurcationBound prop2_threshold(const OscillatorSpec& osc) {
    check_positive(osc);
    if (osc.calculus != Calculus::Stratonovich)
        throw CalculusError("prop2_threshold expects a Stratonovich oscillator");
    const double k = osc.k, w2 = osc.omega * osc.omega;
    BifurcationBound bb{.kind = BifurcationBound::Kind::Exact};
    switch (classify_case(osc)) {
        case OscillatorCase::FrequencyNoise: bb.bound = 2.0 * k * w2; break;
        case OscillatorCase::DampingNoise: bb.bound = k; break;
        case OscillatorCase::EqualNoise: {
            const double half = (k + 1.0) / 2.0;
            bb.bound = w2 + half - std::sqrt(w2 * w2 + (1.0 - k) * w2 + half * half);
            break;
        }
    }
    bb.trace = {{"bound_sigma2", bb.bound}};
    return bb;
}

QuadraticForm oscillator_certificate(const OscillatorSpec& osc, OscillatorCase which) {
    check_positive(osc);
    const double k = osc.k, w2 = osc.omega * osc.omega;
    const double s1 = osc.sigma1 * osc.sigma1, s2 = osc.sigma2 * osc.sigma2;
    const double dtol = 1e-12 * (1.0 + 2.0 * k * w2); // relative degeneracy band
    switch (which) {
        case OscillatorCase::FrequencyNoise: {
            const double d = 2.0 * k * w2 - s1;
            if (std::fabs(d) <= dtol) throw DegenerateDenominator("2k omega^2 - sigma1^2 = 0");
            return {(k * k + w2 * (w2 + 1.0) + k * s1 / 2.0) / d,
                    (2.0 * k + s1) / (2.0 * d),
                    (w2 + 1.0) / d};
        }
        case OscillatorCase::DampingNoise: {
            const double d = 2.0 * k - s2;
            if (std::fabs(d) <= dtol) throw DegenerateDenominator("2k - sigma2^2 = 0");
            return {(w2 + 1.0) / d + k / (2.0 * w2),
                    1.0 / (2.0 * w2),
                    (w2 + 1.0) / (w2 * d)};
        }
        case OscillatorCase::EqualNoise: {
            const double sig2 = s1; // sigma1 = sigma2 = sigma
            const double d = sig2 * (w2 + 1.0) - 2.0 * k * w2;
            if (std::fabs(d) <= dtol) throw DegenerateDenominator("sigma^2 (omega^2+1) - 2k omega^2 = 0");
            return {((w2 + 1.0) * sig2 - w2 * w2 - w2 - k * k) / d,
                    -k / d,
                    -(w2 + 1.0) / d};
        }
    }
    throw std::invalid_argument("unknown oscillator case");
}

} // namespace stostab

#include "stostab/system.hpp"

#include <cmath>

namespace stostab {

std::string to_string(NoisePattern p) {
    switch (p) {
        case NoisePattern::NoNoise: return "no_noise";
        case NoisePattern::OnlyE: return "only_e";
        case NoisePattern::OnlyF: return "only_f";
        case NoisePattern::OnlyG: return "only_g";
        case NoisePattern::OnlyH: return "only_h";
        case NoisePattern::EqualEF: return "equal_ef";
        case NoisePattern::EqualEG: return "equal_eg";
        case NoisePattern::EqualEH: return "equal_eh";
        case NoisePattern::EqualFG: return "equal_fg";
        case NoisePattern::EqualFH: return "equal_fh";
        case NoisePattern::EqualGH: return "equal_gh";
        case NoisePattern::Unsupported: return "unsupported";
    }
    return "unsupported";
}

std::string to_string(Calculus c) {
    return c == Calculus::Ito ? "ito" : "stratonovich";
}

bool SystemSpec::finite() const {
    for (double v : {a, b, c, m, e, f, g, h})
        if (!std::isfinite(v)) return false;
    return true;
}

SystemSpec stratonovich_to_ito(const SystemSpec& spec) {
    if (spec.calculus != Calculus::Stratonovich)
        throw CalculusError("stratonovich_to_ito: spec is already in Ito form");
    SystemSpec out = spec;
    out.a = spec.a + (spec.e * spec.e + spec.f * spec.g) / 2.0;
    out.b = spec.b + spec.f * (spec.e + spec.h) / 2.0;
    out.c = spec.c + spec.g * (spec.e + spec.h) / 2.0;
    out.m = spec.m + (spec.h * spec.h + spec.f * spec.g) / 2.0;
    out.calculus = Calculus::Ito;
    return out;
}

SystemSpec ensure_ito(const SystemSpec& spec) {
    return spec.calculus == Calculus::Ito ? spec : stratonovich_to_ito(spec);
}

bool routh_hurwitz(const SystemSpec& spec) {
    return spec.a + spec.m < 0.0 && spec.a * spec.m - spec.b * spec.c > 0.0;
}

NoisePattern classify_noise_pattern(const SystemSpec& spec, double tol) {
    if (tol < 0.0) throw std::invalid_argument("classify_noise_pattern: tol must be >= 0");
    const std::array<double, 4> d{spec.e, spec.f, spec.g, spec.h};
    std::array<bool, 4> nz{};
    int count = 0;
    for (int i = 0; i < 4; ++i) {
        nz[i] = d[i] != 0.0;
        count += nz[i];
    }
    if (count == 0) return NoisePattern::NoNoise;
    if (count == 1) {
        if (nz[0]) return NoisePattern::OnlyE;
        if (nz[1]) return NoisePattern::OnlyF;
        if (nz[2]) return NoisePattern::OnlyG;
        return NoisePattern::OnlyH;
    }
    if (count == 2) {
        int i = 0;
        while (!nz[i]) ++i;
        int j = i + 1;
        while (!nz[j]) ++j;
        if (std::fabs(d[i] - d[j]) > tol) return NoisePattern::Unsupported;
        switch (i * 10 + j) {
            case 1: return NoisePattern::EqualEF;
            case 2: return NoisePattern::EqualEG;
            case 3: return NoisePattern::EqualEH;
            case 12: return NoisePattern::EqualFG;
            case 13: return NoisePattern::EqualFH;
            case 23: return NoisePattern::EqualGH;
        }
    }
    return NoisePattern::Unsupported;
}

SystemSpec dual_transform(const SystemSpec& spec) {
    SystemSpec out = spec;
    out.a = spec.m;
    out.b = spec.c;
    out.c = spec.b;
    out.m = spec.a;
    out.e = spec.h;
    out.f = spec.g;
    out.g = spec.f;
    out.h = spec.e;
    return out;
}

NoisePattern dual_pattern(NoisePattern p) {
    switch (p) {
        case NoisePattern::OnlyE: return NoisePattern::OnlyH;
        case NoisePattern::OnlyF: return NoisePattern::OnlyG;
        case NoisePattern::OnlyG: return NoisePattern::OnlyF;
        case NoisePattern::OnlyH: return NoisePattern::OnlyE;
        case NoisePattern::EqualEF: return NoisePattern::EqualGH;
        case NoisePattern::EqualEG: return NoisePattern::EqualFH;
        case NoisePattern::EqualFH: return NoisePattern::EqualEG;
        case NoisePattern::EqualGH: return NoisePattern::EqualEF;
        default: return p; // EqualEH, EqualFG, NoNoise, Unsupported are self-dual
    }
}

} // namespace stostab

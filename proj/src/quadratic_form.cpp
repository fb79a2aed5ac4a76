#include "stostab/quadratic_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace stostab {

std::string to_string(StabilityNotion n) {
    return n == StabilityNotion::ProbabilityStability ? "probability" : "mean_square";
}

QuadraticForm apply_generator(const SystemSpec& spec, const QuadraticForm& v) {
    if (spec.calculus != Calculus::Ito)
        throw CalculusError("apply_generator: convert Stratonovich spec to Ito first");
    const double a = spec.a, b = spec.b, c = spec.c, m = spec.m;
    const double e = spec.e, f = spec.f, g = spec.g, h = spec.h;
    const double p = v.p, q = v.q, r = v.r;
    QuadraticForm lv;
    lv.p = 2 * a * p + 2 * c * q + p * e * e + 2 * q * e * g + r * g * g;
    lv.q = b * p + q * (a + m) + c * r + p * e * f + q * (e * h + f * g) + r * g * h;
    lv.r = 2 * b * q + 2 * m * r + p * f * f + 2 * q * f * h + r * h * h;
    return lv;
}

namespace {
double scale_of(const QuadraticForm& v) {
    return std::max({std::fabs(v.p), std::fabs(v.q), std::fabs(v.r), 1e-300});
}
} // namespace

bool is_positive_definite(const QuadraticForm& v, double tol) {
    const double s = scale_of(v);
    return v.p > tol * s && v.p * v.r - v.q * v.q > tol * s * s;
}

bool is_negative_definite(const QuadraticForm& v, double tol) {
    const double s = scale_of(v);
    return v.p < -tol * s && v.p * v.r - v.q * v.q > tol * s * s;
}

bool is_negative_semidefinite(const QuadraticForm& v, double tol) {
    const double s = scale_of(v);
    return v.p <= tol * s && v.r <= tol * s && v.p * v.r - v.q * v.q >= -tol * s * s;
}

namespace {

QuadraticForm cert_only_e_prob(const SystemSpec& s) {
    // V_e = (am-bc) x^2 + (mx - by)^2
    const double d = s.a * s.m - s.b * s.c;
    return {d + s.m * s.m, -s.b * s.m, s.b * s.b};
}

QuadraticForm cert_only_f_prob(const SystemSpec& s) {
    // (cx - ay)^2 + (am-bc) y^2
    const double d = s.a * s.m - s.b * s.c;
    return {s.c * s.c, -s.a * s.c, s.a * s.a + d};
}

QuadraticForm cert_only_f_ms(const SystemSpec& s) {
    const double d = s.a * s.m - s.b * s.c;
    const double f2 = s.f * s.f;
    return {s.c * s.c + s.m * s.m + d,
            s.a * s.c + s.b * s.m - s.c * f2 / 2.0,
            s.a * s.a + s.b * s.b + d - (s.a + s.m) * f2 / 2.0};
}

QuadraticForm cert_equal_ef_prob(const SystemSpec& s) {
    // xy coefficient taken as -c(2a+e^2); the printed -2c(2a+c^2) is not
    // positive definite even at e=0.
    const double d = s.a * s.m - s.b * s.c;
    const double e2 = s.e * s.e;
    return {s.c * s.c,
            -s.c * (2.0 * s.a + e2) / 2.0,
            s.a * s.a + d + e2 / 2.0 * (s.a + s.m - 2.0 * s.c)};
}

QuadraticForm cert_equal_ef_ms(const SystemSpec& s) {
    // middle coefficient read as 2(me^2+ac+bm) xy (missing xy factor in print)
    const double d = s.a * s.m - s.b * s.c;
    const double e2 = s.e * s.e;
    return {s.c * s.c + s.m * s.m + d,
            s.m * e2 + s.a * s.c + s.b * s.m,
            s.a * s.a + s.b * s.b + d + (s.b - s.c) * e2};
}

QuadraticForm cert_equal_eh_prob(const SystemSpec& s) {
    const double d = s.a * s.m - s.b * s.c;
    const double e2 = s.e * s.e;
    return {2.0 * s.c * s.c,
            -s.c * (2.0 * s.a + e2),
            2.0 * (s.a * s.a + d) + e2 * e2 + (3.0 * s.a + s.m) * e2};
}

QuadraticForm cert_equal_fg_prob(const SystemSpec& s) {
    const double d = s.a * s.m - s.b * s.c;
    const double f2 = s.f * s.f;
    return {2.0 * (s.m * s.m + d + s.m * f2),
            -(2.0 * s.b * s.m - s.c * f2),
            2.0 * s.b * s.b - (s.a + s.m) * f2 - f2 * f2};
}

QuadraticForm swap_xy(const QuadraticForm& v) { return {v.r, v.q, v.p}; }

} // namespace

QuadraticForm build_certificate(const SystemSpec& spec, NoisePattern pattern,
                                StabilityNotion notion) {
    if (spec.calculus != Calculus::Ito)
        throw CalculusError("build_certificate: convert Stratonovich spec to Ito first");
    const bool prob = notion == StabilityNotion::ProbabilityStability;
    switch (pattern) {
        case NoisePattern::OnlyE:
            if (prob) return cert_only_e_prob(spec);
            // mean-square certificate is the dual image of the OnlyF one
            return swap_xy(cert_only_f_ms(dual_transform(spec)));
        case NoisePattern::OnlyF:
            return prob ? cert_only_f_prob(spec) : cert_only_f_ms(spec);
        case NoisePattern::OnlyG:
        case NoisePattern::OnlyH:
        case NoisePattern::EqualFH:
        case NoisePattern::EqualGH:
            return swap_xy(build_certificate(dual_transform(spec),
                                             dual_pattern(pattern), notion));
        case NoisePattern::EqualEF:
            return prob ? cert_equal_ef_prob(spec) : cert_equal_ef_ms(spec);
        case NoisePattern::EqualEG:
            if (prob) return cert_only_e_prob(spec);
            break;
        case NoisePattern::EqualEH:
            if (prob) return cert_equal_eh_prob(spec);
            break;
        case NoisePattern::EqualFG:
            if (prob) return cert_equal_fg_prob(spec);
            break;
        default:
            break;
    }
    throw UnsupportedPattern("build_certificate: no closed-form certificate for pattern " +
                             to_string(pattern) + " / notion " + to_string(notion));
}

CertificateReport verify_certificate(const SystemSpec& spec, const QuadraticForm& v) {
    if (spec.calculus != Calculus::Ito)
        throw CalculusError("verify_certificate: convert Stratonovich spec to Ito first");
    CertificateReport rep;
    rep.v_positive_definite = is_positive_definite(v);
    rep.lv_form = apply_generator(spec, v);
    rep.lv_negative_definite = is_negative_definite(rep.lv_form);
    rep.lv_negative_semidefinite = is_negative_semidefinite(rep.lv_form);

    const double sv = std::max({std::fabs(v.p), std::fabs(v.q), std::fabs(v.r), 1e-300});
    rep.margin = std::min(std::fabs(v.p) / sv,
                          std::fabs(v.p * v.r - v.q * v.q) / (sv * sv));

    // redundant sign check, independent of the minor computation
    const double sl = std::max({std::fabs(rep.lv_form.p), std::fabs(rep.lv_form.q),
                                std::fabs(rep.lv_form.r), 1e-300});
    rep.circle_check_passed = true;
    for (int i = 0; i < 64; ++i) {
        const double th = 2.0 * std::numbers::pi * i / 64.0;
        if (rep.lv_form.evaluate(std::cos(th), std::sin(th)) > 64.0 * kDefinitenessTol * sl) {
            rep.circle_check_passed = false;
            break;
        }
    }
    return rep;
}

} // namespace stostab

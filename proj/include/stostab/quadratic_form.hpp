#ifndef STOSTAB_QUADRATIC_FORM_HPP
#define STOSTAB_QUADRATIC_FORM_HPP

#include "stostab/system.hpp"

namespace stostab {

/// Symmetric quadratic form V(x,y) = p x^2 + 2 q xy + r y^2.
struct QuadraticForm {
    double p = 0, q = 0, r = 0;

    double evaluate(double x, double y) const {
        return p * x * x + 2.0 * q * x * y + r * y * y;
    }

    QuadraticForm operator+(const QuadraticForm& o) const { return {p + o.p, q + o.q, r + o.r}; }
    QuadraticForm operator*(double s) const { return {s * p, s * q, s * r}; }
};

/// Relative zero tolerance used by the definiteness tests,
/// scaled by max(|p|,|q|,|r|).
inline constexpr double kDefinitenessTol = 1e-12;

/// Image of a quadratic form under the differential generator of the
/// Ito system: LV = (ax+by)V_x + (cx+my)V_y
///   + 1/2 [ (ex+fy)^2 V_xx + 2(ex+fy)(gx+hy) V_xy + (gx+hy)^2 V_yy ].
/// Closed form on the coefficients; linear in v.
QuadraticForm apply_generator(const SystemSpec& spec, const QuadraticForm& v);

/// Sylvester tests for the 2x2 symmetric matrix [[p,q],[q,r]].
bool is_positive_definite(const QuadraticForm& v, double tol = kDefinitenessTol);
bool is_negative_definite(const QuadraticForm& v, double tol = kDefinitenessTol);
bool is_negative_semidefinite(const QuadraticForm& v, double tol = kDefinitenessTol);

struct CertificateReport {
    bool v_positive_definite = false;
    QuadraticForm lv_form;
    bool lv_negative_definite = false;
    bool lv_negative_semidefinite = false;
    double margin = 0; ///< smallest relevant leading-minor/determinant magnitude
    bool circle_check_passed = false; ///< LV <= 0 sampled on the unit circle
};

enum class StabilityNotion { ProbabilityStability, MeanSquareExponential };

std::string to_string(StabilityNotion n);

struct UnsupportedPattern : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The explicit Lyapunov candidates, instantiated from the Ito-form
/// coefficients of `spec`. Stratonovich specs must be converted first.
/// Throws UnsupportedPattern when no closed form exists for the
/// pattern/notion pair (dual patterns are handled via dual_transform).
QuadraticForm build_certificate(const SystemSpec& spec, NoisePattern pattern,
                                StabilityNotion notion);

/// Definiteness of v and of its generator image, plus a 64-point
/// unit-circle sampling of LV as a redundant sign check.
CertificateReport verify_certificate(const SystemSpec& spec, const QuadraticForm& v);

} // namespace stostab

#endif

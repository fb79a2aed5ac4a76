#include "stostab/criteria.hpp"

#include "stostab/roots.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace stostab {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Stable: return "stable";
        case Verdict::Unstable: return "unstable";
        case Verdict::Inconclusive: return "inconclusive";
        case Verdict::Boundary: return "boundary";
    }
    return "inconclusive";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* what) {
    if (!ok) throw WrongPattern(what);
}

/// Strict comparison of a squared intensity against a bound, with the
/// unresolvable band reported as Boundary.
Verdict decide(double s2, double bound, bool exact) {
    if (std::isinf(bound)) return Verdict::Stable;
    const double band = kBoundaryMargin * (1.0 + std::fabs(bound));
    if (s2 < bound - band) return Verdict::Stable;
    if (s2 > bound + band) return exact ? Verdict::Unstable : Verdict::Inconclusive;
    return Verdict::Boundary;
}

StabilityReport make_report(const char* id, StabilityNotion notion, Verdict v,
                            BifurcationBound bound, std::string attractor) {
    StabilityReport rep;
    rep.theorem = id;
    rep.notion = notion;
    rep.verdict = v;
    rep.bound = std::move(bound);
    rep.attractor_note = std::move(attractor);
    return rep;
}

} // namespace

StabilityReport thm1_prob_e(const SystemSpec& s) {
    require(classify_noise_pattern(s) == NoisePattern::OnlyE && s.calculus == Calculus::Ito,
            "thm1 requires an Ito spec with only e nonzero");
    const double sum = s.a + s.m, det = s.a * s.m - s.b * s.c;
    BifurcationBound bb{.kind = BifurcationBound::Kind::Sufficient};
    bb.trace = {{"a+m", sum}, {"am-bc", det}};
    if (!(sum < 0 && det > 0 && s.b != 0))
        return make_report("thm1", StabilityNotion::ProbabilityStability,
                           Verdict::Inconclusive, bb, "");
    bb.bound = 2.0 * sum * (-det) / (s.m * s.m + det);
    bb.trace.push_back({"bound_e2", bb.bound});
    return make_report("thm1", StabilityNotion::ProbabilityStability,
                       decide(s.e * s.e, bb.bound, false), bb, "(x,y) -> {x=0} w.p.1");
}

StabilityReport thm2_prob_e_strat(const SystemSpec& s) {
    require(classify_noise_pattern(s) == NoisePattern::OnlyE &&
                s.calculus == Calculus::Stratonovich,
            "thm2 requires a Stratonovich spec with only e nonzero");
    const double sum = s.a + s.m, det = s.a * s.m - s.b * s.c;
    StabilityReport rep;
    rep.theorem = "thm2";
    rep.notion = StabilityNotion::ProbabilityStability;
    rep.verdict = Verdict::Inconclusive;
    BifurcationBound bb{.kind = BifurcationBound::Kind::Sufficient};
    bb.trace = {{"a+m", sum}, {"am-bc", det}};

    // quadratic Q(lambda) = 2m lam^2 + (2m^2+3am-2bc) lam - (a+m)(bc-am)
    const double qb = 2 * s.m * s.m + 3 * s.a * s.m - 2 * s.b * s.c;
    const std::array<double, 3> qcoef{2 * s.m, qb, sum * det};

    double half_bound = -kInf; // bound on e^2/2
    if (s.m > 0) {
        if (sum < 0 && det > 0 && s.b != 0) {
            half_bound = -sum;
            if (auto lam0 = smallest_positive_root(qcoef)) {
                half_bound = std::min(half_bound, *lam0);
                bb.trace.push_back({"lambda0", *lam0});
            }
        }
    } else if (s.m < 0) {
        if (sum < 0 && det > 0 && s.b != 0) {
            half_bound = std::min(-sum, -det / s.m);
            const double A = 2 * s.m, C = sum * det;
            bb.trace.push_back({"B", qb});
            if (A * C >= 0 && qb >= 2.0 * std::sqrt(A * C)) {
                if (auto lam0 = smallest_positive_root(qcoef)) {
                    half_bound = std::min(half_bound, *lam0);
                    bb.trace.push_back({"lambda0", *lam0});
                }
            } else if (A * C < 0) {
                rep.notes.push_back("guard B>=2*sqrt(AC) ill-posed (AC<0); lambda0 dropped");
            }
        }
    } else { // m = 0
        if (s.a < 0 && s.b * s.c < 0) {
            bb.bound = -s.a;
            bb.trace.push_back({"bound_e2", bb.bound});
            rep.verdict = decide(s.e * s.e, bb.bound, false);
            rep.bound = bb;
            rep.attractor_note = "(x,y) -> {x=0} w.p.1";
            return rep;
        }
    }
    if (half_bound > 0) {
        bb.bound = 2.0 * half_bound;
        bb.trace.push_back({"bound_e2", bb.bound});
        rep.verdict = decide(s.e * s.e, bb.bound, false);
        rep.attractor_note = "(x,y) -> {x=0} w.p.1";
    }
    rep.bound = bb;
    return rep;
}

StabilityReport thm3_ms_e(const SystemSpec& s) {
    require(classify_noise_pattern(s) == NoisePattern::OnlyE && s.calculus == Calculus::Ito,
            "thm3 requires an Ito spec with only e nonzero");
    const double sum = s.a + s.m, det = s.a * s.m - s.b * s.c;
    BifurcationBound bb{.kind = BifurcationBound::Kind::Exact};
    bb.trace = {{"a+m", sum}, {"am-bc", det}};
    if (!(sum < 0 && det > 0))
        return make_report("thm3", StabilityNotion::MeanSquareExponential,
                           Verdict::Unstable, bb, "");
    if (s.c == 0) {
        bb.bound = -2.0 * s.a;
    } else {
        const double p = sum * (s.c * s.c + s.m * s.m + det) - 2 * s.c * (s.a * s.c + s.b * s.m);
        const double q = 4.0 * det * (sum * sum + (s.b - s.c) * (s.b - s.c));
        bb.trace.push_back({"p", p});
        bb.trace.push_back({"q", q});
        const double t1 = 2.0 * sum * (-det) / (s.m * s.m + det);
        const double t2 = (p + std::sqrt(p * p + s.c * s.c * q)) / (s.c * s.c);
        bb.bound = std::min(t1, t2);
    }
    bb.trace.push_back({"bound_e2", bb.bound});
    return make_report("thm3", StabilityNotion::MeanSquareExponential,
                       decide(s.e * s.e, bb.bound, true), bb, "(x,y) -> (0,0) w.p.1");
}

StabilityReport thm4_ms_e_strat(const SystemSpec& s) {
    require(classify_noise_pattern(s) == NoisePattern::OnlyE &&
                s.calculus == Calculus::Stratonovich && s.c == 0,
            "thm4 requires a Stratonovich spec with only e nonzero and c=0");
    BifurcationBound bb{.kind = BifurcationBound::Kind::Exact};
    if (!(s.a < 0 && s.m < 0))
        return make_report("thm4", StabilityNotion::MeanSquareExponential,
                           Verdict::Unstable, bb, "");
    bb.bound = -2.0 * s.a;
    bb.trace = {{"bound_e2", bb.bound}};
    return make_report("thm4", StabilityNotion::MeanSquareExponential,
                       decide(s.e * s.e, bb.bound, true), bb, "(x,y) -> (0,0) w.p.1");
}

StabilityReport thm5_ms_e_strat(const SystemSpec& s) {
    require(classify_noise_pattern(s) == NoisePattern::OnlyE &&
                s.calculus == Calculus::Stratonovich && s.c != 0 && s.m == 0,
            "thm5 requires a Stratonovich spec with only e nonzero, c!=0, m=0");
    BifurcationBound bb{.kind = BifurcationBound::Kind::Exact};
    if (!(s.a < 0 && s.b * s.c < 0))
        return make_report("thm5", StabilityNotion::MeanSquareExponential,
                           Verdict::Unstable, bb, "");
    const double ratio = -s.b / s.c;
    bb.trace = {{"(-b)/c", ratio}};
    bb.bound = ratio >= 1.0 ? -s.a : 2.0 * (-s.a) * (s.b + s.c) / (s.b + 3.0 * s.c);
    bb.trace.push_back({"bound_e2", bb.bound});
    return make_report("thm5", StabilityNotion::MeanSquareExponential,
                       decide(s.e * s.e, bb.bound, true), bb, "(x,y) -> (0,0) w.p.1");
}

StabilityReport thm6_prob_f(const SystemSpec& s) {
    require(classify_noise_pattern(s) == NoisePattern::OnlyF,
            "thm6 requires a spec with only f nonzero");
    // Ito and Stratonovich conditions coincide: the drift correction
    // vanishes when only f is nonzero.
    const double sum = s.a + s.m, det = s.a * s.m - s.b * s.c;
    BifurcationBound bb{.kind = BifurcationBound::Kind::Sufficient};
    bb.trace = {{"a+m", sum}, {"am-bc", det}};
    if (!(sum < 0 && det > 0 && s.c != 0))
        return make_report("thm6", StabilityNotion::ProbabilityStability,
                           Verdict::Inconclusive, bb, "");
    bb.bound = 2.0 * sum * (-det) / (s.c * s.c);
    bb.trace.push_back({"bound_f2", bb.bound});
    return make_report("thm6", StabilityNotion::ProbabilityStability,
                       decide(s.f * s.f, bb.bound, false), bb, "(x,y) -> {y=0} w.p.1");
}

StabilityReport thm7_ms_f(const SystemSpec& s) {
    require(classify_noise_pattern(s) == NoisePattern::OnlyF,
            "thm7 requires a spec with only f nonzero");
    const double sum = s.a + s.m, det = s.a * s.m - s.b * s.c;
    BifurcationBound bb{.kind = BifurcationBound::Kind::Exact};
    bb.trace = {{"a+m", sum}, {"am-bc", det}};
    if (!(sum < 0 && det > 0))
        return make_report("thm7", StabilityNotion::MeanSquareExponential,
                           Verdict::Unstable, bb, "");
    if (s.c != 0) {
        const double p = sum * (s.c * s.c + s.m * s.m + det) - 2 * s.c * (s.a * s.c + s.b * s.m);
        const double q = 4.0 * det * (sum * sum + (s.b - s.c) * (s.b - s.c));
        bb.trace.push_back({"p", p});
        bb.trace.push_back({"q", q});
        const double t1 = 2.0 * sum * (-det) / (s.c * s.c);
        const double t2 = (-p + std::sqrt(p * p + s.c * s.c * q)) / (s.c * s.c);
        bb.bound = std::min(t1, t2);
    } // c = 0: condition 2 is lacking, no constraint on f
    bb.trace.push_back({"bound_f2", bb.bound});
    return make_report("thm7", StabilityNotion::MeanSquareExponential,
                       decide(s.f * s.f, bb.bound, true), bb, "(x,y) -> (0,0) w.p.1");
}

StabilityReport thm8_prob_ef(const SystemSpec& s) {
    require(classify_noise_pattern(s) == NoisePattern::EqualEF && s.calculus == Calculus::Ito,
            "thm8 requires an Ito spec with e=f nonzero, g=h=0");
    const double sum = s.a + s.m, det = s.a * s.m - s.b * s.c;
    BifurcationBound bb{.kind = BifurcationBound::Kind::Sufficient};
    bb.trace = {{"a+m", sum}, {"am-bc", det}};
    StabilityReport rep = make_report("thm8", StabilityNotion::ProbabilityStability,
                                      Verdict::Inconclusive, bb, "");
    if (!(sum < 0 && det > 0 && s.c != 0)) return rep;
    double bound = 2.0 * sum * (-det) / (det + (s.c - s.m) * (s.c - s.m));
    const double disc = sum * sum + 4.0 * s.c * (s.a - s.m + s.c - s.b);
    if (disc >= 0) {
        const double t2 = (s.m - s.a - 2.0 * s.c) + std::sqrt(disc);
        rep.bound->trace.push_back({"term2", t2});
        if (t2 > 0)
            bound = std::min(bound, t2);
        else
            rep.notes.push_back("second min-term nonpositive; dropped");
    } else {
        rep.notes.push_back("second min-term complex; dropped");
    }
    rep.bound->bound = bound;
    rep.bound->trace.push_back({"bound_e2", bound});
    rep.verdict = decide(s.e * s.e, bound, false);
    rep.attractor_note = "(x,y) -> {y=0} w.p.1";
    return rep;
}

StabilityReport thm9_ms_ef(const SystemSpec& s) {
    require(classify_noise_pattern(s) == NoisePattern::EqualEF && s.calculus == Calculus::Ito,
            "thm9 requires an Ito spec with e=f nonzero, g=h=0");
    const double sum = s.a + s.m, det = s.a * s.m - s.b * s.c;
    BifurcationBound bb{.kind = BifurcationBound::Kind::Exact};
    bb.trace = {{"a+m", sum}, {"am-bc", det}};
    if (!(sum < 0 && det > 0))
        return make_report("thm9", StabilityNotion::MeanSquareExponential,
                           Verdict::Unstable, bb, "");
    double bound = 2.0 * sum * (-det) / (det + (s.c - s.m) * (s.c - s.m));
    if (s.m != 0) {
        const double p =
            (s.b - s.c) * (s.b * s.b + s.c * s.c + det) - 2 * s.m * (s.a * s.c + s.b * s.m);
        const double q = det * (sum * sum + (s.b - s.c) * (s.b - s.c));
        bb.trace.push_back({"p", p});
        bb.trace.push_back({"q", q});
        bound = std::min(bound,
                         (p + std::sqrt(p * p + 4 * s.m * s.m * q)) / (2 * s.m * s.m));
    } else if (s.b < 0 && s.c > 0) {
        bound = std::min({bound, 2.0 * s.a * s.b / (s.c - s.b),
                          (-s.b) * (s.a * s.a + (s.b - s.c) * (s.b - s.c)) /
                              ((s.c - s.b) * (s.c - s.b))});
    } // m=0, b>0, c<0: condition 2b) is missing
    bb.bound = bound;
    bb.trace.push_back({"bound_e2", bound});
    return make_report("thm9", StabilityNotion::MeanSquareExponential,
                       decide(s.e * s.e, bound, true), bb, "(x,y) -> (0,0) w.p.1");
}

StabilityReport thm10_ms_ef_strat(const SystemSpec& s) {
    require(classify_noise_pattern(s) == NoisePattern::EqualEF &&
                s.calculus == Calculus::Stratonovich,
            "thm10 requires a Stratonovich spec with e=f nonzero, g=h=0");
    if (!(s.m == 0 && s.a < 0 && s.b < 0 && s.c > 0))
        throw HypothesisViolated("thm10 requires m=0, a<0, b<0, c>0");
    BifurcationBound bb{.kind = BifurcationBound::Kind::Exact};
    double half = s.a * s.b / (s.c - 2.0 * s.b);
    const double disc = s.c * s.c + 2.0 * s.b * (s.a - s.c);
    StabilityReport rep = make_report("thm10", StabilityNotion::MeanSquareExponential,
                                      Verdict::Inconclusive, bb, "");
    if (disc >= 0) {
        const double cb = s.c - s.b;
        half = std::min(half, (s.a * s.b + cb * cb - cb * std::sqrt(disc)) / (-s.b));
    } else {
        rep.notes.push_back("second min-term complex; dropped");
    }
    rep.bound->bound = 2.0 * half;
    rep.bound->trace = {{"half_bound", half}, {"bound_e2", 2.0 * half}};
    rep.verdict = decide(s.e * s.e, rep.bound->bound, true);
    rep.attractor_note = "(x,y) -> (0,0) w.p.1";
    return rep;
}

StabilityReport thm11_ms_ef_strat(const SystemSpec& s) {
    require(classify_noise_pattern(s) == NoisePattern::EqualEF &&
                s.calculus == Calculus::Stratonovich,
            "thm11 requires a Stratonovich spec with e=f nonzero, g=h=0");
    if (!(s.b == s.c && s.c == s.m && s.a < s.b && s.b < 0))
        throw HypothesisViolated("thm11 requires b=c=m and a<b<0");
    BifurcationBound bb{.kind = BifurcationBound::Kind::Exact};
    const double half = std::min(-(s.a + s.b) / 3.0,
                                 (-3.0 * s.a - std::sqrt(s.a * s.a + 8.0 * s.b * s.b)) / 4.0);
    bb.bound = 2.0 * half;
    bb.trace = {{"half_bound", half}, {"bound_e2", bb.bound}};
    return make_report("thm11", StabilityNotion::MeanSquareExponential,
                       decide(s.e * s.e, bb.bound, true), bb, "(x,y) -> (0,0) w.p.1");
}

StabilityReport thm12_prob_eg(const SystemSpec& s) {
    require(classify_noise_pattern(s) == NoisePattern::EqualEG && s.calculus == Calculus::Ito,
            "thm12 requires an Ito spec with e=g nonzero, f=h=0");
    const double sum = s.a + s.m, det = s.a * s.m - s.b * s.c;
    BifurcationBound bb{.kind = BifurcationBound::Kind::Sufficient};
    bb.trace = {{"a+m", sum}, {"am-bc", det}};
    if (!(sum < 0 && det > 0 && s.b != 0))
        return make_report("thm12", StabilityNotion::ProbabilityStability,
                           Verdict::Inconclusive, bb, "");
    bb.bound = 2.0 * sum * (-det) / (det + (s.b - s.m) * (s.b - s.m));
    bb.trace.push_back({"bound_e2", bb.bound});
    return make_report("thm12", StabilityNotion::ProbabilityStability,
                       decide(s.e * s.e, bb.bound, false), bb, "(x,y) -> {y=0} w.p.1");
}

StabilityReport thm13_prob_eg_strat(const SystemSpec& s) {
    require(classify_noise_pattern(s) == NoisePattern::EqualEG &&
                s.calculus == Calculus::Stratonovich,
            "thm13 requires a Stratonovich spec with e=g nonzero, f=h=0");
    const double det = s.a * s.m - s.b * s.c;
    BifurcationBound bb{.kind = BifurcationBound::Kind::Sufficient};
    StabilityReport rep = make_report("thm13", StabilityNotion::ProbabilityStability,
                                      Verdict::Inconclusive, bb, "");
    if (!(s.m < 0 && s.b != 0)) return rep;
    double half = det / (-s.m);
    const std::array<double, 3> qc{
        2 * s.m,
        2 * det + s.m * (s.a + s.m) + (s.b - s.m) * (s.b - s.m),
        -(s.a + s.m) * det};
    if (auto lam0 = smallest_positive_root(qc)) {
        half = std::min(half, *lam0);
        rep.bound->trace.push_back({"lambda0", *lam0});
    } else {
        rep.notes.push_back("lambda0 absent; dropped from min");
    }
    if (half <= 0) return rep;
    rep.bound->bound = 2.0 * half;
    rep.bound->trace.push_back({"bound_e2", 2.0 * half});
    rep.verdict = decide(s.e * s.e, rep.bound->bound, false);
    rep.attractor_note = "(x,y) -> (0,0) w.p.1";
    return rep;
}

StabilityReport thm14_prob_eh(const SystemSpec& s) {
    require(classify_noise_pattern(s) == NoisePattern::EqualEH && s.calculus == Calculus::Ito,
            "thm14 requires an Ito spec with e=h nonzero, f=g=0");
    const double sum = s.a + s.m, det = s.a * s.m - s.b * s.c;
    BifurcationBound bb{.kind = BifurcationBound::Kind::Sufficient};
    bb.trace = {{"a+m", sum}, {"am-bc", det}};
    StabilityReport rep = make_report("thm14", StabilityNotion::ProbabilityStability,
                                      Verdict::Inconclusive, bb, "");
    if (!(sum < 0 && det > 0 && s.c != 0)) return rep;
    double bound = kInf;
    if (sum * sum >= 4.0 * det) {
        const std::array<double, 3> quad{1.0, 2.0 * sum, 4.0 * det};
        if (auto p1 = smallest_positive_root(quad)) {
            bound = std::min(bound, *p1);
            rep.bound->trace.push_back({"p1", *p1});
        }
    } else {
        rep.notes.push_back("p1 absent: (a+m)^2 < 4(am-bc)");
    }
    const std::array<double, 4> cubic{1.0, 3.0 * sum, 2.0 * (sum * sum + 2.0 * det),
                                      4.0 * sum * det};
    if (auto p2 = smallest_positive_root(cubic)) {
        bound = std::min(bound, *p2);
        rep.bound->trace.push_back({"p2", *p2});
    }
    if (std::isinf(bound)) return rep;
    rep.bound->bound = bound;
    rep.bound->trace.push_back({"bound_e2", bound});
    rep.verdict = decide(s.e * s.e, bound, false);
    rep.attractor_note = "(x,y) -> {y=0} w.p.1";
    return rep;
}

StabilityReport thm15_prob_fg(const SystemSpec& s) {
    require(classify_noise_pattern(s) == NoisePattern::EqualFG && s.calculus == Calculus::Ito,
            "thm15 requires an Ito spec with f=g nonzero, e=h=0");
    const double sum = s.a + s.m, det = s.a * s.m - s.b * s.c;
    BifurcationBound bb{.kind = BifurcationBound::Kind::Sufficient};
    bb.trace = {{"a+m", sum}, {"am-bc", det}};
    StabilityReport rep = make_report("thm15", StabilityNotion::ProbabilityStability,
                                      Verdict::Inconclusive, bb, "");
    if (!(sum < 0 && det > 0)) return rep;
    if (s.m == 0) {
        rep.notes.push_back("m=0 not covered by the stated branches");
        return rep;
    }
    double bound = kInf;
    if (s.m < 0) {
        const double p1 = (s.m * s.m + det) / (-s.m);
        bound = p1;
        rep.bound->trace.push_back({"p1", p1});
    }
    const std::array<double, 4> cubicA{
        1.0, sum, -2.0 * (s.b * s.b + s.c * s.c + 2.0 * s.a * s.m), 4.0 * sum * (-det)};
    if (auto p2 = smallest_positive_root(cubicA)) {
        bound = std::min(bound, *p2);
        rep.bound->trace.push_back({"p2", *p2});
    } else {
        rep.notes.push_back("p2 absent: no positive root");
    }
    const std::array<double, 4> cubicB{
        2.0 * s.m,
        s.c * s.c + 2.0 * s.m * s.m + 2.0 * det + 2.0 * s.m * sum,
        2.0 * (sum * (s.m * s.m + det) - 4.0 * s.b * s.m * (s.b + s.c)),
        -4.0 * s.b * s.b * det};
    if (auto p3 = smallest_positive_root(cubicB)) {
        bound = std::min(bound, *p3);
        rep.bound->trace.push_back({"p3", *p3});
    } else {
        rep.notes.push_back("p3 absent: no positive root");
    }
    if (std::isinf(bound)) return rep;
    rep.bound->bound = bound;
    rep.bound->trace.push_back({"bound_f2", bound});
    rep.verdict = decide(s.f * s.f, bound, false);
    rep.attractor_note = "(x,y) -> {x=0} w.p.1";
    return rep;
}

namespace {

StabilityReport routh_hurwitz_report(const SystemSpec& s, StabilityNotion notion) {
    StabilityReport rep;
    rep.theorem = "routh_hurwitz";
    rep.notion = notion;
    rep.verdict = routh_hurwitz(s) ? Verdict::Stable : Verdict::Unstable;
    rep.attractor_note = rep.verdict == Verdict::Stable ? "(x,y) -> (0,0)" : "";
    return rep;
}

StabilityReport inconclusive_report(StabilityNotion notion, std::string note) {
    StabilityReport rep;
    rep.theorem = "none";
    rep.notion = notion;
    rep.verdict = Verdict::Inconclusive;
    rep.notes.push_back(std::move(note));
    return rep;
}

} // namespace

StabilityReport analyze(const SystemSpec& spec, StabilityNotion notion, double pattern_tol) {
    const NoisePattern pattern = classify_noise_pattern(spec, pattern_tol);
    const bool strat = spec.calculus == Calculus::Stratonovich;
    const bool prob = notion == StabilityNotion::ProbabilityStability;

    switch (pattern) {
        case NoisePattern::NoNoise:
            return routh_hurwitz_report(ensure_ito(spec), notion);
        case NoisePattern::OnlyE:
            if (prob) return strat ? thm2_prob_e_strat(spec) : thm1_prob_e(spec);
            if (!strat) return thm3_ms_e(spec);
            if (spec.c == 0) return thm4_ms_e_strat(spec);
            if (spec.m == 0) return thm5_ms_e_strat(spec);
            return inconclusive_report(notion,
                                       "no Stratonovich mean-square criterion for c!=0, m!=0");
        case NoisePattern::OnlyF:
            return prob ? thm6_prob_f(spec) : thm7_ms_f(spec);
        case NoisePattern::OnlyG:
        case NoisePattern::OnlyH:
        case NoisePattern::EqualFH:
        case NoisePattern::EqualGH: {
            StabilityReport rep = analyze(dual_transform(spec), notion, pattern_tol);
            rep.theorem += "(dual)";
            return rep;
        }
        case NoisePattern::EqualEF:
            if (!strat) return prob ? thm8_prob_ef(spec) : thm9_ms_ef(spec);
            if (!prob) {
                if (spec.m == 0 && spec.a < 0 && spec.b < 0 && spec.c > 0)
                    return thm10_ms_ef_strat(spec);
                if (spec.b == spec.c && spec.c == spec.m && spec.a < spec.b && spec.b < 0)
                    return thm11_ms_ef_strat(spec);
            }
            // exact conversion preserves this pattern; fall back to the
            // Ito criterion on the converted system
            {
                StabilityReport rep = analyze(stratonovich_to_ito(spec), notion, pattern_tol);
                rep.theorem += "(converted)";
                return rep;
            }
        case NoisePattern::EqualEG:
            if (prob) return strat ? thm13_prob_eg_strat(spec) : thm12_prob_eg(spec);
            return inconclusive_report(notion, "no mean-square criterion for e=g pattern");
        case NoisePattern::EqualEH:
            if (prob && strat) {
                StabilityReport rep = analyze(stratonovich_to_ito(spec), notion, pattern_tol);
                rep.theorem += "(converted)";
                return rep;
            }
            if (prob) return thm14_prob_eh(spec);
            return inconclusive_report(notion, "no mean-square criterion for e=h pattern");
        case NoisePattern::EqualFG:
            if (prob && strat) {
                StabilityReport rep = analyze(stratonovich_to_ito(spec), notion, pattern_tol);
                rep.theorem += "(converted)";
                return rep;
            }
            if (prob) return thm15_prob_fg(spec);
            return inconclusive_report(notion, "no mean-square criterion for f=g pattern");
        case NoisePattern::Unsupported:
            break;
    }
    return inconclusive_report(notion, "diffusion pattern outside the supported cases");
}

} // namespace stostab

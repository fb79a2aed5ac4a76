#include "stostab/sweep.hpp"

#include "stostab/moments.hpp"
#include "stostab/quadratic_form.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stostab {

SystemSpec instantiate_pattern(const SystemSpec& spec_template, NoisePattern pattern,
                               double intensity) {
    if (intensity < 0) throw std::invalid_argument("intensity must be nonnegative");
    SystemSpec s = spec_template;
    s.e = s.f = s.g = s.h = 0.0;
    const double amp = std::sqrt(intensity);
    switch (pattern) {
        case NoisePattern::OnlyE: s.e = amp; break;
        case NoisePattern::OnlyF: s.f = amp; break;
        case NoisePattern::OnlyG: s.g = amp; break;
        case NoisePattern::OnlyH: s.h = amp; break;
        case NoisePattern::EqualEF: s.e = s.f = amp; break;
        case NoisePattern::EqualEG: s.e = s.g = amp; break;
        case NoisePattern::EqualEH: s.e = s.h = amp; break;
        case NoisePattern::EqualFG: s.f = s.g = amp; break;
        case NoisePattern::EqualFH: s.f = s.h = amp; break;
        case NoisePattern::EqualGH: s.g = s.h = amp; break;
        default:
            throw UnsupportedPattern("sweep pattern must name diffusion coefficients");
    }
    return s;
}

double find_threshold_bisect(const SystemSpec& spec_template, NoisePattern pattern,
                             double lo, double hi) {
    auto verdict = [&](double s2) {
        return ms_stable_by_moments(instantiate_pattern(spec_template, pattern, s2));
    };
    if (verdict(lo) != Verdict::Stable || verdict(hi) == Verdict::Stable)
        throw NoSignChange("oracle must be Stable at lo and not Stable at hi");
    while (hi - lo >= 1e-10 * (1.0 + hi)) {
        const double mid = 0.5 * (lo + hi);
        if (verdict(mid) == Verdict::Stable)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

SweepResult sweep(const SystemSpec& spec_template, NoisePattern pattern,
                  const std::vector<double>& grid, StabilityNotion notion) {
    if (grid.empty() || grid.front() < 0 || !std::is_sorted(grid.begin(), grid.end()))
        throw std::invalid_argument("grid must be nonempty, nonnegative, ascending");

    SweepResult out;
    out.intensities = grid;
    out.analytic_verdicts.reserve(grid.size());
    out.oracle_verdicts.reserve(grid.size());
    for (double s2 : grid) {
        const SystemSpec s = instantiate_pattern(spec_template, pattern, s2);
        out.analytic_verdicts.push_back(analyze(s, notion).verdict);
        out.oracle_verdicts.push_back(ms_stable_by_moments(s));
    }

    // the analytic bound does not depend on the probe intensity, but a
    // zero grid point would classify as NoNoise; probe strictly inside
    const double probe = grid.back() > 0 ? grid.back() : 1.0;
    const StabilityReport rep = analyze(instantiate_pattern(spec_template, pattern, probe),
                                        notion);
    out.analytic_bound = rep.bound ? rep.bound->bound
                                   : std::numeric_limits<double>::quiet_NaN();

    int last_stable = -1, first_unstable = -1;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (out.oracle_verdicts[i] == Verdict::Stable) last_stable = static_cast<int>(i);
        else if (first_unstable < 0) first_unstable = static_cast<int>(i);
    }
    if (last_stable >= 0 && first_unstable > last_stable)
        out.empirical_threshold = find_threshold_bisect(spec_template, pattern,
                                                        grid[last_stable],
                                                        grid[first_unstable]);
    return out;
}

} // namespace stostab

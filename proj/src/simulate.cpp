#include "stostab/simulate.hpp"

#include "stostab/philox.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace stostab {

namespace {

constexpr double kOverflowGuard = 1e150;

SystemSpec prepare(const SystemSpec& spec, Scheme scheme) {
    if (spec.calculus == Calculus::Ito) return spec;
    if (scheme == Scheme::EulerMaruyamaIto)
        throw CalculusError("EulerMaruyamaIto scheme requires an Ito spec");
    return stratonovich_to_ito(spec);
}

EnsembleStats run_ensemble(const SystemSpec& ito, const SimConfig& cfg, double epsilon,
                           const std::function<void(int, double&, double&)>& initial,
                           AttractorSet attractor, double attractor_tol,
                           double* attractor_fraction) {
    if (cfg.dt <= 0 || cfg.horizon <= 0 || cfg.dt >= cfg.horizon || cfg.n_paths < 1 ||
        cfg.n_record < 2)
        throw std::invalid_argument("simulate: need 0 < dt < horizon, n_paths >= 1");

    const long n_steps = std::lround(cfg.horizon / cfg.dt);
    const double sqrt_dt = std::sqrt(cfg.dt);

    EnsembleStats out;
    out.times.resize(cfg.n_record);
    std::vector<long> record_step(cfg.n_record);
    for (int i = 0; i < cfg.n_record; ++i) {
        record_step[i] = std::lround(static_cast<double>(i) * n_steps / (cfg.n_record - 1));
        out.times[i] = record_step[i] * cfg.dt;
    }

    std::vector<double> sum(cfg.n_record, 0.0), sumsq(cfg.n_record, 0.0);
    int exceed_count = 0, attractor_count = 0;

    for (int p = 0; p < cfg.n_paths; ++p) {
        Philox rng(cfg.seed, static_cast<std::uint64_t>(p));
        double x, y;
        initial(p, x, y);
        bool exceed = false, frozen = false;
        int rec = 0;
        for (long step = 0; step <= n_steps; ++step) {
            if (rec < cfg.n_record && step == record_step[rec]) {
                const double s = x * x + y * y;
                sum[rec] += s;
                sumsq[rec] += s * s;
                ++rec;
            }
            if (std::fabs(x) > epsilon || std::fabs(y) > epsilon) exceed = true;
            if (step == n_steps) break;
            if (!frozen) {
                const double dw = sqrt_dt * rng.normal(static_cast<std::uint64_t>(step));
                const double dx = (ito.a * x + ito.b * y) * cfg.dt + (ito.e * x + ito.f * y) * dw;
                const double dy = (ito.c * x + ito.m * y) * cfg.dt + (ito.g * x + ito.h * y) * dw;
                x += dx;
                y += dy;
                if (!std::isfinite(x) || !std::isfinite(y) || std::fabs(x) > kOverflowGuard ||
                    std::fabs(y) > kOverflowGuard) {
                    frozen = true;
                    exceed = true;
                    ++out.n_exploded;
                    x = std::copysign(std::min(std::fabs(x), kOverflowGuard), x);
                    y = std::copysign(std::min(std::fabs(y), kOverflowGuard), y);
                    if (!std::isfinite(x)) x = kOverflowGuard;
                    if (!std::isfinite(y)) y = kOverflowGuard;
                }
            }
        }
        if (exceed) ++exceed_count;
        const double dist = attractor == AttractorSet::Origin ? std::hypot(x, y)
                            : attractor == AttractorSet::LineXZero ? std::fabs(x)
                                                                   : std::fabs(y);
        if (dist <= attractor_tol) ++attractor_count;
    }

    const double n = cfg.n_paths;
    out.second_moment.resize(cfg.n_record);
    out.std_error.resize(cfg.n_record);
    for (int i = 0; i < cfg.n_record; ++i) {
        const double mean = sum[i] / n;
        out.second_moment[i] = mean;
        const double var = cfg.n_paths > 1 ? std::max(0.0, (sumsq[i] - n * mean * mean) / (n - 1))
                                           : 0.0;
        out.std_error[i] = std::sqrt(var / n);
    }
    out.exceedance_prob = exceed_count / n;
    if (attractor_fraction) *attractor_fraction = attractor_count / n;

    // fit log E[x^2+y^2] ~ log A - alpha t on the second half of the horizon
    double st = 0, sl = 0, stt = 0, stl = 0;
    int count = 0;
    for (int i = 0; i < cfg.n_record; ++i) {
        if (out.times[i] < cfg.horizon / 2 || out.second_moment[i] <= 0) continue;
        const double t = out.times[i], l = std::log(out.second_moment[i]);
        st += t; sl += l; stt += t * t; stl += t * l;
        ++count;
    }
    if (count >= 2) {
        const double denom = count * stt - st * st;
        const double slope = (count * stl - st * sl) / denom;
        const double intercept = (sl - slope * st) / count;
        out.ms_exponent = -slope;
        out.amplitude = std::exp(intercept);
    }
    return out;
}

} // namespace

EnsembleStats simulate_ensemble(const SystemSpec& spec, const SimConfig& config) {
    const SystemSpec ito = prepare(spec, config.scheme);
    double unused = 0.0;
    return run_ensemble(
        ito, config, config.epsilon,
        [&](int, double& x, double& y) { x = config.x0; y = config.y0; },
        AttractorSet::Origin, 0.0, &unused);
}

EnsembleStats probe_probability_stability(const SystemSpec& spec, const SimConfig& config,
                                          double epsilon, double delta,
                                          AttractorSet attractor, double attractor_tol) {
    if (epsilon <= 0 || delta <= 0)
        throw std::invalid_argument("probe: need epsilon > 0 and delta > 0");
    const SystemSpec ito = prepare(spec, config.scheme);
    double frac = 0.0;
    EnsembleStats out = run_ensemble(
        ito, config, epsilon,
        [&](int p, double& x, double& y) {
            const double theta = 2.0 * std::numbers::pi * p / config.n_paths;
            x = delta * std::cos(theta);
            y = delta * std::sin(theta);
        },
        attractor, attractor_tol, &frac);
    out.attractor_fraction = frac;
    return out;
}

} // namespace stostab

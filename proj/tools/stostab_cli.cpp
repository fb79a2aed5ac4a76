#include "stostab/criteria.hpp"
#include "stostab/json_io.hpp"
#include "stostab/moments.hpp"
#include "stostab/oscillator.hpp"
#include "stostab/quadratic_form.hpp"
#include "stostab/simulate.hpp"
#include "stostab/sweep.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace stostab;

constexpr int kExitStable = 0;
constexpr int kExitUnstable = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;
constexpr int kExitBadSpec = 64;

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::Stable: return kExitStable;
        case Verdict::Unstable: return kExitUnstable;
        default: return kExitInconclusive;
    }
}

struct SpecOptions {
    std::string spec_path;
    double a = 0, b = 0, c = 0, m = 0;
    double e = 0, f = 0, g = 0, h = 0;
    double e2 = -1, f2 = -1, g2 = -1, h2 = -1;
    std::string calculus = "ito";

    void attach(CLI::App* app) {
        // long-only help so the --h coefficient flag stays available
        app->set_help_flag("--help", "print help");
        app->add_option("--spec", spec_path, "path to a spec JSON file");
        app->add_option("--a", a, "drift coefficient a");
        app->add_option("--b", b, "drift coefficient b");
        app->add_option("--c", c, "drift coefficient c");
        app->add_option("--m", m, "drift coefficient m");
        app->add_option("--e", e, "diffusion amplitude e");
        app->add_option("--f", f, "diffusion amplitude f");
        app->add_option("--g", g, "diffusion amplitude g");
        app->add_option("--h", h, "diffusion amplitude h");
        app->add_option("--e2", e2, "squared intensity e^2 (overrides --e)");
        app->add_option("--f2", f2, "squared intensity f^2 (overrides --f)");
        app->add_option("--g2", g2, "squared intensity g^2 (overrides --g)");
        app->add_option("--h2", h2, "squared intensity h^2 (overrides --h)");
        app->add_option("--calculus", calculus, "ito or stratonovich")
            ->check(CLI::IsMember({"ito", "stratonovich"}));
    }

    SystemSpec build() const {
        if (!spec_path.empty()) {
            std::ifstream in(spec_path);
            if (!in) throw std::runtime_error("cannot open " + spec_path);
            std::stringstream buf;
            buf << in.rdbuf();
            return parse_system_spec(buf.str());
        }
        SystemSpec s{a, b, c, m, e, f, g, h,
                     calculus == "stratonovich" ? Calculus::Stratonovich : Calculus::Ito};
        if (e2 >= 0) s.e = std::sqrt(e2);
        if (f2 >= 0) s.f = std::sqrt(f2);
        if (g2 >= 0) s.g = std::sqrt(g2);
        if (h2 >= 0) s.h = std::sqrt(h2);
        return s;
    }
};

NoisePattern pattern_from_name(const std::string& name) {
    static const std::map<std::string, NoisePattern> table{
        {"only_e", NoisePattern::OnlyE},     {"only_f", NoisePattern::OnlyF},
        {"only_g", NoisePattern::OnlyG},     {"only_h", NoisePattern::OnlyH},
        {"equal_ef", NoisePattern::EqualEF}, {"equal_eg", NoisePattern::EqualEG},
        {"equal_eh", NoisePattern::EqualEH}, {"equal_fg", NoisePattern::EqualFG},
        {"equal_fh", NoisePattern::EqualFH}, {"equal_gh", NoisePattern::EqualGH}};
    auto it = table.find(name);
    if (it == table.end()) throw std::runtime_error("unknown pattern name: " + name);
    return it->second;
}

std::vector<double> parse_grid(const std::string& text) {
    double lo = 0, hi = 0;
    int n = 0;
    char c1 = 0, c2 = 0;
    std::istringstream is(text);
    if (!(is >> lo >> c1 >> hi >> c2 >> n) || c1 != ':' || c2 != ':' || n < 2 || hi <= lo)
        throw std::runtime_error("grid must be lo:hi:n with n >= 2, hi > lo");
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i) grid[i] = lo + (hi - lo) * i / (n - 1);
    return grid;
}

void write_artifact(const std::string& out_dir, const std::string& name,
                    const std::string& content) {
    if (out_dir.empty()) return;
    std::filesystem::create_directories(out_dir);
    std::ofstream f(std::filesystem::path(out_dir) / name, std::ios::binary);
    f << content;
}

void print_report_human(const StabilityReport& rep) {
    std::cout << "verdict: " << to_string(rep.verdict) << "\n"
              << "notion: " << to_string(rep.notion) << "\n"
              << "criterion: " << rep.theorem << "\n";
    if (rep.bound) {
        std::cout << "bound (" << (rep.bound->kind == BifurcationBound::Kind::Exact
                                       ? "exact"
                                       : "sufficient")
                  << "): " << rep.bound->bound << "\n";
        for (const auto& t : rep.bound->trace)
            std::cout << "  " << t.name << " = " << t.value << "\n";
    }
    if (!rep.attractor_note.empty()) std::cout << "attractor: " << rep.attractor_note << "\n";
    for (const auto& n : rep.notes) std::cout << "note: " << n << "\n";
}

int run_check(const SpecOptions& opts, const std::string& notion_name,
              const std::string& format, double pattern_tol) {
    const SystemSpec spec = opts.build();
    std::vector<StabilityNotion> notions;
    if (notion_name == "prob" || notion_name == "both")
        notions.push_back(StabilityNotion::ProbabilityStability);
    if (notion_name == "ms" || notion_name == "both")
        notions.push_back(StabilityNotion::MeanSquareExponential);

    int exit_code = kExitStable;
    for (StabilityNotion notion : notions) {
        const StabilityReport rep = analyze(spec, notion, pattern_tol);
        if (format == "human")
            print_report_human(rep);
        else
            std::cout << report_to_json(rep) << "\n";
        exit_code = std::max(exit_code, verdict_exit(rep.verdict));
    }
    return exit_code;
}

int run_certify(const SpecOptions& opts, const std::string& notion_name,
                const std::string& format) {
    const SystemSpec spec = ensure_ito(opts.build());
    const NoisePattern pattern = classify_noise_pattern(spec);
    const StabilityNotion notion = notion_name == "prob"
                                       ? StabilityNotion::ProbabilityStability
                                       : StabilityNotion::MeanSquareExponential;
    const QuadraticForm v = build_certificate(spec, pattern, notion);
    const CertificateReport rep = verify_certificate(spec, v);
    if (format == "human") {
        std::cout << "V = " << v.p << " x^2 + " << 2 * v.q << " xy + " << v.r << " y^2\n"
                  << "V positive definite: " << rep.v_positive_definite << "\n"
                  << "LV = " << rep.lv_form.p << " x^2 + " << 2 * rep.lv_form.q << " xy + "
                  << rep.lv_form.r << " y^2\n"
                  << "LV negative definite: " << rep.lv_negative_definite << "\n"
                  << "LV negative semidefinite: " << rep.lv_negative_semidefinite << "\n"
                  << "circle check: " << rep.circle_check_passed << "\n";
    } else {
        std::cout << "{\n  \"v\": [" << v.p << ", " << v.q << ", " << v.r << "],\n"
                  << "  \"v_positive_definite\": " << (rep.v_positive_definite ? "true" : "false")
                  << ",\n  \"lv\": [" << rep.lv_form.p << ", " << rep.lv_form.q << ", "
                  << rep.lv_form.r << "],\n"
                  << "  \"lv_negative_definite\": "
                  << (rep.lv_negative_definite ? "true" : "false")
                  << ",\n  \"lv_negative_semidefinite\": "
                  << (rep.lv_negative_semidefinite ? "true" : "false")
                  << ",\n  \"circle_check_passed\": "
                  << (rep.circle_check_passed ? "true" : "false") << "\n}\n";
    }
    const bool ok = rep.v_positive_definite && rep.lv_negative_semidefinite &&
                    rep.circle_check_passed;
    return ok ? kExitStable : kExitInconclusive;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"stability analysis of 2D linear SDEs with white-noise coefficients"};
    app.require_subcommand(1);

    std::string format = "json", notion = "ms", out_dir;
    double pattern_tol = 0.0;
    app.add_option("--format", format, "json, csv or human")
        ->check(CLI::IsMember({"json", "csv", "human"}));

    SpecOptions check_opts, convert_opts, certify_opts, sim_opts, sweep_opts;

    auto* check = app.add_subcommand("check", "stability verdict for a spec");
    check->fallthrough();
    check_opts.attach(check);
    check->add_option("--notion", notion, "prob, ms or both")
        ->check(CLI::IsMember({"prob", "ms", "both"}));
    check->add_option("--pattern-tol", pattern_tol, "equality tolerance for classification");

    auto* convert = app.add_subcommand("convert", "print the Ito-equivalent spec");
    convert->fallthrough();
    convert_opts.attach(convert);

    auto* certify = app.add_subcommand("certify", "build and verify the Lyapunov certificate");
    certify->fallthrough();
    certify_opts.attach(certify);
    certify->add_option("--notion", notion, "prob or ms")
        ->check(CLI::IsMember({"prob", "ms"}));

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo ensemble statistics");
    simulate->fallthrough();
    sim_opts.attach(simulate);
    SimConfig sim_cfg;
    simulate->add_option("--paths", sim_cfg.n_paths, "number of paths");
    simulate->add_option("--dt", sim_cfg.dt, "time step");
    simulate->add_option("--horizon", sim_cfg.horizon, "simulation horizon");
    simulate->add_option("--seed", sim_cfg.seed, "RNG seed");
    simulate->add_option("--x0", sim_cfg.x0, "initial x");
    simulate->add_option("--y0", sim_cfg.y0, "initial y");
    simulate->add_option("--epsilon", sim_cfg.epsilon, "exceedance level");
    simulate->add_option("--out", out_dir, "artifact output directory");

    auto* sweep_cmd = app.add_subcommand("sweep", "verdicts over an intensity grid");
    sweep_cmd->fallthrough();
    sweep_opts.attach(sweep_cmd);
    std::string grid_text = "0:4:41", pattern_name = "only_e";
    sweep_cmd->add_option("--grid", grid_text, "squared-intensity grid lo:hi:n");
    sweep_cmd->add_option("--pattern", pattern_name, "diffusion pattern to instantiate");
    sweep_cmd->add_option("--notion", notion, "prob or ms")
        ->check(CLI::IsMember({"prob", "ms"}));
    sweep_cmd->add_option("--out", out_dir, "artifact output directory");

    auto* osc = app.add_subcommand("oscillator", "damped-oscillator thresholds");
    osc->fallthrough();
    OscillatorSpec osc_spec;
    std::string osc_case = "c", osc_calculus = "ito", osc_grid;
    osc->add_option("--k", osc_spec.k, "damping coefficient")->required();
    osc->add_option("--omega", osc_spec.omega, "eigenfrequency")->required();
    osc->add_option("--sigma1", osc_spec.sigma1, "frequency-noise amplitude");
    osc->add_option("--sigma2", osc_spec.sigma2, "damping-noise amplitude");
    osc->add_option("--case", osc_case, "a (frequency), b (damping) or c (equal)")
        ->check(CLI::IsMember({"a", "b", "c"}));
    osc->add_option("--calculus", osc_calculus, "ito or stratonovich")
        ->check(CLI::IsMember({"ito", "stratonovich"}));
    osc->add_option("--grid", osc_grid, "optional sigma^2 sweep grid lo:hi:n");
    osc->add_option("--out", out_dir, "artifact output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(check_opts, notion, format, pattern_tol);

        if (convert->parsed()) {
            const SystemSpec spec = convert_opts.build();
            std::cout << system_spec_to_json(ensure_ito(spec)) << "\n";
            return 0;
        }

        if (certify->parsed()) return run_certify(certify_opts, notion, format);

        if (simulate->parsed()) {
            const EnsembleStats stats = simulate_ensemble(sim_opts.build(), sim_cfg);
            write_artifact(out_dir, "ensemble.csv", ensemble_to_csv(stats));
            const std::string summary = ensemble_summary_json(stats, sim_cfg);
            write_artifact(out_dir, "summary.json", summary + "\n");
            std::cout << summary << "\n";
            return 0;
        }

        if (sweep_cmd->parsed()) {
            const SweepResult result =
                sweep(sweep_opts.build(), pattern_from_name(pattern_name),
                      parse_grid(grid_text),
                      notion == "prob" ? StabilityNotion::ProbabilityStability
                                       : StabilityNotion::MeanSquareExponential);
            const std::string csv = sweep_to_csv(result);
            write_artifact(out_dir, "sweep.csv", csv);
            const std::string summary = sweep_summary_json(result);
            write_artifact(out_dir, "summary.json", summary + "\n");
            if (format == "csv")
                std::cout << csv;
            else
                std::cout << summary << "\n";
            return 0;
        }

        if (osc->parsed()) {
            osc_spec.calculus = osc_calculus == "stratonovich" ? Calculus::Stratonovich
                                                               : Calculus::Ito;
            if (osc_case == "a" && osc_spec.sigma2 == 0 && osc_spec.sigma1 == 0)
                osc_spec.sigma1 = 1e-6; // case selection only; bound ignores amplitude
            if (osc_case == "b" && osc_spec.sigma1 == 0 && osc_spec.sigma2 == 0)
                osc_spec.sigma2 = 1e-6;
            const BifurcationBound bb = osc_spec.calculus == Calculus::Ito
                                            ? prop1_threshold(osc_spec)
                                            : prop2_threshold(osc_spec);
            std::cout << bb.bound << "\n";
            if (!osc_grid.empty()) {
                const SystemSpec tmpl = oscillator_to_system(osc_spec);
                const SweepResult result = sweep(tmpl, NoisePattern::EqualGH,
                                                 parse_grid(osc_grid),
                                                 StabilityNotion::MeanSquareExponential);
                const std::string csv = sweep_to_csv(result);
                write_artifact(out_dir, "sweep.csv", csv);
                write_artifact(out_dir, "summary.json", sweep_summary_json(result) + "\n");
                if (format == "csv") std::cout << csv;
            }
            return 0;
        }
    } catch (const JsonSpecError& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return kExitBadSpec;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

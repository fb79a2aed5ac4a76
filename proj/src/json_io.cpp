#include "stostab/json_io.hpp"

#include "json.hpp"

#include <cmath>
#include <sstream>

namespace stostab {

namespace {

using nlohmann::json;

double number_field(const json& j, const char* key, double fallback, bool required) {
    if (!j.contains(key)) {
        if (required) throw JsonSpecError(std::string("missing required key \"") + key + "\"");
        return fallback;
    }
    if (!j.at(key).is_number())
        throw JsonSpecError(std::string("key \"") + key + "\" must be a number");
    const double v = j.at(key).get<double>();
    if (!std::isfinite(v))
        throw JsonSpecError(std::string("key \"") + key + "\" must be finite");
    return v;
}

json bound_to_json(const BifurcationBound& bb) {
    json j;
    j["bound"] = std::isinf(bb.bound) ? json(nullptr) : json(bb.bound);
    j["kind"] = bb.kind == BifurcationBound::Kind::Exact ? "exact" : "sufficient";
    json trace = json::object();
    for (const auto& entry : bb.trace) trace[entry.name] = entry.value;
    j["trace"] = trace;
    return j;
}

// Deterministic float formatting for the CSV writers.
std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

SystemSpec parse_system_spec(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw JsonSpecError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw JsonSpecError("spec must be a JSON object");

    SystemSpec s;
    s.a = number_field(j, "a", 0, true);
    s.b = number_field(j, "b", 0, true);
    s.c = number_field(j, "c", 0, true);
    s.m = number_field(j, "m", 0, true);
    s.e = number_field(j, "e", 0, false);
    s.f = number_field(j, "f", 0, false);
    s.g = number_field(j, "g", 0, false);
    s.h = number_field(j, "h", 0, false);
    if (j.contains("calculus")) {
        if (!j.at("calculus").is_string())
            throw JsonSpecError("key \"calculus\" must be \"ito\" or \"stratonovich\"");
        const std::string c = j.at("calculus").get<std::string>();
        if (c == "ito")
            s.calculus = Calculus::Ito;
        else if (c == "stratonovich")
            s.calculus = Calculus::Stratonovich;
        else
            throw JsonSpecError("key \"calculus\" must be \"ito\" or \"stratonovich\"");
    }
    return s;
}

std::string system_spec_to_json(const SystemSpec& s, int indent) {
    json j{{"a", s.a}, {"b", s.b}, {"c", s.c}, {"m", s.m},
           {"e", s.e}, {"f", s.f}, {"g", s.g}, {"h", s.h},
           {"calculus", to_string(s.calculus)}};
    return j.dump(indent);
}

std::string report_to_json(const StabilityReport& rep, int indent) {
    json j;
    j["verdict"] = to_string(rep.verdict);
    j["notion"] = to_string(rep.notion);
    j["criterion"] = rep.theorem;
    if (rep.bound) j["bound"] = bound_to_json(*rep.bound);
    if (!rep.attractor_note.empty()) j["attractor"] = rep.attractor_note;
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    return j.dump(indent);
}

std::string ensemble_summary_json(const EnsembleStats& stats, const SimConfig& cfg,
                                  int indent) {
    json j;
    j["ms_exponent"] = stats.ms_exponent;
    j["amplitude"] = stats.amplitude;
    j["exceedance_prob"] = stats.exceedance_prob;
    j["attractor_fraction"] = stats.attractor_fraction;
    j["n_exploded"] = stats.n_exploded;
    j["config"] = {{"dt", cfg.dt},       {"horizon", cfg.horizon}, {"n_paths", cfg.n_paths},
                   {"seed", cfg.seed},   {"x0", cfg.x0},           {"y0", cfg.y0},
                   {"epsilon", cfg.epsilon}};
    return j.dump(indent);
}

std::string sweep_summary_json(const SweepResult& r, int indent) {
    json j;
    j["analytic_bound"] = std::isfinite(r.analytic_bound) ? json(r.analytic_bound)
                                                          : json(nullptr);
    j["empirical_threshold"] =
        r.empirical_threshold ? json(*r.empirical_threshold) : json(nullptr);
    j["n_points"] = r.intensities.size();
    return j.dump(indent);
}

std::string ensemble_to_csv(const EnsembleStats& stats) {
    std::string out = "t,second_moment,stderr\n";
    for (std::size_t i = 0; i < stats.times.size(); ++i)
        out += fmt(stats.times[i]) + "," + fmt(stats.second_moment[i]) + "," +
               fmt(stats.std_error[i]) + "\n";
    return out;
}

std::string sweep_to_csv(const SweepResult& r) {
    std::string out = "intensity,analytic_verdict,oracle_verdict\n";
    for (std::size_t i = 0; i < r.intensities.size(); ++i)
        out += fmt(r.intensities[i]) + "," + to_string(r.analytic_verdicts[i]) + "," +
               to_string(r.oracle_verdicts[i]) + "\n";
    return out;
}

} // namespace stostab

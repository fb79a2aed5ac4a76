#ifndef STOSTAB_JSON_IO_HPP
#define STOSTAB_JSON_IO_HPP

#include "stostab/report.hpp"
#include "stostab/simulate.hpp"
#include "stostab/sweep.hpp"
#include "stostab/system.hpp"

#include <string>

namespace stostab {

/// Malformed spec document; the message names the offending key.
struct JsonSpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses {"a":..,"b":..,...,"calculus":"ito"|"stratonovich"}. Missing
/// diffusion keys default to 0, missing calculus to Ito.
SystemSpec parse_system_spec(const std::string& text);

std::string system_spec_to_json(const SystemSpec& spec, int indent = 2);
std::string report_to_json(const StabilityReport& report, int indent = 2);
std::string ensemble_summary_json(const EnsembleStats& stats, const SimConfig& config,
                                  int indent = 2);
std::string sweep_summary_json(const SweepResult& result, int indent = 2);

/// CSV with header t,second_moment,stderr.
std::string ensemble_to_csv(const EnsembleStats& stats);
/// CSV with header intensity,analytic_verdict,oracle_verdict.
std::string sweep_to_csv(const SweepResult& result);

} // namespace stostab

#endif

#ifndef STOSTAB_REPORT_HPP
#define STOSTAB_REPORT_HPP

#include "stostab/quadratic_form.hpp"
#include "stostab/system.hpp"

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace stostab {

enum class Verdict { Stable, Unstable, Inconclusive, Boundary };

std::string to_string(Verdict v);

struct TraceEntry {
    std::string name;
    double value;
};

/// Threshold on a squared noise intensity (e^2, f^2 or sigma^2).
/// +infinity encodes "no constraint on the intensity".
struct BifurcationBound {
    enum class Kind { Sufficient, Exact };
    double bound = std::numeric_limits<double>::infinity();
    Kind kind = Kind::Sufficient;
    std::vector<TraceEntry> trace;
};

struct StabilityReport {
    Verdict verdict = Verdict::Inconclusive;
    StabilityNotion notion = StabilityNotion::MeanSquareExponential;
    std::string theorem;        ///< identifier of the applied criterion
    std::optional<BifurcationBound> bound;
    std::string attractor_note; ///< the with-probability-1 convergence set
    std::vector<std::string> notes;
};

} // namespace stostab

#endif

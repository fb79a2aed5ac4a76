#ifndef STOSTAB_ROOTS_HPP
#define STOSTAB_ROOTS_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace stostab {

struct DegenerateAllZero : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Real roots of a polynomial with descending coefficients (degree <= 3),
/// via companion-matrix eigenvalues. Roots with imaginary part above
/// 1e-9 * (1 + |root|) are discarded.
std::vector<double> real_roots(std::span<const double> coeffs_desc);

/// Smallest real root strictly greater than tol, or nullopt when none
/// exists (the theorems' "p1 is absent" clauses). Leading zeros are
/// trimmed; an all-zero coefficient list throws DegenerateAllZero.
std::optional<double> smallest_positive_root(std::span<const double> coeffs_desc,
                                             double tol = 1e-12);

} // namespace stostab

#endif

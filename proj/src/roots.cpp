#include "stostab/roots.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace stostab {

std::vector<double> real_roots(std::span<const double> coeffs_desc) {
    std::vector<double> c(coeffs_desc.begin(), coeffs_desc.end());
    while (!c.empty() && c.front() == 0.0) c.erase(c.begin());
    if (c.empty()) throw DegenerateAllZero("real_roots: all coefficients are zero");
    const int deg = static_cast<int>(c.size()) - 1;
    if (deg == 0) return {};
    if (deg > 3) throw std::invalid_argument("real_roots: degree > 3 unsupported");

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 0; i < deg; ++i) companion(0, i) = -c[i + 1] / c[0];
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;

    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, /*computeEigenvectors=*/false);
    std::vector<double> roots;
    for (int i = 0; i < deg; ++i) {
        const auto z = es.eigenvalues()(i);
        if (std::fabs(z.imag()) <= 1e-9 * (1.0 + std::fabs(z.real())))
            roots.push_back(z.real());
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::optional<double> smallest_positive_root(std::span<const double> coeffs_desc,
                                             double tol) {
    for (double r : real_roots(coeffs_desc))
        if (r > tol) return r;
    return std::nullopt;
}

} // namespace stostab

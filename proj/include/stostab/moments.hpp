#ifndef STOSTAB_MOMENTS_HPP
#define STOSTAB_MOMENTS_HPP

#include "stostab/report.hpp"
#include "stostab/system.hpp"

#include <Eigen/Core>

#include <vector>

namespace stostab {

/// Coefficient matrix of the closed ODE system for the second moments
/// (E x^2, E xy, E y^2) of an Ito system. Throws CalculusError for a
/// Stratonovich spec: convert first so the correction is explicit.
Eigen::Matrix3d moment_matrix(const SystemSpec& spec);

double spectral_abscissa(const Eigen::Matrix3d& M);

/// Exact mean-square verdict from the moment ODE: stable iff the
/// spectral abscissa is negative. Values within tol of zero are
/// reported as Boundary. Accepts either calculus (converts internally).
Verdict ms_stable_by_moments(const SystemSpec& spec, double tol = 1e-9);

struct MomentTrajectory {
    std::vector<double> times;
    std::vector<double> exx, exy, eyy;
};

/// Integrates the moment ODE with classical RK4 from initial moments
/// (x0^2, x0*y0, y0^2), recording n_points samples on [0, horizon].
MomentTrajectory second_moment_exact(const SystemSpec& spec, double x0, double y0,
                                     double horizon, int n_points = 200);

} // namespace stostab

#endif

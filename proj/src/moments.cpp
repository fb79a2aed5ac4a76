#include "stostab/moments.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stostab {

Eigen::Matrix3d moment_matrix(const SystemSpec& s) {
    if (s.calculus != Calculus::Ito)
        throw CalculusError("moment_matrix expects an Ito spec; convert first");
    Eigen::Matrix3d M;
    M << 2 * s.a + s.e * s.e, 2 * s.b + 2 * s.e * s.f, s.f * s.f,
         s.c + s.e * s.g, s.a + s.m + s.e * s.h + s.f * s.g, s.b + s.f * s.h,
         s.g * s.g, 2 * s.c + 2 * s.g * s.h, 2 * s.m + s.h * s.h;
    return M;
}

double spectral_abscissa(const Eigen::Matrix3d& M) {
    Eigen::EigenSolver<Eigen::Matrix3d> es(M, /*computeEigenvectors=*/false);
    double alpha = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i) alpha = std::max(alpha, es.eigenvalues()(i).real());
    return alpha;
}

Verdict ms_stable_by_moments(const SystemSpec& spec, double tol) {
    const double alpha = spectral_abscissa(moment_matrix(ensure_ito(spec)));
    if (std::fabs(alpha) <= tol) return Verdict::Boundary;
    return alpha < 0 ? Verdict::Stable : Verdict::Unstable;
}

MomentTrajectory second_moment_exact(const SystemSpec& spec, double x0, double y0,
                                     double horizon, int n_points) {
    if (horizon <= 0 || n_points < 2)
        throw std::invalid_argument("second_moment_exact: need horizon>0, n_points>=2");
    const Eigen::Matrix3d M = moment_matrix(ensure_ito(spec));
    const double norm = M.cwiseAbs().rowwise().sum().maxCoeff();
    const double h_target = std::min(1e-3, norm > 0 ? 0.01 / norm : 1e-3);

    MomentTrajectory out;
    out.times.reserve(n_points);
    Eigen::Vector3d v(x0 * x0, x0 * y0, y0 * y0);
    auto record = [&](double t) {
        out.times.push_back(t);
        out.exx.push_back(v(0));
        out.exy.push_back(v(1));
        out.eyy.push_back(v(2));
    };
    record(0.0);
    double t = 0.0;
    for (int i = 1; i < n_points; ++i) {
        const double t_next = horizon * i / (n_points - 1);
        const int steps = std::max(1, static_cast<int>(std::ceil((t_next - t) / h_target)));
        const double h = (t_next - t) / steps;
        for (int k = 0; k < steps; ++k) {
            const Eigen::Vector3d k1 = M * v;
            const Eigen::Vector3d k2 = M * (v + 0.5 * h * k1);
            const Eigen::Vector3d k3 = M * (v + 0.5 * h * k2);
            const Eigen::Vector3d k4 = M * (v + h * k3);
            v += (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4);
        }
        t = t_next;
        record(t);
    }
    return out;
}

} // namespace stostab

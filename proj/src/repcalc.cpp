#include "orbitquant/repcalc.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace orbitquant {

namespace {
void unpack(const RepChart& rc, const std::vector<double>& x, double& q, double& p,
            double& s, double& t) {
    if (int(x.size()) != rc.group_dim())
        throw std::invalid_argument("rep_apply: group element has wrong dimension");
    q = x[0];
    p = x[1];
    s = x[2];
    t = rc.kind == RepGroupKind::Center2 ? x[3] : 0.0;
}
} // namespace

CVec rep_apply(const RepChart& rc, const std::vector<double>& x, const CVec& phi) {
    double q, p, s, t;
    unpack(rc, x, q, p, s, t);
    const double lam = rc.lambda();
    CVec shifted = fractional_shift(rc.grid, phi, q);
    CVec out(rc.grid.m);
    const double central = s * rc.sigma + t * rc.tau;
    for (int k = 0; k < rc.grid.m; ++k) {
        double q0 = rc.grid.point(k);
        out[k] = std::exp(cd(0, central + (q0 * p + q * p / 2) * lam)) * shifted[k];
    }
    return out;
}

CMat rep_matrix(const RepChart& rc, const std::vector<double>& x) {
    double q, p, s, t;
    unpack(rc, x, q, p, s, t);
    const double lam = rc.lambda();
    CMat sh = shift_matrix(rc.grid, q);
    const double central = s * rc.sigma + t * rc.tau;
    for (int k = 0; k < rc.grid.m; ++k) {
        double q0 = rc.grid.point(k);
        cd phase = std::exp(cd(0, central + (q0 * p + q * p / 2) * lam));
        sh.row(k) *= phase;
    }
    return sh;
}

cd central_character(const RepChart& rc, const std::vector<double>& x_central) {
    if (rc.kind == RepGroupKind::Center2)
        return std::exp(cd(0, x_central[0] * rc.sigma + x_central[1] * rc.tau));
    return std::exp(cd(0, x_central[0] * rc.sigma));
}

CMat rep_sub_laplacian(const RepChart& rc) {
    const double lam = rc.lambda();
    CMat d2 = second_derivative_matrix(rc.grid);
    for (int k = 0; k < rc.grid.m; ++k) {
        double q0 = rc.grid.point(k);
        d2(k, k) -= lam * lam * q0 * q0;
    }
    return d2;
}

std::vector<double> harmonic_spectrum(const RepChart& rc, int count) {
    CMat h = -rep_sub_laplacian(rc);
    Eigen::SelfAdjointEigenSolver<CMat> es((h + h.adjoint()) * 0.5);
    std::vector<double> out;
    for (int i = 0; i < count && i < rc.grid.m; ++i) out.push_back(es.eigenvalues()(i));
    return out;
}

CMat rep_scaling(const RepChart& rc, double s) { return dilation_matrix(rc.grid, s); }

} // namespace orbitquant

#pragma once

// Uniform 1D grids, FFT helpers, band-limited (trigonometric) interpolation
// and dense grid operators.

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace orbitquant {

using cd = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

struct Grid1D {
    int m = 0;              // number of points (power of two recommended)
    double half_width = 0;  // points cover [-L, L)
    double h() const { return 2.0 * half_width / m; }
    double point(int k) const { return -half_width + k * h(); }
    // Signed mode frequency kappa_j so the interpolant is sum_j c_j e^{i kappa_j q}.
    double freq(int j) const {
        int js = j < m / 2 ? j : j - m;
        return js * M_PI / half_width;
    }
};

// In-place FFT (forward: sum_k f_k e^{-2 pi i jk/m}; inverse includes 1/m).
void fft(std::vector<cd>& data, bool inverse);

// Samples of the trigonometric interpolant of phi at q_k + a (band-limited shift).
CVec fractional_shift(const Grid1D& g, const CVec& phi, double a);

// Value of the trigonometric interpolant at an arbitrary point.
cd trig_eval(const Grid1D& g, const CVec& phi, double q);

// Matrix acting on sample vectors: (S phi)_k = interpolant of phi at q_k + a.
CMat shift_matrix(const Grid1D& g, double a);

// Spectral second-derivative matrix (F^* diag(-kappa^2) F), exact on band-limited data.
CMat second_derivative_matrix(const Grid1D& g);

// Composite dilation sampler: (U_s phi)(q) = sqrt(s) phi(s q), s > 0, by
// trigonometric interpolation (unitary in the continuum).
CMat dilation_matrix(const Grid1D& g, double s);

// Dense operator on grid samples. Continuum kernel K(q,q') = a(k,l)/h, so
// trace/HS norms of the integral operator coincide with the matrix ones.
struct GridOperator {
    Grid1D grid;
    CMat a;
    cd trace() const { return a.trace(); }
    double hs_norm() const { return a.norm(); }
    double op_norm() const;
    CVec apply(const CVec& phi) const { return a * phi; }
    cd kernel(int k, int l) const { return a(k, l) / grid.h(); }
};

} // namespace orbitquant

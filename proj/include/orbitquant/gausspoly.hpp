#pragma once

// Closed-form calculus on functions p(x) * prod_k exp(-a_k (x_k - c_k)^2 + i b_k x_k)
// with a multivariate complex-coefficient polynomial p and a_k > 0. The family
// is closed under partial derivatives, polynomial multiplication, products,
// and per-axis Fourier transforms, which makes it the exact test-symbol family
// used throughout the numerics and their oracles.

#include "orbitquant/poly.hpp"

#include <complex>
#include <vector>

namespace orbitquant {

using cd = std::complex<double>;
using PolyC = Poly<cd>;

struct GaussAxis {
    double a = 1;  // Gaussian width parameter, > 0
    double b = 0;  // modulation frequency
    double c = 0;  // center
};

struct GaussPoly {
    PolyC poly;                 // multivariate prefactor
    std::vector<GaussAxis> ax;  // one per variable

    int dim() const { return int(ax.size()); }
    bool is_zero() const { return poly.is_zero(); }

    cd eval(const std::vector<double>& x) const;

    GaussPoly scaled(cd s) const;
    GaussPoly dx(int k) const;                       // partial derivative
    GaussPoly mul_poly(const PolyC& q) const;        // multiply by polynomial
    GaussPoly reflect_axis(int k) const;             // x_k -> -x_k
    friend GaussPoly operator*(const GaussPoly& f, const GaussPoly& g); // same dim

    // Fourier transform in axis k: variable x_k is replaced by the frequency.
    //   forward (inverse=false): int e^{-i xi x_k} f dx_k
    //   inverse (inverse=true):  (2 pi)^{-1} int e^{+i xi x_k} f dx_k
    GaussPoly fourier_axis(int k, bool inverse) const;
    GaussPoly fourier_all(bool inverse) const;

    cd integral() const; // over all variables
};

// Convenience: standard normalized-free Gaussian bump on n variables.
GaussPoly gauss_nd(const std::vector<GaussAxis>& axes, cd scale = 1.0);

// Dense univariate polynomial helpers used by the transform (exposed for tests).
std::vector<cd> poly_affine_compose(const std::vector<cd>& p, cd alpha, cd beta);

} // namespace orbitquant

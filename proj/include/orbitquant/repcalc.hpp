#pragma once

// Concrete irreducible representations attached to the flat orbits of the
// catalog's 1D-predual-pair groups (the 4D two-parameter-center family and
// the Heisenberg group), realized on grid samples of L^2(R):
//   [pi(q,p,s,t) phi](q0) = e^{i [s sigma + t tau + (q0 p + q p / 2) lambda]} phi(q0 + q),
// lambda = sigma + delta tau (Heisenberg: no t, lambda = sigma).

#include "orbitquant/grid.hpp"

#include <vector>

namespace orbitquant {

enum class RepGroupKind { Center2, Heis };

struct RepChart {
    RepGroupKind kind = RepGroupKind::Center2;
    double delta = 1; // structure parameter of the 4D family
    double sigma = 1, tau = 0; // central parameters (Heis: sigma = lambda)
    Grid1D grid;

    double lambda() const {
        return kind == RepGroupKind::Center2 ? sigma + delta * tau : sigma;
    }
    int group_dim() const { return kind == RepGroupKind::Center2 ? 4 : 3; }
};

// Apply pi(x) to a sample vector; x = (q,p,s,t) or (q,p,s).
CVec rep_apply(const RepChart& rc, const std::vector<double>& x, const CVec& phi);

// Dense matrix of pi(x) on the grid.
CMat rep_matrix(const RepChart& rc, const std::vector<double>& x);

// pi on central elements is the scalar e^{i(s sigma + t tau)}.
cd central_character(const RepChart& rc, const std::vector<double>& x_central);

// Matrix of dpi(L) = d^2/dq0^2 - lambda^2 q0^2 for the flat sub-Laplacian
// L = X_Q^2 + X_P^2 candidate; spectrum of -dpi(L) is |lambda| (2k + 1).
CMat rep_sub_laplacian(const RepChart& rc);

// Lowest eigenvalues of -dpi(L), ascending.
std::vector<double> harmonic_spectrum(const RepChart& rc, int count);

// Scaling operator U_s = dilation_matrix(grid, s); intertwines the charts
// (sigma,tau) and (r sigma, r tau) with s = sqrt(r) (see tests).
CMat rep_scaling(const RepChart& rc, double s);

} // namespace orbitquant

#pragma once

// Coadjoint-orbit analysis: skew form of a functional, isotropy algebra,
// jump indices along the declared Jordan-Hoelder chain, flatness, Pfaffian
// and the derived densities.

#include "orbitquant/lie_algebra.hpp"

#include <optional>

namespace orbitquant {

// B_{ij} = <[E_i, E_j], U>, exact.
MatQ bil_matrix(const LieAlgebraSpec& g, const std::vector<Rat>& u);

// Pfaffian of an even-dimensional skew matrix by recursive expansion along the
// first row (supported up to 8x8). Pf^2 = det; Pf of the standard 2x2 block
// [[0, a], [-a, 0]] is a.
template <class C>
C pfaffian(const std::vector<std::vector<C>>& m) {
    const size_t n = m.size();
    if (n % 2 != 0) throw std::invalid_argument("pfaffian: odd dimension");
    if (n == 0) return RingOps<C>::one();
    if (n == 2) return m[0][1];
    // Pf(A) = sum_{j>0} (-1)^j A_{0j} Pf(A with rows/cols 0 and j removed)
    C acc = RingOps<C>::zero();
    for (size_t j = 1; j < n; ++j) {
        std::vector<size_t> keep;
        for (size_t t = 1; t < n; ++t)
            if (t != j) keep.push_back(t);
        std::vector<std::vector<C>> sub(n - 2, std::vector<C>(n - 2));
        for (size_t a = 0; a < keep.size(); ++a)
            for (size_t b = 0; b < keep.size(); ++b) sub[a][b] = m[keep[a]][keep[b]];
        C term = m[0][j] * pfaffian(sub);
        if (j % 2 == 0) acc = acc - term;
        else acc = acc + term;
    }
    return acc;
}

struct OrbitReport {
    std::vector<Rat> point;                   // the functional U
    MatQ bil;                                 // skew form
    std::vector<std::vector<Rat>> isotropy;   // basis of the isotropy algebra
    std::vector<std::vector<Rat>> center;     // basis of the center
    std::vector<int> jump_indices;            // 0-based positions in the JH chain order
    std::vector<int> predual_idx;             // same jumps as original-basis indices, ascending chain order
    int d = 0;                                // half the orbit dimension
    bool flat = false;                        // isotropy == center
    std::optional<Rat> pf;                    // Pfaffian of the predual block (flat case)
};

OrbitReport orbit_report(const LieAlgebraSpec& g, const std::vector<Rat>& u);

// Chart data for the flat-orbit family of a group whose center is spanned by
// basis vectors. Orbits are Omega_Z = {functionals equal to Z on the center},
// coordinatized by the dual coordinates on the predual.
struct FlatOrbitChart {
    LieAlgebraSpec g;
    std::vector<int> center_idx;  // basis positions spanning the center
    std::vector<int> predual_idx; // basis positions spanning the predual
    int d = 0;
    PolyQ pf_poly; // Pfaffian as polynomial in the full dual coordinates
                   // (depends only on the central ones; validated)

    double pf(const std::vector<double>& z_central) const; // z indexed like center_idx
    // Paper-normalized Plancherel density 2^d d! |Pf(Z)|.
    double plancherel_density(const std::vector<double>& z_central) const;
    // Canonical orbit-measure density ((2 pi)^d |Pf(Z)|)^{-1} (see ledger D-001).
    double orbit_measure_density(const std::vector<double>& z_central) const;
};

// Builds the chart; throws if the center is not spanned by basis vectors or if
// no functional in general position has a flat orbit.
FlatOrbitChart flat_orbit_chart(const LieAlgebraSpec& g);

// Symbolic Pfaffian of the predual block of bil at a symbolic functional
// (dual variable i per basis vector i).
PolyQ pfaffian_polynomial(const LieAlgebraSpec& g, const std::vector<int>& predual_idx);

} // namespace orbitquant

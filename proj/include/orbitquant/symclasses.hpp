#pragma once

// Symbol machinery on graded groups: weighted multi-indices, the dual basis
// of homogeneous Taylor polynomials, difference operators on symbols,
// homogeneous hypoelliptic (Rockland-type) operators with exact homogeneity
// certification, spectral weight operators, and sampled evaluation of the
// weighted symbol-class seminorms.

#include "orbitquant/gausspoly.hpp"
#include "orbitquant/lie_algebra.hpp"
#include "orbitquant/quantize.hpp"
#include "orbitquant/repcalc.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace orbitquant {

using MultiIndex = std::vector<unsigned>; // one entry per basis direction

long multi_order(const MultiIndex& a);                          // |a|
long hom_length(const LieAlgebraSpec& g, const MultiIndex& a);  // [a]

// All exponent vectors of weighted degree exactly d (also the multi-index
// set of homogeneous length d).
std::vector<MultiIndex> hom_multi_indices(const LieAlgebraSpec& g, long d);

PolyQ monomial(const MultiIndex& e);

// Ordered left-invariant derivative X^beta = X_1^{b_1} ... X_n^{b_n}, the
// rightmost factor acting first.
PolyQ apply_xbeta(const InvariantFields& flds, const MultiIndex& beta,
                  const PolyQ& p);

// q_alpha: the unique polynomial, homogeneous of weighted degree [alpha],
// with (X^beta q_alpha)(e) = delta_{alpha,beta} for all [beta] = [alpha].
// Returns every alpha with [alpha] <= max_hom_degree. Throws if any of the
// (square) linear systems is singular.
std::map<MultiIndex, PolyQ> taylor_polynomials(const LieAlgebraSpec& g,
                                               long max_hom_degree);

// q(x^{-1}) = q(-x) in exponential coordinates; n = variable count.
PolyQ reflect(const PolyQ& q, int n);
PolyC to_polyc(const PolyQ& q);

// Difference operator on symbols: Gamma_q B = F(q . F^{-1} B), with the
// Euclidean transforms between the group chart and its dual.
//   sampled: B given on dual_grid(xgrid), returned on the same layout;
//   closed form: for Gaussian-polynomial symbols.
std::vector<cd> gamma_diff(const GridND& xgrid, const PolyQ& q,
                           const std::vector<cd>& b);
GaussPoly gamma_diff_closed(const PolyQ& q, const GaussPoly& b);

// Homogeneous hypoelliptic operator sum_j sign_j X_j^{power_j}.
struct RocklandTerm {
    int index = 0; // basis direction
    int power = 0;
    int sign = 1;
};
struct RocklandSpec {
    std::vector<RocklandTerm> terms;
    long order = 0;              // homogeneity order
    std::vector<int> generators; // directions that must Lie-generate g
};

// Catalog construction (abelian, heis1, center2, dim5a, dim5b). Validates
// that the generating directions Lie-generate the algebra; throws otherwise.
RocklandSpec rockland_build(const LieAlgebraSpec& g);

PolyQ rockland_apply(const LieAlgebraSpec& g, const RocklandSpec& rs,
                     const PolyQ& f);

// Exact check of R(f . dil_r) . dil_{1/r} = r^order R f on every monomial of
// weighted degree <= max_deg (rational r > 0). Returns the first witness
// exponent on failure, nullopt on success. `order` is passed explicitly so a
// wrong claimed order produces a witness.
std::optional<MultiIndex> homogeneity_violation(const LieAlgebraSpec& g,
                                                const RocklandSpec& rs,
                                                const Rat& r, long order,
                                                long max_deg);

// Spectral weight T^s = (I + A)^{s/2} with A = -dpi(sub-Laplacian); positive
// self-adjoint, computed by eigendecomposition.
CMat represented_t(const RepChart& rc, double s);

// Restrict a GaussPoly to fixed values of its trailing axes (orbit chart of
// a symbol on the full dual: first two axes vary, the rest are frozen).
GaussPoly fix_trailing_axes(const GaussPoly& f, const std::vector<double>& tail);

// Apply the left-invariant field X_j to a Gaussian-polynomial function.
GaussPoly apply_field(const InvariantFields& flds, int j, const GaussPoly& f);

struct SeminormParams {
    double m = 0, rho = 1, delta = 0, gamma = 0;
    MultiIndex alpha, beta; // weighted lengths taken w.r.t. the group grading
};

// Sampled lower bound of the weighted symbol-class seminorm
//   sup_(x,Z) || T^{-m + rho[alpha] - delta[beta] + gamma}
//               Ped_Z[ (X^beta_x Gamma^alpha f)(x, .)|_orbit ] T^{-gamma} ||
// for a separable symbol f(x, XX) = a(x) B(XX) on the 4D two-center group.
// The sup is over the finite sample set only (documented lower bound).
double seminorm_estimate(const LieAlgebraSpec& g4, double delta_group,
                         const GaussPoly& a_x, const GaussPoly& b_xx,
                         const SeminormParams& prm,
                         const std::vector<std::vector<double>>& x_samples,
                         const std::vector<std::pair<double, double>>& z_nodes,
                         const Grid1D& rep_grid);

} // namespace orbitquant

#pragma once

// Numerical quantization layer: sampled Euclidean Fourier transforms, the
// lambda-Weyl / orbit-adapted calculus (quantize, dequantize, sharp product),
// the operator-valued group Fourier transform and its Plancherel inversion,
// and the two operator calculi with scalar symbols on the dual of the Lie
// algebra and operator-valued symbols over the central dual chart.
//
// Normalization scheme (one global convention, fixed so that every round-trip
// identity is exact in the continuum; the derivation lives in the project
// notes):
//   - Fourier transform on R^n: forward unnormalized e^{-i<x|xi>} dx,
//     inverse carries (2 pi)^{-n}.
//   - orbit measure on a flat orbit:   d gamma = ((2 pi)^d |Pf|)^{-1} drho dtheta
//   - predual measure:                 d lam   = (2 pi)^{-d} |Pf| dX
//   - Plancherel measure:              d mu    = (2 pi)^{d-n} |Pf| dZ
// where n = dim g and 2d = dim of the flat orbits (d = 1 for the catalog
// groups carrying representations).

#include "orbitquant/gausspoly.hpp"
#include "orbitquant/lie_algebra.hpp"
#include "orbitquant/repcalc.hpp"

#include <functional>
#include <map>
#include <vector>

namespace orbitquant {

// ---------------------------------------------------------------------------
// Sampled tensor-product grids and the Euclidean Fourier transform
// ---------------------------------------------------------------------------

struct GridND {
    std::vector<Grid1D> axes;
    int dim() const { return int(axes.size()); }
    long total() const;
    double cell() const; // product of the per-axis spacings
    std::vector<double> point(long flat) const;
    long flat_index(const std::vector<int>& idx) const;
};

// Per-axis dual grid: same point count, half-width pi / h.
GridND dual_grid(const GridND& g);
Grid1D dual_axis(const Grid1D& g);

// Forward: (F h)(xi) = sum_x h(x) e^{-i<x|xi>} cell, sampled on dual_grid(g).
// Inverse: input sampled on dual_grid(g), output on g, with (2 pi)^{-n}.
std::vector<cd> fourier_g_gstar(const GridND& g, const std::vector<cd>& h,
                                bool inverse);

// ---------------------------------------------------------------------------
// lambda-Weyl calculus on the line / orbit-adapted quantization
// ---------------------------------------------------------------------------

using Symbol2 = std::function<cd(double, double)>; // orbit symbol (rho, theta)

// Operator with kernel K(q0,q) = (2 pi)^{-1} int e^{i (q0-q) eta}
// psi(eta, lambda (q0+q)/2) deta, the eta-integral discretized on the grid
// dual to g (so the constant symbol gives exactly the identity matrix).
// Optional overrides select a different eta-grid.
GridOperator weyl_lambda(const Grid1D& g, double lambda, const Symbol2& psi,
                         int m_eta = 0, double l_eta = 0);

// Orbit-adapted quantization on a flat chart: equal to weyl_lambda on the
// chart's grid with lambda = rc.lambda(). Trace = integral of the symbol
// against d gamma = (2 pi |lambda|)^{-1} drho dtheta.
GridOperator pedersen_quantize(const RepChart& rc, const Symbol2& psi);

// Tr[S pi(q, p, 0, ...)^*] for q an exact multiple of the grid spacing
// (q = rc.grid.point(j)); O(M) per evaluation.
cd rep_trace_pairing(const RepChart& rc, const CMat& s_mat, int j, double p);

// Sampled dequantized symbol: Psi(rho, theta) =
//   sum_{q,p} e^{i(q rho + p theta)} Tr[S pi(q,p)^*] (2 pi)^{-1} |lambda| dq dp,
// q over the chart grid points, p over gp. Row i = rho node, column j = theta.
CMat pedersen_dequantize(const RepChart& rc, const CMat& s_mat,
                         const Grid1D& gp, const Grid1D& grho,
                         const Grid1D& gtheta);
cd pedersen_dequantize_at(const RepChart& rc, const CMat& s_mat,
                          const Grid1D& gp, double rho, double theta);

// Symbol of Ped(a) Ped(b), sampled like pedersen_dequantize.
CMat sharp_product(const RepChart& rc, const Symbol2& a, const Symbol2& b,
                   const Grid1D& gp, const Grid1D& grho, const Grid1D& gtheta);

// ---------------------------------------------------------------------------
// Group Fourier transform for the representation-bearing catalog groups
// ---------------------------------------------------------------------------

// Matrix of int u(x) pi(x)^* dx, computed from the closed-form partial Fourier
// transform of u in all non-first variables, evaluated along the kernel shear
// (q0 - q, lambda (q0+q)/2, central frequencies). u has rc.group_dim() axes.
GridOperator group_fourier(const RepChart& rc, const GaussPoly& u);

// Tr[pi(z) S] for a general group element z (uses the circulant structure of
// the band-limited shift; O(M^2)).
cd trace_rep_times(const RepChart& rc, const std::vector<double>& z,
                   const CMat& s_mat);

// Tensor grid over the central dual chart (sigma, tau) of the 4D group, with
// a Pfaffian margin: nodes with |sigma + delta tau| < pf_margin are skipped.
struct ZGrid {
    Grid1D gs, gt;
    double pf_margin = 0.25;
};

// Operator field over the central dual chart.
using OperatorField = std::function<CMat(double sigma, double tau)>;

// u(x) = sum_nodes Tr[b(Z) pi_Z(x)] (2 pi)^{-3} |sigma + delta tau| dZ.
cd inverse_group_fourier(const ZGrid& zg, double delta, const Grid1D& rep_grid,
                         const OperatorField& b, const std::vector<double>& x);

// sum_nodes ||b(Z)||_HS^2 (2 pi)^{-3} |sigma + delta tau| dZ  (so that it
// equals ||u||_{L^2}^2 when b is the group Fourier transform of u).
double plancherel_norm2(const ZGrid& zg, double delta, const OperatorField& b);

// Zero the periodic corner blocks of a sampled kernel matrix (wrapped
// separation beyond half the window); for a resolved kernel they are
// sampling artifacts, not data.
CMat principal_band(CMat a);

// Operator section obtained by quantizing, per central node, the restriction
// of a separable symbol B(rho,theta,sigma,tau) = B1(rho,theta) B2(sigma,tau)
// to the flat orbit. The quantized factor depends on the node only through
// lambda = sigma + delta tau, so matrices are cached per lambda value.
class SeparableSection {
  public:
    SeparableSection(Symbol2 orbit_factor, Symbol2 central_factor, double delta,
                     Grid1D rep_grid);
    CMat operator()(double sigma, double tau) const;
    // The cached quantized orbit factor alone.
    const CMat& orbit_op(double lambda) const;

  private:
    Symbol2 b1_, b2_;
    double delta_;
    Grid1D grid_;
    mutable std::map<long long, CMat> cache_; // keyed by rounded lambda
};

// Non-separable variant at a single node (no caching).
CMat w_transform_at(const std::function<cd(double, double, double, double)>& B,
                    double delta, const Grid1D& rep_grid, double sigma,
                    double tau);

// ---------------------------------------------------------------------------
// Operator calculi on the group (kernels sampled at requested points, D2)
// ---------------------------------------------------------------------------

// Scalar symbol f(x, .) on the dual of the Lie algebra, closed form per x.
using GStarSymbol = std::function<GaussPoly(const std::vector<double>& x)>;

// Kernel K(x,y) of the scalar-symbol calculus:
//   K(x,y) = (2 pi)^{-n} int e^{i<log(y^{-1} x)|XX>} f(x,XX) dXX
// evaluated in closed form at the exact group logarithm log(y^{-1} x).
cd op_g_gstar_kernel(const LieAlgebraSpec& g, const GStarSymbol& f,
                     const std::vector<double>& x, const std::vector<double>& y);

// Apply the scalar-symbol operator to u sampled on a group grid:
//   [Op(f) u](x) = sum_y K(x,y) u(y) cell.
cd op_g_gstar_apply(const LieAlgebraSpec& g, const GStarSymbol& f,
                    const std::vector<double>& x, const GridND& ygrid,
                    const std::vector<cd>& u);

// Operator-valued symbol Sigma(x, Z) over the central dual chart.
using OperatorSymbol =
    std::function<CMat(const std::vector<double>& x, double sigma, double tau)>;

// Kernel of the operator-symbol calculus on the 4D group:
//   K(x,y) = sum_nodes Tr[pi_Z(y^{-1} x) Sigma(x,Z)] (2 pi)^{-3} |Pf(Z)| dZ.
cd op_group_kernel(const ZGrid& zg, double delta, const Grid1D& rep_grid,
                   const LieAlgebraSpec& g, const OperatorSymbol& sigma,
                   const std::vector<double>& x, const std::vector<double>& y);

// Right convolution [u * w](x) = sum_y u(y) w(y^{-1} x) cell by direct
// quadrature over the group grid; w given as a callback.
using GroupFunction = std::function<cd(const std::vector<double>&)>;
cd conv_right(const LieAlgebraSpec& g, const GridND& ygrid,
              const std::vector<cd>& u, const GroupFunction& w,
              const std::vector<double>& x);

} // namespace orbitquant

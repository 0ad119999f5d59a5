#pragma once

// Nilpotent Lie algebras given by rational structure constants in a fixed
// basis, viewed in exponential coordinates (exp = log = identity on R^n).
// Group multiplication is the Baker-Campbell-Hausdorff series, which
// terminates at the nilpotency step.

#include "orbitquant/linalg_exact.hpp"
#include "orbitquant/poly.hpp"
#include "orbitquant/rational.hpp"

#include <string>
#include <vector>

namespace orbitquant {

struct LieAlgebraSpec {
    std::string name;
    int dim = 0;
    int step = 1; // declared nilpotency step (validated)
    // Dense structure constants: c[i][j][k] with [E_i, E_j] = sum_k c[i][j][k] E_k.
    std::vector<std::vector<std::vector<Rat>>> c;
    std::vector<int> weights;     // dilation weights (empty if ungraded)
    std::vector<int> jh_order;    // 0-based permutation: jh_order[0] spans the first ideal
    std::vector<std::string> labels;

    void init_zero(int n) {
        dim = n;
        c.assign(n, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n, Rat(0))));
    }
    // Set [E_i, E_j] += v E_k (and the antisymmetric counterpart), 0-based.
    void add_bracket(int i, int j, int k, const Rat& v) {
        c[i][j][k] += v;
        c[j][i][k] -= v;
    }
};

// Scalar-ring hooks so group/algebra operations run over exact rationals,
// doubles, or polynomial rings alike.
template <class T> struct RingOps {
    static T zero() { return T(0); }
    static T one() { return T(1); }
    static T from_rat(const Rat& r) { return T(r); }
    static bool is_zero(const T& t) { return t == T(0); }
};
template <> struct RingOps<double> {
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_rat(const Rat& r) { return to_double(r); }
    static bool is_zero(const double& t) { return t == 0.0; }
};
template <> struct RingOps<PolyQ> {
    static PolyQ zero() { return PolyQ(); }
    static PolyQ one() { return PolyQ::constant(Rat(1)); }
    static PolyQ from_rat(const Rat& r) { return PolyQ::constant(r); }
    static bool is_zero(const PolyQ& t) { return t.is_zero(); }
};

template <class T>
std::vector<T> lie_bracket(const LieAlgebraSpec& g, const std::vector<T>& x,
                           const std::vector<T>& y) {
    const int n = g.dim;
    std::vector<T> out(n, RingOps<T>::zero());
    for (int i = 0; i < n; ++i) {
        if (RingOps<T>::is_zero(x[i])) continue;
        for (int j = 0; j < n; ++j) {
            if (RingOps<T>::is_zero(y[j])) continue;
            T prod = x[i] * y[j];
            for (int k = 0; k < n; ++k) {
                const Rat& cc = g.c[i][j][k];
                if (cc == 0) continue;
                out[k] += prod * RingOps<T>::from_rat(cc);
            }
        }
    }
    return out;
}

// One precomputed term of the Dynkin BCH series: a word over {0 = X, 1 = Y}
// evaluated as the right-nested bracket [w0,[w1,[...,[w_{m-2},w_{m-1}]...]]].
struct BchTerm {
    std::vector<uint8_t> word;
    Rat coeff;
};

// Terms of total degree <= depth (cached; depth <= 6 supported).
const std::vector<BchTerm>& bch_terms(int depth);

template <class T>
std::vector<T> bch(const LieAlgebraSpec& g, const std::vector<T>& x,
                   const std::vector<T>& y, int depth = -1) {
    if (depth < 0) depth = g.step;
    const int n = g.dim;
    std::vector<T> out(n, RingOps<T>::zero());
    for (int i = 0; i < n; ++i) out[i] = x[i] + y[i];
    for (const BchTerm& t : bch_terms(depth)) {
        if (t.word.size() < 2) continue;
        const auto& last = t.word.back() ? y : x;
        std::vector<T> acc = last;
        bool dead = false;
        for (size_t p = t.word.size() - 1; p-- > 0;) {
            acc = lie_bracket(g, t.word[p] ? y : x, acc);
            bool all_zero = true;
            for (const T& v : acc)
                if (!RingOps<T>::is_zero(v)) { all_zero = false; break; }
            if (all_zero) { dead = true; break; }
        }
        if (dead) continue;
        for (int k = 0; k < n; ++k)
            out[k] += acc[k] * RingOps<T>::from_rat(t.coeff);
    }
    return out;
}

template <class T>
std::vector<T> group_inverse(const std::vector<T>& x) {
    std::vector<T> out = x;
    for (T& v : out) v = RingOps<T>::zero() - v;
    return out;
}

// Matrix of ad_x in the basis: (ad_x)_{k j} with ad_x E_j = sum_k (.)_{kj} E_k.
MatQ ad_matrix(const LieAlgebraSpec& g, const std::vector<Rat>& x);

// Ad_{exp x} = exp(ad_x), exact (ad_x is nilpotent).
MatQ adjoint_matrix(const LieAlgebraSpec& g, const std::vector<Rat>& x);

// Coadjoint action on functionals: (Ad*_x U)(Y) = U(Ad_{x^{-1}} Y).
std::vector<Rat> coadjoint(const LieAlgebraSpec& g, const std::vector<Rat>& x,
                           const std::vector<Rat>& u);
std::vector<double> coadjoint_d(const LieAlgebraSpec& g, const std::vector<double>& x,
                                const std::vector<double>& u);

// Anisotropic dilation dil_r(x)_j = r^{w_j} x_j. Requires weights.
std::vector<Rat> dilate(const LieAlgebraSpec& g, const Rat& r, const std::vector<Rat>& x);
std::vector<double> dilate_d(const LieAlgebraSpec& g, double r, const std::vector<double>& x);

// Basis of the center, exact.
std::vector<std::vector<Rat>> center_basis(const LieAlgebraSpec& g);

// Left-invariant vector fields X_j = sum_k a_{jk}(x) d/dx_k with
// a_{jk}(x) = d/dt (x * t E_j)_k |_{t=0}; coefficients are polynomials in x.
struct InvariantFields {
    int dim = 0;
    std::vector<std::vector<PolyQ>> a; // a[j][k]
    PolyQ apply(int j, const PolyQ& p) const;
};
InvariantFields left_invariant_fields(const LieAlgebraSpec& g);

// Full validation; returns human-readable problems (empty = valid).
std::vector<std::string> validate(const LieAlgebraSpec& g);

// Computed nilpotency step from the descending central series.
int computed_step(const LieAlgebraSpec& g);

// JSON group-definition files (brackets as [i, j, k, "p/q"], 1-based indices).
LieAlgebraSpec load_group_json(const std::string& text);
std::string save_group_json(const LieAlgebraSpec& g);
LieAlgebraSpec load_group_file(const std::string& path);

} // namespace orbitquant

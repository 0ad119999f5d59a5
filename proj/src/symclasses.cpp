#include "orbitquant/symclasses.hpp"

#include "orbitquant/linalg_exact.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orbitquant {

long multi_order(const MultiIndex& a) {
    long s = 0;
    for (unsigned v : a) s += v;
    return s;
}

long hom_length(const LieAlgebraSpec& g, const MultiIndex& a) {
    long s = 0;
    for (size_t j = 0; j < a.size(); ++j) s += long(a[j]) * g.weights[j];
    return s;
}

namespace {

void enumerate(const LieAlgebraSpec& g, long d, size_t j, MultiIndex& cur,
               std::vector<MultiIndex>& out) {
    if (j + 1 == cur.size()) {
        int w = g.weights[j];
        if (d % w == 0) {
            cur[j] = unsigned(d / w);
            out.push_back(cur);
        }
        return;
    }
    int w = g.weights[j];
    for (long k = 0; k * w <= d; ++k) {
        cur[j] = unsigned(k);
        enumerate(g, d - k * w, j + 1, cur, out);
    }
    cur[j] = 0;
}

} // namespace

std::vector<MultiIndex> hom_multi_indices(const LieAlgebraSpec& g, long d) {
    std::vector<MultiIndex> out;
    MultiIndex cur(g.dim, 0);
    if (d == 0) {
        out.push_back(cur);
        return out;
    }
    enumerate(g, d, 0, cur, out);
    return out;
}

PolyQ monomial(const MultiIndex& e) {
    PolyQ p;
    p.add_term(Expo(e.begin(), e.end()), Rat(1));
    return p;
}

PolyQ apply_xbeta(const InvariantFields& flds, const MultiIndex& beta,
                  const PolyQ& p) {
    PolyQ r = p;
    for (int j = int(beta.size()) - 1; j >= 0; --j)
        for (unsigned k = 0; k < beta[j]; ++k) r = flds.apply(j, r);
    return r;
}

std::map<MultiIndex, PolyQ> taylor_polynomials(const LieAlgebraSpec& g,
                                               long max_hom_degree) {
    InvariantFields flds = left_invariant_fields(g);
    std::map<MultiIndex, PolyQ> out;
    for (long d = 0; d <= max_hom_degree; ++d) {
        std::vector<MultiIndex> idx = hom_multi_indices(g, d);
        if (idx.empty()) continue;
        const size_t n = idx.size();
        // rows: beta, cols: monomial exponent e; entry (X^beta x^e)(0)
        MatQ mat(n, std::vector<Rat>(n, Rat(0)));
        for (size_t col = 0; col < n; ++col) {
            PolyQ mono = monomial(idx[col]);
            for (size_t row = 0; row < n; ++row)
                mat[row][col] = apply_xbeta(flds, idx[row], mono).coefficient({});
        }
        for (size_t a = 0; a < n; ++a) {
            std::vector<Rat> rhs(n, Rat(0));
            rhs[a] = 1;
            auto c = solve(mat, rhs);
            if (!c) throw std::runtime_error("taylor_polynomials: singular system");
            PolyQ q;
            for (size_t col = 0; col < n; ++col)
                if (!((*c)[col] == Rat(0)))
                    q.add_term(Expo(idx[col].begin(), idx[col].end()), (*c)[col]);
            out.emplace(idx[a], q);
        }
        // square systems with a found solution per unit vector are
        // nonsingular iff the rank is full; verify once per degree
        if (rank(mat) != n)
            throw std::runtime_error("taylor_polynomials: singular system");
    }
    return out;
}

PolyQ reflect(const PolyQ& q, int n) {
    PolyQ r = q;
    for (int i = 0; i < n; ++i) r = r.scale_variable(unsigned(i), Rat(-1));
    return r;
}

PolyC to_polyc(const PolyQ& q) {
    PolyC r;
    for (const auto& [e, c] : q.terms) r.add_term(e, cd(to_double(c), 0));
    return r;
}

std::vector<cd> gamma_diff(const GridND& xgrid, const PolyQ& q,
                           const std::vector<cd>& b) {
    std::vector<cd> u = fourier_g_gstar(xgrid, b, true);
    for (long i = 0; i < xgrid.total(); ++i)
        u[i] *= poly_eval_double(q, xgrid.point(i));
    return fourier_g_gstar(xgrid, u, false);
}

GaussPoly gamma_diff_closed(const PolyQ& q, const GaussPoly& b) {
    return b.fourier_all(true).mul_poly(to_polyc(q)).fourier_all(false);
}

// ---------------------------------------------------------------------------
// Rockland operators
// ---------------------------------------------------------------------------

namespace {

// Saturate the span of the given directions under brackets and return it
// (exact rational arithmetic).
MatQ bracket_span(const LieAlgebraSpec& g, const std::vector<int>& gens) {
    std::vector<std::vector<Rat>> span;
    for (int j : gens) {
        std::vector<Rat> v(g.dim, Rat(0));
        v[j] = 1;
        span.push_back(v);
    }
    auto bracket = [&](const std::vector<Rat>& x, const std::vector<Rat>& y) {
        std::vector<Rat> z(g.dim, Rat(0));
        for (int i = 0; i < g.dim; ++i)
            for (int j = 0; j < g.dim; ++j) {
                if (x[i] == Rat(0) || y[j] == Rat(0)) continue;
                for (int k = 0; k < g.dim; ++k) z[k] += x[i] * y[j] * g.c[i][j][k];
            }
        return z;
    };
    size_t r = rank(MatQ(span.begin(), span.end()));
    while (true) {
        size_t old = span.size();
        std::vector<std::vector<Rat>> next = span;
        for (size_t i = 0; i < old; ++i)
            for (size_t j = i + 1; j < old; ++j) next.push_back(bracket(span[i], span[j]));
        size_t nr = rank(MatQ(next.begin(), next.end()));
        if (nr == size_t(g.dim) || nr == r) return next;
        r = nr;
        span = std::move(next);
    }
}

// The operator directions must Lie-generate the algebra, except that central
// directions may be missed: in the representations attached to flat coadjoint
// orbits the center acts by nonzero scalars, so the represented operator is
// an anharmonic oscillator and injectivity is unaffected.
bool generates_mod_center(const LieAlgebraSpec& g, const std::vector<int>& gens) {
    MatQ span = bracket_span(g, gens);
    if (rank(span) == size_t(g.dim)) return true;
    for (int i = 0; i < g.dim; ++i) {
        bool central = true;
        for (int j = 0; j < g.dim && central; ++j)
            for (int k = 0; k < g.dim; ++k)
                if (g.c[i][j][k] != Rat(0)) { central = false; break; }
        if (!central) continue;
        std::vector<Rat> v(g.dim, Rat(0));
        v[i] = 1;
        span.push_back(v);
    }
    return rank(span) == size_t(g.dim);
}

} // namespace

RocklandSpec rockland_build(const LieAlgebraSpec& g) {
    RocklandSpec rs;
    std::string base = g.name.substr(0, 7);
    if (g.name == "heis1" || g.name == "center2" || base == "abelian") {
        // negative of the canonical (sub-)Laplacian on the first layer
        rs.order = 2;
        for (int j = 0; j < g.dim; ++j)
            if (g.weights[j] == 1) {
                rs.terms.push_back({j, 2, -1});
                rs.generators.push_back(j);
            }
    } else if (g.name == "dim5a") {
        // order 12; directions E3 (weight 2), E4, E5 (weight 1)
        rs.order = 12;
        rs.terms = {{2, 6, -1}, {3, 12, 1}, {4, 12, 1}};
        rs.generators = {2, 3, 4};
    } else if (g.name == "dim5b") {
        // order 120; directions E4 (weight 2), E5 (weight 1)
        rs.order = 120;
        rs.terms = {{3, 60, 1}, {4, 120, 1}};
        rs.generators = {3, 4};
    } else {
        throw std::invalid_argument("rockland_build: no construction for " + g.name);
    }
    for (const auto& t : rs.terms)
        if (long(t.power) * g.weights[t.index] != rs.order)
            throw std::logic_error("rockland_build: inhomogeneous term");
    if (!generates_mod_center(g, rs.generators))
        throw std::invalid_argument("rockland_build: directions do not Lie-generate");
    return rs;
}

PolyQ rockland_apply(const LieAlgebraSpec& g, const RocklandSpec& rs,
                     const PolyQ& f) {
    InvariantFields flds = left_invariant_fields(g);
    PolyQ acc;
    for (const auto& t : rs.terms) {
        PolyQ p = f;
        for (int k = 0; k < t.power && !p.is_zero(); ++k) p = flds.apply(t.index, p);
        acc += p.scaled(Rat(t.sign));
    }
    return acc;
}

namespace {

Rat rat_pow(const Rat& r, long n) {
    Rat acc(1), base = r;
    long e = n;
    if (e < 0) { base = Rat(1) / base; e = -e; }
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

PolyQ dilated(const LieAlgebraSpec& g, const PolyQ& f, const Rat& r) {
    PolyQ out = f;
    for (int i = 0; i < g.dim; ++i)
        out = out.scale_variable(unsigned(i), rat_pow(r, g.weights[i]));
    return out;
}

} // namespace

std::optional<MultiIndex> homogeneity_violation(const LieAlgebraSpec& g,
                                                const RocklandSpec& rs,
                                                const Rat& r, long order,
                                                long max_deg) {
    Rat factor = rat_pow(r, order);
    for (long d = 0; d <= max_deg; ++d)
        for (const MultiIndex& e : hom_multi_indices(g, d)) {
            PolyQ f = monomial(e);
            PolyQ lhs = dilated(g, rockland_apply(g, rs, dilated(g, f, r)),
                                Rat(1) / r);
            PolyQ rhs = rockland_apply(g, rs, f).scaled(factor);
            if (!(lhs == rhs)) return e;
        }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Spectral weights and seminorms
// ---------------------------------------------------------------------------

CMat represented_t(const RepChart& rc, double s) {
    CMat a = -rep_sub_laplacian(rc);
    CMat herm = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<CMat> es(herm);
    Eigen::VectorXd powers = (es.eigenvalues().array() + 1.0).pow(s / 2.0);
    return es.eigenvectors() * powers.asDiagonal().toDenseMatrix().cast<cd>() *
           es.eigenvectors().adjoint();
}

GaussPoly fix_trailing_axes(const GaussPoly& f, const std::vector<double>& tail) {
    const int keep = f.dim() - int(tail.size());
    if (keep < 0) throw std::invalid_argument("fix_trailing_axes: too many values");
    GaussPoly out;
    out.ax.assign(f.ax.begin(), f.ax.begin() + keep);
    cd scalar = 1.0;
    for (size_t t = 0; t < tail.size(); ++t) {
        const GaussAxis& ax = f.ax[keep + t];
        double d = tail[t] - ax.c;
        scalar *= std::exp(cd(-ax.a * d * d, ax.b * tail[t]));
    }
    for (const auto& [e, c] : f.poly.terms) {
        cd coef = c * scalar;
        Expo head(e.begin(), e.begin() + std::min<size_t>(e.size(), size_t(keep)));
        for (size_t i = size_t(keep); i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) coef *= tail[i - keep];
        out.poly.add_term(head, coef);
    }
    return out;
}

GaussPoly apply_field(const InvariantFields& flds, int j, const GaussPoly& f) {
    GaussPoly acc;
    acc.ax = f.ax;
    for (int k = 0; k < flds.dim; ++k) {
        const PolyQ& coeff = flds.a[j][k];
        if (coeff.is_zero()) continue;
        GaussPoly term = f.dx(k).mul_poly(to_polyc(coeff));
        acc.poly += term.poly;
    }
    return acc;
}

double seminorm_estimate(const LieAlgebraSpec& g4, double delta_group,
                         const GaussPoly& a_x, const GaussPoly& b_xx,
                         const SeminormParams& prm,
                         const std::vector<std::vector<double>>& x_samples,
                         const std::vector<std::pair<double, double>>& z_nodes,
                         const Grid1D& rep_grid) {
    if (g4.dim != 4 || a_x.dim() != 4 || b_xx.dim() != 4)
        throw std::invalid_argument("seminorm_estimate: expects the 4D group");
    InvariantFields flds = left_invariant_fields(g4);

    // x-side: X^beta a (ordered left-invariant derivatives)
    GaussPoly xa = a_x;
    for (int j = 3; j >= 0; --j)
        for (unsigned k = 0; j < int(prm.beta.size()) && k < prm.beta[j]; ++k)
            xa = apply_field(flds, j, xa);

    // symbol side: Gamma^alpha B = Gamma_{q_alpha(x^{-1})} B
    GaussPoly gb = b_xx;
    long la = 0;
    if (multi_order(prm.alpha) > 0) {
        la = hom_length(g4, prm.alpha);
        auto qs = taylor_polynomials(g4, la);
        auto it = qs.find(prm.alpha);
        if (it == qs.end())
            throw std::invalid_argument("seminorm_estimate: bad alpha");
        gb = gamma_diff_closed(reflect(it->second, 4), b_xx);
    }
    long lb = prm.beta.empty() ? 0 : hom_length(g4, prm.beta);
    const double p_left = -prm.m + prm.rho * double(la) - prm.delta * double(lb) +
                          prm.gamma;
    const double p_right = -prm.gamma;

    double best = 0;
    for (const auto& [sig, tau] : z_nodes) {
        double lambda = sig + delta_group * tau;
        GaussPoly orbit = fix_trailing_axes(gb, {sig, tau});
        CMat ped = weyl_lambda(rep_grid, lambda, [&](double r, double t) {
                       return orbit.eval({r, t});
                   }).a;
        RepChart rc{RepGroupKind::Center2, delta_group, sig, tau, rep_grid};
        CMat weighted = represented_t(rc, p_left) * ped * represented_t(rc, p_right);
        double wnorm = weighted.jacobiSvd().singularValues()(0);
        for (const auto& x : x_samples)
            best = std::max(best, std::abs(xa.eval(x)) * wnorm);
    }
    return best;
}

} // namespace orbitquant

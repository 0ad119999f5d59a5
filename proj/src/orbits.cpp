#include "orbitquant/orbits.hpp"

#include <cmath>

namespace orbitquant {

MatQ bil_matrix(const LieAlgebraSpec& g, const std::vector<Rat>& u) {
    const int n = g.dim;
    MatQ b(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (g.c[i][j][k] != 0) b[i][j] += g.c[i][j][k] * u[k];
    return b;
}

OrbitReport orbit_report(const LieAlgebraSpec& g, const std::vector<Rat>& u) {
    if (g.jh_order.empty())
        throw std::logic_error("orbit_report: spec lacks a Jordan-Hoelder order");
    const int n = g.dim;
    OrbitReport r;
    r.point = u;
    r.bil = bil_matrix(g, u);
    r.isotropy = nullspace(r.bil);
    r.center = center_basis(g);
    r.flat = same_span(r.isotropy, r.center);

    // Jump indices: chain position m is a jump if E_{jh[m]} does not lie in
    // span(first m chain vectors) + isotropy.
    MatQ accum = r.isotropy;
    for (int m = 0; m < n; ++m) {
        std::vector<Rat> e(n, Rat(0));
        e[g.jh_order[m]] = 1;
        MatQ ext = accum;
        ext.push_back(e);
        size_t r0 = accum.empty() ? 0 : rank(accum);
        if (rank(ext) > r0) {
            r.jump_indices.push_back(m);
            r.predual_idx.push_back(g.jh_order[m]);
        }
        accum.push_back(std::move(e));
    }
    if (r.jump_indices.size() % 2 != 0)
        throw std::logic_error("orbit_report: odd number of jump indices");
    r.d = int(r.jump_indices.size() / 2);

    if (r.flat) {
        const auto& p = r.predual_idx;
        MatQ sub(p.size(), std::vector<Rat>(p.size()));
        for (size_t a = 0; a < p.size(); ++a)
            for (size_t b = 0; b < p.size(); ++b) sub[a][b] = r.bil[p[a]][p[b]];
        r.pf = pfaffian(sub);
    }
    return r;
}

PolyQ pfaffian_polynomial(const LieAlgebraSpec& g, const std::vector<int>& predual_idx) {
    const size_t m = predual_idx.size();
    std::vector<std::vector<PolyQ>> b(m, std::vector<PolyQ>(m));
    for (size_t a = 0; a < m; ++a)
        for (size_t t = 0; t < m; ++t) {
            PolyQ entry;
            int i = predual_idx[a], j = predual_idx[t];
            for (int k = 0; k < g.dim; ++k)
                if (g.c[i][j][k] != 0)
                    entry += PolyQ::variable(unsigned(k), g.c[i][j][k]);
            b[a][t] = entry;
        }
    return pfaffian(b);
}

double FlatOrbitChart::pf(const std::vector<double>& z_central) const {
    std::vector<double> x(g.dim, 0.0);
    for (size_t i = 0; i < center_idx.size(); ++i) x[center_idx[i]] = z_central[i];
    return poly_eval_double(pf_poly, x);
}

double FlatOrbitChart::plancherel_density(const std::vector<double>& z) const {
    double f = std::abs(pf(z));
    double c = 1;
    for (int k = 1; k <= d; ++k) c *= 2.0 * k;
    return c * f;
}

double FlatOrbitChart::orbit_measure_density(const std::vector<double>& z) const {
    double f = std::abs(pf(z));
    if (f == 0) throw std::domain_error("orbit_measure_density: Pfaffian vanishes");
    return 1.0 / (std::pow(2.0 * M_PI, d) * f);
}

FlatOrbitChart flat_orbit_chart(const LieAlgebraSpec& g) {
    FlatOrbitChart chart;
    chart.g = g;
    auto zb = center_basis(g);
    for (const auto& v : zb) {
        int pos = -1;
        for (int i = 0; i < g.dim; ++i) {
            if (v[i] == 0) continue;
            if (pos != -1) throw std::logic_error(
                "flat_orbit_chart: center not spanned by basis vectors");
            pos = i;
        }
        chart.center_idx.push_back(pos);
    }
    std::sort(chart.center_idx.begin(), chart.center_idx.end());

    // Find a functional in general position with a flat orbit.
    std::vector<std::vector<Rat>> candidates;
    {
        std::vector<Rat> z1, z2, z3;
        for (size_t i = 0; i < chart.center_idx.size(); ++i) {
            z1.push_back(Rat(1) / Rat(2 * int(i) + 1));
            z2.push_back(Rat(int(i) % 2 ? -3 : 2) / Rat(int(i) + 7));
            z3.push_back(Rat(1));
        }
        candidates = {z1, z2, z3};
    }
    bool found = false;
    for (const auto& z : candidates) {
        std::vector<Rat> u(g.dim, Rat(0));
        for (size_t i = 0; i < chart.center_idx.size(); ++i) u[chart.center_idx[i]] = z[i];
        OrbitReport rep = orbit_report(g, u);
        if (rep.flat && rep.pf && *rep.pf != 0) {
            chart.predual_idx = rep.predual_idx;
            chart.d = rep.d;
            found = true;
            break;
        }
    }
    if (!found)
        throw std::logic_error("flat_orbit_chart: no flat orbit in general position found");

    chart.pf_poly = pfaffian_polynomial(g, chart.predual_idx);
    // The Pfaffian must be a function of the central coordinates only
    // (it is constant on each orbit).
    for (auto& [e, c] : chart.pf_poly.terms)
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            bool central = false;
            for (int ci : chart.center_idx) central = central || ci == int(i);
            if (!central)
                throw std::logic_error(
                    "flat_orbit_chart: Pfaffian depends on non-central coordinates");
        }
    return chart;
}

} // namespace orbitquant

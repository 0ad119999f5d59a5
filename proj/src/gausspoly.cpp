#include "orbitquant/gausspoly.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace orbitquant {

cd GaussPoly::eval(const std::vector<double>& x) const {
    cd p = 0;
    for (auto& [e, coef] : poly.terms) {
        cd t = coef;
        for (size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
        p += t;
    }
    cd expo = 0;
    for (size_t i = 0; i < ax.size(); ++i) {
        double d = x[i] - ax[i].c;
        expo += cd(-ax[i].a * d * d, ax[i].b * x[i]);
    }
    return p * std::exp(expo);
}

GaussPoly GaussPoly::scaled(cd s) const {
    GaussPoly r = *this;
    r.poly = r.poly.scaled(s);
    return r;
}

GaussPoly GaussPoly::dx(int k) const {
    GaussPoly r = *this;
    // d/dx_k [p e^g] = (p' + p (-2a (x_k - c) + i b)) e^g
    PolyC factor = PolyC::variable(unsigned(k), cd(-2 * ax[k].a)) +
                   PolyC::constant(cd(2 * ax[k].a * ax[k].c, ax[k].b));
    r.poly = poly.derivative(unsigned(k)) + poly * factor;
    return r;
}

GaussPoly GaussPoly::mul_poly(const PolyC& q) const {
    GaussPoly r = *this;
    r.poly = poly * q;
    return r;
}

GaussPoly GaussPoly::reflect_axis(int k) const {
    GaussPoly r = *this;
    PolyC np;
    for (auto& [e, coef] : poly.terms) {
        unsigned j = k < int(e.size()) ? e[size_t(k)] : 0;
        np.add_term(e, (j % 2) ? -coef : coef);
    }
    r.poly = np;
    r.ax[k].b = -ax[k].b;
    r.ax[k].c = -ax[k].c;
    return r;
}

GaussPoly operator*(const GaussPoly& f, const GaussPoly& g) {
    if (f.dim() != g.dim()) throw std::invalid_argument("GaussPoly product: dim mismatch");
    GaussPoly r;
    r.ax.resize(f.ax.size());
    double logscale = 0;
    for (size_t k = 0; k < f.ax.size(); ++k) {
        double a1 = f.ax[k].a, a2 = g.ax[k].a, c1 = f.ax[k].c, c2 = g.ax[k].c;
        double a = a1 + a2;
        double c = (a1 * c1 + a2 * c2) / a;
        r.ax[k] = {a, f.ax[k].b + g.ax[k].b, c};
        logscale += -(a1 * c1 * c1 + a2 * c2 * c2 - a * c * c);
    }
    r.poly = (f.poly * g.poly).scaled(std::exp(cd(logscale, 0)));
    return r;
}

std::vector<cd> poly_affine_compose(const std::vector<cd>& p, cd alpha, cd beta) {
    // returns coefficients of p(alpha + beta t)
    std::vector<cd> out(1, cd(0));
    // Horner: out = p_n; out = out*(alpha+beta t) + p_{n-1}; ...
    for (size_t i = p.size(); i-- > 0;) {
        std::vector<cd> next(out.size() + 1, cd(0));
        for (size_t t = 0; t < out.size(); ++t) {
            next[t] += out[t] * alpha;
            next[t + 1] += out[t] * beta;
        }
        next[0] += p[i];
        out = std::move(next);
        while (out.size() > 1 && out.back() == cd(0)) out.pop_back();
    }
    return out;
}

GaussPoly GaussPoly::fourier_axis(int k, bool inverse) const {
    const double a = ax[k].a, b = ax[k].b, c = ax[k].c;
    if (!(a > 0)) throw std::domain_error("fourier_axis: needs a > 0");
    const double sigma = inverse ? -1.0 : 1.0;

    // Group terms by the power of x_k.
    std::map<unsigned, PolyC> byj;
    for (auto& [e, coef] : poly.terms) {
        unsigned j = k < int(e.size()) ? e[size_t(k)] : 0;
        Expo e2 = e;
        if (k < int(e2.size())) e2[size_t(k)] = 0;
        byj[j].add_term(e2, coef);
    }
    unsigned jmax = byj.empty() ? 0 : byj.rbegin()->first;

    // P_0 = 1, P_m = -i (P_{m-1}' - w P_{m-1} / (2a)); G_m(w) = P_m(w) sqrt(pi/a) e^{-w^2/(4a)}
    std::vector<std::vector<cd>> P(jmax + 1);
    P[0] = {cd(1)};
    for (unsigned m = 1; m <= jmax; ++m) {
        const auto& prev = P[m - 1];
        std::vector<cd> cur(prev.size() + 1, cd(0));
        for (size_t t = 0; t + 1 < prev.size() + 1; ++t) {
            // derivative part: (t+1) prev[t+1]
            if (t + 1 < prev.size()) cur[t] += cd(0, -1) * (double(t + 1) * prev[t + 1]);
        }
        for (size_t t = 0; t < prev.size(); ++t)
            cur[t + 1] += cd(0, -1) * (-prev[t] / (2 * a));
        while (cur.size() > 1 && cur.back() == cd(0)) cur.pop_back();
        P[m] = std::move(cur);
    }

    cd scale = std::sqrt(M_PI / a) * std::exp(cd(0, b * c));
    if (inverse) scale /= 2 * M_PI;

    GaussPoly r;
    r.ax = ax;
    r.ax[k] = GaussAxis{1.0 / (4.0 * a), -sigma * c, sigma * b};
    for (auto& [j, qj] : byj) {
        // U_j(xi) = sum_m binom(j,m) c^{j-m} P_m(b - sigma xi)
        std::vector<cd> u(1, cd(0));
        double binom = 1;
        for (unsigned m = 0; m <= j; ++m) {
            if (m > 0) binom = binom * double(j - m + 1) / double(m);
            double cpow = std::pow(c, double(j - m));
            if (cpow == 0 && j != m) continue;
            auto pm = poly_affine_compose(P[m], cd(b), cd(-sigma));
            if (u.size() < pm.size()) u.resize(pm.size(), cd(0));
            for (size_t t = 0; t < pm.size(); ++t) u[t] += binom * cpow * pm[t];
        }
        for (auto& [e2, coef] : qj.terms)
            for (size_t t = 0; t < u.size(); ++t) {
                if (u[t] == cd(0)) continue;
                Expo e3 = e2;
                if (e3.size() <= size_t(k)) e3.resize(size_t(k) + 1, 0);
                e3[size_t(k)] = unsigned(t);
                r.poly.add_term(e3, coef * u[t] * scale);
            }
    }
    return r;
}

GaussPoly GaussPoly::fourier_all(bool inverse) const {
    GaussPoly r = *this;
    for (int k = 0; k < dim(); ++k) r = r.fourier_axis(k, inverse);
    return r;
}

cd GaussPoly::integral() const {
    GaussPoly f = *this;
    std::vector<double> zero(ax.size(), 0.0);
    for (int k = 0; k < dim(); ++k) f = f.fourier_axis(k, false);
    return f.eval(zero);
}

GaussPoly gauss_nd(const std::vector<GaussAxis>& axes, cd scale) {
    GaussPoly g;
    g.ax = axes;
    g.poly = PolyC::constant(scale);
    return g;
}

} // namespace orbitquant

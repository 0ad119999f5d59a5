#pragma once

// Sparse multivariate polynomials with exact (or generic ring) coefficients.

#include "orbitquant/rational.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace orbitquant {

using Expo = std::vector<unsigned>; // exponent vector, trailing zeros stripped

inline Expo normalized_expo(Expo e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    return e;
}

template <class C>
class Poly {
  public:
    std::map<Expo, C> terms; // normalized exponents -> nonzero coefficient

    Poly() = default;

    static Poly constant(const C& c) {
        Poly p;
        if (!(c == C(0))) p.terms[{}] = c;
        return p;
    }
    static Poly variable(unsigned i, const C& coeff = C(1)) {
        Poly p;
        if (!(coeff == C(0))) {
            Expo e(i + 1, 0);
            e[i] = 1;
            p.terms[e] = coeff;
        }
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const Expo& e_in, const C& c) {
        if (c == C(0)) return;
        Expo e = normalized_expo(e_in);
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(std::move(e), c);
        } else {
            it->second += c;
            if (it->second == C(0)) terms.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (auto& [e, c] : o.terms) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (auto& [e, c] : o.terms) add_term(e, C(0) - c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (auto& [ea, ca] : a.terms)
            for (auto& [eb, cb] : b.terms) {
                Expo e(std::max(ea.size(), eb.size()), 0);
                for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
                for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    Poly operator-() const {
        Poly r;
        for (auto& [e, c] : terms) r.terms[e] = C(0) - c;
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms == b.terms; }

    Poly scaled(const C& s) const {
        Poly r;
        if (s == C(0)) return r;
        for (auto& [e, c] : terms) {
            C sc = c * s;
            if (!(sc == C(0))) r.terms[e] = sc;
        }
        return r;
    }

    Poly derivative(unsigned i) const {
        Poly r;
        for (auto& [e, c] : terms) {
            if (i >= e.size() || e[i] == 0) continue;
            Expo d = e;
            C nc = c * C(int(e[i]));
            d[i] -= 1;
            r.add_term(d, nc);
        }
        return r;
    }

    // Substitute variable i -> s * variable i (anisotropic dilation building block).
    Poly scale_variable(unsigned i, const C& s) const {
        Poly r;
        for (auto& [e, c] : terms) {
            C nc = c;
            if (i < e.size())
                for (unsigned k = 0; k < e[i]; ++k) nc = nc * s;
            r.add_term(e, nc);
        }
        return r;
    }

    template <class T>
    T eval(const std::vector<T>& x, T (*conv)(const C&)) const {
        T acc = T(0);
        for (auto& [e, c] : terms) {
            T t = conv(c);
            for (size_t i = 0; i < e.size(); ++i)
                for (unsigned k = 0; k < e[i]; ++k) t = t * x[i];
            acc = acc + t;
        }
        return acc;
    }

    C eval_exact(const std::vector<C>& x) const {
        C acc(0);
        for (auto& [e, c] : terms) {
            C t = c;
            for (size_t i = 0; i < e.size(); ++i)
                for (unsigned k = 0; k < e[i]; ++k) t = t * x[i];
            acc += t;
        }
        return acc;
    }

    C coefficient(const Expo& e) const {
        auto it = terms.find(normalized_expo(e));
        return it == terms.end() ? C(0) : it->second;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (auto& [e, c] : terms) {
            unsigned s = 0;
            for (unsigned k : e) s += k;
            d = std::max(d, s);
        }
        return d;
    }

    // Weighted (homogeneous) degree; returns -1 for the zero polynomial,
    // -2 if not weighted-homogeneous.
    long weighted_degree(const std::vector<int>& weights) const {
        long deg = -1;
        for (auto& [e, c] : terms) {
            long s = 0;
            for (size_t i = 0; i < e.size(); ++i) s += long(e[i]) * weights[i];
            if (deg == -1) deg = s;
            else if (deg != s) return -2;
        }
        return deg;
    }
};

using PolyQ = Poly<Rat>;

inline double poly_eval_double(const PolyQ& p, const std::vector<double>& x) {
    double acc = 0;
    for (auto& [e, c] : p.terms) {
        double t = to_double(c);
        for (size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
        acc += t;
    }
    return acc;
}

} // namespace orbitquant

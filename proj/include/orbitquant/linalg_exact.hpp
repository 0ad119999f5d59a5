#pragma once

// Exact linear algebra over the rationals: RREF, rank, nullspace, solve.

#include "orbitquant/rational.hpp"

#include <optional>
#include <vector>

namespace orbitquant {

using MatQ = std::vector<std::vector<Rat>>; // row-major

// Reduce to row echelon form in place; returns pivot column per pivot row.
inline std::vector<size_t> rref(MatQ& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rat inv = m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline size_t rank(MatQ m) { return rref(m).size(); }

// Basis of the right nullspace {x : m x = 0}.
inline std::vector<std::vector<Rat>> nullspace(MatQ m) {
    if (m.empty()) return {};
    const size_t cols = m[0].size();
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[fc] = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -m[pr][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve m x = b exactly; nullopt if inconsistent. If underdetermined, free
// variables are set to zero.
inline std::optional<std::vector<Rat>> solve(MatQ m, std::vector<Rat> b) {
    const size_t rows = m.size();
    if (rows == 0) return std::vector<Rat>{};
    const size_t cols = m[0].size();
    for (size_t i = 0; i < rows; ++i) m[i].push_back(b[i]);
    auto pivots = rref(m);
    // Inconsistent if a pivot lands in the augmented column.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    for (size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = m[pr][cols];
    return x;
}

// Do the given vectors span the same subspace?
inline bool same_span(const std::vector<std::vector<Rat>>& a,
                      const std::vector<std::vector<Rat>>& b) {
    MatQ ma(a), mb(b), mab(a);
    mab.insert(mab.end(), b.begin(), b.end());
    size_t ra = a.empty() ? 0 : rank(ma);
    size_t rb = b.empty() ? 0 : rank(mb);
    size_t rab = mab.empty() ? 0 : rank(mab);
    return ra == rb && rb == rab;
}

} // namespace orbitquant

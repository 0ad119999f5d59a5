#include "orbitquant/lie_algebra.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

namespace orbitquant {

namespace {

// Enumerate Dynkin-series terms of total degree <= depth:
//   log(e^X e^Y) = sum_{m>=1} (-1)^{m-1}/m sum_{r_i+s_i>0}
//       [X^{r_1} Y^{s_1} ... X^{r_m} Y^{s_m}] / (deg * prod r_i! s_i!)
// with right-nested brackets; words whose innermost pair repeats a letter
// vanish identically and are dropped.
void enumerate_blocks(int depth, int blocks_used, int deg_used,
                      std::vector<std::pair<int, int>>& blocks,
                      std::map<std::vector<uint8_t>, Rat>& acc) {
    if (blocks_used > 0) {
        const int m = blocks_used;
        Rat denom = Rat(deg_used) * Rat(m);
        for (auto [r, s] : blocks) denom *= rat_factorial(r) * rat_factorial(s);
        Rat coeff = Rat((m - 1) % 2 == 0 ? 1 : -1) / denom;
        std::vector<uint8_t> word;
        for (auto [r, s] : blocks) {
            word.insert(word.end(), size_t(r), uint8_t(0));
            word.insert(word.end(), size_t(s), uint8_t(1));
        }
        bool dead = word.size() >= 2 && word[word.size() - 1] == word[word.size() - 2];
        if (word.size() >= 2 && !dead) {
            auto it = acc.find(word);
            if (it == acc.end()) acc.emplace(std::move(word), coeff);
            else it->second += coeff;
        }
    }
    if (deg_used >= depth) return;
    for (int r = 0; r + deg_used <= depth; ++r)
        for (int s = (r == 0 ? 1 : 0); r + s + deg_used <= depth; ++s) {
            if (r + s == 0) continue;
            blocks.emplace_back(r, s);
            enumerate_blocks(depth, blocks_used + 1, deg_used + r + s, blocks, acc);
            blocks.pop_back();
        }
}

std::vector<BchTerm> build_bch_terms(int depth) {
    std::map<std::vector<uint8_t>, Rat> acc;
    std::vector<std::pair<int, int>> blocks;
    enumerate_blocks(depth, 0, 0, blocks, acc);
    std::vector<BchTerm> out;
    for (auto& [w, c] : acc)
        if (c != 0) out.push_back(BchTerm{w, c});
    return out;
}

} // namespace

const std::vector<BchTerm>& bch_terms(int depth) {
    if (depth < 1) depth = 1;
    if (depth > 6)
        throw std::invalid_argument("BCH depth > 6 not supported (nilpotency step cap)");
    static std::mutex mu;
    static std::map<int, std::vector<BchTerm>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(depth);
    if (it == cache.end()) it = cache.emplace(depth, build_bch_terms(depth)).first;
    return it->second;
}

MatQ ad_matrix(const LieAlgebraSpec& g, const std::vector<Rat>& x) {
    const int n = g.dim;
    MatQ m(n, std::vector<Rat>(n, Rat(0)));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            for (int k = 0; k < n; ++k)
                if (g.c[i][j][k] != 0) m[k][j] += x[i] * g.c[i][j][k];
        }
    return m;
}

static MatQ mat_mul(const MatQ& a, const MatQ& b) {
    const size_t n = a.size();
    MatQ r(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j)
                if (b[k][j] != 0) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

MatQ adjoint_matrix(const LieAlgebraSpec& g, const std::vector<Rat>& x) {
    const int n = g.dim;
    MatQ ad = ad_matrix(g, x);
    MatQ result(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) result[i][i] = 1;
    MatQ power = ad;
    Rat fact(1);
    for (int m = 1; m < g.step; ++m) {
        fact *= m;
        bool nonzero = false;
        for (int i = 0; i < n && !nonzero; ++i)
            for (int j = 0; j < n; ++j)
                if (power[i][j] != 0) { nonzero = true; break; }
        if (!nonzero) break;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) result[i][j] += power[i][j] / fact;
        if (m + 1 < g.step) power = mat_mul(ad, power);
    }
    return result;
}

std::vector<Rat> coadjoint(const LieAlgebraSpec& g, const std::vector<Rat>& x,
                           const std::vector<Rat>& u) {
    const int n = g.dim;
    MatQ m = adjoint_matrix(g, group_inverse(x));
    std::vector<Rat> out(n, Rat(0));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            if (m[k][j] != 0) out[j] += u[k] * m[k][j];
    return out;
}

std::vector<double> coadjoint_d(const LieAlgebraSpec& g, const std::vector<double>& x,
                                const std::vector<double>& u) {
    // Same series over doubles (exact coefficients, float data).
    const int n = g.dim;
    std::vector<std::vector<double>> ad(n, std::vector<double>(n, 0.0));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            for (int k = 0; k < n; ++k)
                if (g.c[i][j][k] != 0) ad[k][j] += -x[i] * to_double(g.c[i][j][k]);
        }
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0)), power = ad;
    for (int i = 0; i < n; ++i) m[i][i] = 1.0;
    double fact = 1;
    for (int p = 1; p < g.step; ++p) {
        fact *= p;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] += power[i][j] / fact;
        if (p + 1 < g.step) {
            std::vector<std::vector<double>> next(n, std::vector<double>(n, 0.0));
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k)
                    for (int j = 0; j < n; ++j) next[i][j] += ad[i][k] * power[k][j];
            power = next;
        }
    }
    std::vector<double> out(n, 0.0);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) out[j] += u[k] * m[k][j];
    return out;
}

std::vector<Rat> dilate(const LieAlgebraSpec& g, const Rat& r, const std::vector<Rat>& x) {
    if (g.weights.empty()) throw std::logic_error("dilate: algebra has no grading");
    std::vector<Rat> out(g.dim);
    for (int j = 0; j < g.dim; ++j) {
        Rat f(1);
        for (int k = 0; k < g.weights[j]; ++k) f *= r;
        out[j] = f * x[j];
    }
    return out;
}

std::vector<double> dilate_d(const LieAlgebraSpec& g, double r, const std::vector<double>& x) {
    if (g.weights.empty()) throw std::logic_error("dilate: algebra has no grading");
    std::vector<double> out(g.dim);
    for (int j = 0; j < g.dim; ++j) out[j] = std::pow(r, g.weights[j]) * x[j];
    return out;
}

std::vector<std::vector<Rat>> center_basis(const LieAlgebraSpec& g) {
    // X central  <=>  for all j, k: sum_i x_i c[i][j][k] = 0.
    const int n = g.dim;
    MatQ m;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            std::vector<Rat> row(n);
            bool nz = false;
            for (int i = 0; i < n; ++i) {
                row[i] = g.c[i][j][k];
                nz = nz || row[i] != 0;
            }
            if (nz) m.push_back(std::move(row));
        }
    if (m.empty()) {
        std::vector<std::vector<Rat>> full;
        for (int i = 0; i < n; ++i) {
            std::vector<Rat> e(n, Rat(0));
            e[i] = 1;
            full.push_back(std::move(e));
        }
        return full;
    }
    return nullspace(std::move(m));
}

PolyQ InvariantFields::apply(int j, const PolyQ& p) const {
    PolyQ out;
    for (int k = 0; k < dim; ++k) {
        if (a[j][k].is_zero()) continue;
        out += a[j][k] * p.derivative(unsigned(k));
    }
    return out;
}

InvariantFields left_invariant_fields(const LieAlgebraSpec& g) {
    const int n = g.dim;
    InvariantFields f;
    f.dim = n;
    f.a.assign(n, std::vector<PolyQ>(n));
    // x has symbolic coordinates (vars 0..n-1); t is var n.
    std::vector<PolyQ> x(n);
    for (int i = 0; i < n; ++i) x[i] = PolyQ::variable(unsigned(i));
    for (int j = 0; j < n; ++j) {
        std::vector<PolyQ> y(n);
        y[j] = PolyQ::variable(unsigned(n));
        std::vector<PolyQ> z = bch(g, x, y, g.step);
        for (int k = 0; k < n; ++k) {
            // a_{jk} = coefficient of t^1 in z_k (t-degree > 1 terms differentiate away at t=0).
            PolyQ coeff;
            for (auto& [e, cc] : z[k].terms) {
                if (e.size() != size_t(n) + 1 || e[n] != 1) continue;
                Expo stripped = e;
                stripped[n] = 0;
                coeff.add_term(stripped, cc);
            }
            f.a[j][k] = coeff;
        }
    }
    return f;
}

int computed_step(const LieAlgebraSpec& g) {
    const int n = g.dim;
    std::vector<std::vector<Rat>> layer;
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> e(n, Rat(0));
        e[i] = 1;
        layer.push_back(std::move(e));
    }
    int s = 1;
    while (true) {
        std::vector<std::vector<Rat>> next;
        for (int i = 0; i < n; ++i) {
            std::vector<Rat> ei(n, Rat(0));
            ei[i] = 1;
            for (const auto& v : layer) {
                auto b = lie_bracket(g, ei, v);
                bool nz = false;
                for (auto& t : b) nz = nz || t != 0;
                if (nz) next.push_back(std::move(b));
            }
        }
        if (next.empty() || rank(MatQ(next)) == 0) return s;
        // Keep a reduced spanning set so layer sizes stay bounded.
        MatQ red(next);
        auto pivots = rref(red);
        next.assign(red.begin(), red.begin() + pivots.size());
        layer = std::move(next);
        ++s;
        if (s > n + 1) return s; // not nilpotent; validate() reports it
    }
}

std::vector<std::string> validate(const LieAlgebraSpec& g) {
    std::vector<std::string> problems;
    const int n = g.dim;
    auto fail = [&](std::string msg) { problems.push_back(std::move(msg)); };
    if (n <= 0) { fail("dim must be positive"); return problems; }
    if ((int)g.c.size() != n) { fail("structure-constant tensor has wrong shape"); return problems; }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (g.c[i][j][k] != -g.c[j][i][k]) {
                    fail("structure constants not antisymmetric");
                    i = j = n; break;
                }
    // Jacobi identity, exact.
    std::vector<std::vector<Rat>> basis(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) basis[i][i] = 1;
    for (int i = 0; i < n && problems.empty(); ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                auto t1 = lie_bracket(g, basis[i], lie_bracket(g, basis[j], basis[k]));
                auto t2 = lie_bracket(g, basis[j], lie_bracket(g, basis[k], basis[i]));
                auto t3 = lie_bracket(g, basis[k], lie_bracket(g, basis[i], basis[j]));
                for (int m = 0; m < n; ++m)
                    if (t1[m] + t2[m] + t3[m] != 0) {
                        std::ostringstream os;
                        os << "Jacobi identity fails on basis triple (" << i << "," << j
                           << "," << k << ")";
                        fail(os.str());
                        m = n; k = j = i = n - 1;
                    }
            }
    int s = computed_step(g);
    if (s > n) fail("algebra is not nilpotent");
    else if (s != g.step) {
        std::ostringstream os;
        os << "declared step " << g.step << " but descending central series gives " << s;
        fail(os.str());
    }
    if (g.step > 6) fail("nilpotency step above the supported cap 6");
    if (!g.weights.empty()) {
        if ((int)g.weights.size() != n) fail("weights have wrong length");
        else {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        if (g.c[i][j][k] != 0 && g.weights[k] != g.weights[i] + g.weights[j]) {
                            fail("grading incompatible with brackets");
                            i = j = k = n - 1;
                        }
            for (int w : g.weights)
                if (w < 1) { fail("weights must be positive"); break; }
        }
    }
    if (!g.jh_order.empty()) {
        if ((int)g.jh_order.size() != n) fail("jh_order has wrong length");
        else {
            std::vector<bool> seen(n, false);
            bool perm = true;
            for (int v : g.jh_order) {
                if (v < 0 || v >= n || seen[v]) { perm = false; break; }
                seen[v] = true;
            }
            if (!perm) fail("jh_order is not a permutation");
            else {
                // Each g_m = span{E_{jh[0]}, ..., E_{jh[m-1]}} must be an ideal.
                for (int m = 1; m <= n; ++m) {
                    std::vector<std::vector<Rat>> sub;
                    for (int t = 0; t < m; ++t) sub.push_back(basis[g.jh_order[t]]);
                    for (int i = 0; i < n; ++i)
                        for (int t = 0; t < m; ++t) {
                            auto b = lie_bracket(g, basis[i], sub[t]);
                            auto ext = sub;
                            ext.push_back(b);
                            if (rank(MatQ(ext)) > rank(MatQ(sub))) {
                                std::ostringstream os;
                                os << "jh_order: span of first " << m << " chain vectors is not an ideal";
                                fail(os.str());
                                t = m; i = n;
                            }
                        }
                }
            }
        }
    }
    return problems;
}

LieAlgebraSpec load_group_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    LieAlgebraSpec g;
    g.name = j.value("name", std::string("unnamed"));
    g.init_zero(j.at("dim").get<int>());
    g.step = j.at("step").get<int>();
    for (const auto& b : j.at("brackets")) {
        int i = b.at(0).get<int>(), jj = b.at(1).get<int>(), k = b.at(2).get<int>();
        if (i < 1 || i > g.dim || jj < 1 || jj > g.dim || k < 1 || k > g.dim)
            throw std::invalid_argument("bracket index out of range (1-based)");
        Rat v = b.at(3).is_string() ? parse_rational(b.at(3).get<std::string>())
                                    : Rat(b.at(3).get<long long>());
        g.add_bracket(i - 1, jj - 1, k - 1, v);
    }
    if (j.contains("weights")) g.weights = j["weights"].get<std::vector<int>>();
    if (j.contains("jh_order")) {
        auto o = j["jh_order"].get<std::vector<int>>();
        for (int& v : o) v -= 1; // file format is 1-based
        g.jh_order = o;
    }
    if (j.contains("labels")) g.labels = j["labels"].get<std::vector<std::string>>();
    if (g.labels.empty())
        for (int i = 0; i < g.dim; ++i) g.labels.push_back("E" + std::to_string(i + 1));
    return g;
}

std::string save_group_json(const LieAlgebraSpec& g) {
    nlohmann::json j;
    j["name"] = g.name;
    j["dim"] = g.dim;
    j["step"] = g.step;
    nlohmann::json brackets = nlohmann::json::array();
    for (int i = 0; i < g.dim; ++i)
        for (int k = i + 1; k < g.dim; ++k)
            for (int m = 0; m < g.dim; ++m)
                if (g.c[i][k][m] != 0)
                    brackets.push_back({i + 1, k + 1, m + 1, rat_to_string(g.c[i][k][m])});
    j["brackets"] = brackets;
    if (!g.weights.empty()) j["weights"] = g.weights;
    if (!g.jh_order.empty()) {
        std::vector<int> o = g.jh_order;
        for (int& v : o) v += 1;
        j["jh_order"] = o;
    }
    if (!g.labels.empty()) j["labels"] = g.labels;
    return j.dump(2);
}

LieAlgebraSpec load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open group file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_group_json(ss.str());
}

} // namespace orbitquant

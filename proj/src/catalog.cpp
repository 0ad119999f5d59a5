#include "orbitquant/catalog.hpp"

namespace orbitquant {

LieAlgebraSpec make_heisenberg() {
    LieAlgebraSpec g;
    g.name = "heis1";
    g.init_zero(3);
    g.step = 2;
    g.add_bracket(0, 1, 2, 1); // [Q,P] = S
    g.weights = {1, 1, 2};
    g.jh_order = {2, 0, 1}; // chain S, Q, P
    g.labels = {"Q", "P", "S"};
    return g;
}

LieAlgebraSpec make_center2(const Rat& delta) {
    LieAlgebraSpec g;
    g.name = "center2";
    g.init_zero(4);
    g.step = 2;
    g.add_bracket(0, 1, 2, 1);     // [Q,P] = S + delta T
    g.add_bracket(0, 1, 3, delta);
    g.weights = {1, 1, 2, 2};
    g.jh_order = {2, 3, 0, 1}; // chain S, T, Q, P
    g.labels = {"Q", "P", "S", "T"};
    return g;
}

LieAlgebraSpec make_dim5_a() {
    LieAlgebraSpec g;
    g.name = "dim5a";
    g.init_zero(5);
    g.step = 3;
    g.add_bracket(4, 1, 0, 1); // [E5,E2] = E1
    g.add_bracket(3, 2, 0, 1); // [E4,E3] = E1
    g.add_bracket(4, 3, 1, 1); // [E5,E4] = E2
    g.weights = {3, 2, 2, 1, 1};
    g.jh_order = {0, 1, 2, 3, 4};
    g.labels = {"E1", "E2", "E3", "E4", "E5"};
    return g;
}

LieAlgebraSpec make_dim5_b() {
    LieAlgebraSpec g;
    g.name = "dim5b";
    g.init_zero(5);
    g.step = 4;
    g.add_bracket(4, 3, 2, 1); // [E5,E4] = E3
    g.add_bracket(4, 2, 1, 1); // [E5,E3] = E2
    g.add_bracket(4, 1, 0, 1); // [E5,E2] = E1
    g.add_bracket(3, 2, 0, 1); // [E4,E3] = E1
    g.weights = {5, 4, 3, 2, 1};
    g.jh_order = {0, 1, 2, 3, 4};
    g.labels = {"E1", "E2", "E3", "E4", "E5"};
    return g;
}

LieAlgebraSpec make_abelian(int n) {
    LieAlgebraSpec g;
    g.name = "abelian" + std::to_string(n);
    g.init_zero(n);
    g.step = 1;
    g.weights.assign(n, 1);
    for (int i = 0; i < n; ++i) {
        g.jh_order.push_back(i);
        g.labels.push_back("E" + std::to_string(i + 1));
    }
    return g;
}

LieAlgebraSpec make_filiform(int dim) {
    LieAlgebraSpec g;
    g.name = "filiform" + std::to_string(dim);
    g.init_zero(dim);
    g.step = dim - 1;
    for (int k = 1; k + 1 < dim; ++k) g.add_bracket(0, k, k + 1, 1);
    for (int i = 0; i < dim; ++i) {
        g.jh_order.push_back(dim - 1 - i);
        g.labels.push_back("E" + std::to_string(i + 1));
    }
    // Weights 1, 1, 2, 3, ..., dim-1 grade the brackets.
    g.weights.push_back(1);
    for (int i = 1; i < dim; ++i) g.weights.push_back(i);
    return g;
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"heis1", "Heisenberg group H1: [Q,P]=S", false, ""},
        {"center2", "4D group with 2D center: [Q,P]=S+delta*T", true, "delta"},
        {"dim5a", "5D step-3 group, weights (3,2,2,1,1)", false, ""},
        {"dim5b", "5D step-4 group, weights (5,4,3,2,1)", false, ""},
        {"abelian", "abelian R^n", true, "n"},
    };
    return entries;
}

std::optional<LieAlgebraSpec> catalog_make(const std::string& id, const std::string& param) {
    if (id == "heis1") return make_heisenberg();
    if (id == "center2") return make_center2(param.empty() ? Rat(1) : parse_rational(param));
    if (id == "dim5a") return make_dim5_a();
    if (id == "dim5b") return make_dim5_b();
    if (id == "abelian") {
        int n = param.empty() ? 2 : std::stoi(param);
        if (n < 1 || n > 16) return std::nullopt;
        return make_abelian(n);
    }
    return std::nullopt;
}

} // namespace orbitquant

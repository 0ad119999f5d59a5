#pragma once

// Built-in group catalog. All specs use the source coordinates of the worked
// examples (center-last for the 4D family); the jh_order field carries the
// Jordan-Hoelder chain the orbit machinery needs (center-first).

#include "orbitquant/lie_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbitquant {

// Heisenberg group H1, basis (Q, P, S): [Q,P] = S. Weights (1,1,2).
LieAlgebraSpec make_heisenberg();

// 4D two-parameter-center family, basis (Q, P, S, T): [Q,P] = S + delta*T.
// Weights (1,1,2,2). delta = 0 is H1 x R.
LieAlgebraSpec make_center2(const Rat& delta);

// 5D group, basis (E1..E5) ~ weights (3,2,2,1,1):
//   [E5,E2] = E1, [E4,E3] = E1, [E5,E4] = E2.   Step 3.
LieAlgebraSpec make_dim5_a();

// 5D filiform-type group, weights (5,4,3,2,1):
//   [E5,E4] = E3, [E5,E3] = E2, [E5,E2] = E1, [E4,E3] = E1.   Step 4.
LieAlgebraSpec make_dim5_b();

// Abelian R^n (weights all 1).
LieAlgebraSpec make_abelian(int n);

// Test-only generic deep algebra: filiform [E1, E_k] = E_{k+1}, 2<=k<dim.
// Step = dim - 1; exercises BCH terms up to the cap.
LieAlgebraSpec make_filiform(int dim);

struct CatalogEntry {
    std::string id;
    std::string description;
    bool has_param;
    std::string param_name;
};

const std::vector<CatalogEntry>& catalog_entries();

// id: "heis1", "center2" (param delta), "dim5a", "dim5b", "abelian" (param n).
std::optional<LieAlgebraSpec> catalog_make(const std::string& id,
                                           const std::string& param = "");

} // namespace orbitquant

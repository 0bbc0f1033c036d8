#pragma once

#include <vector>

#include "gpdrep/bisection.hpp"
#include "gpdrep/groupoid.hpp"
#include "gpdrep/selfmap.hpp"

// Exhaustive reference computations. They read only the raw structure tables
// and try every candidate map, so they share no code with the enumerators.
namespace gpdrep::oracle {

/// Every map M → G checked against β∘σ = id and bijectivity of α∘σ. Sorted.
std::vector<Bisection> brute_force_bisections(const FiniteGroupoid& G);

/// Every map f: G → G with β∘f = α whose R_f is bijective. Sorted. The caller
/// keeps G small; the candidate count is Π_x |β⁻¹(α(x))|.
std::vector<SelfMap> brute_force_sg_units(const FiniteGroupoid& G);

/// Whether H is G with objects and arrows renamed (and reindexed).
bool relabeling_exists(const FiniteGroupoid& G, const FiniteGroupoid& H);

}  // namespace gpdrep::oracle

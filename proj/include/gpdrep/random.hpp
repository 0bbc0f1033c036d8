#pragma once

#include <cstddef>
#include <random>

#include "gpdrep/bundle.hpp"
#include "gpdrep/groupoid.hpp"
#include "gpdrep/transfer.hpp"

namespace gpdrep {

using Rng = std::mt19937_64;

/// p/q with |p| ≤ 5 and 1 ≤ q ≤ 4.
Rational random_rational(Rng& rng);
/// Rejection-sampled invertible n×n matrix.
Matrix random_invertible(Rng& rng, std::size_t n);
VectorBundle random_bundle(Rng& rng, std::size_t base_size, std::size_t min_dim,
                           std::size_t max_dim);
/// Random base bijection preserving fiber dimensions, random fiber maps.
BundleAutomorphism random_automorphism(Rng& rng, const VectorBundle& E);

/// A random valid representation of G, built per connected component from a
/// spanning tree t_m: r → m and a rep ρ_K of the isotropy group at the root:
/// φ(g) = T_n ρ_K(t_n⁻¹ g t_m) T_m⁻¹ for g: m → n. ρ_K is a conjugated sum of
/// characters K → {±1}. Fiber dimensions lie in [1, max_dim].
GroupoidRep random_groupoid_rep(Rng& rng, const FiniteGroupoid& G, std::size_t max_dim = 3);

}  // namespace gpdrep

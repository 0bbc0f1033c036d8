#pragma once

#include <cstdint>
#include <vector>

#include "gpdrep/groupoid.hpp"

namespace gpdrep {

/// An element f of S_G: a self-map of the arrows with target∘f = source.
struct SelfMap {
  std::vector<ArrId> values;

  ArrId operator()(ArrId x) const { return values[x.index]; }
  friend auto operator<=>(const SelfMap&, const SelfMap&) = default;
};

/// Default bound on the number of candidate maps for enumerate_sg_units.
inline constexpr std::uint64_t kDefaultSelfMapSpace = 1'000'000;

bool sg_validate(const FiniteGroupoid& G, const SelfMap& f);

/// x ↦ 1_{α(x)}, the identity of S_G.
SelfMap sg_unit(const FiniteGroupoid& G);

/// (f⋆g)(x) = f(x)·g(x·f(x)).
SelfMap sg_star(const FiniteGroupoid& G, const SelfMap& f, const SelfMap& g);

/// R_f(x) = x·f(x), as a table over arrows.
std::vector<ArrId> R_of(const FiniteGroupoid& G, const SelfMap& f);

/// True iff R_f is a bijection of the arrows.
bool sg_is_unit(const FiniteGroupoid& G, const SelfMap& f);

/// g(y) = f(R_f⁻¹(y))⁻¹. Throws NotInvertible if R_f is not bijective; the
/// result is checked against both unit laws before returning.
SelfMap sg_invert(const FiniteGroupoid& G, const SelfMap& f);

/// Number of candidate maps Π_x |β⁻¹(α(x))|, saturating at UINT64_MAX.
std::uint64_t sg_search_space(const FiniteGroupoid& G);

/// The unit group S_G(α), complete and in canonical order. Throws TooLarge
/// when the candidate space exceeds `max_space`.
std::vector<SelfMap> enumerate_sg_units(const FiniteGroupoid& G,
                                        std::uint64_t max_space = kDefaultSelfMapSpace);

/// f.x = x·f(x); equals R_f(x).
ArrId gamma_sg_action(const FiniteGroupoid& G, const SelfMap& f, ArrId x);

}  // namespace gpdrep

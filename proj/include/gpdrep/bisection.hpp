#pragma once

#include <optional>
#include <vector>

#include "gpdrep/groupoid.hpp"

namespace gpdrep {

struct SelfMap;

/// A bisection σ: M → G with target∘σ = id and source∘σ a bijection of M.
/// Ordered lexicographically by arrow ids, which is the canonical order used
/// by every enumeration.
struct Bisection {
  std::vector<ArrId> values;

  ArrId operator()(ObjId m) const { return values[m.index]; }
  friend auto operator<=>(const Bisection&, const Bisection&) = default;
};

bool bis_validate(const FiniteGroupoid& G, const Bisection& s);

/// m ↦ 1_m.
Bisection bis_unit(const FiniteGroupoid& G);

/// (σ1⋆σ2)(x) = σ1(x)·σ2(α(σ1(x))).
Bisection bis_multiply(const FiniteGroupoid& G, const Bisection& s1, const Bisection& s2);

/// σ⁻¹(x) = (σ((α∘σ)⁻¹(x)))⁻¹.
Bisection bis_invert(const FiniteGroupoid& G, const Bisection& s);

/// α_*(σ) = α∘σ as a table over objects.
std::vector<ObjId> source_map(const FiniteGroupoid& G, const Bisection& s);

/// Every bisection of G, duplicate-free, in canonical order.
std::vector<Bisection> enumerate_bisections(const FiniteGroupoid& G);

/// Witness data for the enough-bisections property.
struct EnoughBisections {
  bool holds = false;
  /// witness[g] is the first enumerated σ with σ(target(g)) = g.
  std::vector<std::optional<Bisection>> witness;
};

EnoughBisections has_enough_bisections(const FiniteGroupoid& G,
                                       const std::vector<Bisection>& bisections);
EnoughBisections has_enough_bisections(const FiniteGroupoid& G);

/// Ψ(σ) = σ∘α, an element of S_G(α).
SelfMap psi_embed(const FiniteGroupoid& G, const Bisection& s);

/// γ(σ, x) = x·σ(α(x)); a right action of Bis(G) on the arrows.
ArrId gamma_bis_action(const FiniteGroupoid& G, const Bisection& s, ArrId x);

}  // namespace gpdrep

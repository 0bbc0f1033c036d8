#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpdrep/bisection.hpp"
#include "gpdrep/bundle.hpp"
#include "gpdrep/selfmap.hpp"
#include "gpdrep/semilinear.hpp"

namespace gpdrep {

/// A representation φ: G → Φ(E). arrow_maps[g] is the matrix of
/// φ(g): E_{α(g)} → E_{β(g)}.
struct GroupoidRep {
  VectorBundle bundle;
  std::vector<Matrix> arrow_maps;

  const Matrix& operator()(ArrId g) const { return arrow_maps[g.index]; }
  FrameArrow frame_arrow(const FiniteGroupoid& G, ArrId g) const;

  friend bool operator==(const GroupoidRep& a, const GroupoidRep& b);
};

/// Exhaustive check of shapes, invertibility, units, inverses and
/// φ(gh) = φ(g)φ(h) over every composable pair.
ValidationReport validate_groupoid_rep(const FiniteGroupoid& G, const GroupoidRep& phi);

/// The representation with every matrix the identity; needs all fibers in a
/// connected component to share a dimension.
GroupoidRep trivial_rep(const FiniteGroupoid& G, const VectorBundle& E);

/// First pair (σ1, σ2) with ρ(σ1⋆σ2) ≠ ρ(σ1)∘ρ(σ2), a product missing from
/// the table, or a unit not sent to the identity. Nullopt for homomorphisms.
std::optional<std::string> homomorphism_violation(const FiniteGroupoid& G, const BisRep& rho);
std::optional<std::string> homomorphism_violation(const FiniteGroupoid& G, const SGRep& rho);

/// ρ_φ(σ) as a semi-linear map: carrier b = (α∘σ)⁻¹, F_{α(σ(m))} = φ(σ(m)).
SemiLinearMap induced_bis_map(const FiniteGroupoid& G, const GroupoidRep& phi,
                              const Bisection& s);
/// ρ_φ(σ)(ξ)(m) = φ(σ(m)) ξ(α(σ(m))), evaluated pointwise.
Section apply_induced_bis(const FiniteGroupoid& G, const GroupoidRep& phi, const Bisection& s,
                          const Section& xi);
/// ρ_φ tabulated over all of Bis(G). Throws InvalidRep when φ is invalid.
BisRep induce_bis_rep(const FiniteGroupoid& G, const GroupoidRep& phi);

/// Recovers φ from a local semi-linear Bis(G)-representation, evaluating
/// φ(g)h = (ρ(σ_g)ξ_h)(β(g)) with ξ_h the delta section through h.
///
/// Verifies the hypotheses first (coverage of Bis(G), homomorphism,
/// semi-linearity, locality, enough bisections). Then checks that the base
/// bijection of every ρ(σ_g) sends α(g) to β(g), and that every bisection
/// through g yields the same φ(g). Failures raise NotHomomorphism,
/// NotSemilinear, NotLocal, NotEnoughBisections or ChoiceDependent.
GroupoidRep recover_groupoid_rep(const FiniteGroupoid& G, const BisRep& rho);

/// ρ_{φ,S}(f) as a semi-linear map on Γ(α*E): carrier b = R_f⁻¹ and
/// F_{R_f(x)} = φ(f(x)).
SemiLinearMap induced_sg_map(const FiniteGroupoid& G, const GroupoidRep& phi, const SelfMap& f);
/// ρ_{φ,S}(f)(ξ)(x) = φ(f(x)) ξ(R_f(x)), evaluated pointwise.
Section apply_induced_sg(const FiniteGroupoid& G, const GroupoidRep& phi, const SelfMap& f,
                         const Section& xi);
/// ρ_{φ,S} tabulated over S_G(α). Throws InvalidRep or TooLarge.
SGRep induce_sg_rep(const FiniteGroupoid& G, const GroupoidRep& phi,
                    std::uint64_t max_space = kDefaultSelfMapSpace);

/// ρ_B(σ)ξ at α(x) is ρ_S(Ψ(σ))(ψξ) at x. Throws NotConstantOnFibers when
/// the right-hand side varies along an α-fiber, NotSemilinear when the
/// resulting map is not semi-linear, UnknownElement when Ψ(σ) is missing.
BisRep restrict_to_bis(const FiniteGroupoid& G, const SGRep& rho_s, const VectorBundle& E);

struct SgRecovery {
  GroupoidRep rep;
  /// Informational: whether ρ_{φ,S} and ρ_S agree on all of G, not only on M.
  bool agrees_everywhere = false;
};

/// φ(g)h = (ρ_S(Ψ(σ_g)) ψ(ξ_h))(1_{β(g)}). Verifies homomorphism, locality
/// and enough bisections, then asserts that ρ_{φ,S}(f)ξ and ρ_S(f)ξ agree
/// at every unit arrow for all f and all delta sections ξ of α*E.
SgRecovery recover_from_sg_rep(const FiniteGroupoid& G, const SGRep& rho_s,
                               const VectorBundle& E);

/// The section maps induced by an intertwiner δ: φ1 → φ2.
struct TransferredMorphism {
  /// X ↦ δ∘X on Γ(E).
  BundleMorphism on_sections;
  /// Y ↦ (α*δ)∘Y on Γ(α*E).
  BundleMorphism on_pullback_sections;

  friend bool operator==(const TransferredMorphism&, const TransferredMorphism&) = default;
};

/// Checks δ_{β(g)} φ1(g) = φ2(g) δ_{α(g)} for every arrow; throws NotEquivariant.
void require_equivariant(const FiniteGroupoid& G, const GroupoidRep& phi1,
                         const GroupoidRep& phi2, const BundleMorphism& delta);
TransferredMorphism rep_morphism_transfer(const FiniteGroupoid& G, const GroupoidRep& phi1,
                                          const GroupoidRep& phi2, const BundleMorphism& delta);

}  // namespace gpdrep

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "gpdrep/bisection.hpp"
#include "gpdrep/bundle.hpp"
#include "gpdrep/error.hpp"
#include "gpdrep/selfmap.hpp"

namespace gpdrep {

/// A semi-linear isomorphism of Γ(E), stored as its carrier automorphism
/// (F, b) and acting by ξ ↦ F∘ξ∘b⁻¹. It satisfies μ(f·ξ) = (f∘b⁻¹)·μ(ξ).
class SemiLinearMap {
 public:
  SemiLinearMap() = default;
  explicit SemiLinearMap(BundleAutomorphism carrier) : carrier_(std::move(carrier)) {}

  const BundleAutomorphism& carrier() const { return carrier_; }
  /// The base bijection b of the carrier.
  const std::vector<BasePoint>& base_bijection() const { return carrier_.base_map; }

  /// (μξ)(b(x)) = F_x ξ(x).
  Section operator()(const Section& xi) const;

  friend bool operator==(const SemiLinearMap&, const SemiLinearMap&) = default;

 private:
  BundleAutomorphism carrier_;
};

SemiLinearMap compose(const SemiLinearMap& a, const SemiLinearMap& b);
SemiLinearMap inverse(const SemiLinearMap& a);
SemiLinearMap identity_map(const VectorBundle& E);

/// An arbitrary linear map of Γ(E) written in the delta basis.
struct SectionMatrix {
  VectorBundle bundle;
  Matrix matrix;

  Section operator()(const Section& xi) const;
  friend bool operator==(const SectionMatrix& a, const SectionMatrix& b) {
    return a.bundle == b.bundle && same_matrix(a.matrix, b.matrix);
  }
};

/// Matrix of μ, obtained by applying μ to every delta section.
SectionMatrix to_section_matrix(const VectorBundle& E, const SemiLinearMap& mu);

/// ν(F, b) = (ξ ↦ F∘ξ∘b⁻¹). Validates F against E.
SemiLinearMap nu(const VectorBundle& E, const BundleAutomorphism& F);

/// Recovers the base bijection b with μ(f·ξ) = (f∘b⁻¹)·μ(ξ) by tracking
/// where sections supported at a single point are sent. Nullopt when μ is
/// singular or some point's support spreads. Points with zero-dimensional
/// fibers carry no information and are mapped to themselves.
std::optional<std::vector<BasePoint>> is_semilinear(const SectionMatrix& mu);

/// The inverse of ν: (φ_μ, μ_M) with φ_μ(v) = μ(X_v)(μ_M(π(v))), where X_v
/// is the delta section through v. Throws NotSemilinear.
BundleAutomorphism nu_inverse(const SectionMatrix& mu);

/// Exhaustive check of μ(f·ξ) = (f∘b⁻¹)·μ(ξ) over indicator functions f and
/// delta sections ξ, where b is the carrier bijection.
bool semilinear_identity_holds(const VectorBundle& E, const SemiLinearMap& mu);

/// A bisection of the frame groupoid Φ(E): value(x) is a frame arrow with
/// target x, and x ↦ value(x).source is a bijection.
struct FrameBisection {
  std::vector<FrameArrow> values;

  const FrameArrow& operator()(BasePoint x) const { return values[x]; }
  friend bool operator==(const FrameBisection&, const FrameBisection&) = default;
};

bool frame_bis_validate(const VectorBundle& E, const FrameBisection& s);
FrameBisection frame_bis_unit(const VectorBundle& E);
/// (σ1⋆σ2)(x) = σ1(x)∘σ2(source(σ1(x))), the bisection product with frame
/// composition as the arrow product.
FrameBisection frame_bis_multiply(const FrameBisection& s1, const FrameBisection& s2);
FrameBisection frame_bis_invert(const FrameBisection& s);

/// B(σ)(v) = σ((α∘σ)⁻¹(π(v))).v; covers (α∘σ)⁻¹. Throws InvalidBisection.
BundleAutomorphism bisection_to_bundle_aut(const VectorBundle& E, const FrameBisection& s);
/// (F, b) ↦ (x ↦ F restricted to E_{b⁻¹(x)}).
FrameBisection bundle_aut_to_bisection(const VectorBundle& E, const BundleAutomorphism& F);

/// γ(σ)(ξ)(x) = σ(x).ξ(α(σ(x))), evaluated pointwise.
Section gamma_apply(const FrameBisection& s, const Section& xi);
/// γ(σ) as a semi-linear map, assembled from gamma_apply on the delta basis.
SemiLinearMap gamma_iso(const VectorBundle& E, const FrameBisection& s);

/// A representation tabulated over a finite group: images[i] is the
/// semi-linear map assigned to elements[i]. Elements are kept sorted.
template <typename Element>
struct RepTable {
  VectorBundle bundle;
  std::vector<Element> elements;
  std::vector<SemiLinearMap> images;

  std::size_t size() const { return elements.size(); }

  std::optional<std::size_t> index_of(const Element& e) const {
    const auto it = std::lower_bound(elements.begin(), elements.end(), e);
    if (it == elements.end() || *it != e) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - elements.begin());
  }

  const SemiLinearMap& at(const Element& e) const {
    const auto i = index_of(e);
    if (!i) {
      throw Error(ErrorKind::UnknownElement, "group element not in the representation table");
    }
    return images[*i];
  }

  friend bool operator==(const RepTable&, const RepTable&) = default;
};

/// Representation of Bis(G) on Γ(E).
using BisRep = RepTable<Bisection>;
/// Representation of S_G(α) on Γ(α*E).
using SGRep = RepTable<SelfMap>;

/// Sorts (element, image) pairs into a table; throws UnknownElement on duplicates.
template <typename Element>
RepTable<Element> make_rep_table(VectorBundle bundle, std::vector<Element> elements,
                                 std::vector<SemiLinearMap> images) {
  if (elements.size() != images.size()) {
    throw Error(ErrorKind::DimensionMismatch, "one image per group element is required");
  }
  std::vector<std::size_t> order(elements.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return elements[a] < elements[b]; });
  RepTable<Element> table;
  table.bundle = std::move(bundle);
  for (std::size_t i : order) {
    if (!table.elements.empty() && table.elements.back() == elements[i]) {
      throw Error(ErrorKind::UnknownElement, "duplicate group element in representation table");
    }
    table.elements.push_back(elements[i]);
    table.images.push_back(images[i]);
  }
  return table;
}

/// Converts abstract section-space matrices into a representation table via
/// nu_inverse. Throws NotSemilinear if any matrix is not semi-linear.
template <typename Element>
RepTable<Element> rep_from_section_matrices(const VectorBundle& bundle,
                                            std::vector<Element> elements,
                                            const std::vector<Matrix>& matrices) {
  std::vector<SemiLinearMap> images;
  for (const Matrix& m : matrices) {
    images.emplace_back(nu_inverse(SectionMatrix{bundle, m}));
  }
  return make_rep_table(bundle, std::move(elements), std::move(images));
}

/// First locality failure of a Bis(G)-representation: some σ with σ(m) = 1_m
/// and a section ξ with (ρ(σ)ξ)(m) ≠ ξ(m). Nullopt when local.
std::optional<std::string> locality_violation(const FiniteGroupoid& G, const BisRep& rho);
/// Same for S_G(α): f with f(g) = 1_{α(g)} must leave every ξ fixed at g.
std::optional<std::string> locality_violation(const FiniteGroupoid& G, const SGRep& rho);

bool is_local_bis(const FiniteGroupoid& G, const BisRep& rho);
bool is_local_sg(const FiniteGroupoid& G, const SGRep& rho);

}  // namespace gpdrep

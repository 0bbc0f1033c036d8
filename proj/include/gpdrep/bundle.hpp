#pragma once

#include <cstddef>
#include <vector>

#include "gpdrep/groupoid.hpp"
#include "gpdrep/matrix.hpp"

namespace gpdrep {

/// Index of a point of a bundle's base. Bases are either the objects of a
/// groupoid or, for pullback bundles, its arrows.
using BasePoint = std::size_t;

/// A vector bundle over a finite base, described by its fiber dimensions.
class VectorBundle {
 public:
  VectorBundle() = default;
  explicit VectorBundle(std::vector<std::size_t> dims);

  std::size_t base_size() const { return dims_.size(); }
  std::size_t dim(BasePoint x) const { return dims_[x]; }
  const std::vector<std::size_t>& dims() const { return dims_; }

  /// Dimension of the section space Γ(E): the sum of fiber dimensions.
  std::size_t total_dim() const { return offsets_.back(); }
  /// Position of the first coordinate of fiber x in the delta basis.
  std::size_t offset(BasePoint x) const { return offsets_[x]; }

  friend bool operator==(const VectorBundle& a, const VectorBundle& b) {
    return a.dims_ == b.dims_;
  }

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> offsets_{0};
};

/// A section: one vector per base point, sized to that point's fiber.
struct Section {
  std::vector<Vector> values;

  const Vector& at(BasePoint x) const { return values[x]; }
  Vector& at(BasePoint x) { return values[x]; }
  std::size_t size() const { return values.size(); }

  friend bool operator==(const Section& a, const Section& b);
};

Section zero_section(const VectorBundle& E);
/// The delta section ξ with ξ(x) = e_coord and zero elsewhere.
Section delta_section(const VectorBundle& E, BasePoint x, std::size_t coord);
/// All delta sections in basis order (point-major, then coordinate).
std::vector<Section> delta_basis(const VectorBundle& E);

/// Checks that `s` has the right shape for `E`; throws DimensionMismatch.
void require_section_of(const VectorBundle& E, const Section& s);

/// Coordinates of a section in the delta basis.
Vector flatten(const VectorBundle& E, const Section& s);
Section unflatten(const VectorBundle& E, const Vector& v);

Section add(const Section& a, const Section& b);
Section scale(const Rational& c, const Section& s);
/// (f·ξ)(x) = f(x)·ξ(x) for a scalar function f on the base.
Section module_action(const std::vector<Rational>& f, const Section& s);

/// A linear isomorphism between fibers of a bundle: an arrow of the frame
/// groupoid Φ(E). `matrix` has shape dim(target)×dim(source).
struct FrameArrow {
  BasePoint source = 0;
  BasePoint target = 0;
  Matrix matrix;

  friend bool operator==(const FrameArrow& a, const FrameArrow& b) {
    return a.source == b.source && a.target == b.target && same_matrix(a.matrix, b.matrix);
  }
};

/// Validates shape against E and invertibility; throws DimensionMismatch or
/// NotInvertible.
FrameArrow make_frame_arrow(const VectorBundle& E, BasePoint source, BasePoint target,
                            Matrix matrix);
FrameArrow frame_identity(const VectorBundle& E, BasePoint x);
/// a∘b; throws NotComposable unless source(a) == target(b).
FrameArrow frame_compose(const FrameArrow& a, const FrameArrow& b);
FrameArrow frame_inverse(const FrameArrow& a);

/// Base-preserving bundle morphism E → F, one matrix δ_x: E_x → F_x per point.
struct BundleMorphism {
  std::vector<Matrix> maps;

  friend bool operator==(const BundleMorphism& a, const BundleMorphism& b);
};

BundleMorphism identity_morphism(const VectorBundle& E);
/// Throws DimensionMismatch if the matrices do not map E_x into F_x.
void require_morphism(const VectorBundle& E, const VectorBundle& F, const BundleMorphism& d);
/// (δ∘ξ)(x) = δ_x ξ(x).
Section apply_bundle_morphism(const BundleMorphism& d, const Section& s);
/// (a∘b)_x = a_x b_x.
BundleMorphism compose(const BundleMorphism& a, const BundleMorphism& b);

/// Bundle automorphism (F, b): a bijection b of the base together with
/// invertible fiber maps F_x: E_x → E_{b(x)}.
struct BundleAutomorphism {
  std::vector<BasePoint> base_map;
  std::vector<Matrix> fiber_maps;

  std::size_t base_size() const { return base_map.size(); }

  friend bool operator==(const BundleAutomorphism& a, const BundleAutomorphism& b);
};

BundleAutomorphism identity_automorphism(const VectorBundle& E);
/// Throws DimensionMismatch for wrong shapes and NotInvertible for a singular
/// fiber map or a non-bijective base map.
void require_automorphism(const VectorBundle& E, const BundleAutomorphism& F);
/// (F∘G)_x = F_{b_G(x)} G_x, covering b_F∘b_G.
BundleAutomorphism compose(const BundleAutomorphism& a, const BundleAutomorphism& b);
BundleAutomorphism inverse(const BundleAutomorphism& a);

/// Inverse of a bijection given as a table.
std::vector<BasePoint> invert_bijection(const std::vector<BasePoint>& b);
bool is_bijection(const std::vector<BasePoint>& b);

/// The pullback α*E over the arrows of G: fiber at x is E_{α(x)}.
VectorBundle pullback_bundle(const FiniteGroupoid& G, const VectorBundle& E);
/// ψ: Γ(E) → Γ(α*E), ξ ↦ ξ∘α.
Section pullback_section(const FiniteGroupoid& G, const VectorBundle& E, const Section& s);
/// α*δ: the morphism α*E → α*F with (α*δ)_x = δ_{α(x)}.
BundleMorphism pullback_morphism(const FiniteGroupoid& G, const BundleMorphism& d);

}  // namespace gpdrep

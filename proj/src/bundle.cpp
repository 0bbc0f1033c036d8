#include "gpdrep/bundle.hpp"

#include <string>

#include "gpdrep/error.hpp"

namespace gpdrep {

namespace {

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

VectorBundle::VectorBundle(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  offsets_.reserve(dims_.size() + 1);
  for (std::size_t d : dims_) {
    offsets_.push_back(offsets_.back() + d);
  }
}

bool operator==(const Section& a, const Section& b) {
  if (a.values.size() != b.values.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (!same_matrix(a.values[i], b.values[i])) {
      return false;
    }
  }
  return true;
}

Section zero_section(const VectorBundle& E) {
  Section s;
  s.values.reserve(E.base_size());
  for (std::size_t x = 0; x < E.base_size(); ++x) {
    s.values.push_back(Vector::Zero(static_cast<Eigen::Index>(E.dim(x))));
  }
  return s;
}

Section delta_section(const VectorBundle& E, BasePoint x, std::size_t coord) {
  Section s = zero_section(E);
  s.at(x)(static_cast<Eigen::Index>(coord)) = 1;
  return s;
}

std::vector<Section> delta_basis(const VectorBundle& E) {
  std::vector<Section> basis;
  basis.reserve(E.total_dim());
  for (std::size_t x = 0; x < E.base_size(); ++x) {
    for (std::size_t i = 0; i < E.dim(x); ++i) {
      basis.push_back(delta_section(E, x, i));
    }
  }
  return basis;
}

void require_section_of(const VectorBundle& E, const Section& s) {
  if (s.size() != E.base_size()) {
    throw Error(ErrorKind::DimensionMismatch, "section has " + std::to_string(s.size()) +
                                                  " values, base has " +
                                                  std::to_string(E.base_size()) + " points");
  }
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (static_cast<std::size_t>(s.at(x).size()) != E.dim(x)) {
      throw Error(ErrorKind::DimensionMismatch,
                  "section value at point " + std::to_string(x) + " has length " +
                      std::to_string(s.at(x).size()) + ", fiber dimension is " +
                      std::to_string(E.dim(x)));
    }
  }
}

Vector flatten(const VectorBundle& E, const Section& s) {
  require_section_of(E, s);
  Vector v(static_cast<Eigen::Index>(E.total_dim()));
  for (std::size_t x = 0; x < E.base_size(); ++x) {
    v.segment(static_cast<Eigen::Index>(E.offset(x)), static_cast<Eigen::Index>(E.dim(x))) =
        s.at(x);
  }
  return v;
}

Section unflatten(const VectorBundle& E, const Vector& v) {
  if (static_cast<std::size_t>(v.size()) != E.total_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "coordinate vector does not match the bundle");
  }
  Section s;
  for (std::size_t x = 0; x < E.base_size(); ++x) {
    s.values.push_back(
        v.segment(static_cast<Eigen::Index>(E.offset(x)), static_cast<Eigen::Index>(E.dim(x))));
  }
  return s;
}

Section add(const Section& a, const Section& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::DimensionMismatch, "sections over different bases");
  }
  Section out;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a.at(x).size() != b.at(x).size()) {
      throw Error(ErrorKind::DimensionMismatch,
                  "fiber lengths differ at point " + std::to_string(x));
    }
    out.values.push_back(a.at(x) + b.at(x));
  }
  return out;
}

Section scale(const Rational& c, const Section& s) {
  Section out;
  for (const Vector& v : s.values) {
    out.values.push_back(c * v);
  }
  return out;
}

Section module_action(const std::vector<Rational>& f, const Section& s) {
  if (f.size() != s.size()) {
    throw Error(ErrorKind::DimensionMismatch, "scalar function and section over different bases");
  }
  Section out;
  for (std::size_t x = 0; x < s.size(); ++x) {
    out.values.push_back(f[x] * s.at(x));
  }
  return out;
}

FrameArrow make_frame_arrow(const VectorBundle& E, BasePoint source, BasePoint target,
                            Matrix matrix) {
  if (source >= E.base_size() || target >= E.base_size()) {
    throw Error(ErrorKind::DimensionMismatch, "frame arrow endpoint outside the base");
  }
  if (static_cast<std::size_t>(matrix.rows()) != E.dim(target) ||
      static_cast<std::size_t>(matrix.cols()) != E.dim(source)) {
    throw Error(ErrorKind::DimensionMismatch,
                "frame arrow " + std::to_string(source) + " -> " + std::to_string(target) +
                    " has shape " + shape(matrix));
  }
  if (!is_invertible(matrix)) {
    throw Error(ErrorKind::NotInvertible, "frame arrow " + std::to_string(source) + " -> " +
                                              std::to_string(target) + " is singular");
  }
  return FrameArrow{source, target, std::move(matrix)};
}

FrameArrow frame_identity(const VectorBundle& E, BasePoint x) {
  const auto d = static_cast<Eigen::Index>(E.dim(x));
  return FrameArrow{x, x, Matrix::Identity(d, d)};
}

FrameArrow frame_compose(const FrameArrow& a, const FrameArrow& b) {
  if (a.source != b.target || a.matrix.cols() != b.matrix.rows()) {
    throw Error(ErrorKind::NotComposable, "frame arrows " + std::to_string(b.source) + "->" +
                                              std::to_string(b.target) + " and " +
                                              std::to_string(a.source) + "->" +
                                              std::to_string(a.target));
  }
  return FrameArrow{b.source, a.target, a.matrix * b.matrix};
}

FrameArrow frame_inverse(const FrameArrow& a) {
  auto inv = exact_inverse(a.matrix);
  if (!inv) {
    throw Error(ErrorKind::NotInvertible, "singular frame arrow");
  }
  return FrameArrow{a.target, a.source, std::move(*inv)};
}

bool operator==(const BundleMorphism& a, const BundleMorphism& b) {
  if (a.maps.size() != b.maps.size()) {
    return false;
  }
  for (std::size_t x = 0; x < a.maps.size(); ++x) {
    if (!same_matrix(a.maps[x], b.maps[x])) {
      return false;
    }
  }
  return true;
}

BundleMorphism identity_morphism(const VectorBundle& E) {
  BundleMorphism d;
  for (std::size_t x = 0; x < E.base_size(); ++x) {
    const auto n = static_cast<Eigen::Index>(E.dim(x));
    d.maps.push_back(Matrix::Identity(n, n));
  }
  return d;
}

void require_morphism(const VectorBundle& E, const VectorBundle& F, const BundleMorphism& d) {
  if (E.base_size() != F.base_size() || d.maps.size() != E.base_size()) {
    throw Error(ErrorKind::DimensionMismatch, "bundle morphism is not base preserving");
  }
  for (std::size_t x = 0; x < d.maps.size(); ++x) {
    if (static_cast<std::size_t>(d.maps[x].rows()) != F.dim(x) ||
        static_cast<std::size_t>(d.maps[x].cols()) != E.dim(x)) {
      throw Error(ErrorKind::DimensionMismatch,
                  "morphism at point " + std::to_string(x) + " has shape " + shape(d.maps[x]));
    }
  }
}

Section apply_bundle_morphism(const BundleMorphism& d, const Section& s) {
  if (d.maps.size() != s.size()) {
    throw Error(ErrorKind::DimensionMismatch, "morphism and section over different bases");
  }
  Section out;
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (d.maps[x].cols() != s.at(x).size()) {
      throw Error(ErrorKind::DimensionMismatch,
                  "morphism at point " + std::to_string(x) + " cannot act on the section");
    }
    out.values.push_back(d.maps[x] * s.at(x));
  }
  return out;
}

BundleMorphism compose(const BundleMorphism& a, const BundleMorphism& b) {
  if (a.maps.size() != b.maps.size()) {
    throw Error(ErrorKind::DimensionMismatch, "morphisms over different bases");
  }
  BundleMorphism out;
  for (std::size_t x = 0; x < a.maps.size(); ++x) {
    if (a.maps[x].cols() != b.maps[x].rows()) {
      throw Error(ErrorKind::DimensionMismatch, "morphisms do not compose at point " +
                                                    std::to_string(x));
    }
    out.maps.push_back(a.maps[x] * b.maps[x]);
  }
  return out;
}

bool operator==(const BundleAutomorphism& a, const BundleAutomorphism& b) {
  if (a.base_map != b.base_map || a.fiber_maps.size() != b.fiber_maps.size()) {
    return false;
  }
  for (std::size_t x = 0; x < a.fiber_maps.size(); ++x) {
    if (!same_matrix(a.fiber_maps[x], b.fiber_maps[x])) {
      return false;
    }
  }
  return true;
}

BundleAutomorphism identity_automorphism(const VectorBundle& E) {
  BundleAutomorphism F;
  for (std::size_t x = 0; x < E.base_size(); ++x) {
    F.base_map.push_back(x);
    const auto n = static_cast<Eigen::Index>(E.dim(x));
    F.fiber_maps.push_back(Matrix::Identity(n, n));
  }
  return F;
}

bool is_bijection(const std::vector<BasePoint>& b) {
  std::vector<bool> hit(b.size(), false);
  for (BasePoint y : b) {
    if (y >= b.size() || hit[y]) {
      return false;
    }
    hit[y] = true;
  }
  return true;
}

std::vector<BasePoint> invert_bijection(const std::vector<BasePoint>& b) {
  if (!is_bijection(b)) {
    throw Error(ErrorKind::NotInvertible, "base map is not a bijection");
  }
  std::vector<BasePoint> inv(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) {
    inv[b[x]] = x;
  }
  return inv;
}

void require_automorphism(const VectorBundle& E, const BundleAutomorphism& F) {
  if (F.base_map.size() != E.base_size() || F.fiber_maps.size() != E.base_size()) {
    throw Error(ErrorKind::DimensionMismatch, "automorphism is over a different base");
  }
  if (!is_bijection(F.base_map)) {
    throw Error(ErrorKind::NotInvertible, "automorphism base map is not a bijection");
  }
  for (std::size_t x = 0; x < E.base_size(); ++x) {
    const Matrix& m = F.fiber_maps[x];
    if (static_cast<std::size_t>(m.rows()) != E.dim(F.base_map[x]) ||
        static_cast<std::size_t>(m.cols()) != E.dim(x)) {
      throw Error(ErrorKind::DimensionMismatch,
                  "automorphism fiber map at point " + std::to_string(x) + " has shape " +
                      shape(m));
    }
    if (!is_invertible(m)) {
      throw Error(ErrorKind::NotInvertible,
                  "automorphism fiber map at point " + std::to_string(x) + " is singular");
    }
  }
}

BundleAutomorphism compose(const BundleAutomorphism& a, const BundleAutomorphism& b) {
  if (a.base_size() != b.base_size()) {
    throw Error(ErrorKind::DimensionMismatch, "automorphisms over different bases");
  }
  BundleAutomorphism out;
  for (std::size_t x = 0; x < b.base_size(); ++x) {
    const BasePoint y = b.base_map[x];
    if (a.fiber_maps[y].cols() != b.fiber_maps[x].rows()) {
      throw Error(ErrorKind::DimensionMismatch, "automorphisms do not compose");
    }
    out.base_map.push_back(a.base_map[y]);
    out.fiber_maps.push_back(a.fiber_maps[y] * b.fiber_maps[x]);
  }
  return out;
}

BundleAutomorphism inverse(const BundleAutomorphism& a) {
  BundleAutomorphism out;
  out.base_map = invert_bijection(a.base_map);
  out.fiber_maps.resize(a.base_size());
  for (std::size_t x = 0; x < a.base_size(); ++x) {
    auto inv = exact_inverse(a.fiber_maps[x]);
    if (!inv) {
      throw Error(ErrorKind::NotInvertible, "automorphism fiber map is singular");
    }
    // F_x: E_x -> E_{b(x)}, so the inverse at b(x) maps back to E_x
    out.fiber_maps[a.base_map[x]] = std::move(*inv);
  }
  return out;
}

VectorBundle pullback_bundle(const FiniteGroupoid& G, const VectorBundle& E) {
  if (E.base_size() != G.num_objects()) {
    throw Error(ErrorKind::DimensionMismatch, "bundle is not over the objects of G");
  }
  std::vector<std::size_t> dims;
  dims.reserve(G.num_arrows());
  for (std::size_t x = 0; x < G.num_arrows(); ++x) {
    dims.push_back(E.dim(G.source(arr(x)).index));
  }
  return VectorBundle(std::move(dims));
}

Section pullback_section(const FiniteGroupoid& G, const VectorBundle& E, const Section& s) {
  require_section_of(E, s);
  Section out;
  out.values.reserve(G.num_arrows());
  for (std::size_t x = 0; x < G.num_arrows(); ++x) {
    out.values.push_back(s.at(G.source(arr(x)).index));
  }
  return out;
}

BundleMorphism pullback_morphism(const FiniteGroupoid& G, const BundleMorphism& d) {
  if (d.maps.size() != G.num_objects()) {
    throw Error(ErrorKind::DimensionMismatch, "morphism is not over the objects of G");
  }
  BundleMorphism out;
  for (std::size_t x = 0; x < G.num_arrows(); ++x) {
    out.maps.push_back(d.maps[G.source(arr(x)).index]);
  }
  return out;
}

}  // namespace gpdrep

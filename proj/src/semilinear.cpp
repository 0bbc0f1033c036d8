#include "gpdrep/semilinear.hpp"

#include <string>

namespace gpdrep {

Section SemiLinearMap::operator()(const Section& xi) const {
  const auto& b = carrier_.base_map;
  if (xi.size() != b.size()) {
    throw Error(ErrorKind::DimensionMismatch, "section and semi-linear map over different bases");
  }
  Section out;
  out.values.resize(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) {
    const Matrix& F = carrier_.fiber_maps[x];
    if (F.cols() != xi.at(x).size()) {
      throw Error(ErrorKind::DimensionMismatch,
                  "fiber map at point " + std::to_string(x) + " cannot act on the section");
    }
    out.values[b[x]] = F * xi.at(x);
  }
  return out;
}

SemiLinearMap compose(const SemiLinearMap& a, const SemiLinearMap& b) {
  return SemiLinearMap(compose(a.carrier(), b.carrier()));
}

SemiLinearMap inverse(const SemiLinearMap& a) { return SemiLinearMap(inverse(a.carrier())); }

SemiLinearMap identity_map(const VectorBundle& E) {
  return SemiLinearMap(identity_automorphism(E));
}

Section SectionMatrix::operator()(const Section& xi) const {
  return unflatten(bundle, Vector(matrix * flatten(bundle, xi)));
}

SectionMatrix to_section_matrix(const VectorBundle& E, const SemiLinearMap& mu) {
  const auto n = static_cast<Eigen::Index>(E.total_dim());
  SectionMatrix out{E, Matrix::Zero(n, n)};
  Eigen::Index col = 0;
  for (const Section& delta : delta_basis(E)) {
    out.matrix.col(col++) = flatten(E, mu(delta));
  }
  return out;
}

SemiLinearMap nu(const VectorBundle& E, const BundleAutomorphism& F) {
  require_automorphism(E, F);
  return SemiLinearMap(F);
}

std::optional<std::vector<BasePoint>> is_semilinear(const SectionMatrix& mu) {
  const VectorBundle& E = mu.bundle;
  const auto n = static_cast<Eigen::Index>(E.total_dim());
  if (mu.matrix.rows() != n || mu.matrix.cols() != n || !is_invertible(mu.matrix)) {
    return std::nullopt;
  }
  std::vector<BasePoint> b(E.base_size());
  std::vector<bool> hit(E.base_size(), false);
  for (BasePoint m = 0; m < E.base_size(); ++m) {
    if (E.dim(m) == 0) {
      continue;
    }
    std::optional<BasePoint> image;
    for (BasePoint p = 0; p < E.base_size(); ++p) {
      if (E.dim(p) == 0) {
        continue;
      }
      const auto block = mu.matrix.block(
          static_cast<Eigen::Index>(E.offset(p)), static_cast<Eigen::Index>(E.offset(m)),
          static_cast<Eigen::Index>(E.dim(p)), static_cast<Eigen::Index>(E.dim(m)));
      if (is_zero(block)) {
        continue;
      }
      if (image) {
        return std::nullopt;  // support at m spreads over two points
      }
      image = p;
    }
    if (!image || hit[*image] || E.dim(*image) != E.dim(m)) {
      return std::nullopt;
    }
    hit[*image] = true;
    b[m] = *image;
  }
  for (BasePoint m = 0; m < E.base_size(); ++m) {
    if (E.dim(m) == 0) {
      b[m] = m;
    }
  }
  return b;
}

BundleAutomorphism nu_inverse(const SectionMatrix& mu) {
  const auto b = is_semilinear(mu);
  if (!b) {
    throw Error(ErrorKind::NotSemilinear,
                "map does not send sections supported at a point to sections supported at a point");
  }
  const VectorBundle& E = mu.bundle;
  BundleAutomorphism F;
  F.base_map = *b;
  for (BasePoint m = 0; m < E.base_size(); ++m) {
    const auto rows = static_cast<Eigen::Index>(E.dim((*b)[m]));
    const auto cols = static_cast<Eigen::Index>(E.dim(m));
    Matrix fiber(rows, cols);
    for (Eigen::Index i = 0; i < cols; ++i) {
      const Section image = mu(delta_section(E, m, static_cast<std::size_t>(i)));
      fiber.col(i) = image.at((*b)[m]);
    }
    F.fiber_maps.push_back(std::move(fiber));
  }
  return F;
}

bool semilinear_identity_holds(const VectorBundle& E, const SemiLinearMap& mu) {
  const std::vector<BasePoint> b_inv = invert_bijection(mu.base_bijection());
  const std::vector<Section> basis = delta_basis(E);
  for (BasePoint p = 0; p < E.base_size(); ++p) {
    std::vector<Rational> f(E.base_size(), Rational(0));
    f[p] = 1;
    std::vector<Rational> f_moved(E.base_size());
    for (BasePoint x = 0; x < E.base_size(); ++x) {
      f_moved[x] = f[b_inv[x]];
    }
    for (const Section& xi : basis) {
      if (mu(module_action(f, xi)) != module_action(f_moved, mu(xi))) {
        return false;
      }
    }
  }
  return true;
}

bool frame_bis_validate(const VectorBundle& E, const FrameBisection& s) {
  if (s.values.size() != E.base_size()) {
    return false;
  }
  std::vector<BasePoint> sources;
  for (BasePoint x = 0; x < E.base_size(); ++x) {
    const FrameArrow& a = s(x);
    if (a.target != x || a.source >= E.base_size() ||
        static_cast<std::size_t>(a.matrix.rows()) != E.dim(x) ||
        static_cast<std::size_t>(a.matrix.cols()) != E.dim(a.source) || !is_invertible(a.matrix)) {
      return false;
    }
    sources.push_back(a.source);
  }
  return is_bijection(sources);
}

FrameBisection frame_bis_unit(const VectorBundle& E) {
  FrameBisection s;
  for (BasePoint x = 0; x < E.base_size(); ++x) {
    s.values.push_back(frame_identity(E, x));
  }
  return s;
}

FrameBisection frame_bis_multiply(const FrameBisection& s1, const FrameBisection& s2) {
  FrameBisection out;
  for (BasePoint x = 0; x < s1.values.size(); ++x) {
    out.values.push_back(frame_compose(s1(x), s2(s1(x).source)));
  }
  return out;
}

FrameBisection frame_bis_invert(const FrameBisection& s) {
  std::vector<BasePoint> back(s.values.size());
  for (BasePoint x = 0; x < s.values.size(); ++x) {
    back[s(x).source] = x;
  }
  FrameBisection out;
  for (BasePoint x = 0; x < s.values.size(); ++x) {
    out.values.push_back(frame_inverse(s(back[x])));
  }
  return out;
}

BundleAutomorphism bisection_to_bundle_aut(const VectorBundle& E, const FrameBisection& s) {
  if (!frame_bis_validate(E, s)) {
    throw Error(ErrorKind::InvalidBisection, "not a bisection of the frame groupoid");
  }
  BundleAutomorphism F;
  F.base_map.resize(E.base_size());
  F.fiber_maps.resize(E.base_size());
  for (BasePoint x = 0; x < E.base_size(); ++x) {
    // v in E_y with y = α(σ(x)) is sent by σ(x) into E_x
    const BasePoint y = s(x).source;
    F.base_map[y] = x;
    F.fiber_maps[y] = s(x).matrix;
  }
  return F;
}

FrameBisection bundle_aut_to_bisection(const VectorBundle& E, const BundleAutomorphism& F) {
  require_automorphism(E, F);
  const std::vector<BasePoint> b_inv = invert_bijection(F.base_map);
  FrameBisection s;
  for (BasePoint x = 0; x < E.base_size(); ++x) {
    const BasePoint y = b_inv[x];
    s.values.push_back(FrameArrow{y, x, F.fiber_maps[y]});
  }
  return s;
}

Section gamma_apply(const FrameBisection& s, const Section& xi) {
  Section out;
  for (BasePoint x = 0; x < s.values.size(); ++x) {
    const FrameArrow& a = s(x);
    if (a.matrix.cols() != xi.at(a.source).size()) {
      throw Error(ErrorKind::DimensionMismatch, "frame bisection cannot act on the section");
    }
    out.values.push_back(a.matrix * xi.at(a.source));
  }
  return out;
}

SemiLinearMap gamma_iso(const VectorBundle& E, const FrameBisection& s) {
  if (!frame_bis_validate(E, s)) {
    throw Error(ErrorKind::InvalidBisection, "not a bisection of the frame groupoid");
  }
  const auto n = static_cast<Eigen::Index>(E.total_dim());
  SectionMatrix m{E, Matrix::Zero(n, n)};
  Eigen::Index col = 0;
  for (const Section& delta : delta_basis(E)) {
    m.matrix.col(col++) = flatten(E, gamma_apply(s, delta));
  }
  return SemiLinearMap(nu_inverse(m));
}

namespace {

template <typename Element, typename FixedPoints, typename Describe>
std::optional<std::string> first_nonlocal(const RepTable<Element>& rho, FixedPoints fixed,
                                          Describe describe) {
  const std::vector<Section> basis = delta_basis(rho.bundle);
  for (std::size_t i = 0; i < rho.size(); ++i) {
    const std::vector<BasePoint> points = fixed(rho.elements[i]);
    if (points.empty()) {
      continue;
    }
    std::vector<Section> images;
    for (const Section& xi : basis) {
      images.push_back(rho.images[i](xi));
    }
    for (BasePoint p : points) {
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (!same_matrix(images[k].at(p), basis[k].at(p))) {
          return describe(rho.elements[i], p) + " but moves delta section #" +
                 std::to_string(k) + " there";
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> locality_violation(const FiniteGroupoid& G, const BisRep& rho) {
  return first_nonlocal(rho, [&](const Bisection& s) {
    std::vector<BasePoint> pts;
    for (std::size_t m = 0; m < G.num_objects(); ++m) {
      const ArrId u = G.unit(obj(m));
      if (gamma_bis_action(G, s, u) == u) {
        pts.push_back(m);
      }
    }
    return pts;
  }, [&](const Bisection& s, BasePoint m) {
    std::string text = "bisection (";
    for (std::size_t i = 0; i < s.values.size(); ++i) {
      text += (i ? ", " : "") + G.arrow_name(s.values[i]);
    }
    return text + ") fixes " + G.object_name(obj(m));
  });
}

std::optional<std::string> locality_violation(const FiniteGroupoid& G, const SGRep& rho) {
  return first_nonlocal(rho, [&](const SelfMap& f) {
    std::vector<BasePoint> pts;
    for (std::size_t x = 0; x < G.num_arrows(); ++x) {
      if (gamma_sg_action(G, f, arr(x)) == arr(x)) {
        pts.push_back(x);
      }
    }
    return pts;
  }, [&](const SelfMap& f, BasePoint x) {
    std::string text = "self-map (";
    for (std::size_t i = 0; i < f.values.size(); ++i) {
      text += (i ? ", " : "") + G.arrow_name(f.values[i]);
    }
    return text + ") fixes " + G.arrow_name(arr(x));
  });
}

bool is_local_bis(const FiniteGroupoid& G, const BisRep& rho) {
  return !locality_violation(G, rho).has_value();
}

bool is_local_sg(const FiniteGroupoid& G, const SGRep& rho) {
  return !locality_violation(G, rho).has_value();
}

}  // namespace gpdrep

#include "gpdrep/transfer.hpp"

#include <mutex>
#include <string>

#include "gpdrep/parallel.hpp"

namespace gpdrep {

FrameArrow GroupoidRep::frame_arrow(const FiniteGroupoid& G, ArrId g) const {
  return make_frame_arrow(bundle, G.source(g).index, G.target(g).index, arrow_maps[g.index]);
}

bool operator==(const GroupoidRep& a, const GroupoidRep& b) {
  if (!(a.bundle == b.bundle) || a.arrow_maps.size() != b.arrow_maps.size()) {
    return false;
  }
  for (std::size_t g = 0; g < a.arrow_maps.size(); ++g) {
    if (!same_matrix(a.arrow_maps[g], b.arrow_maps[g])) {
      return false;
    }
  }
  return true;
}

ValidationReport validate_groupoid_rep(const FiniteGroupoid& G, const GroupoidRep& phi) {
  ValidationReport report;
  const auto name = [&](ArrId g) { return G.arrow_name(g); };
  if (phi.bundle.base_size() != G.num_objects()) {
    report.add("bundle over objects", "bundle has " + std::to_string(phi.bundle.base_size()) +
                                          " points, groupoid has " +
                                          std::to_string(G.num_objects()) + " objects");
    return report;
  }
  if (phi.arrow_maps.size() != G.num_arrows()) {
    report.add("one matrix per arrow", std::to_string(phi.arrow_maps.size()) + " matrices for " +
                                           std::to_string(G.num_arrows()) + " arrows");
    return report;
  }
  bool shapes_ok = true;
  for (std::size_t i = 0; i < G.num_arrows(); ++i) {
    const ArrId g = arr(i);
    const Matrix& m = phi(g);
    if (static_cast<std::size_t>(m.rows()) != phi.bundle.dim(G.target(g).index) ||
        static_cast<std::size_t>(m.cols()) != phi.bundle.dim(G.source(g).index)) {
      report.add("matrix shape", name(g));
      shapes_ok = false;
    } else if (!is_invertible(m)) {
      report.add("invertible", name(g));
      shapes_ok = false;
    }
  }
  if (!shapes_ok) {
    return report;
  }
  for (std::size_t m = 0; m < G.num_objects(); ++m) {
    const Matrix& u = phi(G.unit(obj(m)));
    if (u != Matrix::Identity(u.rows(), u.cols())) {
      report.add("unit", name(G.unit(obj(m))));
    }
  }
  for (std::size_t i = 0; i < G.num_arrows(); ++i) {
    const ArrId g = arr(i);
    const auto inv = exact_inverse(phi(g));
    if (!same_matrix(*inv, phi(G.inverse(g)))) {
      report.add("inverse", name(g));
    }
    for (ArrId h : G.arrows_into(G.source(g))) {
      const auto gh = G.product(g, h);
      if (!gh) {
        continue;
      }
      if (!same_matrix(Matrix(phi(g) * phi(h)), phi(*gh))) {
        report.add("homomorphism", "(" + name(g) + ", " + name(h) + ")");
      }
    }
  }
  return report;
}

GroupoidRep trivial_rep(const FiniteGroupoid& G, const VectorBundle& E) {
  GroupoidRep phi{E, {}};
  for (std::size_t i = 0; i < G.num_arrows(); ++i) {
    const std::size_t d = E.dim(G.source(arr(i)).index);
    if (d != E.dim(G.target(arr(i)).index)) {
      throw Error(ErrorKind::DimensionMismatch,
                  "trivial representation needs equal fibers along " + G.arrow_name(arr(i)));
    }
    phi.arrow_maps.push_back(Matrix::Identity(static_cast<Eigen::Index>(d),
                                              static_cast<Eigen::Index>(d)));
  }
  return phi;
}

namespace {

void require_valid(const FiniteGroupoid& G, const GroupoidRep& phi) {
  const ValidationReport report = validate_groupoid_rep(G, phi);
  if (!report.ok()) {
    throw Error(ErrorKind::InvalidRep, report.violations.front().law + " fails at " +
                                           report.violations.front().witness);
  }
}

template <typename Element, typename Product, typename Unit>
std::optional<std::string> first_non_homomorphic(const RepTable<Element>& rho, Product product,
                                                 const Unit& unit) {
  const auto u = rho.index_of(unit);
  if (!u) {
    return std::string("identity element missing from the table");
  }
  if (!(rho.images[*u] == identity_map(rho.bundle))) {
    return std::string("identity element is not sent to the identity map");
  }
  const std::size_t n = rho.size();
  std::mutex mutex;
  std::optional<std::pair<std::size_t, std::string>> worst;
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::optional<std::string> problem;
      const auto k = rho.index_of(product(rho.elements[i], rho.elements[j]));
      if (!k) {
        problem = "product of elements #" + std::to_string(i) + " and #" + std::to_string(j) +
                  " is missing from the table";
      } else if (!(compose(rho.images[i], rho.images[j]) == rho.images[*k])) {
        problem = "rho(#" + std::to_string(i) + " * #" + std::to_string(j) +
                  ") != rho(#" + std::to_string(i) + ") o rho(#" + std::to_string(j) + ")";
      }
      if (problem) {
        std::lock_guard lock(mutex);
        const std::size_t key = i * n + j;
        if (!worst || key < worst->first) {
          worst = std::make_pair(key, *problem);
        }
        return;
      }
    }
  });
  if (worst) {
    return worst->second;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> homomorphism_violation(const FiniteGroupoid& G, const BisRep& rho) {
  return first_non_homomorphic(
      rho, [&](const Bisection& a, const Bisection& b) { return bis_multiply(G, a, b); },
      bis_unit(G));
}

std::optional<std::string> homomorphism_violation(const FiniteGroupoid& G, const SGRep& rho) {
  return first_non_homomorphic(
      rho, [&](const SelfMap& a, const SelfMap& b) { return sg_star(G, a, b); }, sg_unit(G));
}

SemiLinearMap induced_bis_map(const FiniteGroupoid& G, const GroupoidRep& phi,
                              const Bisection& s) {
  BundleAutomorphism F;
  F.base_map.resize(G.num_objects());
  F.fiber_maps.resize(G.num_objects());
  for (std::size_t m = 0; m < G.num_objects(); ++m) {
    const ArrId g = s(obj(m));
    const std::size_t x = G.source(g).index;
    F.base_map[x] = m;
    F.fiber_maps[x] = phi(g);
  }
  return SemiLinearMap(std::move(F));
}

Section apply_induced_bis(const FiniteGroupoid& G, const GroupoidRep& phi, const Bisection& s,
                          const Section& xi) {
  require_section_of(phi.bundle, xi);
  Section out;
  for (std::size_t m = 0; m < G.num_objects(); ++m) {
    const ArrId g = s(obj(m));
    out.values.push_back(phi(g) * xi.at(G.source(g).index));
  }
  return out;
}

BisRep induce_bis_rep(const FiniteGroupoid& G, const GroupoidRep& phi) {
  require_valid(G, phi);
  BisRep rho;
  rho.bundle = phi.bundle;
  rho.elements = enumerate_bisections(G);
  rho.images.resize(rho.elements.size());
  parallel_for(rho.elements.size(), [&](std::size_t i) {
    rho.images[i] = induced_bis_map(G, phi, rho.elements[i]);
  });
  return rho;
}

GroupoidRep recover_groupoid_rep(const FiniteGroupoid& G, const BisRep& rho) {
  const VectorBundle& E = rho.bundle;
  if (E.base_size() != G.num_objects()) {
    throw Error(ErrorKind::DimensionMismatch, "representation bundle is not over the objects");
  }
  const std::vector<Bisection> bisections = enumerate_bisections(G);
  for (const Bisection& s : bisections) {
    if (!rho.index_of(s)) {
      throw Error(ErrorKind::NotHomomorphism, "representation table does not cover Bis(G)");
    }
  }
  for (const SemiLinearMap& mu : rho.images) {
    try {
      require_automorphism(E, mu.carrier());
    } catch (const Error& e) {
      throw Error(ErrorKind::NotSemilinear, e.what());
    }
  }
  if (auto v = homomorphism_violation(G, rho)) {
    throw Error(ErrorKind::NotHomomorphism, *v);
  }
  if (auto v = locality_violation(G, rho)) {
    throw Error(ErrorKind::NotLocal, *v);
  }
  const EnoughBisections enough = has_enough_bisections(G, bisections);
  if (!enough.holds) {
    throw Error(ErrorKind::NotEnoughBisections, "some arrow lies on no bisection");
  }

  // φ(g) read off from ρ(σ) on the delta sections through E_{α(g)}, at β(g).
  const auto evaluate = [&](ArrId g, const Bisection& s) {
    const SemiLinearMap& mu = rho.at(s);
    const std::size_t a = G.source(g).index;
    const std::size_t b = G.target(g).index;
    if (mu.base_bijection()[a] != b && E.dim(a) != 0) {
      throw Error(ErrorKind::ChoiceDependent,
                  "the base bijection of rho(sigma) sends source(" + G.arrow_name(g) +
                      ") elsewhere than target(" + G.arrow_name(g) +
                      "); the two evaluation points disagree");
    }
    Matrix m(static_cast<Eigen::Index>(E.dim(b)), static_cast<Eigen::Index>(E.dim(a)));
    for (std::size_t i = 0; i < E.dim(a); ++i) {
      m.col(static_cast<Eigen::Index>(i)) = mu(delta_section(E, a, i)).at(b);
    }
    return m;
  };

  GroupoidRep phi{E, std::vector<Matrix>(G.num_arrows())};
  for (std::size_t i = 0; i < G.num_arrows(); ++i) {
    const ArrId g = arr(i);
    phi.arrow_maps[i] = evaluate(g, *enough.witness[i]);
    for (const Bisection& s : bisections) {
      if (s(G.target(g)) == g && !same_matrix(evaluate(g, s), phi.arrow_maps[i])) {
        throw Error(ErrorKind::ChoiceDependent,
                    "different bisections through " + G.arrow_name(g) + " give different values");
      }
    }
  }
  require_valid(G, phi);
  return phi;
}

SemiLinearMap induced_sg_map(const FiniteGroupoid& G, const GroupoidRep& phi, const SelfMap& f) {
  BundleAutomorphism F;
  F.base_map.resize(G.num_arrows());
  F.fiber_maps.resize(G.num_arrows());
  for (std::size_t x = 0; x < G.num_arrows(); ++x) {
    const ArrId fx = f(arr(x));
    const std::size_t y = G.compose(arr(x), fx).index;
    F.base_map[y] = x;
    F.fiber_maps[y] = phi(fx);
  }
  return SemiLinearMap(std::move(F));
}

Section apply_induced_sg(const FiniteGroupoid& G, const GroupoidRep& phi, const SelfMap& f,
                         const Section& xi) {
  require_section_of(pullback_bundle(G, phi.bundle), xi);
  Section out;
  for (std::size_t x = 0; x < G.num_arrows(); ++x) {
    const ArrId fx = f(arr(x));
    out.values.push_back(phi(fx) * xi.at(G.compose(arr(x), fx).index));
  }
  return out;
}

SGRep induce_sg_rep(const FiniteGroupoid& G, const GroupoidRep& phi, std::uint64_t max_space) {
  require_valid(G, phi);
  SGRep rho;
  rho.bundle = pullback_bundle(G, phi.bundle);
  rho.elements = enumerate_sg_units(G, max_space);
  rho.images.resize(rho.elements.size());
  parallel_for(rho.elements.size(), [&](std::size_t i) {
    rho.images[i] = induced_sg_map(G, phi, rho.elements[i]);
  });
  return rho;
}

BisRep restrict_to_bis(const FiniteGroupoid& G, const SGRep& rho_s, const VectorBundle& E) {
  if (!(rho_s.bundle == pullback_bundle(G, E))) {
    throw Error(ErrorKind::DimensionMismatch, "S_G representation is not on sections of alpha*E");
  }
  BisRep rho;
  rho.bundle = E;
  rho.elements = enumerate_bisections(G);
  rho.images.resize(rho.elements.size());
  const std::vector<Section> basis = delta_basis(E);
  parallel_for(rho.elements.size(), [&](std::size_t i) {
    const SemiLinearMap& mu = rho_s.at(psi_embed(G, rho.elements[i]));
    const auto n = static_cast<Eigen::Index>(E.total_dim());
    SectionMatrix matrix{E, Matrix::Zero(n, n)};
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Section image = mu(pullback_section(G, E, basis[k]));
      Section restricted;
      for (std::size_t m = 0; m < G.num_objects(); ++m) {
        const auto& fiber = G.arrows_from(obj(m));
        for (ArrId x : fiber) {
          if (!same_matrix(image.at(x.index), image.at(fiber.front().index))) {
            throw Error(ErrorKind::NotConstantOnFibers,
                        "image varies along the source fiber over " + G.object_name(obj(m)) +
                            " at " + G.arrow_name(x));
          }
        }
        restricted.values.push_back(image.at(fiber.front().index));
      }
      matrix.matrix.col(static_cast<Eigen::Index>(k)) = flatten(E, restricted);
    }
    rho.images[i] = SemiLinearMap(nu_inverse(matrix));
  });
  return rho;
}

SgRecovery recover_from_sg_rep(const FiniteGroupoid& G, const SGRep& rho_s,
                               const VectorBundle& E) {
  const VectorBundle pulled = pullback_bundle(G, E);
  if (!(rho_s.bundle == pulled)) {
    throw Error(ErrorKind::DimensionMismatch, "S_G representation is not on sections of alpha*E");
  }
  if (auto v = homomorphism_violation(G, rho_s)) {
    throw Error(ErrorKind::NotHomomorphism, *v);
  }
  if (auto v = locality_violation(G, rho_s)) {
    throw Error(ErrorKind::NotLocal, *v);
  }
  const EnoughBisections enough = has_enough_bisections(G);
  if (!enough.holds) {
    throw Error(ErrorKind::NotEnoughBisections, "some arrow lies on no bisection");
  }

  GroupoidRep phi{E, std::vector<Matrix>(G.num_arrows())};
  for (std::size_t i = 0; i < G.num_arrows(); ++i) {
    const ArrId g = arr(i);
    const SemiLinearMap& mu = rho_s.at(psi_embed(G, *enough.witness[i]));
    const std::size_t a = G.source(g).index;
    const std::size_t b = G.target(g).index;
    const std::size_t at_unit = G.unit(obj(b)).index;
    Matrix m(static_cast<Eigen::Index>(E.dim(b)), static_cast<Eigen::Index>(E.dim(a)));
    for (std::size_t c = 0; c < E.dim(a); ++c) {
      m.col(static_cast<Eigen::Index>(c)) =
          mu(pullback_section(G, E, delta_section(E, a, c))).at(at_unit);
    }
    phi.arrow_maps[i] = std::move(m);
  }
  const ValidationReport report = validate_groupoid_rep(G, phi);
  if (!report.ok()) {
    throw Error(ErrorKind::AgreementFailure,
                "values read off at the units do not form a representation (" +
                    report.violations.front().law + " at " + report.violations.front().witness +
                    ")");
  }

  SgRecovery result{phi, true};
  const std::vector<Section> basis = delta_basis(pulled);
  for (std::size_t i = 0; i < rho_s.size(); ++i) {
    const SemiLinearMap induced = induced_sg_map(G, phi, rho_s.elements[i]);
    for (const Section& xi : basis) {
      const Section lhs = induced(xi);
      const Section rhs = rho_s.images[i](xi);
      for (std::size_t m = 0; m < G.num_objects(); ++m) {
        const std::size_t u = G.unit(obj(m)).index;
        if (!same_matrix(lhs.at(u), rhs.at(u))) {
          throw Error(ErrorKind::AgreementFailure,
                      "induced and given representations differ at unit over " +
                          G.object_name(obj(m)));
        }
      }
      result.agrees_everywhere = result.agrees_everywhere && lhs == rhs;
    }
  }
  return result;
}

void require_equivariant(const FiniteGroupoid& G, const GroupoidRep& phi1,
                         const GroupoidRep& phi2, const BundleMorphism& delta) {
  require_morphism(phi1.bundle, phi2.bundle, delta);
  for (std::size_t i = 0; i < G.num_arrows(); ++i) {
    const ArrId g = arr(i);
    const Matrix lhs = delta.maps[G.target(g).index] * phi1(g);
    const Matrix rhs = phi2(g) * delta.maps[G.source(g).index];
    if (!same_matrix(lhs, rhs)) {
      throw Error(ErrorKind::NotEquivariant, "intertwining fails along " + G.arrow_name(g));
    }
  }
}

TransferredMorphism rep_morphism_transfer(const FiniteGroupoid& G, const GroupoidRep& phi1,
                                          const GroupoidRep& phi2, const BundleMorphism& delta) {
  require_valid(G, phi1);
  require_valid(G, phi2);
  require_equivariant(G, phi1, phi2, delta);
  return TransferredMorphism{delta, pullback_morphism(G, delta)};
}

}  // namespace gpdrep

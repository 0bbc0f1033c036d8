#include "gpdrep/verify/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "gpdrep/bisection.hpp"
#include "gpdrep/fixtures.hpp"
#include "gpdrep/parallel.hpp"
#include "gpdrep/random.hpp"
#include "gpdrep/textio.hpp"
#include "gpdrep/verify/oracle.hpp"

namespace gpdrep::verify {

namespace {

struct Failure {
  std::string what;
};

void expect(bool condition, const std::string& message) {
  if (!condition) {
    throw Failure{message};
  }
}

template <typename Body>
CriterionResult run_criterion(std::string id, std::string title, Body body) {
  CriterionResult result;
  result.id = std::move(id);
  result.title = std::move(title);
  const auto start = std::chrono::steady_clock::now();
  try {
    result.detail = body(result);
    if (!result.skipped) {
      result.passed = true;
    }
  } catch (const Failure& f) {
    result.detail = f.what;
  } catch (const std::exception& e) {
    result.detail = std::string("unexpected error: ") + e.what();
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

struct NamedGroupoid {
  std::string name;
  FiniteGroupoid G;
};

std::vector<NamedGroupoid> group_fixtures() {
  return {{"P2", fixtures::p2()},
          {"pair(3)", fixtures::pair(3)},
          {"Z2", fixtures::z2()},
          {"GB2", fixtures::gb2()}};
}

// Sizes fixed from the brute-force oracles before the enumerators existed.
const std::map<std::string, std::size_t> kBisCount = {
    {"P2", 2}, {"pair(3)", 6}, {"pair(4)", 24}, {"Z2", 2}, {"GB2", 4}};
const std::map<std::string, std::size_t> kSgCount = {
    {"P2", 4}, {"pair(3)", 216}, {"Z2", 2}, {"GB2", 4}};

// Exhaustive group axioms on a sorted element list, via an index table.
template <typename E, typename Mul, typename Inv>
void check_group(const std::string& label, const std::vector<E>& elems, Mul mul, const E& unit,
                 Inv inv) {
  const std::size_t n = elems.size();
  expect(std::is_sorted(elems.begin(), elems.end()) &&
             std::adjacent_find(elems.begin(), elems.end()) == elems.end(),
         label + ": enumeration is not sorted and duplicate-free");
  const auto index_of = [&](const E& e) -> std::size_t {
    const auto it = std::lower_bound(elems.begin(), elems.end(), e);
    return it != elems.end() && *it == e ? static_cast<std::size_t>(it - elems.begin()) : n;
  };
  std::vector<std::size_t> table(n * n);
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n + j] = index_of(mul(elems[i], elems[j]));
    }
  });
  for (std::size_t k : table) {
    expect(k < n, label + ": not closed under the product");
  }
  const std::size_t u = index_of(unit);
  expect(u < n, label + ": unit missing");
  for (std::size_t i = 0; i < n; ++i) {
    expect(table[u * n + i] == i && table[i * n + u] == i, label + ": unit law fails");
    const std::size_t v = index_of(inv(elems[i]));
    expect(v < n, label + ": inverse outside the set");
    expect(table[i * n + v] == u && table[v * n + i] == u, label + ": inverse law fails");
  }
  std::atomic<bool> associative{true};
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n && associative; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (table[table[i * n + j] * n + k] != table[i * n + table[j * n + k]]) {
          associative = false;
          return;
        }
      }
    }
  });
  expect(associative, label + ": associativity fails");
}

std::vector<ObjId> after(const std::vector<ObjId>& a, const std::vector<ObjId>& b) {
  std::vector<ObjId> out;
  for (ObjId x : b) {
    out.push_back(a[x.index]);
  }
  return out;
}

std::vector<ArrId> after(const std::vector<ArrId>& a, const std::vector<ArrId>& b) {
  std::vector<ArrId> out;
  for (ArrId x : b) {
    out.push_back(a[x.index]);
  }
  return out;
}

bool same_on_basis(const VectorBundle& E, const std::function<Section(const Section&)>& f,
                   const std::function<Section(const Section&)>& g) {
  for (const Section& xi : delta_basis(E)) {
    if (!(f(xi) == g(xi))) {
      return false;
    }
  }
  return true;
}

// φ(g) read off from a Bis(G)-table with the given bisection through g.
Matrix evaluate_through(const FiniteGroupoid& G, const BisRep& rho, ArrId g, const Bisection& s) {
  const VectorBundle& E = rho.bundle;
  const std::size_t a = G.source(g).index;
  const std::size_t b = G.target(g).index;
  Matrix m(static_cast<Eigen::Index>(E.dim(b)), static_cast<Eigen::Index>(E.dim(a)));
  for (std::size_t c = 0; c < E.dim(a); ++c) {
    m.col(static_cast<Eigen::Index>(c)) = rho.at(s)(delta_section(E, a, c)).at(b);
  }
  return m;
}

void check_choice_independence(const FiniteGroupoid& G, const GroupoidRep& phi,
                               const BisRep& rho, const std::string& label) {
  for (std::size_t i = 0; i < G.num_arrows(); ++i) {
    const ArrId g = arr(i);
    std::size_t through = 0;
    for (const Bisection& s : rho.elements) {
      if (s(G.target(g)) == g) {
        ++through;
        expect(same_matrix(evaluate_through(G, rho, g, s), phi(g)),
               label + ": bisections through " + G.arrow_name(g) + " disagree");
      }
    }
    expect(through > 0, label + ": no bisection through " + G.arrow_name(g));
  }
}

// Table entries against the pointwise evaluator.
void check_table_matches_evaluator(const FiniteGroupoid& G, const GroupoidRep& phi,
                                   const BisRep& rho, const std::string& label) {
  for (std::size_t i = 0; i < rho.size(); ++i) {
    expect(same_on_basis(
               phi.bundle, [&](const Section& xi) { return rho.images[i](xi); },
               [&](const Section& xi) { return apply_induced_bis(G, phi, rho.elements[i], xi); }),
           label + ": induced table and evaluator differ");
  }
}

GroupoidRep conjugate(const FiniteGroupoid& G, const GroupoidRep& phi, const BundleMorphism& d) {
  GroupoidRep out{phi.bundle, {}};
  for (std::size_t i = 0; i < G.num_arrows(); ++i) {
    const ArrId g = arr(i);
    out.arrow_maps.push_back(d.maps[G.target(g).index] * phi(g) *
                             *exact_inverse(d.maps[G.source(g).index]));
  }
  return out;
}

BundleMorphism random_intertwiner(Rng& rng, const VectorBundle& E) {
  BundleMorphism d;
  for (std::size_t x = 0; x < E.base_size(); ++x) {
    d.maps.push_back(random_invertible(rng, E.dim(x)));
  }
  return d;
}

BundleMorphism scalar_morphism(const VectorBundle& E, const Rational& c) {
  BundleMorphism d = identity_morphism(E);
  for (Matrix& m : d.maps) {
    m *= c;
  }
  return d;
}

// Both induced section maps intertwine the induced representations.
void check_transfer_equivariant(const FiniteGroupoid& G, const GroupoidRep& phi1,
                                const GroupoidRep& phi2, const TransferredMorphism& t,
                                const std::string& label, std::uint64_t max_space) {
  const BisRep r1 = induce_bis_rep(G, phi1);
  const BisRep r2 = induce_bis_rep(G, phi2);
  for (std::size_t i = 0; i < r1.size(); ++i) {
    expect(same_on_basis(
               phi1.bundle,
               [&](const Section& xi) { return r2.images[i](apply_bundle_morphism(t.on_sections, xi)); },
               [&](const Section& xi) { return apply_bundle_morphism(t.on_sections, r1.images[i](xi)); }),
           label + ": Bis-side transfer is not equivariant");
  }
  const SGRep s1 = induce_sg_rep(G, phi1, max_space);
  const SGRep s2 = induce_sg_rep(G, phi2, max_space);
  for (std::size_t i = 0; i < s1.size(); ++i) {
    expect(same_on_basis(
               s1.bundle,
               [&](const Section& xi) {
                 return s2.images[i](apply_bundle_morphism(t.on_pullback_sections, xi));
               },
               [&](const Section& xi) {
                 return apply_bundle_morphism(t.on_pullback_sections, s1.images[i](xi));
               }),
           label + ": S_G-side transfer is not equivariant");
  }
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  expect(static_cast<bool>(in), "cannot read " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

template <typename T, typename Enc, typename Dec>
void expect_json_round_trip(const T& value, Enc encode, Dec decode, const std::string& label) {
  const std::string text = encode(value).dump(2);
  expect(decode(parse_json(text)) == value, label + ": JSON round trip is lossy");
}

// ----------------------------------------------------------------- AC1-9

std::string ac1() {
  std::size_t groups = 0;
  for (const auto& [name, G] : group_fixtures()) {
    const auto bis = enumerate_bisections(G);
    const auto bis_oracle = oracle::brute_force_bisections(G);
    expect(bis_oracle.size() == kBisCount.at(name), name + ": Bis oracle disagrees with frozen count");
    expect(bis == bis_oracle, name + ": Bis enumeration differs from oracle");
    check_group(
        name + " Bis", bis, [&](const Bisection& a, const Bisection& b) { return bis_multiply(G, a, b); },
        bis_unit(G), [&](const Bisection& a) { return bis_invert(G, a); });

    const auto sg = enumerate_sg_units(G);
    const auto sg_oracle = oracle::brute_force_sg_units(G);
    expect(sg_oracle.size() == kSgCount.at(name), name + ": S_G oracle disagrees with frozen count");
    expect(sg == sg_oracle, name + ": S_G(alpha) enumeration differs from oracle");
    check_group(
        name + " S_G", sg, [&](const SelfMap& a, const SelfMap& b) { return sg_star(G, a, b); },
        sg_unit(G), [&](const SelfMap& a) { return sg_invert(G, a); });
    groups += 2;
  }
  std::size_t factorial = 1;
  for (std::size_t n = 2; n <= 4; ++n) {
    factorial *= n;
    const FiniteGroupoid G = fixtures::pair(n);
    const auto bis = enumerate_bisections(G);
    expect(bis.size() == factorial, "pair(" + std::to_string(n) + "): |Bis| != n!");
    expect(bis == oracle::brute_force_bisections(G),
           "pair(" + std::to_string(n) + "): Bis enumeration differs from oracle");
  }
  return std::to_string(groups) + " groups checked exhaustively; |Bis(pair(n))| = 2, 6, 24; "
         "|S_P2(alpha)| = 4";
}

std::string ac2() {
  std::size_t pairs = 0;
  for (const auto& [name, G] : group_fixtures()) {
    const auto bis = enumerate_bisections(G);
    for (const auto& s1 : bis) {
      for (const auto& s2 : bis) {
        expect(source_map(G, bis_multiply(G, s1, s2)) ==
                   after(source_map(G, s2), source_map(G, s1)),
               name + ": alpha_* is not an anti-homomorphism");
        ++pairs;
      }
    }
    const auto sg = enumerate_sg_units(G);
    std::vector<std::vector<ArrId>> R;
    for (const auto& f : sg) {
      R.push_back(R_of(G, f));
    }
    std::atomic<bool> ok{true};
    parallel_for(sg.size(), [&](std::size_t i) {
      for (std::size_t j = 0; j < sg.size() && ok; ++j) {
        if (R_of(G, sg_star(G, sg[i], sg[j])) != after(R[j], R[i])) {
          ok = false;
        }
      }
    });
    expect(ok, name + ": R_{f*g} != R_g o R_f");
    pairs += sg.size() * sg.size();
  }
  return std::to_string(pairs) + " pairs checked";
}

std::string ac3(std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> base(1, 4);
  const std::size_t trials = 25;
  for (std::size_t t = 0; t < trials; ++t) {
    const VectorBundle E = random_bundle(rng, base(rng), 1, 3);
    const BundleAutomorphism F = random_automorphism(rng, E);
    const BundleAutomorphism F2 = random_automorphism(rng, E);
    const std::string label = "automorphism #" + std::to_string(t);

    const SemiLinearMap mu = nu(E, F);
    const SectionMatrix m = to_section_matrix(E, mu);
    expect(nu_inverse(m) == F, label + ": nu_inverse o nu != id");
    expect(same_matrix(to_section_matrix(E, nu(E, nu_inverse(m))).matrix, m.matrix),
           label + ": nu o nu_inverse != id");
    expect(is_semilinear(m) == F.base_map, label + ": recovered base bijection differs");
    expect(semilinear_identity_holds(E, mu), label + ": semi-linearity identity fails");

    const FrameBisection s = bundle_aut_to_bisection(E, F);
    const FrameBisection s2 = bundle_aut_to_bisection(E, F2);
    expect(bisection_to_bundle_aut(E, s) == F, label + ": B o B^-1 != id");
    expect(bundle_aut_to_bisection(E, bisection_to_bundle_aut(E, s)) == s,
           label + ": B^-1 o B != id");
    expect(same_on_basis(
               E, [&](const Section& xi) { return gamma_apply(s, xi); },
               [&](const Section& xi) { return nu(E, bisection_to_bundle_aut(E, s))(xi); }),
           label + ": gamma != nu o B on the delta basis");
    expect(bisection_to_bundle_aut(E, frame_bis_multiply(s, s2)) == compose(F, F2),
           label + ": B is not multiplicative");
    expect(same_on_basis(
               E, [&](const Section& xi) { return gamma_apply(frame_bis_multiply(s, s2), xi); },
               [&](const Section& xi) { return gamma_apply(s, gamma_apply(s2, xi)); }),
           label + ": gamma is not multiplicative");
  }
  return std::to_string(trials) + " random automorphisms, bases <= 4, fiber dims <= 3";
}

std::string ac4(std::uint64_t seed) {
  Rng rng(seed + 4);
  const std::vector<NamedGroupoid> targets = {
      {"P2", fixtures::p2()}, {"pair(3)", fixtures::pair(3)}, {"GB2", fixtures::gb2()}};
  const std::size_t per_groupoid = 10;
  for (const auto& [name, G] : targets) {
    for (std::size_t t = 0; t < per_groupoid; ++t) {
      const std::string label = name + " rep #" + std::to_string(t);
      const GroupoidRep phi = random_groupoid_rep(rng, G);
      expect(validate_groupoid_rep(G, phi).ok(), label + ": generated rep is invalid");
      const BisRep rho = induce_bis_rep(G, phi);
      check_table_matches_evaluator(G, phi, rho, label);
      expect(recover_groupoid_rep(G, rho) == phi, label + ": recover(induce(phi)) != phi");
      expect(induce_bis_rep(G, recover_groupoid_rep(G, rho)) == rho,
             label + ": induce(recover(rho)) != rho");
      check_choice_independence(G, phi, rho, label);
    }
  }
  return std::to_string(per_groupoid * targets.size()) + " random reps on P2, pair(3), GB2";
}

std::string ac5() {
  for (const auto& f : fixtures::fixture_reps()) {
    expect(is_local_bis(f.groupoid, induce_bis_rep(f.groupoid, f.rep)),
           f.name + ": induced Bis rep is not local");
    expect(is_local_sg(f.groupoid, induce_sg_rep(f.groupoid, f.rep)),
           f.name + ": induced S_G rep is not local");
  }
  const FiniteGroupoid G = fixtures::gb2();
  const BisRep bad = fixtures::gb2_nonlocal_rep();
  expect(!homomorphism_violation(G, bad), "GB2 witness is not a homomorphism");
  expect(!is_local_bis(G, bad), "GB2 witness passes the locality test");
  try {
    recover_groupoid_rep(G, bad);
  } catch (const Error& e) {
    expect(e.kind() == ErrorKind::NotLocal, std::string("GB2 witness rejected with ") + e.what());
    return "all fixture reps local; GB2 witness rejected with NotLocal";
  }
  throw Failure{"GB2 witness was not rejected"};
}

std::string ac6() {
  for (const auto& f : fixtures::fixture_reps()) {
    const SGRep rs = induce_sg_rep(f.groupoid, f.rep);
    expect(restrict_to_bis(f.groupoid, rs, f.rep.bundle) == induce_bis_rep(f.groupoid, f.rep),
           f.name + ": restrict(induce_S(phi)) != induce_B(phi)");
  }
  // A perturbed table must trip the fiber-constancy check.
  const FiniteGroupoid G = fixtures::p2();
  SGRep rs = induce_sg_rep(G, fixtures::fixture_r());
  const Bisection swap{{arr(1), arr(2)}};
  const std::size_t k = *rs.index_of(psi_embed(G, swap));
  BundleAutomorphism F = rs.images[k].carrier();
  F.fiber_maps[0] *= Rational(3);
  rs.images[k] = SemiLinearMap(F);
  try {
    restrict_to_bis(G, rs, fixtures::line_bundle(G));
  } catch (const Error& e) {
    expect(e.kind() == ErrorKind::NotConstantOnFibers,
           std::string("perturbed table rejected with ") + e.what());
    return "triangle commutes on all fixture reps; perturbed table rejected";
  }
  throw Failure{"perturbed S_G table passed the fiber-constancy check"};
}

std::string ac7(std::uint64_t seed) {
  Rng rng(seed + 7);
  std::vector<fixtures::NamedRep> cases;
  for (const auto& f : fixtures::fixture_reps()) {
    if (f.name == "R" || f.name == "GB2-mixed") {
      cases.push_back(f);
    }
  }
  for (int i = 0; i < 3; ++i) {
    cases.push_back({"P2 random", fixtures::p2(), random_groupoid_rep(rng, fixtures::p2())});
    cases.push_back({"GB2 random", fixtures::gb2(), random_groupoid_rep(rng, fixtures::gb2())});
  }
  std::size_t everywhere = 0;
  for (const auto& c : cases) {
    const FiniteGroupoid& G = c.groupoid;
    const SGRep rs = induce_sg_rep(G, c.rep);
    const SgRecovery rec = recover_from_sg_rep(G, rs, c.rep.bundle);
    expect(rec.rep == c.rep, c.name + ": recovered rep differs");
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const SemiLinearMap induced = induced_sg_map(G, rec.rep, rs.elements[i]);
      for (const Section& xi : delta_basis(rs.bundle)) {
        const Section lhs = induced(xi);
        const Section rhs = rs.images[i](xi);
        for (std::size_t m = 0; m < G.num_objects(); ++m) {
          const std::size_t u = G.unit(obj(m)).index;
          expect(same_matrix(lhs.at(u), rhs.at(u)), c.name + ": disagreement at a unit arrow");
        }
      }
    }
    everywhere += rec.agrees_everywhere ? 1 : 0;
  }
  // σ ↦ id is induced on the Bis side, but on the S_G side the identity does
  // not move the base along R_f, so agreement at the units must fail.
  const FiniteGroupoid G = fixtures::gb2();
  const VectorBundle L = fixtures::line_bundle(G);
  SGRep identity;
  identity.bundle = pullback_bundle(G, L);
  identity.elements = enumerate_sg_units(G);
  identity.images.assign(identity.elements.size(), identity_map(identity.bundle));
  try {
    recover_from_sg_rep(G, identity, L);
  } catch (const Error& e) {
    expect(e.kind() == ErrorKind::AgreementFailure,
           std::string("GB2 identity S_G rep rejected with ") + e.what());
    return std::to_string(cases.size()) + " reps on P2 and GB2 agree on M (" +
           std::to_string(everywhere) +
           " also agree on all of G); identity S_G rep on GB2 rejected with AgreementFailure";
  }
  throw Failure{"GB2: identity S_G rep passed the agreement check"};
}

std::string ac8(std::uint64_t seed) {
  Rng rng(seed + 8);
  std::size_t chains = 0;
  for (const auto& f : fixtures::fixture_reps()) {
    if (f.name != "R" && f.name != "GB2-mixed") {
      continue;
    }
    const FiniteGroupoid& G = f.groupoid;
    const VectorBundle& E = f.rep.bundle;
    const GroupoidRep& phi1 = f.rep;
    const BundleMorphism d12 = random_intertwiner(rng, E);
    const GroupoidRep phi2 = conjugate(G, phi1, d12);
    const BundleMorphism d23 = random_intertwiner(rng, E);
    const GroupoidRep phi3 = conjugate(G, phi2, d23);

    const TransferredMorphism id = rep_morphism_transfer(G, phi1, phi1, identity_morphism(E));
    expect(id.on_sections == identity_morphism(E) &&
               id.on_pullback_sections == identity_morphism(pullback_bundle(G, E)),
           f.name + ": identity is not preserved");
    const TransferredMorphism t12 = rep_morphism_transfer(G, phi1, phi2, d12);
    const TransferredMorphism t23 = rep_morphism_transfer(G, phi2, phi3, d23);
    const TransferredMorphism t13 = rep_morphism_transfer(G, phi1, phi3, compose(d23, d12));
    expect(t13.on_sections == compose(t23.on_sections, t12.on_sections) &&
               t13.on_pullback_sections ==
                   compose(t23.on_pullback_sections, t12.on_pullback_sections),
           f.name + ": composition is not preserved");
    check_transfer_equivariant(G, phi1, phi2, t12, f.name, kDefaultSelfMapSpace);
    check_transfer_equivariant(G, phi2, phi3, t23, f.name, kDefaultSelfMapSpace);

    const std::vector<Rational> scalars = {Rational(1), Rational(2),     Rational(3),
                                           Rational(-1), Rational(1, 2), Rational(-2, 3)};
    std::vector<TransferredMorphism> images;
    for (const Rational& c : scalars) {
      images.push_back(rep_morphism_transfer(G, phi1, phi1, scalar_morphism(E, c)));
      check_transfer_equivariant(G, phi1, phi1, images.back(), f.name, kDefaultSelfMapSpace);
    }
    for (std::size_t i = 0; i < images.size(); ++i) {
      for (std::size_t j = i + 1; j < images.size(); ++j) {
        expect(!same_on_basis(
                   E,
                   [&](const Section& xi) { return apply_bundle_morphism(images[i].on_sections, xi); },
                   [&](const Section& xi) { return apply_bundle_morphism(images[j].on_sections, xi); }),
               f.name + ": distinct intertwiners give equal Bis-side maps");
        expect(!same_on_basis(
                   pullback_bundle(G, E),
                   [&](const Section& xi) {
                     return apply_bundle_morphism(images[i].on_pullback_sections, xi);
                   },
                   [&](const Section& xi) {
                     return apply_bundle_morphism(images[j].on_pullback_sections, xi);
                   }),
               f.name + ": distinct intertwiners give equal S_G-side maps");
      }
    }
    ++chains;
  }
  // A non-equivariant bundle map is refused.
  const GroupoidRep R = fixtures::fixture_r();
  BundleMorphism skew = identity_morphism(R.bundle);
  skew.maps[1] *= Rational(2);
  try {
    rep_morphism_transfer(fixtures::p2(), R, R, skew);
  } catch (const Error& e) {
    expect(e.kind() == ErrorKind::NotEquivariant, std::string("skew map rejected with ") + e.what());
    return std::to_string(chains) + " chains phi1 -> phi2 -> phi3; 6 scalar intertwiners distinct";
  }
  throw Failure{"non-equivariant bundle map accepted"};
}

std::string ac9(const SuiteOptions& options) {
  std::vector<NamedGroupoid> groupoids = group_fixtures();
  groupoids.push_back({"action", build_action({{0, 1}, {1, 0}}, {{0, 1, 2}, {1, 0, 2}})});
  for (const auto& [name, G] : groupoids) {
    expect_json_round_trip(G, [](const FiniteGroupoid& g) { return to_json(g); }, groupoid_from_json,
                           name);
    expect(parse_groupoid(format_groupoid(G)) == G, name + ": .gpd round trip is lossy");
  }
  for (const auto& f : fixtures::fixture_reps()) {
    const FiniteGroupoid& G = f.groupoid;
    expect_json_round_trip(
        f.rep, [&](const GroupoidRep& r) { return to_json(G, r); },
        [&](const Json& j) { return rep_from_json(j, G); }, f.name);
    expect(parse_rep(format_rep(G, f.rep), G) == f.rep, f.name + ": .grep round trip is lossy");
    expect_json_round_trip(
        induce_bis_rep(G, f.rep), [&](const BisRep& r) { return to_json(G, r); },
        [&](const Json& j) { return bis_rep_from_json(j, G); }, f.name + " Bis table");
    expect_json_round_trip(
        induce_sg_rep(G, f.rep), [&](const SGRep& r) { return to_json(G, r); },
        [&](const Json& j) { return sg_rep_from_json(j, G); }, f.name + " S_G table");
  }

  const std::filesystem::path dir = options.fixture_dir;
  const auto load = [&](const char* file) { return parse_groupoid(read_file(dir / file)); };
  expect(load("p2.gpd") == fixtures::p2(), "p2.gpd differs from pair(2)");
  expect(oracle::relabeling_exists(load("p2_explicit.gpd"), fixtures::p2()),
         "p2_explicit.gpd is not a relabeling of pair(2)");
  expect(load("pair3.gpd") == fixtures::pair(3), "pair3.gpd differs from pair(3)");
  expect(load("z2.gpd") == fixtures::z2(), "z2.gpd differs from Z2");
  expect(load("gb2.gpd") == fixtures::gb2(), "gb2.gpd differs from GB2");
  expect(parse_rep(read_file(dir / "r.grep"), fixtures::p2()) == fixtures::fixture_r(),
         "r.grep differs from Fixture R");
  const ParsedGroupoid corrupted = parse_groupoid_unchecked(read_file(dir / "corrupted.gpd"));
  expect(!corrupted.report.ok(), "corrupted.gpd passes validation");
  expect_json_round_trip(corrupted.report, [](const ValidationReport& r) { return to_json(r); },
                         report_from_json, "corrupted.gpd report");

  std::string detail = "JSON and text round trips lossless; corpus parses as expected";
  if (options.cli_check) {
    const auto start = std::chrono::steady_clock::now();
    const std::string failure = options.cli_check();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(failure.empty(), "check command failed: " + failure);
    expect(seconds < 60.0, "check command took " + std::to_string(seconds) + " s");
    std::ostringstream s;
    s.precision(2);
    s << std::fixed << "; check command exits 0 in " << seconds << " s";
    detail += s.str();
  }
  return detail;
}

template <typename Body>
CriterionResult timed(std::string id, std::string title, double limit, Body body) {
  CriterionResult r = run_criterion(std::move(id), std::move(title), body);
  if (r.passed && limit > 0 && r.seconds >= limit) {
    r.passed = false;
    r.detail += "; exceeded the " + std::to_string(static_cast<int>(limit)) + " s budget";
  }
  return r;
}

}  // namespace

std::string default_fixture_dir() { return GPDREP_FIXTURE_DIR; }

std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& options) {
  SuiteOptions opts = options;
  if (opts.fixture_dir.empty()) {
    opts.fixture_dir = default_fixture_dir();
  }
  const std::uint64_t seed = opts.seed;
  std::vector<CriterionResult> out;
  out.push_back(timed("AC1", "group laws and oracle counts", 10.0,
                      [](CriterionResult&) { return ac1(); }));
  out.push_back(timed("AC2", "anti-homomorphism laws", 0,
                      [](CriterionResult&) { return ac2(); }));
  out.push_back(timed("AC3", "iso-chain round trips", 0,
                      [&](CriterionResult&) { return ac3(seed); }));
  out.push_back(timed("AC4", "Bis round trips and choice independence", 30.0,
                      [&](CriterionResult&) { return ac4(seed); }));
  out.push_back(timed("AC5", "locality", 0, [](CriterionResult&) { return ac5(); }));
  out.push_back(timed("AC6", "triangle diagram", 0, [](CriterionResult&) { return ac6(); }));
  out.push_back(timed("AC7", "S_G agreement on units", 0,
                      [&](CriterionResult&) { return ac7(seed); }));
  out.push_back(timed("AC8", "functoriality and faithfulness", 0,
                      [&](CriterionResult&) { return ac8(seed); }));
  out.push_back(timed("AC9", "parser and exporter", 0,
                      [&](CriterionResult&) { return ac9(opts); }));
  return out;
}

std::vector<CriterionResult> run_transfer_invariants(const FiniteGroupoid& G,
                                                     const GroupoidRep& phi,
                                                     std::uint64_t max_space) {
  std::vector<CriterionResult> out;
  const auto add = [&](const char* id, const char* title, auto body) {
    out.push_back(run_criterion(id, title, body));
  };
  add("valid", "input is a representation", [&](CriterionResult&) {
    const ValidationReport r = validate_groupoid_rep(G, phi);
    expect(r.ok(), r.ok() ? "" : r.violations.front().law + " at " + r.violations.front().witness);
    return std::string("all laws hold");
  });
  if (!out.back().passed) {
    return out;
  }
  const BisRep rho = induce_bis_rep(G, phi);
  add("roundtrip-A", "recover(induce(phi)) = phi", [&](CriterionResult&) {
    expect(recover_groupoid_rep(G, rho) == phi, "recovered rep differs");
    return std::to_string(G.num_arrows()) + " arrows matched exactly";
  });
  add("roundtrip-B", "induce(recover(rho)) = rho", [&](CriterionResult&) {
    expect(induce_bis_rep(G, recover_groupoid_rep(G, rho)) == rho, "re-induced table differs");
    return std::to_string(rho.size()) + " bisections matched exactly";
  });
  add("choice-independence", "every bisection through g gives phi(g)", [&](CriterionResult&) {
    check_choice_independence(G, phi, rho, "input");
    check_table_matches_evaluator(G, phi, rho, "input");
    return std::string("all witnesses agree");
  });

  std::optional<SGRep> rs;
  std::string too_large;
  try {
    rs = induce_sg_rep(G, phi, max_space);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TooLarge) {
      throw;
    }
    too_large = e.what();
  }
  const auto sg_step = [&](const char* id, const char* title, auto body) {
    if (!rs) {
      CriterionResult r;
      r.id = id;
      r.title = title;
      r.skipped = true;
      r.detail = "skipped: " + too_large;
      out.push_back(r);
      return;
    }
    add(id, title, body);
  };
  add("locality-bis", "induced Bis rep is local", [&](CriterionResult&) {
    const auto v = locality_violation(G, rho);
    expect(!v, v.value_or(""));
    return std::string("local");
  });
  sg_step("locality-sg", "induced S_G rep is local", [&](CriterionResult&) {
    const auto v = locality_violation(G, *rs);
    expect(!v, v.value_or(""));
    return std::string("local");
  });
  sg_step("triangle", "restrict(induce_S(phi)) = induce_B(phi)", [&](CriterionResult&) {
    expect(restrict_to_bis(G, *rs, phi.bundle) == rho, "restricted table differs");
    return std::string("carriers equal");
  });
  sg_step("sg-agreement", "recover_S agrees on units", [&](CriterionResult&) {
    const SgRecovery rec = recover_from_sg_rep(G, *rs, phi.bundle);
    expect(rec.rep == phi, "recovered rep differs");
    return std::string(rec.agrees_everywhere ? "agrees on all of G"
                                             : "agrees on units only (informational)");
  });
  sg_step("functoriality", "transfer preserves identity, composition, distinctness",
          [&](CriterionResult&) {
            const VectorBundle& E = phi.bundle;
            const TransferredMorphism id =
                rep_morphism_transfer(G, phi, phi, identity_morphism(E));
            expect(id.on_sections == identity_morphism(E), "identity not preserved");
            const TransferredMorphism two = rep_morphism_transfer(G, phi, phi, scalar_morphism(E, 2));
            const TransferredMorphism three =
                rep_morphism_transfer(G, phi, phi, scalar_morphism(E, 3));
            const TransferredMorphism six =
                rep_morphism_transfer(G, phi, phi, scalar_morphism(E, 6));
            expect(six.on_sections == compose(three.on_sections, two.on_sections) &&
                       six.on_pullback_sections ==
                           compose(three.on_pullback_sections, two.on_pullback_sections),
                   "composition not preserved");
            check_transfer_equivariant(G, phi, phi, two, "input", max_space);
            if (E.total_dim() > 0) {
              expect(!(two.on_sections == three.on_sections), "distinct scalars collide");
            }
            return std::string("identity, composition and distinctness hold");
          });
  return out;
}

}  // namespace gpdrep::verify

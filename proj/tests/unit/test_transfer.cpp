#include "support.hpp"

#include "gpdrep/fixtures.hpp"
#include "gpdrep/random.hpp"
#include "gpdrep/transfer.hpp"

using namespace gpdrep;
using namespace testsupport;

namespace {

bool has_law(const ValidationReport& r, const std::string& law) {
  for (const Violation& v : r.violations) {
    if (v.law == law) {
      return true;
    }
  }
  return false;
}

SGRep identity_sg_rep(const FiniteGroupoid& G, const VectorBundle& E) {
  const VectorBundle pb = pullback_bundle(G, E);
  const auto units = enumerate_sg_units(G);
  return make_rep_table(pb, units, std::vector<SemiLinearMap>(units.size(), identity_map(pb)));
}

}  // namespace

TEST_SUITE("transfer") {
  TEST_CASE("validate_groupoid_rep") {
    const FiniteGroupoid P = fixtures::p2();
    CHECK(validate_groupoid_rep(P, fixtures::fixture_r()).ok());
    GroupoidRep broken = fixtures::fixture_r();
    broken.arrow_maps[named(P, "(b,a)").index] = scalar(1);
    const ValidationReport r = validate_groupoid_rep(P, broken);
    CHECK(has_law(r, "homomorphism"));
    CHECK(validate_groupoid_rep(P, trivial_rep(P, VectorBundle({2, 2}))).ok());
    GroupoidRep singular = fixtures::fixture_r();
    singular.arrow_maps[named(P, "(a,b)").index] = scalar(0);
    CHECK(has_law(validate_groupoid_rep(P, singular), "invertible"));
  }

  TEST_CASE("trivial_rep needs matching dimensions on components") {
    CHECK(kind_of([] { trivial_rep(fixtures::p2(), VectorBundle({1, 2})); }) ==
          ErrorKind::DimensionMismatch);
    CHECK(validate_groupoid_rep(fixtures::gb2(), trivial_rep(fixtures::gb2(), VectorBundle({1, 2})))
              .ok());
  }

  TEST_CASE("induced Bis representation of Fixture R") {
    const FiniteGroupoid P = fixtures::p2();
    const GroupoidRep R = fixtures::fixture_r();
    const Bisection swap = bis(P, {"(a,b)", "(b,a)"});
    const Section xi = line_section({5, 7});
    CHECK(apply_induced_bis(P, R, swap, xi) == line_section({14, Rational(5, 2)}));
    CHECK(induced_bis_map(P, R, swap)(xi) == apply_induced_bis(P, R, swap, xi));
    CHECK(induced_bis_map(P, R, bis_unit(P)) == identity_map(R.bundle));
    const BisRep rho = induce_bis_rep(P, R);
    CHECK(rho.size() == 2);
    CHECK(compose(rho.at(swap), rho.at(swap)) == identity_map(R.bundle));
    CHECK_FALSE(homomorphism_violation(P, rho).has_value());
  }

  TEST_CASE("induce rejects invalid reps") {
    GroupoidRep broken = fixtures::fixture_r();
    broken.arrow_maps[2] = scalar(1);
    CHECK(kind_of([&] { induce_bis_rep(fixtures::p2(), broken); }) == ErrorKind::InvalidRep);
    CHECK(kind_of([&] { induce_sg_rep(fixtures::p2(), broken); }) == ErrorKind::InvalidRep);
  }

  TEST_CASE("recovery from the Bis side") {
    const FiniteGroupoid P = fixtures::p2();
    const GroupoidRep R = fixtures::fixture_r();
    const GroupoidRep back = recover_groupoid_rep(P, induce_bis_rep(P, R));
    CHECK(back == R);
    CHECK(back(named(P, "(a,b)")) == scalar(2));

    const FiniteGroupoid GB = fixtures::gb2();
    const VectorBundle E({2, 1});
    const auto all = enumerate_bisections(GB);
    const BisRep id = make_rep_table(E, all, std::vector<SemiLinearMap>(all.size(), identity_map(E)));
    CHECK(recover_groupoid_rep(GB, id) == trivial_rep(GB, E));

    CHECK(kind_of([&] { recover_groupoid_rep(GB, fixtures::gb2_nonlocal_rep()); }) ==
          ErrorKind::NotLocal);
  }

  TEST_CASE("identity Bis rep on P2 is local but not induced") {
    const FiniteGroupoid P = fixtures::p2();
    const VectorBundle L = fixtures::line_bundle(P);
    const auto all = enumerate_bisections(P);
    const BisRep id = make_rep_table(L, all, std::vector<SemiLinearMap>(all.size(), identity_map(L)));
    CHECK(is_local_bis(P, id));
    CHECK(kind_of([&] { recover_groupoid_rep(P, id); }) == ErrorKind::ChoiceDependent);
  }

  TEST_CASE("recovery checks coverage and the homomorphism law") {
    const FiniteGroupoid P = fixtures::p2();
    const BisRep rho = induce_bis_rep(P, fixtures::fixture_r());
    BisRep partial = rho;
    partial.elements.pop_back();
    partial.images.pop_back();
    CHECK(kind_of([&] { recover_groupoid_rep(P, partial); }) == ErrorKind::NotHomomorphism);
    BisRep scaled = rho;
    BundleAutomorphism c = scaled.images[1].carrier();
    c.fiber_maps[0] = scalar(3);
    scaled.images[1] = SemiLinearMap(c);
    CHECK(kind_of([&] { recover_groupoid_rep(P, scaled); }) == ErrorKind::NotHomomorphism);
  }

  TEST_CASE("induced S_G representation of Fixture R") {
    const FiniteGroupoid P = fixtures::p2();
    const GroupoidRep R = fixtures::fixture_r();
    const SelfMap f = psi_embed(P, bis(P, {"(a,b)", "(b,a)"}));
    const VectorBundle pb = pullback_bundle(P, R.bundle);
    const Section xi = line_section({1, 2, 3, 4});
    const Section out = apply_induced_sg(P, R, f, xi);
    CHECK(out.at(named(P, "(a,a)").index)(0) == 2 * xi.at(named(P, "(a,b)").index)(0));
    CHECK(induced_sg_map(P, R, f)(xi) == out);
    CHECK(induced_sg_map(P, R, sg_unit(P)) == identity_map(pb));
    const SGRep rho = induce_sg_rep(P, R);
    CHECK(rho.size() == 4);
    CHECK_FALSE(homomorphism_violation(P, rho).has_value());
    CHECK(kind_of([&] { induce_sg_rep(fixtures::pair(4), trivial_rep(fixtures::pair(4),
                                                                       VectorBundle({1, 1, 1, 1})));
          }) == ErrorKind::TooLarge);
  }

  TEST_CASE("restriction to bisections") {
    const FiniteGroupoid P = fixtures::p2();
    const GroupoidRep R = fixtures::fixture_r();
    CHECK(restrict_to_bis(P, induce_sg_rep(P, R), R.bundle) == induce_bis_rep(P, R));
    const BisRep id = restrict_to_bis(P, identity_sg_rep(P, R.bundle), R.bundle);
    for (const SemiLinearMap& m : id.images) {
      CHECK(m == identity_map(R.bundle));
    }
  }

  TEST_CASE("restriction notices fiber dependence") {
    const FiniteGroupoid P = fixtures::p2();
    const GroupoidRep R = fixtures::fixture_r();
    SGRep rho = induce_sg_rep(P, R);
    const SelfMap f = psi_embed(P, bis(P, {"(a,b)", "(b,a)"}));
    const std::size_t i = *rho.index_of(f);
    BundleAutomorphism c = rho.images[i].carrier();
    c.fiber_maps[0] = Matrix(c.fiber_maps[0] * Rational(3));
    rho.images[i] = SemiLinearMap(c);
    CHECK(kind_of([&] { restrict_to_bis(P, rho, R.bundle); }) == ErrorKind::NotConstantOnFibers);
  }

  TEST_CASE("recovery from the S_G side") {
    const FiniteGroupoid P = fixtures::p2();
    const GroupoidRep R = fixtures::fixture_r();
    const SgRecovery back = recover_from_sg_rep(P, induce_sg_rep(P, R), R.bundle);
    CHECK(back.rep == R);
    CHECK(back.agrees_everywhere);
  }

  TEST_CASE("the identity S_G rep does not agree with any induced rep") {
    // the values read off at the units form the trivial rep, whose induced
    // maps move sections along R_f while the identity does not
    const FiniteGroupoid GB = fixtures::gb2();
    const VectorBundle E({1, 2});
    CHECK(kind_of([&] { recover_from_sg_rep(GB, identity_sg_rep(GB, E), E); }) ==
          ErrorKind::AgreementFailure);
    const FiniteGroupoid P = fixtures::p2();
    const VectorBundle L = fixtures::line_bundle(P);
    CHECK(kind_of([&] { recover_from_sg_rep(P, identity_sg_rep(P, L), L); }) ==
          ErrorKind::AgreementFailure);
  }

  TEST_CASE("random reps survive both round trips") {
    Rng rng(5);
    for (const FiniteGroupoid& G : {fixtures::p2(), fixtures::gb2(), fixtures::pair(3)}) {
      for (int trial = 0; trial < 3; ++trial) {
        const GroupoidRep phi = random_groupoid_rep(rng, G);
        REQUIRE(validate_groupoid_rep(G, phi).ok());
        CHECK(recover_groupoid_rep(G, induce_bis_rep(G, phi)) == phi);
        CHECK(recover_from_sg_rep(G, induce_sg_rep(G, phi), phi.bundle).rep == phi);
      }
    }
  }

  TEST_CASE("morphism transfer") {
    const FiniteGroupoid P = fixtures::p2();
    const GroupoidRep R = fixtures::fixture_r();
    const BundleMorphism id = identity_morphism(R.bundle);
    const TransferredMorphism t = rep_morphism_transfer(P, R, R, id);
    CHECK(t.on_sections == id);
    CHECK(t.on_pullback_sections == identity_morphism(pullback_bundle(P, R.bundle)));

    const BundleMorphism three{{scalar(3), scalar(3)}};
    const TransferredMorphism t3 = rep_morphism_transfer(P, R, R, three);
    const Section xi = line_section({1, 3});
    CHECK(apply_bundle_morphism(t3.on_sections, xi) == scale(Rational(3), xi));
    CHECK_FALSE(t3 == t);
    const BisRep rho = induce_bis_rep(P, R);
    for (const SemiLinearMap& m : rho.images) {
      CHECK(m(apply_bundle_morphism(t3.on_sections, xi)) ==
            apply_bundle_morphism(t3.on_sections, m(xi)));
    }

    const BundleMorphism skew{{scalar(1), scalar(2)}};
    CHECK(kind_of([&] { require_equivariant(P, R, R, skew); }) == ErrorKind::NotEquivariant);
  }
}

#include "support.hpp"

#include "gpdrep/fixtures.hpp"
#include "gpdrep/random.hpp"
#include "gpdrep/semilinear.hpp"
#include "gpdrep/transfer.hpp"

using namespace gpdrep;
using namespace testsupport;

namespace {

// b = swap, F_a = [2]: E_a → E_b, F_b = [5]: E_b → E_a
BundleAutomorphism swap_aut() { return BundleAutomorphism{{1, 0}, {scalar(2), scalar(5)}}; }

// σ(a) = [2]: E_b → E_a, σ(b) = [1/2]: E_a → E_b
FrameBisection swap_frame_bis(const VectorBundle& L) {
  return FrameBisection{{make_frame_arrow(L, 1, 0, scalar(2)),
                         make_frame_arrow(L, 0, 1, scalar(Rational(1, 2)))}};
}

Section random_section(Rng& rng, const VectorBundle& E) {
  Section s = zero_section(E);
  for (std::size_t x = 0; x < E.base_size(); ++x) {
    for (Eigen::Index i = 0; i < s.at(x).size(); ++i) {
      s.at(x)(i) = random_rational(rng);
    }
  }
  return s;
}

}  // namespace

TEST_SUITE("semilinear") {
  TEST_CASE("nu evaluates F after b inverse") {
    const VectorBundle L({1, 1});
    const Section xi = line_section({1, 3});
    CHECK(nu(L, identity_automorphism(L))(xi) == xi);
    const SemiLinearMap mu = nu(L, swap_aut());
    CHECK(mu(xi) == line_section({15, 2}));
    const std::vector<Rational> f{Rational(7), Rational(-1)};
    CHECK(mu(module_action(f, xi)) == module_action({f[1], f[0]}, mu(xi)));
    CHECK(semilinear_identity_holds(L, mu));
  }

  TEST_CASE("nu_inverse") {
    const VectorBundle L({1, 1});
    CHECK(nu_inverse(SectionMatrix{L, Matrix::Identity(2, 2)}) == identity_automorphism(L));
    CHECK(nu_inverse(to_section_matrix(L, nu(L, swap_aut()))) == swap_aut());

    const FiniteGroupoid P = fixtures::p2();
    const SemiLinearMap rho_swap =
        induced_bis_map(P, fixtures::fixture_r(), bis(P, {"(a,b)", "(b,a)"}));
    const BundleAutomorphism F = nu_inverse(to_section_matrix(L, rho_swap));
    CHECK(F.base_map == std::vector<BasePoint>{1, 0});
    CHECK(F.fiber_maps[1] == scalar(2));
  }

  TEST_CASE("nu_inverse on random automorphisms") {
    Rng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
      const VectorBundle E = random_bundle(rng, 4, 1, 3);
      const BundleAutomorphism F = random_automorphism(rng, E);
      CHECK(nu_inverse(to_section_matrix(E, nu(E, F))) == F);
    }
  }

  TEST_CASE("is_semilinear") {
    const VectorBundle L({1, 1});
    const auto id = is_semilinear(SectionMatrix{L, Matrix::Identity(2, 2)});
    REQUIRE(id.has_value());
    CHECK(*id == std::vector<BasePoint>{0, 1});

    const FiniteGroupoid P = fixtures::p2();
    const SemiLinearMap rho_swap =
        induced_bis_map(P, fixtures::fixture_r(), bis(P, {"(a,b)", "(b,a)"}));
    const auto sw = is_semilinear(to_section_matrix(L, rho_swap));
    REQUIRE(sw.has_value());
    CHECK(*sw == std::vector<BasePoint>{1, 0});

    // μ(ξ) = (ξ(a) + ξ(b), ξ(b))
    const SectionMatrix spread{L, mat({{1, 1}, {0, 1}})};
    CHECK_FALSE(is_semilinear(spread).has_value());
    CHECK(kind_of([&] { nu_inverse(spread); }) == ErrorKind::NotSemilinear);
    CHECK_FALSE(is_semilinear(SectionMatrix{L, mat({{1, 0}, {0, 0}})}).has_value());
  }

  TEST_CASE("B and its inverse") {
    const VectorBundle L({1, 1});
    CHECK(bisection_to_bundle_aut(L, frame_bis_unit(L)) == identity_automorphism(L));
    const FrameBisection s = swap_frame_bis(L);
    REQUIRE(frame_bis_validate(L, s));
    const BundleAutomorphism F = bisection_to_bundle_aut(L, s);
    CHECK(F.base_map == std::vector<BasePoint>{1, 0});
    CHECK(bundle_aut_to_bisection(L, F) == s);
    CHECK(bundle_aut_to_bisection(L, identity_automorphism(L)) == frame_bis_unit(L));

    const std::vector<FrameBisection> group{frame_bis_unit(L), s};
    for (const FrameBisection& x : group) {
      for (const FrameBisection& y : group) {
        CHECK(bisection_to_bundle_aut(L, frame_bis_multiply(x, y)) ==
              compose(bisection_to_bundle_aut(L, x), bisection_to_bundle_aut(L, y)));
        CHECK(bundle_aut_to_bisection(L, compose(bisection_to_bundle_aut(L, x),
                                                 bisection_to_bundle_aut(L, y))) ==
              frame_bis_multiply(x, y));
      }
    }
    CHECK(frame_bis_multiply(s, frame_bis_invert(s)) == frame_bis_unit(L));
  }

  TEST_CASE("invalid frame bisections are rejected") {
    const VectorBundle L({1, 1});
    const FrameBisection bad{{frame_identity(L, 0), frame_identity(L, 0)}};
    CHECK_FALSE(frame_bis_validate(L, bad));
    CHECK(kind_of([&] { bisection_to_bundle_aut(L, bad); }) == ErrorKind::InvalidBisection);
  }

  TEST_CASE("gamma") {
    const VectorBundle L({1, 1});
    const Section xi = line_section({1, 3});
    CHECK(gamma_iso(L, frame_bis_unit(L)) == identity_map(L));
    const FrameBisection s = swap_frame_bis(L);
    CHECK(gamma_apply(s, xi).at(0)(0) == Rational(6));
    Rng rng(11);
    const SemiLinearMap g = gamma_iso(L, s);
    const SemiLinearMap n = nu(L, bisection_to_bundle_aut(L, s));
    for (int i = 0; i < 10; ++i) {
      const Section r = random_section(rng, L);
      CHECK(g(r) == n(r));
    }
  }

  TEST_CASE("gamma equals nu after B on mixed dimensions") {
    Rng rng(3);
    for (int trial = 0; trial < 5; ++trial) {
      const VectorBundle E = random_bundle(rng, 3, 1, 3);
      const FrameBisection s = bundle_aut_to_bisection(E, random_automorphism(rng, E));
      CHECK(to_section_matrix(E, gamma_iso(E, s)) ==
            to_section_matrix(E, nu(E, bisection_to_bundle_aut(E, s))));
    }
  }

  TEST_CASE("semi-linear maps compose like automorphisms") {
    const VectorBundle L({1, 1});
    const SemiLinearMap mu = nu(L, swap_aut());
    const Section xi = line_section({1, 3});
    CHECK(compose(mu, inverse(mu))(xi) == xi);
    CHECK(compose(mu, mu)(xi) == mu(mu(xi)));
  }

  TEST_CASE("locality") {
    const FiniteGroupoid P = fixtures::p2();
    const FiniteGroupoid GB = fixtures::gb2();
    CHECK(is_local_bis(P, induce_bis_rep(P, fixtures::fixture_r())));
    const BisRep nonlocal = fixtures::gb2_nonlocal_rep();
    CHECK_FALSE(is_local_bis(GB, nonlocal));
    const auto why = locality_violation(GB, nonlocal);
    REQUIRE(why.has_value());
    CHECK(why->find("g1@a") != std::string::npos);
    const VectorBundle L = fixtures::line_bundle(GB);
    CHECK(is_local_bis(GB, induce_bis_rep(GB, trivial_rep(GB, L))));
    CHECK(is_local_sg(P, induce_sg_rep(P, fixtures::fixture_r())));
  }
}

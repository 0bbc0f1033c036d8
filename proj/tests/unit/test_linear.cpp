#include "support.hpp"

#include "gpdrep/fixtures.hpp"

using namespace gpdrep;
using namespace testsupport;

TEST_SUITE("linear") {
  TEST_CASE("module action and vector operations on L") {
    const Section xi = line_section({1, 3});
    CHECK(module_action({Rational(2), Rational(0)}, xi) == line_section({2, 0}));
    const VectorBundle L = fixtures::line_bundle(fixtures::p2());
    CHECK(add(xi, zero_section(L)) == xi);
    CHECK(scale(Rational(1, 2), line_section({4, 6})) == line_section({2, 3}));
  }

  TEST_CASE("add rejects sections of different shape") {
    CHECK(kind_of([] { add(line_section({1}), line_section({1, 2})); }) ==
          ErrorKind::DimensionMismatch);
  }

  TEST_CASE("delta basis and flattening") {
    const VectorBundle E({2, 0, 1});
    CHECK(E.total_dim() == 3);
    CHECK(E.offset(2) == 2);
    const auto basis = delta_basis(E);
    REQUIRE(basis.size() == 3);
    CHECK(basis[2].at(2)(0) == Rational(1));
    Vector v(3);
    v << Rational(1), Rational(-2), Rational(1, 3);
    CHECK(flatten(E, unflatten(E, v)) == v);
  }

  TEST_CASE("frame composition") {
    const VectorBundle L({1, 1});
    const FrameArrow ba = make_frame_arrow(L, 1, 0, scalar(2));
    const FrameArrow ab = make_frame_arrow(L, 0, 1, scalar(Rational(1, 2)));
    CHECK(frame_compose(ba, ab) == frame_identity(L, 0));
    CHECK(frame_compose(frame_identity(L, 0), ba) == ba);

    const VectorBundle E({2});
    const FrameArrow sw = make_frame_arrow(E, 0, 0, mat({{0, 1}, {1, 0}}));
    CHECK(frame_compose(sw, sw) == frame_identity(E, 0));
    CHECK(frame_inverse(ba) == ab);
  }

  TEST_CASE("frame arrows are checked") {
    const VectorBundle E({1, 2});
    CHECK(kind_of([&] { make_frame_arrow(E, 0, 1, scalar(1)); }) == ErrorKind::DimensionMismatch);
    CHECK(kind_of([&] { make_frame_arrow(E, 0, 0, scalar(0)); }) == ErrorKind::NotInvertible);
    const FrameArrow a = frame_identity(E, 0);
    CHECK(kind_of([&] { frame_compose(frame_identity(E, 1), a); }) == ErrorKind::NotComposable);
  }

  TEST_CASE("pullback of sections") {
    const FiniteGroupoid P = fixtures::p2();
    const VectorBundle L = fixtures::line_bundle(P);
    const Section xi = line_section({1, 3});
    const Section pulled = pullback_section(P, L, xi);
    CHECK(pulled.at(named(P, "(a,b)").index)(0) == Rational(3));
    CHECK(pullback_section(P, L, zero_section(L)) == zero_section(pullback_bundle(P, L)));
    for (std::size_t m = 0; m < P.num_objects(); ++m) {
      CHECK(pulled.at(P.unit(obj(m)).index) == xi.at(m));
    }
  }

  TEST_CASE("pullback bundle dimensions follow the source") {
    const FiniteGroupoid G = fixtures::gb2();
    const VectorBundle E({1, 3});
    const VectorBundle pb = pullback_bundle(G, E);
    CHECK(pb.dims() == std::vector<std::size_t>{1, 1, 3, 3});
  }

  TEST_CASE("bundle morphisms act pointwise") {
    const VectorBundle L({1, 1});
    const Section xi = line_section({1, 3});
    CHECK(apply_bundle_morphism(identity_morphism(L), xi) == xi);
    CHECK(apply_bundle_morphism(BundleMorphism{{scalar(0), scalar(0)}}, xi) == zero_section(L));
    CHECK(apply_bundle_morphism(BundleMorphism{{scalar(2), scalar(1)}}, xi) ==
          line_section({2, 3}));
    const BundleMorphism d{{scalar(2), scalar(5)}};
    CHECK(compose(d, identity_morphism(L)) == d);
    CHECK(kind_of([&] { require_morphism(L, VectorBundle({2, 1}), d); }) ==
          ErrorKind::DimensionMismatch);
  }

  TEST_CASE("bundle automorphisms") {
    const VectorBundle L({1, 1});
    const BundleAutomorphism F{{1, 0}, {scalar(2), scalar(5)}};
    require_automorphism(L, F);
    CHECK(compose(F, inverse(F)) == identity_automorphism(L));
    CHECK(compose(inverse(F), F) == identity_automorphism(L));
    CHECK(kind_of([&] { require_automorphism(L, BundleAutomorphism{{0, 0}, F.fiber_maps}); }) ==
          ErrorKind::NotInvertible);
    CHECK(kind_of([&] {
            require_automorphism(L, BundleAutomorphism{{1, 0}, {scalar(0), scalar(1)}});
          }) == ErrorKind::NotInvertible);
    CHECK(invert_bijection({2, 0, 1}) == std::vector<BasePoint>{1, 2, 0});
    CHECK_FALSE(is_bijection({0, 0}));
  }
}

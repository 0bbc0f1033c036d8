#include <doctest.h>

#include <set>

#include "gpdrep/error.hpp"
#include "gpdrep/fixtures.hpp"
#include "gpdrep/groupoid.hpp"
#include "gpdrep/matrix.hpp"

using namespace gpdrep;

namespace {

ArrId named(const FiniteGroupoid& G, const std::string& name) {
  const auto a = G.find_arrow(name);
  REQUIRE(a.has_value());
  return *a;
}

// P2 with a single product entry replaced.
FiniteGroupoid corrupt_p2(const std::string& g, const std::string& h, const std::string& k) {
  const FiniteGroupoid P = fixtures::p2();
  std::vector<ObjId> src, tgt;
  std::vector<ArrId> unit, inv;
  for (std::size_t i = 0; i < P.num_arrows(); ++i) {
    src.push_back(P.source(arr(i)));
    tgt.push_back(P.target(arr(i)));
    inv.push_back(P.inverse(arr(i)));
  }
  for (std::size_t m = 0; m < P.num_objects(); ++m) {
    unit.push_back(P.unit(obj(m)));
  }
  std::vector<std::int32_t> mul = P.mul_table();
  mul[named(P, g).index * P.num_arrows() + named(P, h).index] =
      static_cast<std::int32_t>(named(P, k).index);
  return FiniteGroupoid(P.object_names(), P.arrow_names(), src, tgt, unit, inv, mul);
}

bool mentions(const ValidationReport& r, const std::string& law, const std::string& witness) {
  for (const Violation& v : r.violations) {
    if (v.law == law && v.witness.find(witness) != std::string::npos) {
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_SUITE("groupoid-core") {
  TEST_CASE("compose on P2 and Z2") {
    const FiniteGroupoid P = fixtures::p2();
    CHECK(compose(P, named(P, "(a,b)"), named(P, "(b,a)")) == named(P, "(a,a)"));
    CHECK(compose(P, named(P, "(a,a)"), named(P, "(a,b)")) == named(P, "(a,b)"));
    const FiniteGroupoid Z = fixtures::z2();
    CHECK(compose(Z, named(Z, "g1"), named(Z, "g1")) == named(Z, "e"));
  }

  TEST_CASE("compose rejects non-composable pairs") {
    const FiniteGroupoid P = fixtures::p2();
    try {
      compose(P, named(P, "(a,b)"), named(P, "(a,b)"));
      FAIL("expected NotComposable");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotComposable);
    }
    CHECK_FALSE(P.product(named(P, "(a,b)"), named(P, "(a,a)")).has_value());
  }

  TEST_CASE("compose fixes endpoints") {
    const FiniteGroupoid G = fixtures::pair(3);
    for (std::size_t i = 0; i < G.num_arrows(); ++i) {
      for (ArrId h : G.arrows_into(G.source(arr(i)))) {
        const ArrId gh = G.compose(arr(i), h);
        CHECK(G.target(gh) == G.target(arr(i)));
        CHECK(G.source(gh) == G.source(h));
      }
    }
  }

  TEST_CASE("inverse examples") {
    const FiniteGroupoid P = fixtures::p2();
    CHECK(inverse(P, named(P, "(a,b)")) == named(P, "(b,a)"));
    CHECK(inverse(P, named(P, "(a,a)")) == named(P, "(a,a)"));
    const FiniteGroupoid Z = fixtures::z2();
    CHECK(inverse(Z, named(Z, "g1")) == named(Z, "g1"));
  }

  TEST_CASE("inverse is an involution and g g^-1 is a unit") {
    const FiniteGroupoid G = fixtures::pair(4);
    for (std::size_t i = 0; i < G.num_arrows(); ++i) {
      const ArrId g = arr(i);
      CHECK(G.inverse(G.inverse(g)) == g);
      CHECK(G.compose(g, G.inverse(g)) == G.unit(G.target(g)));
      CHECK(G.source(G.inverse(g)) == G.target(g));
    }
  }

  TEST_CASE("validate_groupoid accepts the fixtures") {
    CHECK(validate_groupoid(fixtures::p2()).ok());
    CHECK(validate_groupoid(fixtures::z2()).ok());
    CHECK(validate_groupoid(fixtures::gb2()).ok());
    CHECK(validate_groupoid(fixtures::pair(4)).ok());
  }

  TEST_CASE("a corrupted product names the broken triple") {
    const FiniteGroupoid bad = corrupt_p2("(a,b)", "(b,a)", "(a,b)");
    const ValidationReport r = validate_groupoid(bad);
    CHECK_FALSE(r.ok());
    CHECK(mentions(r, "associativity", "((a,b), (b,a), (a,b))"));
    CHECK(mentions(r, "product endpoints", "((a,b), (b,a))"));
  }

  TEST_CASE("a product on a non-composable pair is reported") {
    const FiniteGroupoid P = fixtures::p2();
    std::vector<std::int32_t> mul = P.mul_table();
    mul[named(P, "(a,b)").index * 4 + named(P, "(a,b)").index] =
        static_cast<std::int32_t>(named(P, "(a,a)").index);
    std::vector<ObjId> src, tgt;
    std::vector<ArrId> inv;
    for (std::size_t i = 0; i < 4; ++i) {
      src.push_back(P.source(arr(i)));
      tgt.push_back(P.target(arr(i)));
      inv.push_back(P.inverse(arr(i)));
    }
    const FiniteGroupoid bad(P.object_names(), P.arrow_names(), src, tgt,
                             {P.unit(obj(0)), P.unit(obj(1))}, inv, mul);
    CHECK(mentions(validate_groupoid(bad), "product undefined on non-composable pairs", "(a,b)"));
  }

  TEST_CASE("constructor rejects malformed tables") {
    CHECK_THROWS_AS(FiniteGroupoid({"a"}, {"x"}, {obj(0)}, {obj(0)}, {arr(0)}, {arr(0)}, {}),
                    Error);
    CHECK_THROWS_AS(FiniteGroupoid({"a"}, {"x"}, {obj(1)}, {obj(0)}, {arr(0)}, {arr(0)}, {0}),
                    Error);
  }

  TEST_CASE("builders") {
    const FiniteGroupoid P = build_pair(2);
    CHECK(P.num_arrows() == 4);
    CHECK(P.num_objects() == 2);
    const FiniteGroupoid Z = build_group({{0, 1}, {1, 0}});
    CHECK(Z.num_arrows() == 2);
    CHECK(Z.num_objects() == 1);
    const FiniteGroupoid GB = build_group_bundle({{0, 1}, {1, 0}}, 2);
    CHECK(GB.num_arrows() == 4);
    for (std::size_t i = 0; i < GB.num_arrows(); ++i) {
      CHECK(GB.source(arr(i)) == GB.target(arr(i)));
    }
    // Z/3 acting on three points by rotation, with an extra fixed point
    const CayleyTable z3 = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    const FiniteGroupoid A = build_action(z3, {{0, 1, 2, 3}, {1, 2, 0, 3}, {2, 0, 1, 3}});
    CHECK(A.num_arrows() == 12);
    CHECK(validate_groupoid(A).ok());
    const ArrId g = *A.find_arrow("(g1,a)");
    CHECK(A.source(g) == obj(0));
    CHECK(A.target(g) == obj(1));
  }

  TEST_CASE("builders reject tables that are not groups or actions") {
    const auto kind = [](auto f) {
      try {
        f();
      } catch (const Error& e) {
        return e.kind();
      }
      return ErrorKind::UnknownElement;
    };
    CHECK(kind([] { build_group({{0, 0}, {0, 0}}); }) == ErrorKind::MalformedTable);
    CHECK(kind([] { build_group({{0, 1}, {1}}); }) == ErrorKind::MalformedTable);
    CHECK(kind([] { build_group({{0, 2}, {1, 0}}); }) == ErrorKind::MalformedTable);
    CHECK(kind([] { build_action({{0, 1}, {1, 0}}, {{0, 1}, {0, 0}}); }) ==
          ErrorKind::MalformedTable);
    CHECK(kind([] { build_action({{0, 1}, {1, 0}}, {{1, 0}, {0, 1}}); }) ==
          ErrorKind::MalformedTable);
  }

  TEST_CASE("pair(n) joins every ordered pair of objects by exactly one arrow") {
    for (std::size_t n = 1; n <= 4; ++n) {
      const FiniteGroupoid G = build_pair(n);
      std::set<std::pair<std::uint32_t, std::uint32_t>> ends;
      for (std::size_t i = 0; i < G.num_arrows(); ++i) {
        ends.insert({G.target(arr(i)).index, G.source(arr(i)).index});
      }
      CHECK(ends.size() == n * n);
      CHECK(G.num_arrows() == n * n);
    }
  }

  TEST_CASE("associativity holds exhaustively on the builders") {
    for (const FiniteGroupoid& G : {fixtures::pair(4), fixtures::gb2(), fixtures::z2()}) {
      for (std::size_t i = 0; i < G.num_arrows(); ++i) {
        for (ArrId h : G.arrows_into(G.source(arr(i)))) {
          for (ArrId k : G.arrows_into(G.source(h))) {
            CHECK(G.compose(G.compose(arr(i), h), k) == G.compose(arr(i), G.compose(h, k)));
          }
        }
      }
    }
  }

  TEST_CASE("rational parsing") {
    Rational q;
    CHECK(parse_rational("4/6", q));
    CHECK(q == Rational(2, 3));
    CHECK(format_rational(q) == "2/3");
    CHECK(parse_rational("-3", q));
    CHECK(format_rational(q) == "-3");
    CHECK(parse_rational("0/5", q));
    CHECK(format_rational(q) == "0");
    CHECK_FALSE(parse_rational("2/0", q));
    CHECK_FALSE(parse_rational("1/-2", q));
    CHECK_FALSE(parse_rational("x", q));
    CHECK_FALSE(parse_rational("", q));
    CHECK_FALSE(parse_rational("1.5", q));
  }

  TEST_CASE("exact inverse and rank") {
    Matrix m(2, 2);
    m << Rational(1), Rational(2), Rational(3), Rational(4);
    const auto inv = exact_inverse(m);
    REQUIRE(inv.has_value());
    CHECK(Matrix(m * *inv) == Matrix::Identity(2, 2));
    Matrix s(2, 2);
    s << Rational(1), Rational(2), Rational(2), Rational(4);
    CHECK_FALSE(exact_inverse(s).has_value());
    CHECK(exact_rank(s) == 1);
    CHECK(is_invertible(Matrix(0, 0)));
    CHECK_FALSE(same_matrix(Matrix(1, 2), Matrix(2, 1)));
  }
}

#include "support.hpp"

#include <algorithm>

#include "gpdrep/fixtures.hpp"
#include "gpdrep/selfmap.hpp"
#include "gpdrep/verify/oracle.hpp"

using namespace gpdrep;
using namespace testsupport;

TEST_SUITE("bisections") {
  TEST_CASE("bis_validate") {
    const FiniteGroupoid P = fixtures::p2();
    CHECK(bis_validate(P, bis(P, {"(a,b)", "(b,a)"})));
    CHECK_FALSE(bis_validate(P, bis(P, {"(a,a)", "(a,b)"})));
    CHECK(bis_validate(P, bis_unit(P)));
    // right targets, but α∘σ not injective
    CHECK_FALSE(bis_validate(P, bis(P, {"(a,b)", "(b,b)"})));
    CHECK_FALSE(bis_validate(P, Bisection{{arr(0)}}));
  }

  TEST_CASE("bis_multiply") {
    const FiniteGroupoid P = fixtures::p2();
    const Bisection swap = bis(P, {"(a,b)", "(b,a)"});
    CHECK(bis_multiply(P, swap, swap) == bis_unit(P));
    CHECK(bis_multiply(P, swap, bis_unit(P)) == swap);
    CHECK(bis_multiply(P, bis_unit(P), swap) == swap);
    const FiniteGroupoid Z = fixtures::z2();
    CHECK(bis_multiply(Z, bis(Z, {"g1"}), bis(Z, {"g1"})) == bis(Z, {"e"}));
  }

  TEST_CASE("bis_invert") {
    const FiniteGroupoid P = fixtures::p2();
    const Bisection swap = bis(P, {"(a,b)", "(b,a)"});
    CHECK(bis_invert(P, swap) == swap);
    CHECK(bis_invert(P, bis_unit(P)) == bis_unit(P));
    const FiniteGroupoid GB = fixtures::gb2();
    const Bisection s = bis(GB, {"g1@a", "e@b"});
    CHECK(bis_invert(GB, s) == s);
  }

  TEST_CASE("invalid input is rejected") {
    const FiniteGroupoid P = fixtures::p2();
    const Bisection bad = bis(P, {"(a,a)", "(a,b)"});
    CHECK(kind_of([&] { bis_multiply(P, bad, bis_unit(P)); }) == ErrorKind::InvalidBisection);
    CHECK(kind_of([&] { bis_invert(P, bad); }) == ErrorKind::InvalidBisection);
  }

  TEST_CASE("Bis(pair n) is a group of order n!") {
    for (std::size_t n = 2; n <= 4; ++n) {
      const FiniteGroupoid G = fixtures::pair(n);
      const auto all = enumerate_bisections(G);
      std::size_t fact = 1;
      for (std::size_t k = 2; k <= n; ++k) {
        fact *= k;
      }
      CHECK(all.size() == fact);
      CHECK(std::is_sorted(all.begin(), all.end()));
      for (const Bisection& s : all) {
        CHECK(std::binary_search(all.begin(), all.end(), bis_invert(G, s)));
        CHECK(bis_multiply(G, s, bis_invert(G, s)) == bis_unit(G));
        for (const Bisection& t : all) {
          CHECK(std::binary_search(all.begin(), all.end(), bis_multiply(G, s, t)));
        }
      }
    }
  }

  TEST_CASE("enumeration agrees with the brute-force oracle") {
    for (const FiniteGroupoid& G :
         {fixtures::p2(), fixtures::pair(3), fixtures::z2(), fixtures::gb2()}) {
      CHECK(enumerate_bisections(G) == oracle::brute_force_bisections(G));
    }
    CHECK(enumerate_bisections(fixtures::p2()).size() == 2);
    CHECK(enumerate_bisections(fixtures::pair(3)).size() == 6);
    CHECK(enumerate_bisections(fixtures::z2()).size() == 2);
    CHECK(enumerate_bisections(fixtures::gb2()).size() == 4);
  }

  TEST_CASE("enough bisections with witnesses") {
    for (const FiniteGroupoid& G : {fixtures::p2(), fixtures::z2(), fixtures::gb2()}) {
      const EnoughBisections e = has_enough_bisections(G);
      CHECK(e.holds);
      for (std::size_t i = 0; i < G.num_arrows(); ++i) {
        REQUIRE(e.witness[i].has_value());
        CHECK((*e.witness[i])(G.target(arr(i))) == arr(i));
      }
    }
  }

  TEST_CASE("missing bisections are reported") {
    const FiniteGroupoid P = fixtures::p2();
    // only the unit bisection available
    const EnoughBisections e = has_enough_bisections(P, {bis_unit(P)});
    CHECK_FALSE(e.holds);
    CHECK_FALSE(e.witness[named(P, "(a,b)").index].has_value());
  }

  TEST_CASE("psi embedding") {
    const FiniteGroupoid P = fixtures::p2();
    const Bisection swap = bis(P, {"(a,b)", "(b,a)"});
    const SelfMap f = psi_embed(P, swap);
    for (std::size_t i = 0; i < P.num_arrows(); ++i) {
      CHECK(f(arr(i)) == swap(P.source(arr(i))));
    }
    CHECK(psi_embed(P, bis_unit(P)) == sg_unit(P));
    const FiniteGroupoid Z = fixtures::z2();
    std::vector<SelfMap> image;
    for (const Bisection& s : enumerate_bisections(Z)) {
      image.push_back(psi_embed(Z, s));
    }
    std::sort(image.begin(), image.end());
    CHECK(image == enumerate_sg_units(Z));
  }

  TEST_CASE("psi is a homomorphism") {
    const FiniteGroupoid G = fixtures::pair(3);
    const auto all = enumerate_bisections(G);
    for (const Bisection& s : all) {
      for (const Bisection& t : all) {
        CHECK(psi_embed(G, bis_multiply(G, s, t)) ==
              sg_star(G, psi_embed(G, s), psi_embed(G, t)));
      }
    }
  }

  TEST_CASE("gamma action") {
    const FiniteGroupoid P = fixtures::p2();
    const Bisection swap = bis(P, {"(a,b)", "(b,a)"});
    const ArrId aa = named(P, "(a,a)");
    CHECK(gamma_bis_action(P, swap, aa) == named(P, "(a,b)"));
    CHECK(gamma_bis_action(P, bis_unit(P), aa) == aa);
    CHECK(gamma_bis_action(P, swap, gamma_bis_action(P, swap, aa)) == aa);
  }

  TEST_CASE("source map of a bisection") {
    const FiniteGroupoid P = fixtures::p2();
    const auto b = source_map(P, bis(P, {"(a,b)", "(b,a)"}));
    CHECK(b == std::vector<ObjId>{obj(1), obj(0)});
  }
}

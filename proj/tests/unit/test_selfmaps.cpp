#include "support.hpp"

#include <algorithm>

#include "gpdrep/fixtures.hpp"
#include "gpdrep/selfmap.hpp"
#include "gpdrep/verify/oracle.hpp"

using namespace gpdrep;
using namespace testsupport;

namespace {

// f((y,x)) = (x, c(y,x)) on a pair groupoid, i.e. arrow id x*n + c.
SelfMap pair_map(const FiniteGroupoid& G, std::size_t n,
                 const std::function<std::size_t(std::size_t, std::size_t)>& c) {
  SelfMap f;
  for (std::size_t i = 0; i < G.num_arrows(); ++i) {
    const std::size_t y = G.target(arr(i)).index;
    const std::size_t x = G.source(arr(i)).index;
    f.values.push_back(arr(x * n + c(y, x)));
  }
  return f;
}

SelfMap identity_selfmap(const FiniteGroupoid& G) {
  SelfMap f;
  for (std::size_t i = 0; i < G.num_arrows(); ++i) {
    f.values.push_back(arr(i));
  }
  return f;
}

}  // namespace

TEST_SUITE("selfmaps") {
  TEST_CASE("sg_validate") {
    const FiniteGroupoid P = fixtures::p2();
    CHECK(sg_validate(P, pair_map(P, 2, [](std::size_t, std::size_t x) { return x; })));
    CHECK(sg_validate(P, sg_unit(P)));
    CHECK_FALSE(sg_validate(P, identity_selfmap(P)));
    CHECK(sg_validate(fixtures::gb2(), identity_selfmap(fixtures::gb2())));
  }

  TEST_CASE("star product") {
    const FiniteGroupoid P = fixtures::p2();
    const SelfMap f = psi_embed(P, bis(P, {"(a,b)", "(b,a)"}));
    CHECK(sg_star(P, sg_unit(P), f) == f);
    CHECK(sg_star(P, f, sg_unit(P)) == f);
    CHECK(sg_star(P, f, f) == sg_unit(P));

    const FiniteGroupoid GB = fixtures::gb2();
    SelfMap s;
    for (std::size_t i = 0; i < GB.num_arrows(); ++i) {
      s.values.push_back(named(GB, GB.object_name(GB.source(arr(i))) == "a" ? "g1@a" : "g1@b"));
    }
    REQUIRE(sg_validate(GB, s));
    CHECK(sg_star(GB, s, s) == sg_unit(GB));
  }

  TEST_CASE("R_f") {
    const FiniteGroupoid P = fixtures::p2();
    std::vector<ArrId> ids;
    for (std::size_t i = 0; i < P.num_arrows(); ++i) {
      ids.push_back(arr(i));
    }
    CHECK(R_of(P, sg_unit(P)) == ids);
    const SelfMap f = psi_embed(P, bis(P, {"(a,b)", "(b,a)"}));
    CHECK(R_of(P, f)[named(P, "(a,a)").index] == named(P, "(a,b)"));
    for (const SelfMap& g : enumerate_sg_units(P)) {
      const auto rg = R_of(P, g);
      const auto rgg = R_of(P, sg_star(P, g, g));
      for (std::size_t i = 0; i < P.num_arrows(); ++i) {
        CHECK(rgg[i] == rg[rg[i].index]);
      }
    }
  }

  TEST_CASE("inversion") {
    const FiniteGroupoid P = fixtures::p2();
    CHECK(sg_is_unit(P, sg_unit(P)));
    CHECK(sg_invert(P, sg_unit(P)) == sg_unit(P));
    const SelfMap constant = pair_map(P, 2, [](std::size_t, std::size_t) { return 0; });
    REQUIRE(sg_validate(P, constant));
    CHECK_FALSE(sg_is_unit(P, constant));
    CHECK(kind_of([&] { sg_invert(P, constant); }) == ErrorKind::NotInvertible);
    const SelfMap f = psi_embed(P, bis(P, {"(a,b)", "(b,a)"}));
    CHECK(sg_invert(P, f) == f);
    for (const SelfMap& g : enumerate_sg_units(P)) {
      CHECK(sg_star(P, g, sg_invert(P, g)) == sg_unit(P));
      CHECK(sg_star(P, sg_invert(P, g), g) == sg_unit(P));
    }
  }

  TEST_CASE("enumeration matches the oracle") {
    CHECK(enumerate_sg_units(fixtures::z2()).size() == 2);
    CHECK(enumerate_sg_units(fixtures::p2()).size() == 4);
    CHECK(enumerate_sg_units(fixtures::gb2()).size() == 4);
    CHECK(enumerate_sg_units(fixtures::pair(3)).size() == 216);
    for (const FiniteGroupoid& G :
         {fixtures::p2(), fixtures::z2(), fixtures::gb2(), fixtures::pair(3)}) {
      CHECK(enumerate_sg_units(G) == oracle::brute_force_sg_units(G));
    }
  }

  TEST_CASE("Psi(Bis) sits inside S_G") {
    for (const FiniteGroupoid& G : {fixtures::p2(), fixtures::gb2(), fixtures::pair(3)}) {
      const auto units = enumerate_sg_units(G);
      for (const Bisection& s : enumerate_bisections(G)) {
        CHECK(std::binary_search(units.begin(), units.end(), psi_embed(G, s)));
      }
    }
  }

  TEST_CASE("search space bound") {
    const FiniteGroupoid G = fixtures::pair(4);
    CHECK(sg_search_space(G) == 4294967296ULL);
    CHECK(kind_of([&] { enumerate_sg_units(G); }) == ErrorKind::TooLarge);
    CHECK(kind_of([] { enumerate_sg_units(fixtures::pair(3), 100); }) == ErrorKind::TooLarge);
  }

  TEST_CASE("gamma action") {
    const FiniteGroupoid P = fixtures::p2();
    for (std::size_t i = 0; i < P.num_arrows(); ++i) {
      CHECK(gamma_sg_action(P, sg_unit(P), arr(i)) == arr(i));
    }
    const SelfMap f = psi_embed(P, bis(P, {"(a,b)", "(b,a)"}));
    CHECK(gamma_sg_action(P, f, named(P, "(a,a)")) == named(P, "(a,b)"));
    const auto units = enumerate_sg_units(P);
    for (const SelfMap& g : units) {
      for (const SelfMap& h : units) {
        for (std::size_t i = 0; i < P.num_arrows(); ++i) {
          CHECK(gamma_sg_action(P, sg_star(P, g, h), arr(i)) ==
                gamma_sg_action(P, h, gamma_sg_action(P, g, arr(i))));
        }
      }
    }
  }
}

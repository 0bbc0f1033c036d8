#include "gpdrep/fixtures.hpp"

namespace gpdrep::fixtures {

namespace {

const CayleyTable kZ2 = {{0, 1}, {1, 0}};

Matrix scalar(const Rational& q) {
  Matrix m(1, 1);
  m(0, 0) = q;
  return m;
}

}  // namespace

FiniteGroupoid p2() { return build_pair(2); }
FiniteGroupoid pair(std::size_t n) { return build_pair(n); }
FiniteGroupoid z2() { return build_group(kZ2); }
FiniteGroupoid gb2() { return build_group_bundle(kZ2, 2); }

VectorBundle line_bundle(const FiniteGroupoid& G) {
  return VectorBundle(std::vector<std::size_t>(G.num_objects(), 1));
}

GroupoidRep fixture_r() {
  const FiniteGroupoid G = p2();
  GroupoidRep phi{line_bundle(G), std::vector<Matrix>(4, scalar(1))};
  phi.arrow_maps[1] = scalar(2);
  phi.arrow_maps[2] = scalar(Rational(1, 2));
  return phi;
}

BisRep gb2_nonlocal_rep() {
  const FiniteGroupoid G = gb2();
  const VectorBundle L = line_bundle(G);
  BisRep rho;
  rho.bundle = L;
  rho.elements = enumerate_bisections(G);
  for (const Bisection& s : rho.elements) {
    BundleAutomorphism F{{0, 1}, {scalar(1), scalar(s(obj(0)) == arr(1) ? -1 : 1)}};
    rho.images.emplace_back(std::move(F));
  }
  return rho;
}

std::vector<NamedRep> fixture_reps() {
  std::vector<NamedRep> out;
  out.push_back({"R", p2(), fixture_r()});

  const FiniteGroupoid p3 = pair(3);
  out.push_back({"pair3-trivial", p3, trivial_rep(p3, VectorBundle({2, 2, 2}))});

  const FiniteGroupoid z = z2();
  out.push_back({"Z2-sign", z, GroupoidRep{line_bundle(z), {scalar(1), scalar(-1)}}});

  // sign character on the copy over a, swap of coordinates over b
  const FiniteGroupoid gb = gb2();
  Matrix swap(2, 2);
  swap << Rational(0), Rational(1), Rational(1), Rational(0);
  out.push_back({"GB2-mixed", gb,
                 GroupoidRep{VectorBundle({1, 2}),
                             {scalar(1), scalar(-1), Matrix::Identity(2, 2), swap}}});
  return out;
}

}  // namespace gpdrep::fixtures

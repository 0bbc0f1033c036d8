#pragma once

#include <string>
#include <vector>

#include "gpdrep/groupoid.hpp"
#include "gpdrep/semilinear.hpp"
#include "gpdrep/transfer.hpp"

namespace gpdrep::fixtures {

/// Pair groupoid on {a, b}. Arrow ids: (a,a)=0, (a,b)=1, (b,a)=2, (b,b)=3.
FiniteGroupoid p2();
FiniteGroupoid pair(std::size_t n);
/// Z/2 over a single object, arrows e and g1.
FiniteGroupoid z2();
/// Two disjoint copies of Z/2 over {a, b}. Arrow ids: e@a=0, g1@a=1, e@b=2, g1@b=3.
FiniteGroupoid gb2();

/// The line bundle L: every fiber one-dimensional.
VectorBundle line_bundle(const FiniteGroupoid& G);

/// P2 on L with φ((a,b)) = 2, φ((b,a)) = 1/2 and identities on units.
GroupoidRep fixture_r();

/// A homomorphism Bis(GB2) → SL(Γ(L)) that is not local: the base map is the
/// identity, F_a = 1 and F_b = -1 exactly when σ(a) = g1@a.
BisRep gb2_nonlocal_rep();

struct NamedRep {
  std::string name;
  FiniteGroupoid groupoid;
  GroupoidRep rep;
};

/// Every fixture representation: Fixture R, trivial reps, a sign character
/// of Z2 and a mixed-dimension rep of GB2.
std::vector<NamedRep> fixture_reps();

}  // namespace gpdrep::fixtures

#include "gpdrep/selfmap.hpp"

#include <limits>

#include "gpdrep/error.hpp"

namespace gpdrep {

bool sg_validate(const FiniteGroupoid& G, const SelfMap& f) {
  if (f.values.size() != G.num_arrows()) {
    return false;
  }
  for (std::size_t x = 0; x < G.num_arrows(); ++x) {
    const ArrId y = f.values[x];
    if (y.index >= G.num_arrows() || G.target(y) != G.source(arr(x))) {
      return false;
    }
  }
  return true;
}

SelfMap sg_unit(const FiniteGroupoid& G) {
  SelfMap f;
  for (std::size_t x = 0; x < G.num_arrows(); ++x) {
    f.values.push_back(G.unit(G.source(arr(x))));
  }
  return f;
}

SelfMap sg_star(const FiniteGroupoid& G, const SelfMap& f, const SelfMap& g) {
  SelfMap out;
  out.values.reserve(G.num_arrows());
  for (std::size_t i = 0; i < G.num_arrows(); ++i) {
    const ArrId x = arr(i);
    const ArrId fx = f(x);
    out.values.push_back(G.compose(fx, g(G.compose(x, fx))));
  }
  return out;
}

std::vector<ArrId> R_of(const FiniteGroupoid& G, const SelfMap& f) {
  std::vector<ArrId> r;
  r.reserve(G.num_arrows());
  for (std::size_t i = 0; i < G.num_arrows(); ++i) {
    r.push_back(G.compose(arr(i), f(arr(i))));
  }
  return r;
}

bool sg_is_unit(const FiniteGroupoid& G, const SelfMap& f) {
  std::vector<bool> hit(G.num_arrows(), false);
  for (ArrId y : R_of(G, f)) {
    if (hit[y.index]) {
      return false;
    }
    hit[y.index] = true;
  }
  return true;
}

SelfMap sg_invert(const FiniteGroupoid& G, const SelfMap& f) {
  if (!sg_is_unit(G, f)) {
    throw Error(ErrorKind::NotInvertible, "R_f is not a bijection of the arrows");
  }
  const std::vector<ArrId> r = R_of(G, f);
  std::vector<ArrId> r_inv(G.num_arrows());
  for (std::size_t x = 0; x < r.size(); ++x) {
    r_inv[r[x].index] = arr(x);
  }
  SelfMap g;
  for (std::size_t y = 0; y < G.num_arrows(); ++y) {
    g.values.push_back(G.inverse(f(r_inv[y])));
  }
  const SelfMap unit = sg_unit(G);
  if (sg_star(G, f, g) != unit || sg_star(G, g, f) != unit) {
    throw Error(ErrorKind::NotInvertible, "constructed inverse fails the unit law");
  }
  return g;
}

std::uint64_t sg_search_space(const FiniteGroupoid& G) {
  std::uint64_t space = 1;
  for (std::size_t x = 0; x < G.num_arrows(); ++x) {
    const std::uint64_t choices = G.arrows_into(G.source(arr(x))).size();
    if (choices == 0) {
      return 0;
    }
    if (space > std::numeric_limits<std::uint64_t>::max() / choices) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    space *= choices;
  }
  return space;
}

namespace {

// Backtracking over arrows in id order; prunes as soon as R_f repeats a value.
void extend(const FiniteGroupoid& G, std::size_t x, std::vector<bool>& used,
            SelfMap& partial, std::vector<SelfMap>& out) {
  if (x == G.num_arrows()) {
    out.push_back(partial);
    return;
  }
  const ArrId ax = arr(x);
  for (ArrId candidate : G.arrows_into(G.source(ax))) {
    const ArrId r = G.compose(ax, candidate);
    if (used[r.index]) {
      continue;
    }
    used[r.index] = true;
    partial.values[x] = candidate;
    extend(G, x + 1, used, partial, out);
    used[r.index] = false;
  }
}

}  // namespace

std::vector<SelfMap> enumerate_sg_units(const FiniteGroupoid& G, std::uint64_t max_space) {
  const std::uint64_t space = sg_search_space(G);
  if (space > max_space) {
    throw Error(ErrorKind::TooLarge,
                "S_G(alpha) search space has " +
                    (space == std::numeric_limits<std::uint64_t>::max()
                         ? std::string("more than 2^64")
                         : std::to_string(space)) +
                    " candidate maps, bound is " + std::to_string(max_space));
  }
  std::vector<SelfMap> out;
  std::vector<bool> used(G.num_arrows(), false);
  SelfMap partial{std::vector<ArrId>(G.num_arrows())};
  extend(G, 0, used, partial, out);
  return out;
}

ArrId gamma_sg_action(const FiniteGroupoid& G, const SelfMap& f, ArrId x) {
  return G.compose(x, f(x));
}

}  // namespace gpdrep

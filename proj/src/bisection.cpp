#include "gpdrep/bisection.hpp"

#include "gpdrep/error.hpp"
#include "gpdrep/selfmap.hpp"

namespace gpdrep {

bool bis_validate(const FiniteGroupoid& G, const Bisection& s) {
  if (s.values.size() != G.num_objects()) {
    return false;
  }
  std::vector<bool> hit(G.num_objects(), false);
  for (std::size_t m = 0; m < G.num_objects(); ++m) {
    const ArrId g = s.values[m];
    if (g.index >= G.num_arrows() || G.target(g) != obj(m)) {
      return false;
    }
    const ObjId a = G.source(g);
    if (hit[a.index]) {
      return false;
    }
    hit[a.index] = true;
  }
  return true;
}

Bisection bis_unit(const FiniteGroupoid& G) {
  Bisection s;
  for (std::size_t m = 0; m < G.num_objects(); ++m) {
    s.values.push_back(G.unit(obj(m)));
  }
  return s;
}

namespace {

void require_bisection(const FiniteGroupoid& G, const Bisection& s) {
  if (!bis_validate(G, s)) {
    throw Error(ErrorKind::InvalidBisection, "not a bisection of the groupoid");
  }
}

}  // namespace

Bisection bis_multiply(const FiniteGroupoid& G, const Bisection& s1, const Bisection& s2) {
  require_bisection(G, s1);
  require_bisection(G, s2);
  Bisection out;
  out.values.reserve(G.num_objects());
  for (std::size_t x = 0; x < G.num_objects(); ++x) {
    const ArrId first = s1.values[x];
    out.values.push_back(G.compose(first, s2(G.source(first))));
  }
  return out;
}

Bisection bis_invert(const FiniteGroupoid& G, const Bisection& s) {
  require_bisection(G, s);
  // (α∘σ)⁻¹
  std::vector<ObjId> back(G.num_objects());
  for (std::size_t m = 0; m < G.num_objects(); ++m) {
    back[G.source(s.values[m]).index] = obj(m);
  }
  Bisection out;
  for (std::size_t x = 0; x < G.num_objects(); ++x) {
    out.values.push_back(G.inverse(s(back[x])));
  }
  return out;
}

std::vector<ObjId> source_map(const FiniteGroupoid& G, const Bisection& s) {
  std::vector<ObjId> out;
  for (ArrId g : s.values) {
    out.push_back(G.source(g));
  }
  return out;
}

namespace {

void extend(const FiniteGroupoid& G, std::size_t m, std::vector<bool>& used,
            Bisection& partial, std::vector<Bisection>& out) {
  if (m == G.num_objects()) {
    out.push_back(partial);
    return;
  }
  for (ArrId g : G.arrows_into(obj(m))) {
    const std::size_t a = G.source(g).index;
    if (used[a]) {
      continue;
    }
    used[a] = true;
    partial.values[m] = g;
    extend(G, m + 1, used, partial, out);
    used[a] = false;
  }
}

}  // namespace

std::vector<Bisection> enumerate_bisections(const FiniteGroupoid& G) {
  std::vector<Bisection> out;
  std::vector<bool> used(G.num_objects(), false);
  Bisection partial{std::vector<ArrId>(G.num_objects())};
  extend(G, 0, used, partial, out);
  return out;
}

EnoughBisections has_enough_bisections(const FiniteGroupoid& G,
                                       const std::vector<Bisection>& bisections) {
  EnoughBisections result;
  result.witness.resize(G.num_arrows());
  for (const Bisection& s : bisections) {
    for (std::size_t m = 0; m < G.num_objects(); ++m) {
      auto& slot = result.witness[s.values[m].index];
      if (!slot) {
        slot = s;
      }
    }
  }
  result.holds = true;
  for (const auto& w : result.witness) {
    result.holds = result.holds && w.has_value();
  }
  return result;
}

EnoughBisections has_enough_bisections(const FiniteGroupoid& G) {
  return has_enough_bisections(G, enumerate_bisections(G));
}

SelfMap psi_embed(const FiniteGroupoid& G, const Bisection& s) {
  SelfMap f;
  f.values.reserve(G.num_arrows());
  for (std::size_t x = 0; x < G.num_arrows(); ++x) {
    f.values.push_back(s(G.source(arr(x))));
  }
  return f;
}

ArrId gamma_bis_action(const FiniteGroupoid& G, const Bisection& s, ArrId x) {
  return G.compose(x, s(G.source(x)));
}

}  // namespace gpdrep

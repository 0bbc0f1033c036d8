#include "gpdrep/random.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>

namespace gpdrep {

Rational random_rational(Rng& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  return Rational(num(rng), den(rng));
}

Matrix random_invertible(Rng& rng, std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  for (;;) {
    Matrix m(k, k);
    for (Eigen::Index r = 0; r < k; ++r) {
      for (Eigen::Index c = 0; c < k; ++c) {
        m(r, c) = random_rational(rng);
      }
    }
    if (is_invertible(m)) {
      return m;
    }
  }
}

VectorBundle random_bundle(Rng& rng, std::size_t base_size, std::size_t min_dim,
                           std::size_t max_dim) {
  std::uniform_int_distribution<std::size_t> dim(min_dim, max_dim);
  std::vector<std::size_t> dims(base_size);
  for (auto& d : dims) {
    d = dim(rng);
  }
  return VectorBundle(dims);
}

BundleAutomorphism random_automorphism(Rng& rng, const VectorBundle& E) {
  std::map<std::size_t, std::vector<BasePoint>> by_dim;
  for (BasePoint x = 0; x < E.base_size(); ++x) {
    by_dim[E.dim(x)].push_back(x);
  }
  BundleAutomorphism F;
  F.base_map.resize(E.base_size());
  F.fiber_maps.resize(E.base_size());
  for (auto& [dim, points] : by_dim) {
    std::vector<BasePoint> image = points;
    std::shuffle(image.begin(), image.end(), rng);
    for (std::size_t i = 0; i < points.size(); ++i) {
      F.base_map[points[i]] = image[i];
      F.fiber_maps[points[i]] = random_invertible(rng, dim);
    }
  }
  return F;
}

namespace {

// All homomorphisms K → {±1} for the isotropy group K at `root`, as sign
// vectors indexed like `isotropy`.
std::vector<std::vector<int>> characters(const FiniteGroupoid& G,
                                         const std::vector<ArrId>& isotropy) {
  std::vector<std::vector<int>> out;
  const std::size_t k = isotropy.size();
  if (k > 16) {
    out.push_back(std::vector<int>(k, 1));
    return out;
  }
  std::map<ArrId, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) {
    index[isotropy[i]] = i;
  }
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> chi(k);
    for (std::size_t i = 0; i < k; ++i) {
      chi[i] = (mask >> i) & 1u ? -1 : 1;
    }
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      for (std::size_t j = 0; j < k && ok; ++j) {
        ok = chi[index.at(G.compose(isotropy[i], isotropy[j]))] == chi[i] * chi[j];
      }
    }
    if (ok) {
      out.push_back(std::move(chi));
    }
  }
  return out;
}

}  // namespace

GroupoidRep random_groupoid_rep(Rng& rng, const FiniteGroupoid& G, std::size_t max_dim) {
  const std::size_t n = G.num_objects();
  std::vector<std::optional<ArrId>> tree(n);  // t_m: root(m) → m
  std::vector<std::size_t> root(n, n);
  std::vector<std::size_t> dims(n, 0);
  std::vector<Matrix> T(n);
  std::map<std::size_t, std::map<ArrId, Matrix>> rho_k;  // per root
  std::uniform_int_distribution<std::size_t> dim_dist(1, std::max<std::size_t>(1, max_dim));

  for (std::size_t r = 0; r < n; ++r) {
    if (root[r] != n) {
      continue;
    }
    const std::size_t d = dim_dist(rng);
    root[r] = r;
    tree[r] = G.unit(obj(r));
    std::queue<std::size_t> frontier;
    frontier.push(r);
    while (!frontier.empty()) {
      const std::size_t m = frontier.front();
      frontier.pop();
      for (ArrId g : G.arrows_from(obj(m))) {
        const std::size_t t = G.target(g).index;
        if (root[t] == n) {
          root[t] = r;
          tree[t] = G.compose(g, *tree[m]);
          frontier.push(t);
        }
      }
    }
    std::vector<ArrId> isotropy;
    for (ArrId g : G.arrows_from(obj(r))) {
      if (G.target(g).index == r) {
        isotropy.push_back(g);
      }
    }
    const auto chars = characters(G, isotropy);
    std::uniform_int_distribution<std::size_t> pick(0, chars.size() - 1);
    std::vector<std::size_t> chosen(d);
    for (auto& c : chosen) {
      c = pick(rng);
    }
    const Matrix P = random_invertible(rng, d);
    const Matrix P_inv = *exact_inverse(P);
    for (std::size_t i = 0; i < isotropy.size(); ++i) {
      Matrix D = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
      for (std::size_t j = 0; j < d; ++j) {
        D(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = chars[chosen[j]][i];
      }
      rho_k[r][isotropy[i]] = P * D * P_inv;
    }
    for (std::size_t m = 0; m < n; ++m) {
      if (root[m] == r) {
        dims[m] = d;
        T[m] = m == r ? Matrix(Matrix::Identity(static_cast<Eigen::Index>(d),
                                                static_cast<Eigen::Index>(d)))
                      : random_invertible(rng, d);
      }
    }
  }

  GroupoidRep phi{VectorBundle(dims), std::vector<Matrix>(G.num_arrows())};
  for (std::size_t i = 0; i < G.num_arrows(); ++i) {
    const ArrId g = arr(i);
    const std::size_t m = G.source(g).index;
    const std::size_t t = G.target(g).index;
    const ArrId loop = G.compose(G.inverse(*tree[t]), G.compose(g, *tree[m]));
    phi.arrow_maps[i] = T[t] * rho_k[root[m]].at(loop) * *exact_inverse(T[m]);
  }
  return phi;
}

}  // namespace gpdrep

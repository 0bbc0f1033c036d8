#include "gpdrep/verify/oracle.hpp"

#include <algorithm>
#include <functional>

namespace gpdrep::oracle {

namespace {

// Advances a mixed-radix counter; false once it wraps around.
bool next(std::vector<std::size_t>& digits, const std::vector<std::size_t>& radix) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < radix[i]) {
      return true;
    }
    digits[i] = 0;
  }
  return false;
}

bool bijective(const std::vector<std::size_t>& values, std::size_t n) {
  std::vector<bool> hit(n, false);
  for (std::size_t v : values) {
    if (v >= n || hit[v]) {
      return false;
    }
    hit[v] = true;
  }
  return values.size() == n;
}

}  // namespace

std::vector<Bisection> brute_force_bisections(const FiniteGroupoid& G) {
  const std::size_t n = G.num_objects();
  const std::size_t arrows = G.num_arrows();
  std::vector<Bisection> out;
  if (arrows == 0) {
    if (n == 0) {
      out.push_back({});
    }
    return out;
  }
  std::vector<std::size_t> digits(n, 0);
  const std::vector<std::size_t> radix(n, arrows);
  do {
    bool ok = true;
    std::vector<std::size_t> sources(n);
    for (std::size_t m = 0; m < n && ok; ++m) {
      ok = G.target(arr(digits[m])).index == m;
      sources[m] = G.source(arr(digits[m])).index;
    }
    if (ok && bijective(sources, n)) {
      Bisection s;
      for (std::size_t d : digits) {
        s.values.push_back(arr(d));
      }
      out.push_back(std::move(s));
    }
  } while (next(digits, radix));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SelfMap> brute_force_sg_units(const FiniteGroupoid& G) {
  const std::size_t n = G.num_arrows();
  const auto& mul = G.mul_table();
  std::vector<std::vector<std::size_t>> choices(n);
  std::vector<std::size_t> radix(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (G.target(arr(y)) == G.source(arr(x))) {
        choices[x].push_back(y);
      }
    }
    radix[x] = choices[x].size();
  }
  std::vector<SelfMap> out;
  std::vector<std::size_t> digits(n, 0);
  do {
    std::vector<std::size_t> r(n);
    for (std::size_t x = 0; x < n; ++x) {
      const std::int32_t p = mul[x * n + choices[x][digits[x]]];
      r[x] = p < 0 ? n : static_cast<std::size_t>(p);
    }
    if (bijective(r, n)) {
      SelfMap f;
      for (std::size_t x = 0; x < n; ++x) {
        f.values.push_back(arr(choices[x][digits[x]]));
      }
      out.push_back(std::move(f));
    }
  } while (n > 0 && next(digits, radix));
  std::sort(out.begin(), out.end());
  return out;
}

bool relabeling_exists(const FiniteGroupoid& G, const FiniteGroupoid& H) {
  const std::size_t n = G.num_objects();
  const std::size_t k = G.num_arrows();
  if (n != H.num_objects() || k != H.num_arrows()) {
    return false;
  }
  std::vector<std::size_t> obj_map(n);
  for (std::size_t i = 0; i < n; ++i) {
    obj_map[i] = i;
  }
  do {
    std::vector<std::size_t> arr_map(k);
    std::vector<bool> used(k, false);
    // assign arrows one by one respecting endpoints, then check the tables
    std::function<bool(std::size_t)> assign = [&](std::size_t g) -> bool {
      if (g == k) {
        for (std::size_t m = 0; m < n; ++m) {
          if (arr_map[G.unit(obj(m)).index] != H.unit(obj(obj_map[m])).index) {
            return false;
          }
        }
        for (std::size_t a = 0; a < k; ++a) {
          if (arr_map[G.inverse(arr(a)).index] != H.inverse(arr(arr_map[a])).index) {
            return false;
          }
          for (std::size_t b = 0; b < k; ++b) {
            const auto p = G.product(arr(a), arr(b));
            const auto q = H.product(arr(arr_map[a]), arr(arr_map[b]));
            if (p.has_value() != q.has_value() || (p && arr_map[p->index] != q->index)) {
              return false;
            }
          }
        }
        return true;
      }
      for (std::size_t h = 0; h < k; ++h) {
        if (used[h] || H.source(arr(h)).index != obj_map[G.source(arr(g)).index] ||
            H.target(arr(h)).index != obj_map[G.target(arr(g)).index]) {
          continue;
        }
        used[h] = true;
        arr_map[g] = h;
        if (assign(g + 1)) {
          return true;
        }
        used[h] = false;
      }
      return false;
    };
    if (assign(0)) {
      return true;
    }
  } while (std::next_permutation(obj_map.begin(), obj_map.end()));
  return false;
}

}  // namespace gpdrep::oracle

#include "gpdrep/groupoid.hpp"

#include <string>

#include "gpdrep/error.hpp"

namespace gpdrep {

FiniteGroupoid::FiniteGroupoid(std::vector<std::string> object_names,
                               std::vector<std::string> arrow_names,
                               std::vector<ObjId> source, std::vector<ObjId> target,
                               std::vector<ArrId> unit, std::vector<ArrId> inverse,
                               std::vector<std::int32_t> mul_table)
    : object_names_(std::move(object_names)),
      arrow_names_(std::move(arrow_names)),
      source_(std::move(source)),
      target_(std::move(target)),
      unit_(std::move(unit)),
      inverse_(std::move(inverse)),
      mul_(std::move(mul_table)) {
  const std::size_t n_obj = object_names_.size();
  const std::size_t n_arr = arrow_names_.size();
  if (source_.size() != n_arr || target_.size() != n_arr || inverse_.size() != n_arr ||
      unit_.size() != n_obj || mul_.size() != n_arr * n_arr) {
    throw Error(ErrorKind::MalformedTable, "structure tables have inconsistent sizes");
  }
  for (std::size_t g = 0; g < n_arr; ++g) {
    if (source_[g].index >= n_obj || target_[g].index >= n_obj ||
        inverse_[g].index >= n_arr) {
      throw Error(ErrorKind::MalformedTable,
                  "arrow table entry out of range at " + arrow_names_[g]);
    }
  }
  for (const ArrId& u : unit_) {
    if (u.index >= n_arr) {
      throw Error(ErrorKind::MalformedTable, "unit table entry out of range");
    }
  }
  for (std::int32_t v : mul_) {
    if (v != kUndefined && (v < 0 || static_cast<std::size_t>(v) >= n_arr)) {
      throw Error(ErrorKind::MalformedTable, "multiplication entry out of range");
    }
  }
  into_.resize(n_obj);
  from_.resize(n_obj);
  for (std::size_t g = 0; g < n_arr; ++g) {
    into_[target_[g].index].push_back(arr(g));
    from_[source_[g].index].push_back(arr(g));
  }
}

std::optional<ArrId> FiniteGroupoid::product(ArrId g, ArrId h) const {
  const std::int32_t v = mul_[g.index * num_arrows() + h.index];
  if (v == kUndefined) {
    return std::nullopt;
  }
  return arr(static_cast<std::size_t>(v));
}

ArrId FiniteGroupoid::compose(ArrId g, ArrId h) const {
  if (!composable(g, h)) {
    throw Error(ErrorKind::NotComposable,
                arrow_name(g) + " · " + arrow_name(h) + ": source(" + arrow_name(g) +
                    ") != target(" + arrow_name(h) + ")");
  }
  const auto p = product(g, h);
  if (!p) {
    throw Error(ErrorKind::MalformedTable,
                "missing product " + arrow_name(g) + " · " + arrow_name(h));
  }
  return *p;
}

std::optional<ObjId> FiniteGroupoid::find_object(const std::string& name) const {
  for (std::size_t i = 0; i < object_names_.size(); ++i) {
    if (object_names_[i] == name) {
      return obj(i);
    }
  }
  return std::nullopt;
}

std::optional<ArrId> FiniteGroupoid::find_arrow(const std::string& name) const {
  for (std::size_t i = 0; i < arrow_names_.size(); ++i) {
    if (arrow_names_[i] == name) {
      return arr(i);
    }
  }
  return std::nullopt;
}

ArrId compose(const FiniteGroupoid& g, ArrId a, ArrId b) { return g.compose(a, b); }

ArrId inverse(const FiniteGroupoid& g, ArrId a) { return g.inverse(a); }

ValidationReport validate_groupoid(const FiniteGroupoid& G) {
  ValidationReport report;
  const std::size_t n = G.num_arrows();
  const auto name = [&](ArrId g) { return G.arrow_name(g); };

  for (std::size_t m = 0; m < G.num_objects(); ++m) {
    const ArrId u = G.unit(obj(m));
    if (G.source(u) != obj(m) || G.target(u) != obj(m)) {
      report.add("unit endpoints", "unit(" + G.object_name(obj(m)) + ") = " + name(u));
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ArrId g = arr(i), h = arr(j);
      const auto p = G.product(g, h);
      if (G.composable(g, h) && !p) {
        report.add("product defined on composable pairs", "(" + name(g) + ", " + name(h) + ")");
      } else if (!G.composable(g, h) && p) {
        report.add("product undefined on non-composable pairs",
                   "(" + name(g) + ", " + name(h) + ") -> " + name(*p));
      } else if (p && (G.target(*p) != G.target(g) || G.source(*p) != G.source(h))) {
        report.add("product endpoints", "(" + name(g) + ", " + name(h) + ") -> " + name(*p));
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const ArrId g = arr(i);
    const ArrId gi = G.inverse(g);
    if (G.source(gi) != G.target(g) || G.target(gi) != G.source(g)) {
      report.add("inverse endpoints", name(g) + "^-1 = " + name(gi));
      continue;
    }
    const auto left_unit = G.product(G.unit(G.target(g)), g);
    const auto right_unit = G.product(g, G.unit(G.source(g)));
    if (left_unit && *left_unit != g) {
      report.add("left unit", name(g));
    }
    if (right_unit && *right_unit != g) {
      report.add("right unit", name(g));
    }
    const auto gg = G.product(g, gi);
    const auto ig = G.product(gi, g);
    if (gg && *gg != G.unit(G.target(g))) {
      report.add("right inverse", name(g) + " · " + name(gi) + " = " + name(*gg));
    }
    if (ig && *ig != G.unit(G.source(g))) {
      report.add("left inverse", name(gi) + " · " + name(g) + " = " + name(*ig));
    }
  }

  // Triples are taken from the endpoint data, so a corrupted product still
  // shows up here even when other laws have already failed.
  for (std::size_t i = 0; i < n; ++i) {
    const ArrId g = arr(i);
    for (ArrId h : G.arrows_into(G.source(g))) {
      for (ArrId k : G.arrows_into(G.source(h))) {
        const auto gh = G.product(g, h);
        const auto hk = G.product(h, k);
        const auto left = gh ? G.product(*gh, k) : std::nullopt;
        const auto right = hk ? G.product(g, *hk) : std::nullopt;
        if ((left || right) && left != right) {
          report.add("associativity", "(" + name(g) + ", " + name(h) + ", " + name(k) + ")");
        }
      }
    }
  }
  return report;
}

namespace {

std::string letter_name(std::size_t i, std::size_t count) {
  if (count <= 26) {
    return std::string(1, static_cast<char>('a' + i));
  }
  return "m" + std::to_string(i);
}

std::string element_name(std::size_t k, std::size_t identity) {
  return k == identity ? std::string("e") : "g" + std::to_string(k);
}

FiniteGroupoid checked(FiniteGroupoid g) {
  const ValidationReport report = validate_groupoid(g);
  if (!report.ok()) {
    throw Error(ErrorKind::MalformedTable,
                "builder produced an invalid groupoid: " + report.violations.front().law);
  }
  return g;
}

}  // namespace

std::size_t check_group_table(const CayleyTable& table) {
  const std::size_t n = table.size();
  if (n == 0) {
    throw Error(ErrorKind::MalformedTable, "empty Cayley table");
  }
  for (const auto& row : table) {
    if (row.size() != n) {
      throw Error(ErrorKind::MalformedTable, "Cayley table is not square");
    }
    for (std::size_t v : row) {
      if (v >= n) {
        throw Error(ErrorKind::MalformedTable, "Cayley table entry out of range");
      }
    }
  }
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = table[e][x] == x && table[x][e] == x;
    }
    if (ok) {
      identity = e;
    }
  }
  if (!identity) {
    throw Error(ErrorKind::MalformedTable, "Cayley table has no identity");
  }
  for (std::size_t x = 0; x < n; ++x) {
    bool has_inverse = false;
    for (std::size_t y = 0; y < n && !has_inverse; ++y) {
      has_inverse = table[x][y] == *identity && table[y][x] == *identity;
    }
    if (!has_inverse) {
      throw Error(ErrorKind::MalformedTable, "element " + std::to_string(x) + " has no inverse");
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (table[table[x][y]][z] != table[x][table[y][z]]) {
          throw Error(ErrorKind::MalformedTable,
                      "Cayley table is not associative at (" + std::to_string(x) + "," +
                          std::to_string(y) + "," + std::to_string(z) + ")");
        }
      }
    }
  }
  return *identity;
}

FiniteGroupoid build_pair(std::size_t n) {
  std::vector<std::string> objects, arrows;
  std::vector<ObjId> source, target;
  std::vector<ArrId> unit(n), inv(n * n);
  std::vector<std::int32_t> mul(n * n * n * n, FiniteGroupoid::kUndefined);
  for (std::size_t i = 0; i < n; ++i) {
    objects.push_back(letter_name(i, n));
  }
  // arrow (y,x) has id y*n + x
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      arrows.push_back("(" + objects[y] + "," + objects[x] + ")");
      source.push_back(obj(x));
      target.push_back(obj(y));
      inv[y * n + x] = arr(x * n + y);
    }
    unit[y] = arr(y * n + y);
  }
  const std::size_t count = n * n;
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t z = 0; z < n; ++z) {
        // (y,x)·(x,z) = (y,z)
        mul[(y * n + x) * count + (x * n + z)] = static_cast<std::int32_t>(y * n + z);
      }
    }
  }
  return checked(FiniteGroupoid(std::move(objects), std::move(arrows), std::move(source),
                                std::move(target), std::move(unit), std::move(inv),
                                std::move(mul)));
}

FiniteGroupoid build_group(const CayleyTable& table) {
  return build_group_bundle(table, 1);
}

FiniteGroupoid build_group_bundle(const CayleyTable& table, std::size_t n) {
  const std::size_t identity = check_group_table(table);
  const std::size_t k = table.size();
  std::vector<std::size_t> inverse_of(k);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      if (table[x][y] == identity) {
        inverse_of[x] = y;
      }
    }
  }
  std::vector<std::string> objects, arrows;
  std::vector<ObjId> source, target;
  std::vector<ArrId> unit(n), inv(n * k);
  const std::size_t count = n * k;
  std::vector<std::int32_t> mul(count * count, FiniteGroupoid::kUndefined);
  for (std::size_t m = 0; m < n; ++m) {
    objects.push_back(n == 1 ? std::string("*") : letter_name(m, n));
  }
  // arrow (g at m) has id m*k + g
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t g = 0; g < k; ++g) {
      arrows.push_back(n == 1 ? element_name(g, identity)
                              : element_name(g, identity) + "@" + objects[m]);
      source.push_back(obj(m));
      target.push_back(obj(m));
      inv[m * k + g] = arr(m * k + inverse_of[g]);
      for (std::size_t h = 0; h < k; ++h) {
        mul[(m * k + g) * count + (m * k + h)] = static_cast<std::int32_t>(m * k + table[g][h]);
      }
    }
    unit[m] = arr(m * k + identity);
  }
  return checked(FiniteGroupoid(std::move(objects), std::move(arrows), std::move(source),
                                std::move(target), std::move(unit), std::move(inv),
                                std::move(mul)));
}

FiniteGroupoid build_action(const CayleyTable& table, const ActionTable& action) {
  const std::size_t identity = check_group_table(table);
  const std::size_t k = table.size();
  if (action.size() != k) {
    throw Error(ErrorKind::MalformedTable, "action table needs one row per group element");
  }
  const std::size_t n = action.front().size();
  for (const auto& row : action) {
    if (row.size() != n) {
      throw Error(ErrorKind::MalformedTable, "action table rows differ in length");
    }
    for (std::size_t v : row) {
      if (v >= n) {
        throw Error(ErrorKind::MalformedTable, "action table entry out of range");
      }
    }
  }
  for (std::size_t m = 0; m < n; ++m) {
    if (action[identity][m] != m) {
      throw Error(ErrorKind::MalformedTable, "identity does not act trivially");
    }
    for (std::size_t g = 0; g < k; ++g) {
      for (std::size_t h = 0; h < k; ++h) {
        if (action[table[g][h]][m] != action[g][action[h][m]]) {
          throw Error(ErrorKind::MalformedTable, "action table is not compatible with the group law");
        }
      }
    }
  }
  std::vector<std::size_t> inverse_of(k);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      if (table[x][y] == identity) {
        inverse_of[x] = y;
      }
    }
  }
  std::vector<std::string> objects, arrows;
  std::vector<ObjId> source, target;
  std::vector<ArrId> unit(n), inv(n * k);
  const std::size_t count = n * k;
  std::vector<std::int32_t> mul(count * count, FiniteGroupoid::kUndefined);
  for (std::size_t m = 0; m < n; ++m) {
    objects.push_back(letter_name(m, n));
  }
  // arrow (g,m) has id g*n + m; it runs m -> g·m
  for (std::size_t g = 0; g < k; ++g) {
    for (std::size_t m = 0; m < n; ++m) {
      arrows.push_back("(" + element_name(g, identity) + "," + objects[m] + ")");
      source.push_back(obj(m));
      target.push_back(obj(action[g][m]));
      inv[g * n + m] = arr(inverse_of[g] * n + action[g][m]);
    }
  }
  for (std::size_t m = 0; m < n; ++m) {
    unit[m] = arr(identity * n + m);
  }
  for (std::size_t g2 = 0; g2 < k; ++g2) {
    for (std::size_t g1 = 0; g1 < k; ++g1) {
      for (std::size_t m = 0; m < n; ++m) {
        // (g2, g1·m)·(g1, m) = (g2 g1, m)
        const std::size_t left = g2 * n + action[g1][m];
        const std::size_t right = g1 * n + m;
        mul[left * count + right] = static_cast<std::int32_t>(table[g2][g1] * n + m);
      }
    }
  }
  return checked(FiniteGroupoid(std::move(objects), std::move(arrows), std::move(source),
                                std::move(target), std::move(unit), std::move(inv),
                                std::move(mul)));
}

}  // namespace gpdrep

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gpdrep {

/// Index of an object of the base M.
struct ObjId {
  std::uint32_t index = 0;
  friend auto operator<=>(const ObjId&, const ObjId&) = default;
};

/// Index of an arrow of G.
struct ArrId {
  std::uint32_t index = 0;
  friend auto operator<=>(const ArrId&, const ArrId&) = default;
};

inline ObjId obj(std::size_t i) { return ObjId{static_cast<std::uint32_t>(i)}; }
inline ArrId arr(std::size_t i) { return ArrId{static_cast<std::uint32_t>(i)}; }

struct Violation {
  std::string law;
  std::string witness;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Outcome of an exhaustive law check. Violations are data, not faults.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string law, std::string witness) {
    violations.push_back({std::move(law), std::move(witness)});
  }
  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// A finite groupoid G ⇉ M stored as dense structure tables.
///
/// Conventions: `source` is α and `target` is β. The product g·h is defined
/// exactly when source(g) == target(h), and then target(gh) = target(g),
/// source(gh) = source(h). Units are genuine arrows reached through `unit`.
///
/// Construction does not check the axioms; call validate_groupoid (or use
/// one of the build_* functions, which validate) before relying on them.
class FiniteGroupoid {
 public:
  static constexpr std::int32_t kUndefined = -1;

  FiniteGroupoid() = default;
  FiniteGroupoid(std::vector<std::string> object_names,
                 std::vector<std::string> arrow_names,
                 std::vector<ObjId> source, std::vector<ObjId> target,
                 std::vector<ArrId> unit, std::vector<ArrId> inverse,
                 std::vector<std::int32_t> mul_table);

  std::size_t num_objects() const { return object_names_.size(); }
  std::size_t num_arrows() const { return arrow_names_.size(); }

  ObjId source(ArrId g) const { return source_[g.index]; }
  ObjId target(ArrId g) const { return target_[g.index]; }
  ArrId unit(ObjId m) const { return unit_[m.index]; }
  ArrId inverse(ArrId g) const { return inverse_[g.index]; }

  bool composable(ArrId g, ArrId h) const { return source(g) == target(h); }

  /// Raw table lookup; nullopt when the table has no entry.
  std::optional<ArrId> product(ArrId g, ArrId h) const;

  /// g·h; throws NotComposable unless source(g) == target(h).
  ArrId compose(ArrId g, ArrId h) const;

  const std::string& object_name(ObjId m) const { return object_names_[m.index]; }
  const std::string& arrow_name(ArrId g) const { return arrow_names_[g.index]; }
  const std::vector<std::string>& object_names() const { return object_names_; }
  const std::vector<std::string>& arrow_names() const { return arrow_names_; }

  std::optional<ObjId> find_object(const std::string& name) const;
  std::optional<ArrId> find_arrow(const std::string& name) const;

  /// Arrows with the given target, in increasing id order.
  const std::vector<ArrId>& arrows_into(ObjId m) const { return into_[m.index]; }
  /// Arrows with the given source, in increasing id order.
  const std::vector<ArrId>& arrows_from(ObjId m) const { return from_[m.index]; }

  bool is_unit(ArrId g) const { return unit(source(g)) == g && target(g) == source(g); }

  friend bool operator==(const FiniteGroupoid& a, const FiniteGroupoid& b) {
    return a.object_names_ == b.object_names_ && a.arrow_names_ == b.arrow_names_ &&
           a.source_ == b.source_ && a.target_ == b.target_ && a.unit_ == b.unit_ &&
           a.inverse_ == b.inverse_ && a.mul_ == b.mul_;
  }

  const std::vector<std::int32_t>& mul_table() const { return mul_; }

 private:
  std::vector<std::string> object_names_;
  std::vector<std::string> arrow_names_;
  std::vector<ObjId> source_;
  std::vector<ObjId> target_;
  std::vector<ArrId> unit_;
  std::vector<ArrId> inverse_;
  std::vector<std::int32_t> mul_;  // row-major |G|×|G|, kUndefined when absent
  std::vector<std::vector<ArrId>> into_;
  std::vector<std::vector<ArrId>> from_;
};

ArrId compose(const FiniteGroupoid& g, ArrId a, ArrId b);
ArrId inverse(const FiniteGroupoid& g, ArrId a);

/// Checks every groupoid axiom by exhaustive iteration over arrows, pairs
/// and triples. Each violated law is listed with a witness.
ValidationReport validate_groupoid(const FiniteGroupoid& g);

/// Square table `t` with t[i][j] = i·j on {0,…,n-1}.
using CayleyTable = std::vector<std::vector<std::size_t>>;
/// Table `a` with a[k][m] = k·m for a group acting on {0,…,n-1}.
using ActionTable = std::vector<std::vector<std::size_t>>;

/// Pair groupoid on n objects. The arrow (y,x) goes from x to y.
FiniteGroupoid build_pair(std::size_t n);
/// A group as a groupoid over a single object. Throws MalformedTable.
FiniteGroupoid build_group(const CayleyTable& table);
/// n disjoint copies of a group, one over each object (source == target).
FiniteGroupoid build_group_bundle(const CayleyTable& table, std::size_t n);
/// Action groupoid K ⋉ M: arrows (k,m) with source m and target k·m.
FiniteGroupoid build_action(const CayleyTable& table, const ActionTable& action);

/// Returns the identity element of a validated Cayley table, throwing
/// MalformedTable when `table` is not a group.
std::size_t check_group_table(const CayleyTable& table);

}  // namespace gpdrep

template <>
struct std::hash<gpdrep::ArrId> {
  std::size_t operator()(const gpdrep::ArrId& a) const noexcept { return a.index; }
};
template <>
struct std::hash<gpdrep::ObjId> {
  std::size_t operator()(const gpdrep::ObjId& a) const noexcept { return a.index; }
};

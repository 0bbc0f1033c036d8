#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gpdrep/error.hpp"
#include "gpdrep/groupoid.hpp"
#include "gpdrep/semilinear.hpp"
#include "gpdrep/transfer.hpp"

namespace gpdrep {

/// A grammar violation at a 1-based line and column.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::string expected, std::string found);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

/// Well-formed text describing an invalid object. Unknown names, duplicate
/// entries and failed axioms all end up in the report.
class SemanticError : public Error {
 public:
  explicit SemanticError(ValidationReport report);

  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

struct ParsedGroupoid {
  FiniteGroupoid groupoid;
  ValidationReport report;
};

/// Parses a .gpd document and validates it, returning the report instead of
/// throwing when the axioms fail. Still throws SyntaxError, and SemanticError
/// when the tables cannot even be assembled.
ParsedGroupoid parse_groupoid_unchecked(std::string_view text);

/// As above, but throws SemanticError unless the result is a groupoid.
FiniteGroupoid parse_groupoid(std::string_view text);

/// Parses a .grep document against G. Units without a matrix default to the
/// identity. Throws SyntaxError, DimensionMismatch for entry counts that do
/// not fit the fibers, and SemanticError when validation fails.
GroupoidRep parse_rep(std::string_view text, const FiniteGroupoid& G);

/// Explicit .gpd listing (OBJECTS/ARROWS/UNITS/INVERSES/MUL).
std::string format_groupoid(const FiniteGroupoid& G);
/// .grep listing with every arrow matrix spelled out.
std::string format_rep(const FiniteGroupoid& G, const GroupoidRep& phi);

using Json = nlohmann::ordered_json;

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const FiniteGroupoid& G);
Json to_json(const ValidationReport& report);
/// The rep together with its groupoid, so that the document stands alone.
Json to_json(const FiniteGroupoid& G, const GroupoidRep& phi);
Json to_json(const FiniteGroupoid& G, const BisRep& rho);
Json to_json(const FiniteGroupoid& G, const SGRep& rho);

/// Inverse encoders. Schema violations raise SemanticError; the groupoid is
/// validated and rep documents are checked against the supplied groupoid.
FiniteGroupoid groupoid_from_json(const Json& j);
ValidationReport report_from_json(const Json& j);
GroupoidRep rep_from_json(const Json& j, const FiniteGroupoid& G);
BisRep bis_rep_from_json(const Json& j, const FiniteGroupoid& G);
SGRep sg_rep_from_json(const Json& j, const FiniteGroupoid& G);

/// Parses JSON text, mapping parser failures to SyntaxError with a position.
Json parse_json(std::string_view text);

/// Objects as nodes, arrows as edges from source to target.
std::string to_dot(const FiniteGroupoid& G);
/// Edges additionally labeled with φ(g), e.g. "(a,b) | 2".
std::string to_dot(const FiniteGroupoid& G, const GroupoidRep& phi);

/// Compact matrix text: "2" for 1x1, "[[1,0],[0,1]]" otherwise.
std::string format_matrix(const Matrix& m);

}  // namespace gpdrep

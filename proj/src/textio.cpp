#include "gpdrep/textio.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

namespace gpdrep {

SyntaxError::SyntaxError(std::size_t line, std::size_t column, std::string expected,
                         std::string found)
    : Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ", column " +
                                        std::to_string(column) + ": expected " + expected +
                                        ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

std::string describe(const ValidationReport& report) {
  if (report.ok()) {
    return "no violations";
  }
  std::string out = report.violations.front().law + " (" + report.violations.front().witness + ")";
  if (report.violations.size() > 1) {
    out += " and " + std::to_string(report.violations.size() - 1) + " more";
  }
  return out;
}

}  // namespace

SemanticError::SemanticError(ValidationReport report)
    : Error(ErrorKind::SemanticError, describe(report)), report_(std::move(report)) {}

namespace {

// ---------------------------------------------------------------- lexing

struct Token {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct Line {
  std::size_t number = 0;
  std::size_t end_column = 0;  // column just past the last token
  std::vector<Token> tokens;
};

std::string in_quotes(const std::string& s) { return "'" + s + "'"; }

std::vector<Line> lex(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') {
      raw.remove_suffix(1);
    }
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, 1, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t') {
        ++i;
        continue;
      }
      const std::size_t begin = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') {
        ++i;
      }
      line.tokens.push_back({std::string(raw.substr(begin, i - begin)), number, begin + 1});
      line.end_column = i + 1;
    }
    if (!line.tokens.empty()) {
      lines.push_back(std::move(line));
    }
    start = end + 1;
  }
  return lines;
}

std::string where(const Token& t) {
  return "line " + std::to_string(t.line) + ", column " + std::to_string(t.column);
}

[[noreturn]] void missing(const Line& line, const std::string& expected) {
  throw SyntaxError(line.number, line.end_column, expected, "end of line");
}

[[noreturn]] void unexpected(const Token& t, const std::string& expected) {
  throw SyntaxError(t.line, t.column, expected, in_quotes(t.text));
}

void require_arity(const Line& line, const std::vector<std::string>& fields) {
  if (line.tokens.size() < fields.size()) {
    missing(line, fields[line.tokens.size()]);
  }
  if (line.tokens.size() > fields.size()) {
    unexpected(line.tokens[fields.size()], "end of line");
  }
}

std::size_t parse_count(const Token& t, std::string_view s, std::size_t offset,
                        const std::string& expected) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw SyntaxError(t.line, t.column + offset, expected, in_quotes(std::string(s)));
  }
  return value;
}

// "0,1;1,0" -> {{0,1},{1,0}}
std::vector<std::vector<std::size_t>> parse_table(const Token& t) {
  std::vector<std::vector<std::size_t>> rows;
  std::vector<std::size_t> row;
  std::size_t begin = 0;
  const std::string& s = t.text;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',' || s[i] == ';') {
      row.push_back(parse_count(t, std::string_view(s).substr(begin, i - begin), begin,
                                "table entry (non-negative integer)"));
      if (i == s.size() || s[i] == ';') {
        rows.push_back(std::move(row));
        row.clear();
      }
      begin = i + 1;
    }
  }
  return rows;
}

bool is_keyword(const std::string& s) {
  return s == "OBJECTS" || s == "ARROWS" || s == "UNITS" || s == "INVERSES" || s == "MUL" ||
         s == "BUILD" || s == "BUNDLE" || s == "ARROWMAT";
}

bool valid_name(const std::string& s) {
  return !s.empty() && !is_keyword(s) &&
         std::none_of(s.begin(), s.end(), [](char c) {
           return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '#';
         });
}

// ------------------------------------------------------ groupoid assembly

struct Located {
  std::vector<std::string> fields;
  std::string where;
};

// Name-level description of a groupoid shared by the text and JSON readers.
struct GroupoidDraft {
  std::vector<Located> objects;  // fields: name
  std::vector<Located> arrows;   // fields: name source target
  std::vector<Located> units;    // fields: object arrow
  std::vector<Located> inverses; // fields: arrow inverse
  std::vector<Located> products; // fields: g h k
};

FiniteGroupoid assemble(const GroupoidDraft& d) {
  ValidationReport report;
  std::map<std::string, std::size_t> object_ids, arrow_ids;
  std::vector<std::string> object_names, arrow_names;
  for (const Located& o : d.objects) {
    if (!valid_name(o.fields[0])) {
      report.add("valid name", o.where + ": " + in_quotes(o.fields[0]));
    } else if (!object_ids.emplace(o.fields[0], object_names.size()).second) {
      report.add("distinct object names", o.where + ": " + in_quotes(o.fields[0]));
    } else {
      object_names.push_back(o.fields[0]);
    }
  }
  std::vector<ObjId> source, target;
  for (const Located& a : d.arrows) {
    if (!valid_name(a.fields[0])) {
      report.add("valid name", a.where + ": " + in_quotes(a.fields[0]));
      continue;
    }
    if (!arrow_ids.emplace(a.fields[0], arrow_names.size()).second) {
      report.add("distinct arrow names", a.where + ": " + in_quotes(a.fields[0]));
      continue;
    }
    arrow_names.push_back(a.fields[0]);
    ObjId ends[2];
    for (int k = 0; k < 2; ++k) {
      const auto it = object_ids.find(a.fields[1 + k]);
      if (it == object_ids.end()) {
        report.add("known object", a.where + ": " + in_quotes(a.fields[1 + k]));
      } else {
        ends[k] = obj(it->second);
      }
    }
    source.push_back(ends[0]);
    target.push_back(ends[1]);
  }
  const auto arrow_of = [&](const Located& l, std::size_t field) -> std::optional<std::size_t> {
    const auto it = arrow_ids.find(l.fields[field]);
    if (it == arrow_ids.end()) {
      report.add("known arrow", l.where + ": " + in_quotes(l.fields[field]));
      return std::nullopt;
    }
    return it->second;
  };

  std::vector<std::optional<ArrId>> unit(object_names.size());
  for (const Located& u : d.units) {
    const auto it = object_ids.find(u.fields[0]);
    const auto g = arrow_of(u, 1);
    if (it == object_ids.end()) {
      report.add("known object", u.where + ": " + in_quotes(u.fields[0]));
    } else if (g) {
      if (unit[it->second]) {
        report.add("one unit per object", u.where + ": " + in_quotes(u.fields[0]));
      }
      unit[it->second] = arr(*g);
    }
  }
  for (std::size_t m = 0; m < unit.size(); ++m) {
    if (!unit[m]) {
      report.add("one unit per object", "no unit given for " + in_quotes(object_names[m]));
    }
  }
  std::vector<std::optional<ArrId>> inverse(arrow_names.size());
  for (const Located& i : d.inverses) {
    const auto g = arrow_of(i, 0);
    const auto h = arrow_of(i, 1);
    if (g && h) {
      if (inverse[*g]) {
        report.add("one inverse per arrow", i.where + ": " + in_quotes(i.fields[0]));
      }
      inverse[*g] = arr(*h);
    }
  }
  for (std::size_t g = 0; g < inverse.size(); ++g) {
    if (!inverse[g]) {
      report.add("one inverse per arrow", "no inverse given for " + in_quotes(arrow_names[g]));
    }
  }
  const std::size_t n = arrow_names.size();
  std::vector<std::int32_t> mul(n * n, FiniteGroupoid::kUndefined);
  for (const Located& p : d.products) {
    const auto g = arrow_of(p, 0);
    const auto h = arrow_of(p, 1);
    const auto k = arrow_of(p, 2);
    if (!g || !h || !k) {
      continue;
    }
    if (report.ok() && source[*g] != target[*h]) {
      report.add("product only on composable pairs",
                 p.where + ": source(" + p.fields[0] + ") != target(" + p.fields[1] + ")");
      continue;
    }
    std::int32_t& slot = mul[*g * n + *h];
    if (slot != FiniteGroupoid::kUndefined && slot != static_cast<std::int32_t>(*k)) {
      report.add("one product per pair", p.where + ": " + p.fields[0] + " " + p.fields[1]);
    }
    slot = static_cast<std::int32_t>(*k);
  }
  if (!report.ok()) {
    throw SemanticError(std::move(report));
  }
  std::vector<ArrId> units, inverses;
  for (const auto& u : unit) {
    units.push_back(*u);
  }
  for (const auto& i : inverse) {
    inverses.push_back(*i);
  }
  return FiniteGroupoid(std::move(object_names), std::move(arrow_names), std::move(source),
                        std::move(target), std::move(units), std::move(inverses),
                        std::move(mul));
}

// Keeps generated tables bounded: the product table has |G|² entries.
constexpr std::size_t kMaxArrows = 1024;

FiniteGroupoid build_from_line(const Line& line) {
  const auto& t = line.tokens;
  if (t.size() < 2) {
    missing(line, "kind (pair, group, group_bundle or action)");
  }
  const std::string& kind = t[1].text;
  const auto too_large = [&](std::size_t arrows) {
    if (arrows > kMaxArrows) {
      ValidationReport r;
      r.add("size limit", "BUILD at " + where(t[0]) + " would create " + std::to_string(arrows) +
                              " arrows (limit " + std::to_string(kMaxArrows) + ")");
      throw SemanticError(std::move(r));
    }
  };
  try {
    if (kind == "pair") {
      require_arity(line, {"BUILD", "kind", "number of objects"});
      const std::size_t n = parse_count(t[2], t[2].text, 0, "number of objects");
      too_large(n * n);
      return build_pair(n);
    }
    if (kind == "group") {
      require_arity(line, {"BUILD", "kind", "Cayley table"});
      const auto table = parse_table(t[2]);
      too_large(table.size());
      return build_group(table);
    }
    if (kind == "group_bundle") {
      require_arity(line, {"BUILD", "kind", "Cayley table", "number of objects"});
      const auto table = parse_table(t[2]);
      const std::size_t n = parse_count(t[3], t[3].text, 0, "number of objects");
      too_large(table.size() * n);
      return build_group_bundle(table, n);
    }
    if (kind == "action") {
      require_arity(line, {"BUILD", "kind", "Cayley table", "action table"});
      const auto table = parse_table(t[2]);
      const auto action = parse_table(t[3]);
      too_large(table.size() * (action.empty() ? 0 : action.front().size()));
      return build_action(table, action);
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::MalformedTable) {
      throw;
    }
    ValidationReport r;
    r.add("well-formed table", "BUILD at " + where(t[0]) + ": " + e.what());
    throw SemanticError(std::move(r));
  }
  unexpected(t[1], "kind (pair, group, group_bundle or action)");
}

GroupoidDraft read_draft(const std::vector<Line>& lines, std::optional<FiniteGroupoid>& built) {
  GroupoidDraft d;
  enum class Section { None, Objects, Arrows, Units, Inverses, Mul };
  Section section = Section::None;
  bool seen[5] = {false, false, false, false, false};
  const std::string keyword_list = "section keyword (OBJECTS, ARROWS, UNITS, INVERSES, MUL or BUILD)";
  for (const Line& line : lines) {
    const Token& head = line.tokens.front();
    if (head.text == "BUILD") {
      if (&line != &lines.front()) {
        unexpected(head, "no BUILD after other statements");
      }
      built = build_from_line(line);
      if (lines.size() > 1) {
        unexpected(lines[1].tokens.front(), "end of input after BUILD");
      }
      return d;
    }
    if (head.text == "OBJECTS" || head.text == "ARROWS" || head.text == "UNITS" ||
        head.text == "INVERSES" || head.text == "MUL") {
      section = head.text == "OBJECTS"  ? Section::Objects
                : head.text == "ARROWS" ? Section::Arrows
                : head.text == "UNITS"  ? Section::Units
                : head.text == "INVERSES" ? Section::Inverses
                                          : Section::Mul;
      bool& flag = seen[static_cast<int>(section) - 1];
      if (flag) {
        unexpected(head, "a section not already given");
      }
      flag = true;
      if (section == Section::Objects) {
        for (std::size_t i = 1; i < line.tokens.size(); ++i) {
          d.objects.push_back({{line.tokens[i].text}, where(line.tokens[i])});
        }
      } else if (line.tokens.size() > 1) {
        unexpected(line.tokens[1], "end of line");
      }
      continue;
    }
    switch (section) {
      case Section::None:
        unexpected(head, keyword_list);
      case Section::Objects:
        for (const Token& t : line.tokens) {
          d.objects.push_back({{t.text}, where(t)});
        }
        break;
      case Section::Arrows:
        require_arity(line, {"arrow name", "source object", "target object"});
        d.arrows.push_back({{line.tokens[0].text, line.tokens[1].text, line.tokens[2].text},
                            where(head)});
        break;
      case Section::Units:
        require_arity(line, {"object", "unit arrow"});
        d.units.push_back({{line.tokens[0].text, line.tokens[1].text}, where(head)});
        break;
      case Section::Inverses:
        require_arity(line, {"arrow", "inverse arrow"});
        d.inverses.push_back({{line.tokens[0].text, line.tokens[1].text}, where(head)});
        break;
      case Section::Mul:
        require_arity(line, {"left factor", "right factor", "product"});
        d.products.push_back(
            {{line.tokens[0].text, line.tokens[1].text, line.tokens[2].text}, where(head)});
        break;
    }
  }
  const char* names[] = {"OBJECTS", "ARROWS", "UNITS", "INVERSES"};
  for (int i = 0; i < 4; ++i) {
    if (!seen[i]) {
      const std::size_t line = lines.empty() ? 1 : lines.back().number + 1;
      throw SyntaxError(line, 1, std::string("section ") + names[i], "end of input");
    }
  }
  return d;
}

// ------------------------------------------------------- rep assembly

struct RepDraft {
  std::vector<Located> dims;  // fields: object dim
  struct Mat {
    std::string arrow;
    std::vector<Rational> entries;
    std::optional<std::pair<std::size_t, std::size_t>> shape;  // explicit in JSON
    std::string where;
  };
  std::vector<Mat> matrices;
};

GroupoidRep assemble_rep(const RepDraft& d, const FiniteGroupoid& G) {
  ValidationReport report;
  std::vector<std::optional<std::size_t>> dims(G.num_objects());
  for (const Located& l : d.dims) {
    const auto m = G.find_object(l.fields[0]);
    if (!m) {
      report.add("known object", l.where + ": " + in_quotes(l.fields[0]));
      continue;
    }
    if (dims[m->index]) {
      report.add("one dimension per object", l.where + ": " + in_quotes(l.fields[0]));
    }
    dims[m->index] = std::stoul(l.fields[1]);
  }
  std::vector<std::size_t> fiber;
  for (std::size_t m = 0; m < dims.size(); ++m) {
    if (!dims[m]) {
      report.add("one dimension per object",
                 "no dimension given for " + in_quotes(G.object_name(obj(m))));
    }
    fiber.push_back(dims[m].value_or(0));
  }
  if (!report.ok()) {
    throw SemanticError(std::move(report));
  }
  GroupoidRep phi{VectorBundle(fiber), std::vector<Matrix>(G.num_arrows())};
  std::vector<bool> given(G.num_arrows(), false);
  for (const auto& mat : d.matrices) {
    const auto g = G.find_arrow(mat.arrow);
    if (!g) {
      report.add("known arrow", mat.where + ": " + in_quotes(mat.arrow));
      continue;
    }
    if (given[g->index]) {
      report.add("one matrix per arrow", mat.where + ": " + in_quotes(mat.arrow));
      continue;
    }
    given[g->index] = true;
    const std::size_t rows = fiber[G.target(*g).index];
    const std::size_t cols = fiber[G.source(*g).index];
    if ((mat.shape && *mat.shape != std::make_pair(rows, cols)) ||
        mat.entries.size() != rows * cols) {
      throw Error(ErrorKind::DimensionMismatch,
                  mat.where + ": arrow " + mat.arrow + " needs a " + std::to_string(rows) + "x" +
                      std::to_string(cols) + " matrix, found " +
                      std::to_string(mat.entries.size()) + " entries");
    }
    Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = mat.entries[r * cols + c];
      }
    }
    phi.arrow_maps[g->index] = std::move(m);
  }
  for (std::size_t i = 0; i < G.num_arrows(); ++i) {
    if (given[i]) {
      continue;
    }
    const ArrId g = arr(i);
    if (G.is_unit(g)) {
      const auto d0 = static_cast<Eigen::Index>(fiber[G.source(g).index]);
      phi.arrow_maps[i] = Matrix::Identity(d0, d0);
    } else {
      report.add("one matrix per arrow", "no matrix given for " + in_quotes(G.arrow_name(g)));
    }
  }
  if (!report.ok()) {
    throw SemanticError(std::move(report));
  }
  ValidationReport validation = validate_groupoid_rep(G, phi);
  if (!validation.ok()) {
    throw SemanticError(std::move(validation));
  }
  return phi;
}

}  // namespace

ParsedGroupoid parse_groupoid_unchecked(std::string_view text) {
  const std::vector<Line> lines = lex(text);
  std::optional<FiniteGroupoid> built;
  const GroupoidDraft draft = read_draft(lines, built);
  if (built) {
    return {std::move(*built), {}};
  }
  FiniteGroupoid G = assemble(draft);
  ValidationReport report = validate_groupoid(G);
  return {std::move(G), std::move(report)};
}

FiniteGroupoid parse_groupoid(std::string_view text) {
  ParsedGroupoid parsed = parse_groupoid_unchecked(text);
  if (!parsed.report.ok()) {
    throw SemanticError(std::move(parsed.report));
  }
  return std::move(parsed.groupoid);
}

GroupoidRep parse_rep(std::string_view text, const FiniteGroupoid& G) {
  const std::vector<Line> lines = lex(text);
  RepDraft d;
  enum class Section { None, Bundle, Matrices };
  Section section = Section::None;
  for (const Line& line : lines) {
    const Token& head = line.tokens.front();
    if (head.text == "BUNDLE" || head.text == "ARROWMAT") {
      if (line.tokens.size() > 1) {
        unexpected(line.tokens[1], "end of line");
      }
      section = head.text == "BUNDLE" ? Section::Bundle : Section::Matrices;
      continue;
    }
    switch (section) {
      case Section::None:
        unexpected(head, "section keyword (BUNDLE or ARROWMAT)");
      case Section::Bundle: {
        require_arity(line, {"object", "fiber dimension"});
        const std::size_t dim =
            parse_count(line.tokens[1], line.tokens[1].text, 0, "fiber dimension");
        d.dims.push_back({{head.text, std::to_string(dim)}, where(head)});
        break;
      }
      case Section::Matrices: {
        RepDraft::Mat mat{head.text, {}, std::nullopt, where(head)};
        for (std::size_t i = 1; i < line.tokens.size(); ++i) {
          Rational q;
          if (!parse_rational(line.tokens[i].text, q)) {
            unexpected(line.tokens[i], "matrix entry (integer or p/q with q != 0)");
          }
          mat.entries.push_back(std::move(q));
        }
        d.matrices.push_back(std::move(mat));
        break;
      }
    }
  }
  return assemble_rep(d, G);
}

std::string format_groupoid(const FiniteGroupoid& G) {
  std::ostringstream out;
  out << "OBJECTS";
  for (const auto& name : G.object_names()) {
    out << ' ' << name;
  }
  out << "\nARROWS\n";
  for (std::size_t i = 0; i < G.num_arrows(); ++i) {
    out << G.arrow_name(arr(i)) << ' ' << G.object_name(G.source(arr(i))) << ' '
        << G.object_name(G.target(arr(i))) << '\n';
  }
  out << "UNITS\n";
  for (std::size_t m = 0; m < G.num_objects(); ++m) {
    out << G.object_name(obj(m)) << ' ' << G.arrow_name(G.unit(obj(m))) << '\n';
  }
  out << "INVERSES\n";
  for (std::size_t i = 0; i < G.num_arrows(); ++i) {
    out << G.arrow_name(arr(i)) << ' ' << G.arrow_name(G.inverse(arr(i))) << '\n';
  }
  out << "MUL\n";
  for (std::size_t i = 0; i < G.num_arrows(); ++i) {
    for (std::size_t j = 0; j < G.num_arrows(); ++j) {
      if (const auto k = G.product(arr(i), arr(j))) {
        out << G.arrow_name(arr(i)) << ' ' << G.arrow_name(arr(j)) << ' ' << G.arrow_name(*k)
            << '\n';
      }
    }
  }
  return out.str();
}

std::string format_rep(const FiniteGroupoid& G, const GroupoidRep& phi) {
  std::ostringstream out;
  out << "BUNDLE\n";
  for (std::size_t m = 0; m < G.num_objects(); ++m) {
    out << G.object_name(obj(m)) << ' ' << phi.bundle.dim(m) << '\n';
  }
  out << "ARROWMAT\n";
  for (std::size_t i = 0; i < G.num_arrows(); ++i) {
    out << G.arrow_name(arr(i));
    const Matrix& m = phi(arr(i));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        out << ' ' << format_rational(m(r, c));
      }
    }
    out << '\n';
  }
  return out.str();
}

// ------------------------------------------------------------------ JSON

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  ValidationReport r;
  r.add("schema", what);
  throw SemanticError(std::move(r));
}

template <typename F>
auto with_schema(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    schema_error(e.what());
  }
}

void require_kind(const Json& j, const char* kind) {
  if (!j.is_object() || !j.contains("kind") || j.at("kind") != kind) {
    schema_error(std::string("expected a document of kind \"") + kind + "\"");
  }
}

Rational rational_from_json(const Json& j) {
  Rational q;
  if (!j.is_string() || !parse_rational(j.get<std::string>(), q)) {
    schema_error("rational entries are strings \"p/q\" or \"p\", got " + j.dump());
  }
  return q;
}

void require_same_groupoid(const Json& j, const FiniteGroupoid& G) {
  if (j.contains("groupoid") && !(groupoid_from_json(j.at("groupoid")) == G)) {
    schema_error("document was written for a different groupoid");
  }
}

VectorBundle bundle_from_json(const Json& j, std::size_t base) {
  const auto dims = j.get<std::vector<std::size_t>>();
  if (dims.size() != base) {
    schema_error("bundle has " + std::to_string(dims.size()) + " fibers, expected " +
                 std::to_string(base));
  }
  return VectorBundle(dims);
}

Json carrier_to_json(const SemiLinearMap& mu) {
  Json fibers = Json::array();
  for (const Matrix& m : mu.carrier().fiber_maps) {
    fibers.push_back(matrix_to_json(m));
  }
  return Json{{"base_map", mu.carrier().base_map}, {"fiber_maps", fibers}};
}

SemiLinearMap carrier_from_json(const Json& j, const VectorBundle& E) {
  BundleAutomorphism F;
  F.base_map = j.at("base_map").get<std::vector<BasePoint>>();
  for (const Json& m : j.at("fiber_maps")) {
    F.fiber_maps.push_back(matrix_from_json(m));
  }
  if (F.base_map.size() != E.base_size() || F.fiber_maps.size() != E.base_size()) {
    schema_error("carrier does not cover the bundle base");
  }
  for (BasePoint b : F.base_map) {
    if (b >= E.base_size()) {
      schema_error("base map entry out of range");
    }
  }
  try {
    require_automorphism(E, F);
  } catch (const Error& e) {
    schema_error(std::string("carrier is not a bundle automorphism: ") + e.what());
  }
  return SemiLinearMap(std::move(F));
}

std::vector<ArrId> arrows_from_json(const Json& j, const FiniteGroupoid& G, std::size_t size) {
  std::vector<ArrId> out;
  for (const Json& name : j) {
    const auto a = G.find_arrow(name.get<std::string>());
    if (!a) {
      schema_error("unknown arrow " + name.dump());
    }
    out.push_back(*a);
  }
  if (out.size() != size) {
    schema_error("element has " + std::to_string(out.size()) + " values, expected " +
                 std::to_string(size));
  }
  return out;
}

Json arrows_to_json(const FiniteGroupoid& G, const std::vector<ArrId>& values) {
  Json out = Json::array();
  for (ArrId a : values) {
    out.push_back(G.arrow_name(a));
  }
  return out;
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(format_rational(m(r, c)));
    }
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix matrix_from_json(const Json& j) {
  return with_schema([&] {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const Json& entries = j.at("entries");
    if (entries.size() != rows) {
      schema_error("matrix declares " + std::to_string(rows) + " rows but lists " +
                   std::to_string(entries.size()));
    }
    Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
      if (entries[r].size() != cols) {
        schema_error("matrix row " + std::to_string(r) + " has the wrong length");
      }
      for (std::size_t c = 0; c < cols; ++c) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            rational_from_json(entries[r][c]);
      }
    }
    return m;
  });
}

Json to_json(const FiniteGroupoid& G) {
  Json arrows = Json::array();
  Json units = Json::array();
  Json inverses = Json::array();
  Json mul = Json::array();
  for (std::size_t i = 0; i < G.num_arrows(); ++i) {
    const ArrId g = arr(i);
    arrows.push_back({{"name", G.arrow_name(g)},
                      {"source", G.object_name(G.source(g))},
                      {"target", G.object_name(G.target(g))}});
    inverses.push_back(G.arrow_name(G.inverse(g)));
    for (std::size_t j = 0; j < G.num_arrows(); ++j) {
      if (const auto k = G.product(g, arr(j))) {
        mul.push_back({G.arrow_name(g), G.arrow_name(arr(j)), G.arrow_name(*k)});
      }
    }
  }
  for (std::size_t m = 0; m < G.num_objects(); ++m) {
    units.push_back(G.arrow_name(G.unit(obj(m))));
  }
  return Json{{"kind", "groupoid"}, {"objects", G.object_names()}, {"arrows", arrows},
              {"units", units},     {"inverses", inverses},          {"mul", mul}};
}

FiniteGroupoid groupoid_from_json(const Json& j) {
  require_kind(j, "groupoid");
  return with_schema([&] {
    GroupoidDraft d;
    const auto objects = j.at("objects").get<std::vector<std::string>>();
    for (std::size_t i = 0; i < objects.size(); ++i) {
      d.objects.push_back({{objects[i]}, "objects[" + std::to_string(i) + "]"});
    }
    const Json& arrows = j.at("arrows");
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      d.arrows.push_back({{arrows[i].at("name").get<std::string>(),
                           arrows[i].at("source").get<std::string>(),
                           arrows[i].at("target").get<std::string>()},
                          "arrows[" + std::to_string(i) + "]"});
    }
    const auto units = j.at("units").get<std::vector<std::string>>();
    if (units.size() != objects.size()) {
      schema_error("units must list one arrow per object");
    }
    for (std::size_t i = 0; i < units.size(); ++i) {
      d.units.push_back({{objects[i], units[i]}, "units[" + std::to_string(i) + "]"});
    }
    const auto inverses = j.at("inverses").get<std::vector<std::string>>();
    if (inverses.size() != arrows.size()) {
      schema_error("inverses must list one arrow per arrow");
    }
    for (std::size_t i = 0; i < inverses.size(); ++i) {
      d.inverses.push_back({{arrows[i].at("name").get<std::string>(), inverses[i]},
                            "inverses[" + std::to_string(i) + "]"});
    }
    const Json& mul = j.at("mul");
    for (std::size_t i = 0; i < mul.size(); ++i) {
      const auto triple = mul[i].get<std::vector<std::string>>();
      if (triple.size() != 3) {
        schema_error("mul entries are [g, h, gh] triples");
      }
      d.products.push_back({triple, "mul[" + std::to_string(i) + "]"});
    }
    FiniteGroupoid G = assemble(d);
    ValidationReport report = validate_groupoid(G);
    if (!report.ok()) {
      throw SemanticError(std::move(report));
    }
    return G;
  });
}

Json to_json(const ValidationReport& report) {
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"law", v.law}, {"witness", v.witness}});
  }
  return Json{{"kind", "validation_report"}, {"ok", report.ok()}, {"violations", violations}};
}

ValidationReport report_from_json(const Json& j) {
  require_kind(j, "validation_report");
  return with_schema([&] {
    ValidationReport report;
    for (const Json& v : j.at("violations")) {
      report.add(v.at("law").get<std::string>(), v.at("witness").get<std::string>());
    }
    if (j.at("ok").get<bool>() != report.ok()) {
      schema_error("\"ok\" disagrees with the violation list");
    }
    return report;
  });
}

Json to_json(const FiniteGroupoid& G, const GroupoidRep& phi) {
  Json bundle = Json::array();
  for (std::size_t m = 0; m < G.num_objects(); ++m) {
    bundle.push_back({{"object", G.object_name(obj(m))}, {"dim", phi.bundle.dim(m)}});
  }
  Json matrices = Json::array();
  for (std::size_t i = 0; i < G.num_arrows(); ++i) {
    matrices.push_back({{"arrow", G.arrow_name(arr(i))}, {"matrix", matrix_to_json(phi(arr(i)))}});
  }
  return Json{{"kind", "groupoid_rep"},
              {"groupoid", to_json(G)},
              {"bundle", bundle},
              {"matrices", matrices}};
}

GroupoidRep rep_from_json(const Json& j, const FiniteGroupoid& G) {
  require_kind(j, "groupoid_rep");
  return with_schema([&] {
    require_same_groupoid(j, G);
    RepDraft d;
    const Json& bundle = j.at("bundle");
    for (std::size_t i = 0; i < bundle.size(); ++i) {
      d.dims.push_back({{bundle[i].at("object").get<std::string>(),
                         std::to_string(bundle[i].at("dim").get<std::size_t>())},
                        "bundle[" + std::to_string(i) + "]"});
    }
    const Json& matrices = j.at("matrices");
    for (std::size_t i = 0; i < matrices.size(); ++i) {
      const Matrix m = matrix_from_json(matrices[i].at("matrix"));
      RepDraft::Mat mat{matrices[i].at("arrow").get<std::string>(),
                        {},
                        std::make_pair(static_cast<std::size_t>(m.rows()),
                                       static_cast<std::size_t>(m.cols())),
                        "matrices[" + std::to_string(i) + "]"};
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
          mat.entries.push_back(m(r, c));
        }
      }
      d.matrices.push_back(std::move(mat));
    }
    return assemble_rep(d, G);
  });
}

Json to_json(const FiniteGroupoid& G, const BisRep& rho) {
  Json elements = Json::array();
  for (std::size_t i = 0; i < rho.size(); ++i) {
    Json e = carrier_to_json(rho.images[i]);
    e["bisection"] = arrows_to_json(G, rho.elements[i].values);
    elements.push_back(std::move(e));
  }
  return Json{{"kind", "bis_rep"},
              {"groupoid", to_json(G)},
              {"bundle", rho.bundle.dims()},
              {"elements", elements}};
}

Json to_json(const FiniteGroupoid& G, const SGRep& rho) {
  Json elements = Json::array();
  for (std::size_t i = 0; i < rho.size(); ++i) {
    Json e = carrier_to_json(rho.images[i]);
    e["selfmap"] = arrows_to_json(G, rho.elements[i].values);
    elements.push_back(std::move(e));
  }
  return Json{{"kind", "sg_rep"},
              {"groupoid", to_json(G)},
              {"bundle", rho.bundle.dims()},
              {"elements", elements}};
}

BisRep bis_rep_from_json(const Json& j, const FiniteGroupoid& G) {
  require_kind(j, "bis_rep");
  return with_schema([&] {
    require_same_groupoid(j, G);
    const VectorBundle E = bundle_from_json(j.at("bundle"), G.num_objects());
    std::vector<Bisection> elements;
    std::vector<SemiLinearMap> images;
    for (const Json& e : j.at("elements")) {
      Bisection s{arrows_from_json(e.at("bisection"), G, G.num_objects())};
      if (!bis_validate(G, s)) {
        schema_error("element " + e.at("bisection").dump() + " is not a bisection");
      }
      elements.push_back(std::move(s));
      images.push_back(carrier_from_json(e, E));
    }
    try {
      return make_rep_table(E, std::move(elements), std::move(images));
    } catch (const Error& e) {
      schema_error(e.what());
    }
  });
}

SGRep sg_rep_from_json(const Json& j, const FiniteGroupoid& G) {
  require_kind(j, "sg_rep");
  return with_schema([&] {
    require_same_groupoid(j, G);
    const VectorBundle E = bundle_from_json(j.at("bundle"), G.num_arrows());
    std::vector<SelfMap> elements;
    std::vector<SemiLinearMap> images;
    for (const Json& e : j.at("elements")) {
      SelfMap f{arrows_from_json(e.at("selfmap"), G, G.num_arrows())};
      if (!sg_validate(G, f) || !sg_is_unit(G, f)) {
        schema_error("element " + e.at("selfmap").dump() + " is not in S_G(alpha)");
      }
      elements.push_back(std::move(f));
      images.push_back(carrier_from_json(e, E));
    }
    try {
      return make_rep_table(E, std::move(elements), std::move(images));
    } catch (const Error& e) {
      schema_error(e.what());
    }
  });
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is 1-based and points at the offending character
    const std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw SyntaxError(line, column, "well-formed JSON", e.what());
  }
}

// ------------------------------------------------------------------- DOT

std::string format_matrix(const Matrix& m) {
  if (m.rows() == 1 && m.cols() == 1) {
    return format_rational(m(0, 0));
  }
  std::string out = "[";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out += r == 0 ? "[" : ",[";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out += (c == 0 ? "" : ",") + format_rational(m(r, c));
    }
    out += "]";
  }
  return out + "]";
}

namespace {

std::string dot_id(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out + "\"";
}

std::string dot(const FiniteGroupoid& G, const GroupoidRep* phi) {
  std::ostringstream out;
  out << "digraph groupoid {\n";
  for (const auto& name : G.object_names()) {
    out << "  " << dot_id(name) << ";\n";
  }
  for (std::size_t i = 0; i < G.num_arrows(); ++i) {
    const ArrId g = arr(i);
    std::string label = G.arrow_name(g);
    if (phi != nullptr) {
      label += " | " + format_matrix((*phi)(g));
    }
    out << "  " << dot_id(G.object_name(G.source(g))) << " -> "
        << dot_id(G.object_name(G.target(g))) << " [label=" << dot_id(label) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string to_dot(const FiniteGroupoid& G) { return dot(G, nullptr); }

std::string to_dot(const FiniteGroupoid& G, const GroupoidRep& phi) { return dot(G, &phi); }

}  // namespace gpdrep

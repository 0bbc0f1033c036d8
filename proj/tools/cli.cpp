#include "gpdrep/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "gpdrep/bisection.hpp"
#include "gpdrep/selfmap.hpp"
#include "gpdrep/textio.hpp"
#include "gpdrep/transfer.hpp"
#include "gpdrep/verify/acceptance.hpp"

namespace gpdrep::cli {

namespace {

// Input trouble: unreadable files and malformed documents.
struct InputError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError{"cannot read " + path};
  }
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

FiniteGroupoid load_groupoid(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_groupoid(text);
  } catch (const Error& e) {
    throw InputError{path + ": " + e.what()};
  }
}

GroupoidRep load_rep(const std::string& path, const FiniteGroupoid& G) {
  const std::string text = read_file(path);
  try {
    return parse_rep(text, G);
  } catch (const Error& e) {
    throw InputError{path + ": " + e.what()};
  }
}

Json load_json(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_json(text);
  } catch (const Error& e) {
    throw InputError{path + ": " + e.what()};
  }
}

std::string names(const FiniteGroupoid& G, const std::vector<ArrId>& values) {
  std::string out;
  for (ArrId a : values) {
    out += (out.empty() ? "" : " ") + G.arrow_name(a);
  }
  return out;
}

template <typename E, typename Mul>
std::vector<std::vector<std::size_t>> cayley(const std::vector<E>& elems, Mul mul) {
  std::vector<std::vector<std::size_t>> table(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const E p = mul(elems[i], elems[j]);
      table[i].push_back(
          static_cast<std::size_t>(std::lower_bound(elems.begin(), elems.end(), p) - elems.begin()));
    }
  }
  return table;
}

template <typename E, typename Mul>
void print_group(std::ostream& out, bool json, const char* kind, const FiniteGroupoid& G,
                 const std::vector<E>& elems, Mul mul) {
  const auto table = cayley(elems, mul);
  if (json) {
    Json elements = Json::array();
    for (const E& e : elems) {
      Json values = Json::array();
      for (ArrId a : e.values) {
        values.push_back(G.arrow_name(a));
      }
      elements.push_back(values);
    }
    out << Json{{"kind", kind}, {"elements", elements}, {"table", table}}.dump(2) << '\n';
    return;
  }
  out << "# " << elems.size() << " elements\n";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    out << i << ": " << names(G, elems[i].values) << '\n';
  }
  out << "# product table (row * column)\n";
  for (const auto& row : table) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      out << (j == 0 ? "" : " ") << row[j];
    }
    out << '\n';
  }
}

bool print_results(std::ostream& out, bool json, bool timing,
                   const std::vector<verify::CriterionResult>& results) {
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && (r.passed || r.skipped);
  }
  if (json) {
    Json items = Json::array();
    for (const auto& r : results) {
      Json item{{"id", r.id},           {"title", r.title},   {"passed", r.passed},
                {"skipped", r.skipped}, {"detail", r.detail}};
      if (timing) {
        item["seconds"] = r.seconds;
      }
      items.push_back(std::move(item));
    }
    out << Json{{"kind", "check_report"}, {"ok", ok}, {"criteria", items}}.dump(2) << '\n';
    return ok;
  }
  for (const auto& r : results) {
    out << (r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL") << ' ' << r.id << ' ' << r.title
        << ": " << r.detail;
    if (timing) {
      out << " (" << std::fixed << std::setprecision(2) << r.seconds << " s)";
    }
    out << '\n';
  }
  return ok;
}

void print_report(std::ostream& out, bool json, const std::string& what,
                  const ValidationReport& report) {
  if (json) {
    out << to_json(report).dump(2) << '\n';
    return;
  }
  if (report.ok()) {
    out << what << ": all laws hold\n";
    return;
  }
  out << what << ": " << report.violations.size() << " violation(s)\n";
  for (const Violation& v : report.violations) {
    out << "  " << v.law << ": " << v.witness << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite groupoids, their representations and the induced Bis(G) and S_G(alpha) "
               "representations.",
               "gpdrep"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  std::uint64_t max_space = kDefaultSelfMapSpace;
  app.add_flag("--json", json, "Machine-readable JSON output");
  app.add_option("--max-selfmap-space", max_space,
                 "Largest candidate count searched when enumerating S_G(alpha)")
      ->capture_default_str();

  std::string gpd, grep, table, side = "bis", format = "json", fixture_dir;
  bool timing = false;

  auto* validate = app.add_subcommand("validate", "Check the groupoid axioms (and a rep)");
  validate->add_option("groupoid", gpd, ".gpd file")->required();
  validate->add_option("--rep", grep, ".grep file to validate against the groupoid");

  auto* info = app.add_subcommand("info", "Sizes and the enough-bisections verdict");
  info->add_option("groupoid", gpd, ".gpd file")->required();

  auto* bisections = app.add_subcommand("bisections", "The group Bis(G) and its product table");
  bisections->add_option("groupoid", gpd, ".gpd file")->required();

  auto* selfmaps = app.add_subcommand("selfmaps", "The group S_G(alpha) and its product table");
  selfmaps->add_option("groupoid", gpd, ".gpd file")->required();

  auto* induce = app.add_subcommand("induce", "Tabulate the induced representation as JSON");
  induce->add_option("groupoid", gpd, ".gpd file")->required();
  induce->add_option("rep", grep, ".grep file")->required();
  induce->add_option("--side", side, "bis or sg")->check(CLI::IsMember({"bis", "sg"}));

  auto* recover = app.add_subcommand("recover", "Recover a groupoid rep from an induced table");
  recover->add_option("groupoid", gpd, ".gpd file")->required();
  recover->add_option("table", table, "JSON table written by `induce`")->required();
  recover->add_option("--side", side, "bis or sg")->check(CLI::IsMember({"bis", "sg"}));

  auto* roundtrip = app.add_subcommand("roundtrip", "Check the transfer invariants for a rep");
  roundtrip->add_option("groupoid", gpd, ".gpd file")->required();
  roundtrip->add_option("rep", grep, ".grep file")->required();

  auto* check = app.add_subcommand("check", "Run the acceptance suite (and the invariants)");
  check->add_option("groupoid", gpd, ".gpd file");
  check->add_option("rep", grep, ".grep file");
  check->add_option("--fixtures", fixture_dir, "Corpus directory used by the suite");
  check->add_flag("--timing", timing, "Show wall-clock time per criterion");

  auto* exporter = app.add_subcommand("export", "Write a groupoid (and rep) in another format");
  exporter->add_option("groupoid", gpd, ".gpd file")->required();
  exporter->add_option("--rep", grep, ".grep file");
  exporter->add_option("--format", format, "json, dot, gpd or grep")
      ->check(CLI::IsMember({"json", "dot", "gpd", "grep"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (validate->parsed()) {
      const ParsedGroupoid parsed = [&] {
        const std::string text = read_file(gpd);
        try {
          return parse_groupoid_unchecked(text);
        } catch (const Error& e) {
          throw InputError{gpd + ": " + e.what()};
        }
      }();
      if (!grep.empty() && parsed.report.ok()) {
        try {
          parse_rep(read_file(grep), parsed.groupoid);
        } catch (const SemanticError& e) {
          print_report(out, json, grep, e.report());
          return kExitCheckFailed;
        } catch (const Error& e) {
          throw InputError{grep + ": " + e.what()};
        }
      }
      print_report(out, json, gpd, parsed.report);
      if (!parsed.report.ok()) {
        return kExitCheckFailed;
      }
      if (!grep.empty() && !json) {
        out << grep << ": all laws hold\n";
      }
      return kExitOk;
    }

    if (check->parsed()) {
      if (gpd.empty() != grep.empty()) {
        throw InputError{"check takes either no files or a .gpd and a .grep file"};
      }
      std::vector<verify::CriterionResult> results;
      if (!gpd.empty()) {
        const FiniteGroupoid G = load_groupoid(gpd);
        const GroupoidRep phi = load_rep(grep, G);
        results = verify::run_transfer_invariants(G, phi, max_space);
      }
      verify::SuiteOptions options;
      options.fixture_dir = fixture_dir;
      for (auto& r : verify::run_acceptance_suite(options)) {
        results.push_back(std::move(r));
      }
      return print_results(out, json, timing, results) ? kExitOk : kExitCheckFailed;
    }

    const FiniteGroupoid G = load_groupoid(gpd);

    if (info->parsed()) {
      const auto bis = enumerate_bisections(G);
      const EnoughBisections enough = has_enough_bisections(G, bis);
      std::optional<std::size_t> sg;
      std::string sg_note;
      try {
        sg = enumerate_sg_units(G, max_space).size();
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::TooLarge) {
          throw;
        }
        sg_note = e.what();
      }
      if (json) {
        Json j{{"kind", "info"},
               {"objects", G.num_objects()},
               {"arrows", G.num_arrows()},
               {"bisections", bis.size()},
               {"selfmap_units", sg ? Json(*sg) : Json(nullptr)},
               {"enough_bisections", enough.holds}};
        if (!sg) {
          j["selfmap_note"] = sg_note;
        }
        out << j.dump(2) << '\n';
      } else {
        out << "objects: " << G.num_objects() << '\n'
            << "arrows: " << G.num_arrows() << '\n'
            << "|Bis|: " << bis.size() << '\n'
            << "|S_G(alpha)|: " << (sg ? std::to_string(*sg) : "not computed (" + sg_note + ")")
            << '\n'
            << "enough bisections: " << (enough.holds ? "true" : "false") << '\n';
      }
      return kExitOk;
    }

    if (bisections->parsed()) {
      print_group(out, json, "bisection_group", G, enumerate_bisections(G),
                  [&](const Bisection& a, const Bisection& b) { return bis_multiply(G, a, b); });
      return kExitOk;
    }

    if (selfmaps->parsed()) {
      print_group(out, json, "selfmap_group", G, enumerate_sg_units(G, max_space),
                  [&](const SelfMap& a, const SelfMap& b) { return sg_star(G, a, b); });
      return kExitOk;
    }

    if (induce->parsed()) {
      const GroupoidRep phi = load_rep(grep, G);
      const Json j = side == "bis" ? to_json(G, induce_bis_rep(G, phi))
                                   : to_json(G, induce_sg_rep(G, phi, max_space));
      out << j.dump(2) << '\n';
      return kExitOk;
    }

    if (recover->parsed()) {
      const Json j = load_json(table);
      GroupoidRep phi;
      std::string note;
      if (side == "bis") {
        BisRep rho;
        try {
          rho = bis_rep_from_json(j, G);
        } catch (const Error& e) {
          throw InputError{table + ": " + e.what()};
        }
        phi = recover_groupoid_rep(G, rho);
      } else {
        SGRep rho;
        try {
          rho = sg_rep_from_json(j, G);
        } catch (const Error& e) {
          throw InputError{table + ": " + e.what()};
        }
        // E_m is the fiber of α*E over the unit 1_m.
        std::vector<std::size_t> dims;
        for (std::size_t m = 0; m < G.num_objects(); ++m) {
          dims.push_back(rho.bundle.dim(G.unit(obj(m)).index));
        }
        const SgRecovery rec = recover_from_sg_rep(G, rho, VectorBundle(dims));
        phi = rec.rep;
        note = rec.agrees_everywhere ? "# agrees with the input on all arrows\n"
                                     : "# agrees with the input on unit arrows only\n";
      }
      if (json) {
        out << to_json(G, phi).dump(2) << '\n';
      } else {
        out << note << format_rep(G, phi);
      }
      return kExitOk;
    }

    if (roundtrip->parsed()) {
      const GroupoidRep phi = load_rep(grep, G);
      return print_results(out, json, false, verify::run_transfer_invariants(G, phi, max_space))
                 ? kExitOk
                 : kExitCheckFailed;
    }

    if (exporter->parsed()) {
      std::optional<GroupoidRep> phi;
      if (!grep.empty()) {
        phi = load_rep(grep, G);
      }
      if (format == "json") {
        out << (phi ? to_json(G, *phi) : to_json(G)).dump(2) << '\n';
      } else if (format == "dot") {
        out << (phi ? to_dot(G, *phi) : to_dot(G));
      } else if (format == "gpd") {
        out << format_groupoid(G);
      } else {
        if (!phi) {
          throw InputError{"--format grep needs --rep"};
        }
        out << format_rep(G, *phi);
      }
      return kExitOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.message << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace gpdrep::cli

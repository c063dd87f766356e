#include "lsq/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lsq/corpus.hpp"
#include "lsq/parallel.hpp"
#include "lsq/report.hpp"

namespace lsq {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalseVerdict = 1;
constexpr int kExitInputError = 2;

struct SquareInput {
  LatinSquare square;
  std::string source;
};

// INPUT is a file path, '-' for standard input, or '@name' for a built-in.
SquareInput load_square(const std::string& input, std::istream& stdin_stream) {
  if (!input.empty() && input[0] == '@') {
    const CorpusEntry& entry = corpus_entry(input.substr(1));
    return {entry.square(), entry.name};
  }
  if (input == "-") return {LatinSquare::parse(stdin_stream), "stdin"};
  std::ifstream file(input);
  if (!file) throw Error(errc::ragged_grid, "cannot open '" + input + "'");
  return {LatinSquare::parse(file), input};
}

Point parse_base(const LatinSquare& square, const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw Error(errc::point_not_in_array, "base point must be row,col");
  int row = 0, col = 0;
  try {
    row = std::stoi(text.substr(0, comma));
    col = std::stoi(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw Error(errc::point_not_in_array, "base point must be row,col");
  }
  return base_point(square, row, col);
}

std::string yes_no(bool value) { return value ? "yes" : "no"; }

std::string flag_text(const PropertyFlag& flag) {
  if (flag.reason == flag_reason::checked) return yes_no(flag.value);
  return std::string(yes_no(flag.value)) + " (" + flag_reason_name(flag.reason) + ")";
}

void print_properties(std::ostream& out, const LatinSquare& square,
                      const PropertyRecord& record) {
  out << "order: " << square.order() << "\n";
  out << "is_quasigroup: " << yes_no(record.is_quasigroup) << "\n";
  if (auto loop = loop_structure(square))
    out << "is_loop: yes (identity " << square.symbol_name(loop->identity) << ", s = "
        << loop->self_inverse_count << ")\n";
  else
    out << "is_loop: no\n";
  out << "is_group: " << yes_no(record.is_group) << "\n";
  out << "is_commutative: " << yes_no(record.is_commutative) << "\n";
  out << "is_right_bol: " << flag_text(record.is_right_bol) << "\n";
  out << "is_left_bol: " << flag_text(record.is_left_bol) << "\n";
  out << "is_moufang: " << flag_text(record.is_moufang) << "\n";
  out << "has_rip: " << flag_text(record.has_rip) << "\n";
  out << "has_lip: " << flag_text(record.has_lip) << "\n";
  out << "has_aaip: " << flag_text(record.has_aaip) << "\n";
}

json base_point_record(const LatinSquare& square, const Point& p) {
  auto perm = pi_of(square, p);
  auto cycles = cycle_structure(perm);
  json record;
  record["base"] = to_json(p);
  record["pi"] = to_json(perm);
  record["cycle_structure"] = to_json(cycles);
  if (square.order() >= 5) {
    auto table = module_table(square.order(), cycles);
    auto signature =
        wedderburn_signature(table, table.cycle_count, static_cast<int>(table.roots.size()));
    record["module_table"] = to_json(table);
    record["signature"] = to_json(signature);
    record["predicted_dimension"] = signature.algebra_dimension();
  } else {
    record["module_table"] = nullptr;
    record["signature"] = nullptr;
    record["predicted_dimension"] = nullptr;
  }
  return record;
}

void print_module_table(std::ostream& out, const ModuleTable& table,
                        const WedderburnSignature& signature) {
  out << "module table (n = " << table.order << "):\n";
  for (const ModuleEntry& entry : table.entries) {
    out << "  dim " << entry.dimension << "  multiplicity " << entry.multiplicity << "  ";
    switch (entry.label) {
      case module_label::primary: out << "primary"; break;
      case module_label::one_dim: out << "one-dim"; break;
      case module_label::class_iv: out << "class-(iv)"; break;
      case module_label::eigenvalue: out << "eigenvalue " << entry.eigenvalue.to_string(); break;
    }
    out << "\n";
  }
  out << "balance: " << table.balance() << " = n^2\n";
  out << "signature: {5";
  for (int i = 0; i < signature.six_count; ++i) out << ", 6";
  out << ", 1}  (N = " << signature.six_count << ")\n";
  out << "predicted dimension: " << signature.algebra_dimension() << "\n";
}

void print_wedderburn(std::ostream& out, const WedderburnReport& report) {
  out << "base (" << report.base.row << "," << report.base.col << "," << report.base.entry
      << "): ";
  if (report.predicted_dimension)
    out << "predicted " << *report.predicted_dimension << ", ";
  else
    out << "no prediction (order <= 4), ";
  out << "oracle " << report.oracle_dimension;
  if (report.dimension_match) out << (*report.dimension_match ? ", match" : ", MISMATCH");
  out << "\n";
  if (report.center_dim) {
    out << "  center: oracle " << *report.center_dim;
    if (report.predicted_center) {
      out << ", predicted " << *report.predicted_center
          << (*report.center_match ? ", match" : ", MISMATCH");
    }
    out << "\n";
  }
}

struct MoufangCheck {
  bool applicable = false;
  int predicted_fixed = 0;
  bool all_match = false;
};

MoufangCheck moufang_check(const LatinSquare& square, const PropertyRecord& record,
                           int jobs) {
  MoufangCheck check;
  if (!record.is_moufang) return check;
  check.applicable = true;
  check.predicted_fixed = moufang_fixed_prediction(square);
  auto profile = fixed_point_profile(square, jobs);
  check.all_match = true;
  for (const auto& row : profile.fixed_counts)
    for (int count : row)
      if (count != check.predicted_fixed) check.all_match = false;
  return check;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Latin square / quasigroup analyzer: loop properties, base-point\n"
               "permutations, Terwilliger module tables, and an exact matrix oracle",
               "lsq"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  std::string input, base_spec, isotopy_file, conjugacy_word, corpus_name, orders_spec;
  std::vector<std::string> base_specs;
  bool as_json = false, as_tsv = false, all_points = false, with_center = false;
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  int search_count = 50;
  uint64_t seed = 1;

  auto* validate_cmd = app.add_subcommand("validate", "parse a square and check the Latin property");
  validate_cmd->add_option("input", input, "file, '-' for stdin, or '@name' for a built-in")
      ->required();
  validate_cmd->add_flag("--json", as_json, "emit a JSON report");

  auto* properties_cmd = app.add_subcommand("properties", "decide the loop-theoretic property record");
  properties_cmd->add_option("input", input)->required();
  properties_cmd->add_flag("--json", as_json);

  auto* pi_cmd = app.add_subcommand("pi", "base-point permutation at one base point");
  pi_cmd->add_option("input", input)->required();
  pi_cmd->add_option("--base", base_spec, "base point as row,col")->required();
  pi_cmd->add_flag("--json", as_json);

  auto* modules_cmd = app.add_subcommand("modules", "module table and Wedderburn signature");
  modules_cmd->add_option("input", input)->required();
  modules_cmd->add_option("--base", base_spec, "base point as row,col")->required();
  modules_cmd->add_flag("--json", as_json);

  auto* profile_cmd = app.add_subcommand("profile", "cycle structures over every base point");
  profile_cmd->add_option("input", input)->required();
  profile_cmd->add_flag("--json", as_json);
  profile_cmd->add_flag("--tsv", as_tsv, "one row per base point");
  profile_cmd->add_option("--jobs", jobs, "worker threads");

  auto* verify_cmd = app.add_subcommand("verify", "compare the formula prediction with the exact span-closure oracle");
  verify_cmd->add_option("input", input)->required();
  verify_cmd->add_option("--base", base_specs, "base point as row,col (repeatable)");
  verify_cmd->add_flag("--all", all_points, "every base point");
  verify_cmd->add_flag("--center", with_center, "also compare center dimension");
  verify_cmd->add_option("--jobs", jobs, "worker threads");
  verify_cmd->add_flag("--json", as_json);

  auto* certify_cmd = app.add_subcommand("certify", "right-Bol certificate");
  certify_cmd->add_option("input", input)->required();
  certify_cmd->add_option("--jobs", jobs, "worker threads");
  certify_cmd->add_flag("--json", as_json);

  auto* transform_cmd = app.add_subcommand("transform", "apply an isotopy or conjugacy");
  transform_cmd->add_option("input", input)->required();
  auto* iso_opt = transform_cmd->add_option("--isotopy", isotopy_file,
                                            "file with three permutation lines (rows, columns, entries)");
  auto* conj_opt = transform_cmd->add_option("--conjugacy", conjugacy_word,
                                             "word over {r,c,e}, e.g. cre or rc");
  iso_opt->excludes(conj_opt);
  transform_cmd->add_flag("--json", as_json);

  auto* corpus_cmd = app.add_subcommand("corpus", "list built-in tables or print one");
  corpus_cmd->add_option("name", corpus_name, "built-in table name");
  corpus_cmd->add_flag("--json", as_json);

  auto* ripsearch_cmd = app.add_subcommand(
      "ripsearch", "random search over loops with the right inverse property");
  ripsearch_cmd->add_option("--orders", orders_spec, "comma list, default 5,6,7,8");
  ripsearch_cmd->add_option("--count", search_count, "squares per order (default 50)");
  ripsearch_cmd->add_option("--seed", seed, "random seed (default 1)");
  ripsearch_cmd->add_flag("--json", as_json);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << app.version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (validate_cmd->parsed()) {
      auto loaded = load_square(input, in);
      if (as_json) {
        json doc = report_envelope("validate", loaded.square, loaded.source);
        doc["valid"] = true;
        out << doc.dump(2) << "\n";
      } else {
        out << "valid Latin square of order " << loaded.square.order() << "\n";
      }
      return kExitOk;
    }

    if (properties_cmd->parsed()) {
      auto loaded = load_square(input, in);
      auto record = loop_properties(loaded.square);
      if (as_json) {
        json doc = report_envelope("properties", loaded.square, loaded.source);
        out << doc.dump(2) << "\n";
      } else {
        print_properties(out, loaded.square, record);
      }
      return kExitOk;
    }

    if (pi_cmd->parsed()) {
      auto loaded = load_square(input, in);
      Point p = parse_base(loaded.square, base_spec);
      auto perm = pi_of(loaded.square, p);
      if (as_json) {
        json doc = report_envelope("pi", loaded.square, loaded.source);
        doc["base_points"] = json::array({base_point_record(loaded.square, p)});
        out << doc.dump(2) << "\n";
      } else {
        out << "base point: (" << p.row << "," << p.col << "," << p.entry << ")\n";
        out << "pi = " << perm.cycle_notation() << "\n";
        out << "cycle structure: " << cycle_structure(perm).to_string() << "\n";
      }
      return kExitOk;
    }

    if (modules_cmd->parsed()) {
      auto loaded = load_square(input, in);
      Point p = parse_base(loaded.square, base_spec);
      auto perm = pi_of(loaded.square, p);
      auto cycles = cycle_structure(perm);
      auto table = module_table(loaded.square.order(), cycles);
      auto signature =
          wedderburn_signature(table, table.cycle_count, static_cast<int>(table.roots.size()));
      if (as_json) {
        json doc = report_envelope("modules", loaded.square, loaded.source);
        doc["base_points"] = json::array({base_point_record(loaded.square, p)});
        out << doc.dump(2) << "\n";
      } else {
        out << "base point: (" << p.row << "," << p.col << "," << p.entry << ")\n";
        out << "pi = " << perm.cycle_notation() << "\n";
        out << "cycle structure: " << cycles.to_string() << "\n";
        print_module_table(out, table, signature);
      }
      return kExitOk;
    }

    if (profile_cmd->parsed()) {
      auto loaded = load_square(input, in);
      const int n = loaded.square.order();
      auto profile = fixed_point_profile(loaded.square, jobs);
      if (as_tsv) {
        out << "#row\tcol\tentry\tcycle_structure\tfixed_count\tN\tpredicted_dim\n";
        for (int r = 1; r <= n; ++r) {
          for (int c = 1; c <= n; ++c) {
            const auto& cycles =
                profile.structures[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)];
            out << r << "\t" << c << "\t" << loaded.square.product(r, c) << "\t"
                << cycles.to_string() << "\t"
                << profile.fixed_counts[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)];
            if (n >= 5) {
              auto table = module_table(n, cycles);
              auto signature = wedderburn_signature(table, table.cycle_count,
                                                    static_cast<int>(table.roots.size()));
              out << "\t" << signature.six_count << "\t" << signature.algebra_dimension();
            } else {
              out << "\t-\t-";
            }
            out << "\n";
          }
        }
      } else if (as_json) {
        json doc = report_envelope("profile", loaded.square, loaded.source);
        doc["profile"] = to_json(profile);
        json records = json::array();
        for (int r = 1; r <= n; ++r)
          for (int c = 1; c <= n; ++c)
            records.push_back(
                base_point_record(loaded.square, base_point(loaded.square, r, c)));
        doc["base_points"] = records;
        out << doc.dump(2) << "\n";
      } else {
        out << "fixed-point counts by base point (rows = r_p, columns = c_p):\n";
        for (const auto& row : profile.fixed_counts) {
          for (size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c];
          out << "\n";
        }
        out << "per-column cycle structures:\n";
        for (int c = 0; c < n; ++c) {
          out << "  column " << c + 1 << ": ";
          if (profile.column_constant[static_cast<size_t>(c)]) {
            out << profile.structures[0][static_cast<size_t>(c)].to_string() << "\n";
          } else {
            out << "varies by row: ";
            for (int r = 0; r < n; ++r)
              out << (r ? ", " : "")
                  << profile.structures[static_cast<size_t>(r)][static_cast<size_t>(c)]
                         .to_string();
            out << "\n";
          }
        }
        out << "row-constant: " << yes_no(profile.row_constant) << "\n";
      }
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      auto loaded = load_square(input, in);
      std::vector<Point> points;
      if (all_points) {
        points = orthogonal_array(loaded.square);
      } else if (!base_specs.empty()) {
        for (const auto& spec : base_specs) points.push_back(parse_base(loaded.square, spec));
      } else {
        points.push_back(base_point(loaded.square, 1, 1));
      }
      std::vector<WedderburnReport> reports(points.size());
      parallel_for(static_cast<int>(points.size()), jobs, [&](int i) {
        reports[static_cast<size_t>(i)] =
            verify_wedderburn(loaded.square, points[static_cast<size_t>(i)], with_center);
      });
      bool all_match = true;
      for (const auto& report : reports) {
        if (report.dimension_match && !*report.dimension_match) all_match = false;
        if (report.center_match && !*report.center_match) all_match = false;
      }
      if (as_json) {
        json doc = report_envelope("verify", loaded.square, loaded.source);
        json oracle = json::array();
        for (const auto& report : reports) oracle.push_back(to_json(report));
        doc["oracle"] = oracle;
        doc["all_match"] = all_match;
        out << doc.dump(2) << "\n";
      } else {
        for (const auto& report : reports) print_wedderburn(out, report);
      }
      return all_match ? kExitOk : kExitFalseVerdict;
    }

    if (certify_cmd->parsed()) {
      auto loaded = load_square(input, in);
      auto record = loop_properties(loaded.square);
      auto certificate = right_bol_certificate(loaded.square);
      auto moufang = moufang_check(loaded.square, record, jobs);
      if (as_json) {
        json doc = report_envelope("certify", loaded.square, loaded.source);
        json verdicts;
        verdicts["right_bol_certificate"] = to_json(certificate);
        if (moufang.applicable)
          verdicts["moufang_prediction"] = json{{"predicted_fixed", moufang.predicted_fixed},
                                                {"all_base_points_match", moufang.all_match}};
        else
          verdicts["moufang_prediction"] = nullptr;
        doc["verdicts"] = verdicts;
        out << doc.dump(2) << "\n";
      } else {
        if (certificate.certified)
          out << "certified-right-bol\n";
        else
          out << "hypothesis-failed (" << bol_failure_name(certificate.failure)
              << "): " << certificate.detail << "\n";
        if (moufang.applicable)
          out << "Moufang fixed-point prediction s-1 = " << moufang.predicted_fixed << ": "
              << (moufang.all_match ? "matches every base point" : "MISMATCH") << "\n";
      }
      return certificate.certified ? kExitOk : kExitFalseVerdict;
    }

    if (transform_cmd->parsed()) {
      auto loaded = load_square(input, in);
      LatinSquare result = loaded.square;
      if (*iso_opt) {
        std::ifstream file(isotopy_file);
        if (!file) throw Error(errc::ragged_grid, "cannot open '" + isotopy_file + "'");
        result = apply_isotopy(loaded.square, parse_isotopy(file, loaded.square.order()));
      } else if (*conj_opt) {
        result = apply_conjugacy(loaded.square, Conjugacy::parse(conjugacy_word));
      } else {
        err << "transform needs --isotopy or --conjugacy\n";
        return kExitInputError;
      }
      if (as_json) {
        json doc = report_envelope("transform", loaded.square, loaded.source);
        doc["output"] = json{{"order", result.order()}, {"text", result.to_text()}};
        out << doc.dump(2) << "\n";
      } else {
        out << result.to_text();
      }
      return kExitOk;
    }

    if (corpus_cmd->parsed()) {
      if (corpus_name.empty()) {
        if (as_json) {
          json doc;
          doc["tool"] = kToolName;
          doc["version"] = kToolVersion;
          doc["schema"] = kReportSchema;
          doc["command"] = "corpus";
          doc["seed"] = nullptr;
          json entries = json::array();
          for (const CorpusEntry& entry : corpus()) entries.push_back(to_json(entry));
          doc["entries"] = entries;
          out << doc.dump(2) << "\n";
        } else {
          for (const CorpusEntry& entry : corpus())
            out << entry.name << "\t" << entry.square().order() << "\t" << entry.description
                << "\n";
        }
      } else {
        const CorpusEntry& entry = corpus_entry(corpus_name);
        if (as_json) {
          json doc = report_envelope("corpus", entry.square(), entry.name);
          doc["entry"] = to_json(entry);
          out << doc.dump(2) << "\n";
        } else {
          out << entry.text;
        }
      }
      return kExitOk;
    }

    if (ripsearch_cmd->parsed()) {
      std::vector<int> orders;
      if (orders_spec.empty()) {
        orders = {5, 6, 7, 8};
      } else {
        std::istringstream spec(orders_spec);
        std::string token;
        while (std::getline(spec, token, ',')) {
          int order = std::stoi(token);
          if (order < 2) throw Error(errc::order_too_small, "orders must be >= 2");
          orders.push_back(order);
        }
      }
      auto result = rip_pi_search(orders, search_count, seed);
      if (as_json) {
        json doc;
        doc["tool"] = kToolName;
        doc["version"] = kToolVersion;
        doc["schema"] = kReportSchema;
        doc["command"] = "ripsearch";
        doc["seed"] = result.seed;
        doc["ripsearch"] = to_json(result);
        out << doc.dump(2) << "\n";
      } else {
        out << "seed: " << result.seed << "\n";
        out << "squares examined: " << result.squares_examined << "\n";
        out << "RIP loops tested: " << result.rip_loops_tested << "\n";
        out << "criterion agreement: "
            << (result.criterion_agreed_everywhere ? "held everywhere" : "FAILED") << "\n";
        out << "pi^2 != id among RIP loops: " << result.involution_violations.size()
            << " found\n";
        for (const auto& text : result.involution_violations) out << text << "\n";
      }
      return result.criterion_agreed_everywhere ? kExitOk : kExitFalseVerdict;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  err << "no subcommand\n";
  return kExitInputError;
}

}  // namespace lsq

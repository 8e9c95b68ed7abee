#include "tauenum/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tauenum/counting.hpp"
#include "tauenum/grid.hpp"

namespace tauenum::cli {

std::string summaries_csv(const std::vector<LevelSummary>& summaries) {
  std::string out = "level,tau_count,spine_count,class_count\n";
  for (const auto& s : summaries) {
    out += std::to_string(s.level) + "," + std::to_string(s.tau_count) + "," +
           std::to_string(s.spine_count) + "," +
           std::to_string(s.class_count) + "\n";
  }
  return out;
}

std::string summaries_json(const std::vector<LevelSummary>& summaries) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& s : summaries) {
    doc.push_back({{"level", s.level},
                   {"tau_count", s.tau_count},
                   {"spine_count", s.spine_count},
                   {"class_count", s.class_count}});
  }
  return doc.dump(2) + "\n";
}

namespace {

// Thrown for bad input discovered after flag parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename T>
std::string join(const std::vector<T>& items, const char* sep = ",") {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += sep;
    out += std::to_string(item);
  }
  return out;
}

TauFunction require_admissible(const std::string& text) {
  TauFunction tau;
  try {
    tau = parse_tau(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto report = check_admissible(tau);
  if (!report) {
    throw UsageError("tau " + text + " is not admissible (property " +
                     property_name(report.violated) + " at n=" +
                     std::to_string(report.index) + ")");
  }
  return tau;
}

int cmd_validate(const std::string& text, std::ostream& out) {
  std::vector<std::int64_t> candidate;
  try {
    candidate = parse_tau_text(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto report = check_admissible(candidate);
  if (report) {
    out << "ADMISSIBLE\n";
    return kExitOk;
  }
  out << "INADMISSIBLE property " << property_name(report.violated)
      << " at n=" << report.index << "\n";
  return kExitMismatch;
}

void cmd_extend(const std::string& text, std::ostream& out) {
  const auto tau = require_admissible(text);
  for (const auto& c : extensions_with_spine_factors(tau)) {
    out << "tau(" << tau.size() + 1 << ")=" << c.value << " index=" << c.index
        << " SF=" << c.spine_factor << "\n";
  }
}

void cmd_info(const std::string& text, std::ostream& out) {
  const auto tau = require_admissible(text);
  const auto analysis = analyze(tau);
  const auto record = count_record(tau);
  std::vector<std::size_t> ords;
  for (Level n = 1; n <= tau.size(); ++n) ords.push_back(tau.ord(n));
  const auto chain = orbit(tau, tau.size()).chain;

  out << "tau=" << format_tau(tau) << "\n"
      << "length=" << tau.size() << "\n"
      << "markers=" << join(markers(tau)) << "\n"
      << "marked_levels=" << join(marked_levels(tau)) << "\n"
      << "ord=" << join(ords) << "\n"
      << "orbit=" << join(chain, "->") << "\n"
      << "k=" << analysis.tail.k << "\n"
      << "symmetry=" << analysis.symmetry << "\n"
      << "Spines=" << record.spines << "\n"
      << "L=" << record.nonzero_marked_levels << "\n"
      << "T=" << record.max_period << "\n"
      << "TF=" << record.twist_factor.to_string() << "\n"
      << "Top=" << record.top << "\n";
}

int cmd_verify(const std::vector<LevelSummary>& computed,
               std::span<const ReferenceRow> table, std::ostream& out) {
  int status = kExitOk;
  for (const auto& s : computed) {
    const auto it = std::find_if(table.begin(), table.end(),
                                 [&](auto& r) { return r.level == s.level; });
    if (it == table.end()) throw UsageError("no reference row for level " +
                                            std::to_string(s.level));
    const char* bad = nullptr;
    Count expected = 0, got = 0;
    if (s.tau_count != it->tau_count) {
      bad = "tau_count", expected = it->tau_count, got = s.tau_count;
    } else if (s.spine_count != it->spine_count) {
      bad = "spine_count", expected = it->spine_count, got = s.spine_count;
    } else if (s.class_count != it->class_count) {
      bad = "class_count", expected = it->class_count, got = s.class_count;
    }
    if (bad == nullptr) {
      out << "level " << s.level << ": PASS\n";
      continue;
    }
    out << "level " << s.level << ": FAIL " << bad << " expected " << expected
        << " got " << got << "\n";
    if (status == kExitOk) {
      out << "first mismatch: level " << s.level << " " << bad << "\n";
    }
    status = kExitMismatch;
  }
  out << (status == kExitOk ? "PASS\n" : "FAIL\n");
  return status;
}

int cmd_oracle(std::size_t max_level, std::ostream& out) {
  using Sets = std::vector<std::set<std::vector<Level>>>;
  auto collect = [&](Sets& sets) {
    sets.assign(max_level + 1, {});
    return [&sets](const TauFunction& tau, Count, Count) {
      sets[tau.size()].emplace(tau.values().begin(), tau.values().end());
    };
  };
  Sets by_extension, by_filter;
  const auto a = enumerate(max_level, collect(by_extension));
  const auto b = brute_force_enumerate(max_level, collect(by_filter));
  for (std::size_t n = 1; n <= max_level; ++n) {
    const auto& x = a[n - 1];
    const auto& y = b[n - 1];
    const bool same = x == y && by_extension[n] == by_filter[n];
    out << "level " << n << ": " << x.tau_count << "/" << x.spine_count << "/"
        << x.class_count << " vs " << y.tau_count << "/" << y.spine_count
        << "/" << y.class_count << (same ? " AGREE" : " DISAGREE") << "\n";
  }
  const bool agree = a == b && by_extension == by_filter;
  out << (agree ? "AGREE\n" : "DISAGREE\n");
  return agree ? kExitOk : kExitMismatch;
}

void cmd_ratios(std::size_t max_level, std::size_t from, unsigned threads,
                std::ostream& out) {
  if (from < 2 || from > max_level) {
    throw UsageError("--from must lie in 2..max-level");
  }
  const auto rows = ratios(enumerate({max_level, threads, 8}));
  std::string head, values;
  for (const auto& r : rows) {
    if (r.level < from) continue;
    const std::string label =
        "Levels " + std::to_string(r.level) + " / " + std::to_string(r.level - 1);
    if (!head.empty()) head += " | ", values += " | ";
    const std::size_t width = std::max(label.size(), r.text.size());
    head += label + std::string(width - label.size(), ' ');
    values += r.text + std::string(width - r.text.size(), ' ');
  }
  out << head << "\n" << values << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::span<const ReferenceRow> table) {
  CLI::App app{"Exact enumeration of cubic tau-functions, spines and "
               "conjugacy classes",
               "tauenum"};
  app.require_subcommand(1);

  std::size_t max_level = 1;
  std::string format = "csv";
  unsigned threads = 0;
  auto* count = app.add_subcommand("count", "Per-level totals");
  count->add_option("--max-level", max_level, "Deepest level")
      ->required()
      ->check(CLI::PositiveNumber);
  count->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  count->add_option("--threads", threads, "Worker threads (0 = all cores)");

  std::size_t verify_level = 21;
  auto* verify = app.add_subcommand("verify", "Compare with the reference table");
  verify->add_option("--max-level", verify_level, "Deepest level (<= 21)")
      ->check(CLI::Range(1, 21));
  verify->add_option("--threads", threads, "Worker threads (0 = all cores)");

  std::string tau_text;
  auto* tau = app.add_subcommand("tau", "Inspect a single tau-function");
  tau->require_subcommand(1);
  std::vector<CLI::App*> tau_commands;
  for (const char* name : {"validate", "extend", "grid", "info"}) {
    auto* sub = tau->add_subcommand(name);
    sub->add_option("tau", tau_text, "Comma-separated values, e.g. 0,1,0,1,0")
        ->required();
    tau_commands.push_back(sub);
  }

  std::size_t ratio_level = 21;
  std::size_t ratio_from = 0;
  auto* ratio = app.add_subcommand("ratios", "Class-count growth ratios");
  ratio->add_option("--max-level", ratio_level, "Deepest level")
      ->check(CLI::Range(2, 40));
  ratio->add_option("--from", ratio_from,
                    "First level shown (default: last five ratios)");
  ratio->add_option("--threads", threads, "Worker threads (0 = all cores)");

  std::size_t tree_level = 1;
  std::string tree_out;
  auto* tree = app.add_subcommand("tree", "Export the tau prefix tree (DOT)");
  tree->add_option("--level", tree_level, "Deepest level")
      ->required()
      ->check(CLI::PositiveNumber);
  tree->add_option("--out", tree_out, "Output path (default: stdout)");

  std::size_t oracle_level = 8;
  auto* oracle = app.add_subcommand(
      "oracle", "Compare extension enumeration with brute-force filtering");
  oracle->add_option("--max-level", oracle_level, "Deepest level")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*count) {
      const auto rows = enumerate({max_level, threads, 8});
      out << (format == "json" ? summaries_json(rows) : summaries_csv(rows));
      return kExitOk;
    }
    if (*verify) {
      return cmd_verify(enumerate({verify_level, threads, 8}), table, out);
    }
    if (*tau) {
      if (*tau_commands[0]) return cmd_validate(tau_text, out);
      if (*tau_commands[1]) cmd_extend(tau_text, out);
      if (*tau_commands[2]) out << format_grid(tau_to_grid(require_admissible(tau_text)));
      if (*tau_commands[3]) cmd_info(tau_text, out);
      return kExitOk;
    }
    if (*ratio) {
      const std::size_t from =
          ratio_from != 0 ? ratio_from
                          : std::max<std::size_t>(2, ratio_level - 4);
      cmd_ratios(ratio_level, from, threads, out);
      return kExitOk;
    }
    if (*tree) {
      const auto doc = export_prefix_tree(tree_level);
      if (tree_out.empty()) {
        out << doc;
      } else {
        std::ofstream file(tree_out, std::ios::binary);
        if (!(file << doc)) {
          err << "error: cannot write " << tree_out << "\n";
          return kExitUsage;
        }
        out << "wrote " << tree_out << "\n";
      }
      return kExitOk;
    }
    if (*oracle) {
      if (oracle_level > kBruteForceCap) {
        throw UsageError("oracle refuses max level above " +
                         std::to_string(kBruteForceCap));
      }
      return cmd_oracle(oracle_level, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // Caps and range refusals from the library.
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tauenum::cli

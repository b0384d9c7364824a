// sgdim: code-based simple games and their dimension.
//
//   sgdim gen-code --kind hamming84 -o h.txt
//   sgdim gen-code --kind extended-hamming --m 4 --weight 8 -o c16.txt
//   sgdim gen-code --kind graham-sloane --n 8 --w 4 -o gs8.txt
//   sgdim build-game --code c8.txt --game c8.game --components c8.weighted
//   sgdim analyze --game c8.game -o c8.report
//   sgdim table --from 6 --to 20 [--import agrell12.txt ...]
//   sgdim verify --suite all
//
// Exit codes: 0 success, 1 verification failure, 2 usage or guard error.

#include <CLI11.hpp>

#include <algorithm>
#include <bit>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "sgdim/codes.hpp"
#include "sgdim/construct.hpp"
#include "sgdim/dimension.hpp"
#include "sgdim/io.hpp"
#include "sgdim/kernels.hpp"
#include "sgdim/verify.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

std::string invocation(int argc, char** argv) {
  std::string s = "sgdim";
  for (int i = 1; i < argc; ++i) s += std::string(" ") + argv[i];
  return s;
}

// Writes via `emit` to the file at `path`, or to stdout when path is empty.
template <typename Emit>
void write_output(const std::string& path, Emit emit) {
  if (path.empty()) {
    emit(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  emit(out);
}

std::ostream& summary_stream(const std::string& out_path) { return out_path.empty() ? std::cerr : std::cout; }

struct GenCodeArgs {
  std::string kind;
  int m = 3;
  std::optional<int> weight;
  int n = 8;
  std::optional<int> w;
  std::string out;
};

int run_gen_code(const GenCodeArgs& a, const std::string& header) {
  sgdim::Code code = [&] {
    if (a.kind == "hamming84") return sgdim::hamming84();
    if (a.kind == "extended-hamming") {
      auto c = sgdim::extend_parity(sgdim::hamming_code(a.m));
      return a.weight ? sgdim::constant_weight_subset(c, *a.weight) : c;
    }
    return sgdim::graham_sloane(a.n, a.w.value_or(a.n / 2));
  }();
  write_output(a.out, [&](std::ostream& os) { sgdim::io::write_code(os, code, header); });
  auto& log = summary_stream(a.out);
  log << "words " << code.size() << '\n';
  if (code.size() >= 2) log << "min distance " << sgdim::min_distance(code) << '\n';
  return kExitOk;
}

struct BuildGameArgs {
  std::string code;
  std::string game;
  std::string components;
};

int run_build_game(const BuildGameArgs& a, const std::string& header) {
  const auto raw = sgdim::io::read_code_file(a.code);
  const auto code = sgdim::without_zero_word(raw);
  if (code.size() != raw.size()) std::cerr << "note: dropped the zero word\n";
  sgdim::CodeGame cg = [&] {
    try {
      return sgdim::gamma_from_code(code);
    } catch (const sgdim::ConditionViolation& e) {
      std::cerr << "error: " << e.what() << '\n';
      throw;
    }
  }();
  write_output(a.game, [&](std::ostream& os) { sgdim::io::write_game(os, cg.game, header); });
  if (!a.components.empty()) {
    write_output(a.components, [&](std::ostream& os) { sgdim::io::write_weighted(os, cg.components, header); });
  }
  auto& log = summary_stream(a.game);
  log << "maximal losing " << sgdim::maximal_losing(cg.game).size() << '\n';
  log << "dimension " << sgdim::dimension_from_code_size(code) << '\n';
  return kExitOk;
}

struct AnalyzeArgs {
  std::string game;
  std::string out;
  sgdim::Budget budget;
};

int run_analyze(const AnalyzeArgs& a, const std::string& header) {
  const auto game = sgdim::io::read_game_file(a.game);
  const auto report = sgdim::exact_dimension(game, a.budget);
  write_output(a.out, [&](std::ostream& os) { sgdim::io::write_report(os, report, header); });
  if (!a.out.empty()) {
    std::cout << "lower " << report.lower << " upper " << report.upper << " exact "
              << (report.exact ? std::to_string(*report.exact) : std::string("none")) << '\n';
  }
  return kExitOk;
}

struct TableArgs {
  int from = 6;
  int to = 20;
  std::vector<std::string> imports;
  std::string out;
};

int run_table(const TableArgs& a, const std::string& header) {
  if (a.from < 6 || a.to > 20 || a.from > a.to) throw sgdim::InvalidInput("table range must satisfy 6 <= from <= to <= 20");
  std::map<int, std::size_t> imported;
  for (const auto& path : a.imports) {
    const auto code = sgdim::without_zero_word(sgdim::io::read_code_file(path));
    const int d = sgdim::dimension_from_code_size(code);
    auto& slot = imported[code.length()];
    slot = std::max(slot, static_cast<std::size_t>(d));
  }
  std::ostringstream body;
  body << "# n generic_bound toolkit imported sperner_minus_one\n";
  for (int n = a.from; n <= a.to; ++n) {
    const auto generic = sgdim::theorem_lower_bound(n);
    // Largest code this toolkit builds itself: Graham-Sloane, and the
    // extended Hamming weight-n/2 subcode when n is a power of two.
    std::size_t toolkit = sgdim::graham_sloane(n, n / 2).size();
    if (const auto p2 = sgdim::power_of_two_dimension(n)) {
      const int m = std::countr_zero(static_cast<unsigned>(n));
      const auto cw = sgdim::constant_weight_subset(sgdim::extend_parity(sgdim::hamming_code(m)), n / 2);
      if (mpz_class(static_cast<unsigned long>(cw.size())) != *p2) throw std::logic_error("extended Hamming count mismatch");
      toolkit = std::max(toolkit, cw.size());
    }
    const auto it = imported.find(n);
    body << n << ' ' << generic.get_str() << ' ' << toolkit << ' '
         << (it == imported.end() ? std::string("-") : std::to_string(it->second)) << ' '
         << mpz_class(sgdim::sperner_bounds(n).value - 1).get_str() << '\n';
  }
  write_output(a.out, [&](std::ostream& os) {
    std::istringstream h(header);
    std::string line;
    while (std::getline(h, line)) os << "# " << line << '\n';
    os << body.str();
  });
  return kExitOk;
}

int run_verify(const std::string& suite) {
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = sgdim::verify::suite_names();
  } else {
    suites = {suite};
  }
  int failures = 0;
  for (const auto& s : suites) {
    for (const auto& r : sgdim::verify::run_suite(s)) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << s << ": " << r.name;
      if (!r.detail.empty()) std::cout << " (" << r.detail << ')';
      std::cout << '\n';
      if (!r.passed) ++failures;
    }
  }
  std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed") << '\n';
  return failures == 0 ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simple games from error-correcting codes: construction and dimension"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads for parallel kernels (default: OpenMP setting)")
      ->check(CLI::PositiveNumber);
  app.set_version_flag("--version", kVersion);

  GenCodeArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-code", "Generate a code file");
  gen_cmd->add_option("--kind", gen.kind, "hamming84 | extended-hamming | graham-sloane")
      ->required()
      ->check(CLI::IsMember({"hamming84", "extended-hamming", "graham-sloane"}));
  gen_cmd->add_option("--m", gen.m, "Hamming parameter, length 2^m")->check(CLI::Range(2, 4));
  gen_cmd->add_option("--weight", gen.weight, "Keep only words of this weight (extended-hamming)");
  gen_cmd->add_option("--n", gen.n, "Length (graham-sloane)")->check(CLI::Range(1, 20));
  gen_cmd->add_option("--w", gen.w, "Weight (graham-sloane, default n/2)")->check(CLI::Range(1, 20));
  gen_cmd->add_option("-o,--out", gen.out, "Output file (default stdout)");

  BuildGameArgs build;
  auto* build_cmd = app.add_subcommand("build-game", "Build the hitting-set game of a code");
  build_cmd->add_option("--code", build.code, "Code file")->required()->check(CLI::ExistingFile);
  build_cmd->add_option("--game", build.game, "Game output file (default stdout)");
  build_cmd->add_option("--components", build.components, "Weighted components output file");

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Compute dimension bounds or the exact dimension");
  analyze_cmd->add_option("--game", analyze.game, "Game file")->required()->check(CLI::ExistingFile);
  analyze_cmd->add_option("-o,--out", analyze.out, "Report output file (default stdout)");
  analyze_cmd->add_option("--max-losers", analyze.budget.max_losers, "Exact search only up to this many maximal losers")
      ->check(CLI::Range(1, 64));
  analyze_cmd->add_option("--max-oracle-calls", analyze.budget.max_oracle_calls, "LP oracle call budget");
  analyze_cmd->add_option("--max-nodes", analyze.budget.max_search_nodes, "Search node budget");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Dimension table for a range of player counts");
  table_cmd->add_option("--from", table.from, "First n")->check(CLI::Range(6, 20));
  table_cmd->add_option("--to", table.to, "Last n")->check(CLI::Range(6, 20));
  table_cmd->add_option("--import", table.imports, "Externally tabulated code files")->check(CLI::ExistingFile);
  table_cmd->add_option("-o,--out", table.out, "Output file (default stdout)");

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", suite, "tz | elkind | codes | bounds | all")
      ->check(CLI::IsMember({"tz", "elkind", "codes", "bounds", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (threads > 0) sgdim::kernels::set_thread_count(threads);
  const std::string header = std::string("sgdim ") + kVersion + "\ninvocation: " + invocation(argc, argv);
  try {
    if (*gen_cmd) return run_gen_code(gen, header);
    if (*build_cmd) return run_build_game(build, header);
    if (*analyze_cmd) return run_analyze(analyze, header);
    if (*table_cmd) return run_table(table, header);
    if (*verify_cmd) return run_verify(suite);
  } catch (const sgdim::ConditionViolation&) {
    return kExitFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

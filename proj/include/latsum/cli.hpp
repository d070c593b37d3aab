#pragma once

// Command-line front end. dispatch() takes the arguments after the program
// name and writes results to `out`, diagnostics and progress to `err`.
//
// Exit status: 0 success, 1 a verification failed, 2 usage or input error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "latsum/closedform.hpp"
#include "latsum/crosscheck.hpp"
#include "latsum/dp.hpp"
#include "latsum/oracle.hpp"
#include "latsum/recguess.hpp"
#include "latsum/serialize.hpp"

namespace latsum::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

/// Options shared by every subcommand; unused fields keep their defaults.
struct RunConfig {
  std::string command;
  std::string check;  // verify target
  Index p = 0;
  Index pmax = 0;
  std::optional<std::string> x;  // fixed x0 as text; symbolic when empty
  bool symbolic = false;
  std::string quantity;
  std::string weights = "bcmv";
  std::string form = "reduced";
  std::string format = "jsonl";
  std::string output;
  Index enum_limit = OracleLimits{}.max_p;
  std::size_t guard = GuessOptions{}.guard;
  std::size_t max_order = 2;
  std::size_t max_degree = 2;
  std::string input, candidate, seed;
  Index upto = 0;
  bool continue_on_error = false;
  bool quiet = false;
  bool no_timing = false;
};

namespace detail {

inline Form parse_form(const std::string& s) {
  if (s == "reduced") return Form::reduced;
  if (s == "raw") return Form::raw;
  throw UsageError("--form must be 'raw' or 'reduced', got '" + s + "'");
}

/// Validates --x against the DP range: an integer x0 in 1..pmax-1 is a pole
/// of f2(x0, p) = ... / (x - x0) for some p <= pmax.
inline std::optional<BigRat> fixed_x(const RunConfig& cfg, Index pmax) {
  if (!cfg.x) return std::nullopt;
  BigRat x0 = BigRat::parse(*cfg.x);
  if (x0.is_integer() && x0 >= BigRat(1) && x0 < BigRat(pmax))
    throw UsageError("x = " + x0.str() + " is a pole: f2(X, Y) has the factor 1/(x - X), and X = " + x0.str() +
                     " occurs for p up to " + std::to_string(pmax) +
                     "; use x = " + std::to_string(pmax) + " (the conjecture case), --symbolic, or a non-integer x");
  return x0;
}

inline void require_weights(const RunConfig& cfg) {
  if (cfg.weights != "bcmv") throw UsageError("unknown weight system '" + cfg.weights + "' (available: bcmv)");
}

inline std::vector<Quantity> quantities(const RunConfig& cfg) {
  if (cfg.quantity.empty()) return {kAllQuantities.begin(), kAllQuantities.end()};
  return {parse_quantity(cfg.quantity)};
}

inline std::vector<BigRat> read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return read_sequence(in);
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline int run_oracle(const RunConfig& cfg, std::ostream& out) {
  require_weights(cfg);
  const Quantity q = parse_quantity(cfg.quantity);
  const Form form = parse_form(cfg.form);
  const OracleLimits limits{cfg.enum_limit};
  if (auto x0 = fixed_x(cfg, cfg.p)) {
    FixedX mode{*x0};
    out << sum_record(mode, cfg.p, q, brute_quantity(make_bcmv(mode, form), cfg.p, q, limits)).dump() << '\n';
  } else {
    SymbolicX mode;
    out << sum_record(mode, cfg.p, q, brute_quantity(make_bcmv(mode, form), cfg.p, q, limits)).dump() << '\n';
  }
  return kOk;
}

inline int run_dp(const RunConfig& cfg, std::ostream& out) {
  require_weights(cfg);
  const auto which = quantities(cfg);
  const Form form = parse_form(cfg.form);
  const bool need_values = std::any_of(which.begin(), which.end(), has_value_factor);
  if (cfg.format != "jsonl" && cfg.format != "text") throw UsageError("--format must be 'jsonl' or 'text'");
  if (auto x0 = fixed_x(cfg, cfg.pmax)) {
    auto table = compute_table(make_bcmv(FixedX{*x0}, form), cfg.pmax, {.with_values = need_values});
    if (cfg.format == "text") {
      if (which.size() != 1) throw UsageError("--format text needs a single --quantity");
      for (Index p = 1; p <= cfg.pmax; ++p) out << table.value(which[0], p).str() << '\n';
    } else {
      write_table_jsonl(out, table, which);
    }
  } else {
    if (cfg.format == "text") throw UsageError("--format text needs fixed --x (sequence files hold rationals)");
    auto table = compute_table(make_bcmv(SymbolicX{}, form), cfg.pmax, {.with_values = need_values});
    write_table_jsonl(out, table, which);
  }
  return kOk;
}

template <ScalarMode M>
int report_crosscheck(const CrosscheckReport& r, const M& mode, std::ostream& out) {
  json j{{"name", "crosscheck"}, {"pmax", r.pmax}, {"mode", std::string(M::name)}};
  if constexpr (std::is_same_v<M, FixedX>) j["x"] = mode.x0.str();
  j["status"] = r.passed() ? "pass" : "fail";
  j["compared"] = r.compared;
  json mism = json::array();
  for (const auto& m : r.mismatches)
    mism.push_back(json{{"p", m.p},
                        {"quantity", std::string(to_string(m.quantity))},
                        {"route", m.route},
                        {"expected", to_json(m.expected)},
                        {"got", to_json(m.got)}});
  j["mismatches"] = std::move(mism);
  out << j.dump() << '\n';
  return r.passed() ? kOk : kFailed;
}

inline int run_crosscheck(const RunConfig& cfg, std::ostream& out) {
  require_weights(cfg);
  const Form form = parse_form(cfg.form);
  const OracleLimits limits{cfg.enum_limit};
  if (auto x0 = fixed_x(cfg, cfg.pmax)) {
    FixedX mode{*x0};
    return report_crosscheck(crosscheck(make_bcmv(mode, form), cfg.pmax, true, limits), mode, out);
  }
  SymbolicX mode;
  return report_crosscheck(crosscheck(make_bcmv(mode, form), cfg.pmax, true, limits), mode, out);
}

inline int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  ScanOptions opt;
  opt.continue_on_error = cfg.continue_on_error;
  if (!cfg.quiet) {
    opt.progress = [&err, &cfg](Index p, Index pmax) {
      if (p % 50 == 0 || p == pmax) err << cfg.check << ": p = " << p << " / " << pmax << '\n';
    };
  }
  ConjectureReport r;
  if (cfg.check == "conj3") {
    r = verify_conj3(cfg.pmax, opt);
  } else if (cfg.check == "conj4") {
    r = verify_conj4(cfg.pmax, opt);
  } else if (cfg.check == "closed-b") {
    r = verify_closed_b(cfg.pmax, parse_form(cfg.form), opt);
  } else if (cfg.check == "closed-a") {
    r = verify_closed_a(cfg.pmax, opt);
  } else if (cfg.check == "rec5") {
    r = check_recurrence5(cfg.pmax, closed_B, opt);
  } else {
    throw UsageError("unknown check '" + cfg.check + "' (conj3, conj4, closed-b, closed-a, rec5)");
  }
  if (cfg.no_timing) r.elapsed = std::chrono::milliseconds(0);
  out << to_json(r).dump() << '\n';
  return r.passed() ? kOk : kFailed;
}

inline int run_guess(const RunConfig& cfg, std::ostream& out) {
  const auto seq = read_sequence_file(cfg.input);
  GuessOptions opt{cfg.max_order, cfg.max_degree, cfg.guard};
  auto cand = guess(seq, opt);
  if (!cand) {
    out << json{{"found", false}, {"terms", seq.size()}, {"max_order", cfg.max_order},
                {"max_degree", cfg.max_degree}}
               .dump()
        << '\n';
    return kFailed;
  }
  json j = to_json(*cand);
  j["terms"] = seq.size();
  out << j.dump() << '\n';
  return kOk;
}

inline int run_extend(const RunConfig& cfg, std::ostream& out) {
  const auto cand = candidate_from_json(read_json_file(cfg.candidate));
  const auto seed = read_sequence_file(cfg.seed);
  write_sequence(out, extend(cand, seed, cfg.upto));
  return kOk;
}

}  // namespace detail

inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact weighted sums over the Boolean lattice with Markovian weights", "latsum"};
  app.require_subcommand(1);

  auto add_mode = [&cfg](CLI::App* sub) {
    auto* x = sub->add_option("--x", cfg.x, "Fixed rational value for x, e.g. 7/3");
    auto* s = sub->add_flag("--symbolic", cfg.symbolic, "Keep x symbolic (default)");
    x->excludes(s);
  };
  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--weights", cfg.weights, "Weight system name")->capture_default_str();
    sub->add_option("--form", cfg.form, "BCMV weight form: reduced or raw")->capture_default_str();
    sub->add_option("-o,--output", cfg.output, "Write results to this file instead of stdout");
  };

  auto* oracle = app.add_subcommand("oracle", "Brute-force sum by enumerating every chain");
  oracle->add_option("--p", cfg.p, "Index p")->required()->check(CLI::PositiveNumber);
  oracle->add_option("--quantity", cfg.quantity, "A, B, C or D")->required();
  oracle->add_option("--limit", cfg.enum_limit, "Enumeration cap on p")->capture_default_str();
  add_mode(oracle);
  add_common(oracle);

  auto* dp = app.add_subcommand("dp", "Quadratic-time table of b, d, a, c for p = 1..pmax");
  dp->add_option("--pmax", cfg.pmax, "Largest p")->required()->check(CLI::PositiveNumber);
  dp->add_option("--quantity", cfg.quantity, "A, B, C or D (all four when omitted)");
  dp->add_option("--format", cfg.format, "jsonl, or text (one rational per line; fixed x only)")
      ->capture_default_str();
  add_mode(dp);
  add_common(dp);

  auto* cross = app.add_subcommand("crosscheck", "Compare DP with brute enumeration for A, B, C, D");
  cross->add_option("--pmax", cfg.pmax, "Largest p")->required()->check(CLI::PositiveNumber);
  cross->add_option("--limit", cfg.enum_limit, "Enumeration cap on p")->capture_default_str();
  add_mode(cross);
  add_common(cross);

  auto* verify_cmd = app.add_subcommand("verify", "Check a closed form or conjecture over a range of p");
  verify_cmd->add_option("check", cfg.check, "conj3, conj4, closed-b, closed-a or rec5")->required();
  verify_cmd->add_option("--pmax", cfg.pmax, "Largest p")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--continue-on-error", cfg.continue_on_error, "Scan past the first failure");
  verify_cmd->add_flag("-q,--quiet", cfg.quiet, "No progress lines on stderr");
  verify_cmd->add_flag("--no-timing", cfg.no_timing, "Report elapsed_ms as 0 (byte-stable output)");
  verify_cmd->add_option("--form", cfg.form, "Weight form for closed-b")->capture_default_str();
  verify_cmd->add_option("-o,--output", cfg.output, "Write the report to this file");

  auto* guess_cmd = app.add_subcommand("guess", "Guess a P-recursive recurrence for a rational sequence");
  guess_cmd->add_option("--input", cfg.input, "Sequence file, one rational per line")->required();
  guess_cmd->add_option("--max-order", cfg.max_order, "Largest order tried")->required();
  guess_cmd->add_option("--max-degree", cfg.max_degree, "Largest coefficient degree tried")->required();
  guess_cmd->add_option("--guard", cfg.guard, "Equations beyond the unknown count")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  guess_cmd->add_option("-o,--output", cfg.output, "Write the candidate to this file");

  auto* extend_cmd = app.add_subcommand("extend", "Run a recurrence candidate forward from seed terms");
  extend_cmd->add_option("--candidate", cfg.candidate, "Candidate JSON file")->required();
  extend_cmd->add_option("--seed", cfg.seed, "Seed sequence file (order terms)")->required();
  extend_cmd->add_option("--upto", cfg.upto, "Number of terms to produce")->required();
  extend_cmd->add_option("-o,--output", cfg.output, "Write the sequence to this file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      err << "error: cannot write '" << cfg.output << "'\n";
      return kUsage;
    }
    sink = &file;
  }

  try {
    if (*oracle) return detail::run_oracle(cfg, *sink);
    if (*dp) return detail::run_dp(cfg, *sink);
    if (*cross) return detail::run_crosscheck(cfg, *sink);
    if (*verify_cmd) return detail::run_verify(cfg, *sink, err);
    if (*guess_cmd) return detail::run_guess(cfg, *sink);
    if (*extend_cmd) return detail::run_extend(cfg, *sink);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace latsum::cli

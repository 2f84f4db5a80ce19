// trunsym: exact computations in truncated symmetric polynomial rings.
//
// Subcommands:
//   generators  prescribed generator set for I(n,d), generation certificate,
//               minimal generator count
//   socle       socle basis of R_n/I(n,d) per degree, complete-intersection
//               verdict
//   series      exterior / quotient / flag / w Poincare-Hilbert series
//   verify      batch theorem verification over (n,d) grids
//
// Exit codes: 0 all checks agree, 2 mathematical disagreement,
// 3 hypothesis violation, 4 usage error.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "trunsym/trunsym.hpp"

using json = nlohmann::ordered_json;
using namespace trunsym;

namespace {

constexpr int kExitAgree = 0;
constexpr int kExitDisagree = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitUsage = 4;

struct Options {
  std::string n_arg = "1";
  std::string d_arg = "0";
  long characteristic = 0;
  std::string format = "text";
  std::string grading = "algebraic";
  std::string kind = "exterior";
  std::string theorem_case;
  std::optional<int> max_degree;
  bool timings = false;
};

// "a" or "a..b" -> inclusive integer range
std::vector<int> parse_range(const std::string& text, const std::string& name) {
  auto fail = [&] {
    throw CLI::ValidationError(name, "expected an integer or a range a..b, got '" + text + "'");
  };
  std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) return {std::stoi(text)};
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    if (hi < lo) fail();
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  } catch (const std::invalid_argument&) {
    fail();
  } catch (const std::out_of_range&) {
    fail();
  }
  return {};
}

int single_value(const std::string& text, const std::string& name) {
  auto r = parse_range(text, name);
  if (r.size() != 1)
    throw CLI::ValidationError(name, "this command takes a single value, not a range");
  return r[0];
}

std::size_t thread_budget(std::size_t points) {
  std::size_t hw = std::max<unsigned>(1, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TRUNSYM_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) hw = static_cast<std::size_t>(v);
    } catch (...) {
      // ignore malformed values, keep the hardware default
    }
  }
  return std::min(hw, std::max<std::size_t>(1, points));
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

json series_json(const SeriesPoly& s) {
  json terms = json::array();
  for (const auto& [k, c] : s.coeffs()) terms.push_back({{"exp", k}, {"coeff", c}});
  return terms;
}

json params_json(const char* command, int n, int d, long p) {
  return {{"command", command}, {"n", n}, {"d", d}, {"char", p}};
}

void emit(const json& report, const Options& opt, double ms,
          const std::vector<std::string>& text_lines) {
  if (opt.format == "json") {
    json out = report;
    if (opt.timings) out["timings"] = {{"total_ms", ms}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& line : text_lines) std::cout << line << "\n";
    if (opt.timings) std::cout << "elapsed: " << ms << " ms\n";
  }
}

int run_generators(const Options& opt) {
  int n = single_value(opt.n_arg, "--n");
  int d = single_value(opt.d_arg, "--d");
  auto t0 = std::chrono::steady_clock::now();
  FieldSpec F(opt.characteristic);
  TruncatedIdeal t(n, d, F);

  auto gens = prescribed_generators(t);  // throws HypothesisViolation if none exists
  auto cert = certify_generation(gens, t, opt.max_degree);
  auto mg = min_generators(t);

  json report = {{"params", params_json("generators", n, d, opt.characteristic)}};
  json glist = json::array();
  std::vector<std::string> lines;
  std::string gtext;
  for (const auto& g : gens) {
    std::string s = g.to_string();
    glist.push_back(s);
    gtext += (gtext.empty() ? "" : ", ") + s;
  }
  report["generators"] = glist;
  json table = json::array();
  for (const auto& row : cert.table)
    table.push_back({{"degree", row.degree},
                     {"span_dim", row.span_dim},
                     {"ideal_dim", row.ideal_dim}});
  report["tables"] = {{"generation", table}};
  report["verdict"] = {{"generation", cert.verdict()},
                       {"verified_through_degree", cert.verified_through_degree},
                       {"min_generators", mg.total}};

  lines.push_back("I(" + std::to_string(n) + "," + std::to_string(d) + ") over " +
                  (opt.characteristic == 0 ? std::string("Q")
                                           : "F_" + std::to_string(opt.characteristic)));
  lines.push_back("generators: " + gtext);
  lines.push_back("verdict: " + cert.verdict() + " (checked through degree " +
                  std::to_string(cert.verified_through_degree) + ")");
  lines.push_back("min_generators: " + std::to_string(mg.total));
  emit(report, opt, elapsed_ms(t0), lines);
  return cert.generates ? kExitAgree : kExitDisagree;
}

int run_socle(const Options& opt) {
  int n = single_value(opt.n_arg, "--n");
  int d = single_value(opt.d_arg, "--d");
  auto t0 = std::chrono::steady_clock::now();
  FieldSpec F(opt.characteristic);
  TruncatedIdeal t(n, d, F);

  auto rep = socle(t);
  json report = {{"params", params_json("socle", n, d, opt.characteristic)}};
  json table = json::array();
  std::vector<std::string> lines;
  lines.push_back("socle of R_" + std::to_string(n) + "/I(" + std::to_string(n) + "," +
                  std::to_string(d) + "), char " + std::to_string(opt.characteristic));
  for (const auto& [k, elems] : rep.by_degree) {
    json degree_elems = json::array();
    for (const auto& f : elems) {
      degree_elems.push_back(f.to_string());
      lines.push_back("  degree " + std::to_string(k) + ": " + f.to_string());
    }
    table.push_back({{"degree", k}, {"elements", degree_elems}});
  }
  report["tables"] = {{"socle", table}};
  bool ci = rep.total == 1;
  report["verdict"] = {{"dimension", rep.total}, {"complete_intersection", ci}};
  lines.push_back("socle dimension: " + std::to_string(rep.total));
  lines.push_back(std::string("complete intersection: ") + (ci ? "yes" : "no"));
  emit(report, opt, elapsed_ms(t0), lines);
  return kExitAgree;
}

int run_series(const Options& opt) {
  int n = single_value(opt.n_arg, "--n");
  int d = single_value(opt.d_arg, "--d");
  auto t0 = std::chrono::steady_clock::now();

  SeriesPoly s;
  if (opt.kind == "exterior") {
    s = exterior_series(n, d);
  } else if (opt.kind == "quotient") {
    s = quotient_series(n, d);
    // the quotient series is algebraic; complex/real cohomological degrees double
    if (opt.grading != "algebraic") s = s.scaled_exponents(2);
  } else if (opt.kind == "flag") {
    s = flag_series(n);
  } else if (opt.kind == "w") {
    s = w_series(n, d);  // throws CollapseRangeViolation when d < n-1
  } else {
    throw CLI::ValidationError("--kind", "expected exterior|quotient|flag|w");
  }

  json report = {{"params", params_json("series", n, d, opt.characteristic)}};
  report["params"]["kind"] = opt.kind;
  report["params"]["grading"] = opt.grading;
  report["tables"] = {{"series", series_json(s)}};
  report["verdict"] = {{"display", s.to_string()}};
  emit(report, opt, elapsed_ms(t0), {s.to_string()});
  return kExitAgree;
}

struct GridPoint {
  int n, d;
  long p;
  std::string status;  // "agree" | "disagree" | "hypothesis_violation"
  std::string detail;
};

int run_verify(const Options& opt) {
  TheoremCase which = parse_theorem_case(opt.theorem_case);
  auto ns = parse_range(opt.n_arg, "--n");
  auto ds = parse_range(opt.d_arg, "--d");
  auto t0 = std::chrono::steady_clock::now();

  std::vector<GridPoint> points;
  for (int n : ns)
    for (int d : ds) points.push_back({n, d, opt.characteristic, "", ""});

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < points.size(); i = next.fetch_add(1)) {
      GridPoint& pt = points[i];
      try {
        FieldSpec F(pt.p);
        auto res = verify_theorem(which, pt.n, pt.d, F);
        pt.status = res.agree ? "agree" : "disagree";
        pt.detail = res.detail;
      } catch (const HypothesisViolation& e) {
        pt.status = "hypothesis_violation";
        pt.detail = e.what();
      }
    }
  };
  std::size_t nthreads = thread_budget(points.size());
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::size_t agree = 0, disagree = 0, skipped = 0;
  for (const auto& pt : points) {
    if (pt.status == "agree") ++agree;
    else if (pt.status == "disagree") ++disagree;
    else ++skipped;
  }

  json report = {{"params",
                  {{"command", "verify"},
                   {"case", opt.theorem_case},
                   {"n", opt.n_arg},
                   {"d", opt.d_arg},
                   {"char", opt.characteristic}}}};
  json table = json::array();
  std::vector<std::string> lines;
  for (const auto& pt : points) {
    table.push_back({{"n", pt.n},
                     {"d", pt.d},
                     {"char", pt.p},
                     {"status", pt.status},
                     {"detail", pt.detail}});
    lines.push_back(opt.theorem_case + " n=" + std::to_string(pt.n) + " d=" +
                    std::to_string(pt.d) + " char=" + std::to_string(pt.p) + ": " + pt.status +
                    " (" + pt.detail + ")");
  }
  report["tables"] = {{"grid", table}};
  std::string verdict = disagree   ? "disagreements found"
                        : agree    ? "all agree"
                                   : "no point satisfies the hypotheses";
  report["verdict"] = {{"summary", verdict},
                       {"agree", agree},
                       {"disagree", disagree},
                       {"hypothesis_violations", skipped}};
  lines.push_back(verdict + " (" + std::to_string(agree) + " agree, " +
                  std::to_string(disagree) + " disagree, " + std::to_string(skipped) +
                  " hypothesis violations)");
  emit(report, opt, elapsed_ms(t0), lines);
  if (disagree) return kExitDisagree;
  if (agree == 0) return kExitHypothesis;
  return kExitAgree;
}

void add_common(CLI::App* cmd, Options& opt, bool with_char = true) {
  cmd->add_option("--n", opt.n_arg, "number of variables (verify accepts a..b)");
  cmd->add_option("--d", opt.d_arg, "truncation parameter (verify accepts a..b)");
  if (with_char)
    cmd->add_option("--char", opt.characteristic, "field characteristic: 0 or a prime");
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--timings", opt.timings, "include wall-clock timings in the report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in truncated symmetric polynomial rings"};
  app.require_subcommand(1);
  Options opt;

  auto* generators = app.add_subcommand(
      "generators", "prescribed generator set, generation certificate, minimal count");
  add_common(generators, opt);
  generators->add_option("--max-degree", opt.max_degree,
                         "check generation only through this degree (yields a partial verdict)");

  auto* socle_cmd = app.add_subcommand("socle", "socle basis and complete-intersection verdict");
  add_common(socle_cmd, opt);

  auto* series_cmd = app.add_subcommand("series", "Poincare / Hilbert series");
  add_common(series_cmd, opt, /*with_char=*/false);
  series_cmd->add_option("--kind", opt.kind, "exterior|quotient|flag|w");
  series_cmd->add_option("--grading", opt.grading, "algebraic|complex|real")
      ->check(CLI::IsMember({"algebraic", "complex", "real"}));

  auto* verify_cmd = app.add_subcommand("verify", "batch theorem verification over a grid");
  add_common(verify_cmd, opt);
  verify_cmd->add_option("--case", opt.theorem_case, "thm1a|thm1b|thm2a|thm2b|cor|rem|serre")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*generators) return run_generators(opt);
    if (*socle_cmd) return run_socle(opt);
    if (*series_cmd) return run_series(opt);
    if (*verify_cmd) return run_verify(opt);
  } catch (const HypothesisViolation& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const CollapseRangeViolation& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

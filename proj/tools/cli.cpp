#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "braidinv/error.hpp"
#include "braidinv/families.hpp"
#include "braidinv/fiedler.hpp"
#include "braidinv/json.hpp"
#include "braidinv/morton.hpp"
#include "braidinv/permcalc.hpp"
#include "braidinv/qinv.hpp"

namespace braidinv::cli {

namespace {

using nlohmann::json;

std::optional<int> truncation_override() {
  const char* env = std::getenv("BRAID_TRUNC_ORDER");
  if (env == nullptr || *env == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const int v = std::stoi(env, &used);
    if (used != std::string(env).size() || v < 0) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("BRAID_TRUNC_ORDER must be a non-negative integer, got '") + env + "'");
  }
}

void require_orders(const std::vector<int>& orders) {
  for (int k : orders)
    if (k < 0) throw ParseError("orders must be non-negative, got " + std::to_string(k));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Both words in the same B_n: the larger of the parsed indices, or `n`.
std::pair<BraidWord, BraidWord> common_group(const BraidWord& x, const BraidWord& y, std::optional<int> n) {
  const int target = n.value_or(std::max(x.strands(), y.strands()));
  if (x.strands() > target || y.strands() > target)
    throw ParseError("--n " + std::to_string(target) + " is smaller than the braid index of X or Y");
  return {x.embedded(target), y.embedded(target)};
}

// ----- invariants ----------------------------------------------------------

struct InvariantsOptions {
  std::string braid;
  bool fiedler = false;
  bool trace = false;
  std::vector<int> orders;
  bool json = false;
};

int cmd_invariants(const InvariantsOptions& o, std::ostream& out) {
  require_orders(o.orders);
  const BraidWord w = parse_braid(o.braid);
  const auto order_cap = truncation_override();
  const bool singular = w.has_singular();
  const Permutation perm = permutation_of(w, true);
  const bool knot = perm.is_full_cycle();
  const bool want_fiedler = o.fiedler || (!o.trace && o.orders.empty() && knot && !singular);

  std::optional<LaurentPoly> fiedler;
  if (want_fiedler) {
    if (!knot)
      throw DomainError("closure is not a knot: permutation " + cycles(perm).to_string() + " has cycle type [" +
                        [&] {
                          std::string s;
                          for (int len : perm.cycle_type()) s += (s.empty() ? "" : ",") + std::to_string(len);
                          return s;
                        }() +
                        "], a " + std::to_string(perm.cycle_count()) + "-component link");
    fiedler = singular ? fiedler_singular(w) : fiedler_poly(w);
  }
  std::optional<BiLaurent> trace;
  if (o.trace || !o.orders.empty()) trace = trace_f(singular ? singular_phi(w) : phi(w));
  std::vector<std::pair<int, RationalPoly>> qs;
  if (!o.orders.empty()) {
    const int top = *std::max_element(o.orders.begin(), o.orders.end());
    const TruncatedSeries series = exp_substitute(*trace, std::max(top, order_cap.value_or(default_truncation_order(top))));
    for (int k : o.orders) qs.emplace_back(k, series.coefficient(k));
  }

  if (o.json) {
    json j{{"schema", json_schema_version}, {"braid", w},          {"text", w.to_string()},
           {"n", w.strands()},              {"permutation", perm}, {"is_knot", knot}};
    if (!singular) j["writhe"] = writhe(w);
    if (fiedler) j["fiedler"] = *fiedler;
    if (trace && o.trace) j["tl_trace"] = *trace;
    if (!qs.empty()) {
      json q = json::object();
      for (const auto& [k, p] : qs) q[std::to_string(k)] = p;
      j["q"] = std::move(q);
    }
    out << j.dump() << '\n';
    return exit_ok;
  }
  out << "braid: " << w.to_string() << '\n';
  out << "strands: " << w.strands() << '\n';
  if (!singular) out << "writhe: " << writhe(w) << '\n';
  out << "permutation: " << perm.to_string() << '\n';
  out << "knot: " << yes_no(knot) << '\n';
  if (fiedler) out << "fiedler: " << fiedler->to_string() << '\n';
  if (trace && o.trace) out << "trace: " << trace->to_string() << '\n';
  for (const auto& [k, p] : qs) out << "q" << k << ": " << p.to_string() << '\n';
  return exit_ok;
}

// ----- exchange ------------------------------------------------------------

struct ExchangeOptions {
  std::string x;
  std::string y;
  std::optional<int> n;
  std::vector<int> orders{1, 2};
  bool json = false;
};

int cmd_exchange(const ExchangeOptions& o, std::ostream& out) {
  require_orders(o.orders);
  const auto [x, y] = common_group(parse_braid(o.x), parse_braid(o.y), o.n);
  const ExchangePair pair = exchange_pair(x, y);
  const TrivialityReport flags = triviality_filters(x, y);
  const Permutation perm = permutation_of(pair.beta1);
  if (!perm.is_full_cycle())
    throw DomainError("beta1 = " + pair.beta1.to_string() + " does not close to a knot: permutation " +
                      cycles(perm).to_string());

  const ExchangeFiedler fd = exchange_fiedler_difference(pair);
  const ExchangeLengths lengths = exchange_lengths(pair);
  const auto order_cap = truncation_override();
  std::vector<std::pair<int, RationalPoly>> qdiffs;
  for (int k : o.orders) qdiffs.emplace_back(k, q_difference(pair, k, order_cap).direct);

  const int n = pair.base_strands();
  const bool fiedler_zero = fd.direct.is_zero();
  const bool balanced = 2 * lengths.l == n + 2;
  const auto q_separates = std::find_if(qdiffs.begin(), qdiffs.end(), [](const auto& q) { return !q.second.is_zero(); });
  std::string verdict;
  if (!fiedler_zero)
    verdict = "distinguished: not conjugate";
  else if (q_separates != qdiffs.end())
    verdict = "distinguished by Q_" + std::to_string(q_separates->first) + ": not conjugate";
  else
    verdict = "not distinguished";

  if (o.json) {
    json q = json::object();
    for (const auto& [k, p] : qdiffs) q[std::to_string(k)] = p;
    json j{{"schema", json_schema_version},
           {"n", n},
           {"X", x},
           {"Y", y},
           {"beta1", pair.beta1},
           {"beta2", pair.beta2},
           {"permutation", perm},
           {"triviality", {{"x_avoids_top", flags.x_avoids_top},
                           {"y_avoids_top", flags.y_avoids_top},
                           {"even_top_blocks", flags.even_top_blocks},
                           {"reasons", flags.reasons()}}},
           {"fiedler_diff", fd.direct},
           {"fiedler_formula_agrees", fd.agree()},
           {"m1", fd.m1},
           {"m2", fd.m2},
           {"l", lengths.l},
           {"length_pattern", lengths.length_pattern},
           {"swapped", lengths.swapped},
           {"lengths_between", lengths.with_swap_between},
           {"lengths_after", lengths.with_swap_after},
           {"q_diff", std::move(q)},
           {"balanced", balanced},
           {"verdict", verdict}};
    out << j.dump() << '\n';
    return exit_ok;
  }
  out << "X: " << x.to_string() << '\n';
  out << "Y: " << y.to_string() << '\n';
  out << "beta1: " << pair.beta1.to_string() << '\n';
  out << "beta2: " << pair.beta2.to_string() << '\n';
  out << "permutation: " << perm.to_string() << '\n';
  for (const auto& reason : flags.reasons()) out << "note: " << reason << '\n';
  out << "m1: " << fd.m1 << '\n';
  out << "m2: " << fd.m2 << '\n';
  out << "l: " << lengths.l << (lengths.swapped ? " (swapped)" : "") << '\n';
  out << "fiedler diff: " << fd.direct.to_string() << '\n';
  for (const auto& [k, p] : qdiffs) out << "q" << k << " diff: " << p.to_string() << '\n';
  out << "2l = n+2: " << yes_no(balanced) << '\n';
  out << "verdict: " << verdict << '\n';
  return exit_ok;
}

// ----- family ----------------------------------------------------------------

struct FamilyOptions {
  std::string name;
  int k = 0;
  int n = 4;
  int i = 2;
  bool json = false;
};

int cmd_family(const FamilyOptions& o, std::ostream& out) {
  ExchangePair pair;
  if (o.name == "ex1")
    pair = example1_pair(o.k);
  else if (o.name == "ex2")
    pair = example2_pair();
  else if (o.name == "ex3")
    pair = example3_pair(o.n, o.i);
  else
    throw ParseError("unknown family '" + o.name + "' (expected ex1, ex2 or ex3)");

  if (o.json) {
    json j{{"schema", json_schema_version}, {"family", o.name}, {"X", pair.x},         {"Y", pair.y},
           {"beta1", pair.beta1},           {"beta2", pair.beta2}, {"n", pair.base_strands()}};
    out << j.dump() << '\n';
    return exit_ok;
  }
  out << "X: " << pair.x.to_string() << '\n';
  out << "Y: " << pair.y.to_string() << '\n';
  out << "beta1: " << pair.beta1.to_string() << '\n';
  out << "beta2: " << pair.beta2.to_string() << '\n';
  return exit_ok;
}

// ----- morton-replay -----------------------------------------------------

struct ReplayOptions {
  std::vector<std::size_t> skip;
  bool json = false;
};

int cmd_morton_replay(const ReplayOptions& o, std::ostream& out, std::ostream& err) {
  std::vector<ReplayStep> script = morton_script();
  std::vector<ReplayStep> used;
  for (std::size_t k = 0; k < script.size(); ++k)
    if (std::find(o.skip.begin(), o.skip.end(), k + 1) == o.skip.end()) used.push_back(script[k]);
  const ReplayResult r = replay(morton_unknot(), used);

  if (o.json) {
    out << json(r).dump() << '\n';
  } else {
    out << "start: " << morton_unknot().to_string() << '\n';
    for (const auto& e : r.log) {
      out << "step " << e.step << " [" << e.label << "]";
      for (const auto& m : e.moves) out << ' ' << m;
      out << " -> " << e.word.to_string() << '\n';
    }
    if (r.ok()) out << "reached " << r.final_word.to_string() << " after " << r.log.size() << " steps\n";
  }
  if (!r.ok()) {
    err << "error: " << r.error << '\n';
    return exit_move;
  }
  return exit_ok;
}

// ----- scan ------------------------------------------------------------------

struct ScanOptions {
  int n = 4;
  int length = 6;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string include_file;
  bool json = false;
};

std::vector<std::pair<BraidWord, BraidWord>> read_include_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open include file '" + path + "'");
  std::vector<std::pair<BraidWord, BraidWord>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto bar = line.find('|');
    if (bar == std::string::npos)
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected 'X | Y'");
    try {
      out.push_back(common_group(parse_braid(line.substr(0, bar)), parse_braid(line.substr(bar + 1)), std::nullopt));
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

int cmd_scan(const ScanOptions& o, std::ostream& out) {
  ScanConfig cfg;
  cfg.n = o.n;
  cfg.length = o.length;
  cfg.samples = o.samples;
  cfg.seed = o.seed;
  cfg.threads = o.threads;
  if (!o.include_file.empty()) cfg.injected = read_include_file(o.include_file);
  if (cfg.n < 2) throw ParseError("--n must be at least 2");
  if (cfg.length < 1) throw ParseError("--length must be at least 1");

  const ScanReport report = conjecture_scan(cfg);
  if (o.json) {
    for (const auto& r : report.records) out << scan_record_line(r, cfg).dump() << '\n';
    out << scan_summary_line(report).dump() << '\n';
    return exit_ok;
  }
  for (const auto& r : report.records) {
    out << '#' << r.index << ' ' << r.source;
    if (!r.accepted) {
      out << " rejected after " << r.attempts << " attempts\n";
      continue;
    }
    out << " X=[" << r.x.to_string() << "] Y=[" << r.y.to_string() << "] fiedler_zero=" << yes_no(r.fiedler_diff_zero)
        << " q1_zero=" << yes_no(r.q1_diff_zero) << " l=" << r.l << (r.agreement() ? "" : " DISAGREE") << '\n';
  }
  const auto& s = report.summary;
  out << "summary: records=" << s.records << " accepted=" << s.accepted << " agreements=" << s.agreements
      << " disagreements=" << s.disagreements << " seed=" << cfg.seed << '\n';
  return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exchange-move invariants of braided knots"};
  app.name("braid");
  app.require_subcommand(1);
  bool json_flag = false;
  app.add_flag("--json", json_flag, "Machine-readable JSON output");

  InvariantsOptions inv;
  auto* c_inv = app.add_subcommand("invariants", "Invariants of one braid");
  c_inv->add_option("braid", inv.braid, "Braid word, e.g. \"n=4; 1 -2 3\"")->required();
  c_inv->add_flag("--fiedler", inv.fiedler, "Fiedler polynomial (requires a knot)");
  c_inv->add_flag("--trace", inv.trace, "Solid-torus trace of the Temperley-Lieb image");
  c_inv->add_option("--q", inv.orders, "Orders k of Q_k, comma separated")->delimiter(',');
  c_inv->add_flag("--json", inv.json, "JSON output");

  ExchangeOptions ex;
  auto* c_ex = app.add_subcommand("exchange", "Compare the two braids of an exchange move");
  c_ex->add_option("X", ex.x, "Braid X")->required();
  c_ex->add_option("Y", ex.y, "Braid Y")->required();
  c_ex->add_option("--n", ex.n, "Braid index of X and Y");
  c_ex->add_option("--q", ex.orders, "Orders k of the Q_k differences")->delimiter(',');
  c_ex->add_flag("--json", ex.json, "JSON output");

  FamilyOptions fam;
  auto* c_fam = app.add_subcommand("family", "Print a member of an example family");
  c_fam->add_option("name", fam.name, "ex1, ex2 or ex3")->required();
  c_fam->add_option("--k", fam.k, "ex1 parameter (k >= 0)");
  c_fam->add_option("--n", fam.n, "ex3 braid index of X and Y (even)");
  c_fam->add_option("--i", fam.i, "ex3 parameter (1 <= i <= n-1)");
  c_fam->add_flag("--json", fam.json, "JSON output");

  ReplayOptions rep;
  auto* c_rep = app.add_subcommand("morton-replay", "Unknot Morton's braid move by move");
  c_rep->add_option("--skip-step", rep.skip, "Drop the given table steps (1-based) from the script");
  c_rep->add_flag("--json", rep.json, "JSON output");

  ScanOptions sc;
  auto* c_scan = app.add_subcommand("scan", "Compare Fiedler and Q_1 differences on random exchange pairs");
  c_scan->add_option("--n", sc.n, "Braid index of X and Y");
  c_scan->add_option("--length", sc.length, "Letters in each of X and Y");
  c_scan->add_option("--samples", sc.samples, "Number of random pairs");
  c_scan->add_option("--seed", sc.seed, "Run seed");
  c_scan->add_option("--threads", sc.threads, "Worker threads (0: all cores)");
  c_scan->add_option("--include-file", sc.include_file, "Extra pairs, one 'X | Y' per line");
  c_scan->add_flag("--json", sc.json, "JSON lines output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_parse;
  }

  try {
    if (*c_inv) {
      inv.json = inv.json || json_flag;
      return cmd_invariants(inv, out);
    }
    if (*c_ex) {
      ex.json = ex.json || json_flag;
      return cmd_exchange(ex, out);
    }
    if (*c_fam) {
      fam.json = fam.json || json_flag;
      return cmd_family(fam, out);
    }
    if (*c_rep) {
      rep.json = rep.json || json_flag;
      return cmd_morton_replay(rep, out, err);
    }
    if (*c_scan) {
      sc.json = sc.json || json_flag;
      return cmd_scan(sc, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_parse;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return exit_parse;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return exit_domain;
  } catch (const MoveError& e) {
    err << "illegal move: " << e.what() << '\n';
    return exit_move;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_failure;
}

}  // namespace braidinv::cli

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include <json.hpp>

#include "syt/counting.hpp"
#include "syt/excited.hpp"
#include "syt/schur.hpp"
#include "syt/skew.hpp"
#include "syt/sorting.hpp"
#include "syt/verify.hpp"
#include "syt/walks.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

struct GlobalOpts {
  bool json_out = false;
  bool csv_out = false;
  bool timing = false;
  std::uint64_t seed = 1;
  int threads = 1;
  int n_max = -1;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
};

void emit(const GlobalOpts& g, json record) {
  if (g.timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - g.t0)
                  .count();
    record["timing_ms"] = ms;
  }
  std::cout << record.dump(2) << "\n";
}

syt::Cell parse_cell(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    syt::fail(syt::errc::malformed_syntax, "cell must be r,c: " + text);
  return syt::Cell{std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

json cell_json(syt::Cell c) { return json::array({c.row, c.col}); }

int cmd_count(const GlobalOpts& g, const std::string& shape_text, const std::string& method) {
  syt::SkewShape s = syt::parse_shape(shape_text);
  const bool straight = s.inner().empty();
  json results;
  std::map<std::string, syt::Int> values;

  auto run = [&](const std::string& name) {
    auto t0 = std::chrono::steady_clock::now();
    syt::Int v;
    if (name == "hlf") v = syt::count_hlf(s.outer());
    else if (name == "frobenius") v = syt::count_frobenius(s.outer(), s.rows());
    else if (name == "det") v = syt::count_determinant(s);
    else if (name == "paths") v = syt::count_paths(s);
    else if (name == "nhlf") v = syt::count_nhlf(s);
    else if (name == "flagged") v = syt::count_nhlf_flagged(s);
    else syt::fail(syt::errc::bad_params, "unknown method: " + name);
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    values[name] = v;
    results[name] = v.get_str();
    if (g.timing) results[name + "_us"] = us;
  };

  if (method == "all") {
    if (straight) {
      run("hlf");
      run("frobenius");
    }
    run("det");
    run("paths");
    run("nhlf");
    run("flagged");
  } else {
    if ((method == "hlf" || method == "frobenius") && !straight)
      syt::fail(syt::errc::bad_params, method + " requires a straight shape (empty inner)");
    run(method);
  }

  bool agree = true;
  for (const auto& [k, v] : values)
    if (v != values.begin()->second) agree = false;
  if (method == "all") results["agree"] = agree;

  emit(g, json{{"command", "count"},
               {"inputs", {{"shape", s.str()}, {"method", method}, {"d", s.rows()}}},
               {"results", results}});
  return agree ? kExitOk : kExitFail;
}

int cmd_delta(const GlobalOpts& g, const std::string& shape_text,
              const std::vector<std::string>& pair, long phi_a) {
  syt::SkewShape s = syt::parse_shape(shape_text);
  json results;
  if (!pair.empty()) {
    syt::Cell x = parse_cell(pair[0]), y = parse_cell(pair[1]);
    results["prob_before"] = syt::rat_str(syt::prob_before(s, x, y));
    results["delta_pair"] = syt::rat_str(syt::delta_pair(s, x, y));
  } else if (phi_a >= 0) {
    syt::Rat phi = syt::max_visit_prob(s, phi_a);
    results["phi"] = syt::rat_str(phi);
    results["two_phi_bound"] = syt::rat_str(2 * phi);
  } else {
    syt::SortingReport rep = syt::delta_poset(s);
    results["delta"] = syt::rat_str(rep.delta);
    results["pair_count"] = rep.pair_count;
    json w = json::array();
    for (auto& [x, y] : rep.witnesses) w.push_back(json::array({cell_json(x), cell_json(y)}));
    results["witnesses"] = w;
  }
  emit(g, json{{"command", "delta"}, {"inputs", {{"shape", s.str()}}}, {"results", results}});
  return kExitOk;
}

int cmd_pairprob(const GlobalOpts& g, const std::string& shape_text,
                 const std::vector<std::string>& pair) {
  syt::SkewShape s = syt::parse_shape(shape_text);
  syt::Cell x = parse_cell(pair[0]), y = parse_cell(pair[1]);
  syt::Rat p = syt::prob_before(s, x, y);
  emit(g, json{{"command", "pairprob"},
               {"inputs", {{"shape", s.str()}, {"x", cell_json(x)}, {"y", cell_json(y)}}},
               {"results",
                {{"prob_before", syt::rat_str(p)},
                 {"prob_before_approx", mpq_get_d(p.get_mpq_t())},
                 {"delta_pair", syt::rat_str(syt::delta_pair(s, x, y))}}}});
  return kExitOk;
}

int cmd_bound(const GlobalOpts& g, const std::string& shape_text, const std::string& blocks) {
  syt::SkewShape s = syt::parse_shape(shape_text);
  const int d = s.rows();
  syt::IntervalDecomposition b = syt::IntervalDecomposition::singletons(d);
  if (!blocks.empty()) {
    std::vector<int> ends;
    std::size_t pos = 0;
    while (pos < blocks.size()) {
      auto comma = blocks.find(',', pos);
      ends.push_back(std::stoi(blocks.substr(pos, comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    b = syt::IntervalDecomposition(std::move(ends), d);
  }

  syt::Rat f(syt::count_paths(s));
  syt::Rat fb = syt::hook_bound(s);
  syt::IntervalBound ib = syt::interval_upper_bound(s, b);
  const auto shifted = syt::shifted_parts(s.outer(), d);
  json results{{"count", syt::rat_str(f)},
               {"hook_bound_F", syt::rat_str(fb)},
               {"gap_bound_G", syt::rat_str(syt::gap_bound(s))},
               {"balance_phi", syt::rat_str(syt::balance_phi(s))},
               {"count_over_F", syt::rat_str(f / fb)},
               {"schur_ratio_bound", syt::rat_str(syt::schur_ratio_bound(s))},
               {"interval_bound", syt::rat_str(ib.bound)},
               {"interval_constant", syt::rat_str(ib.constant)},
               {"block_balance_K", syt::rat_str(syt::block_balance(s, b))},
               {"cross_block_max_N", syt::rat_str(syt::cross_block_max(shifted, b))}};
  emit(g, json{{"command", "bound"},
               {"inputs", {{"shape", s.str()}, {"d", d}}},
               {"results", results}});
  return kExitOk;
}

int cmd_sample(const GlobalOpts& g, const std::string& shape_text, long trials) {
  syt::SkewShape s = syt::parse_shape(shape_text);
  std::map<std::string, long> freq;
  for (long t = 0; t < trials; ++t) {
    syt::TableauPath p =
        syt::sample_tableau(s, g.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(t));
    std::string key;
    for (std::size_t k = 1; k < p.states.size(); ++k) {
      // row that grew at step k
      for (int i = 1; i <= s.outer().length(); ++i)
        if (p.states[k].part(i) != p.states[k - 1].part(i)) key += std::to_string(i);
    }
    freq[key]++;
  }
  json table;
  for (auto& [k, v] : freq) table[k] = v;
  emit(g, json{{"command", "sample"},
               {"inputs", {{"shape", s.str()}, {"trials", trials}, {"seed", g.seed}}},
               {"results", {{"distinct", static_cast<long>(freq.size())}, {"frequency", table}}}});
  return kExitOk;
}

int cmd_mc(const GlobalOpts& g, const std::string& shape_text, const std::vector<std::string>& pair,
           bool walk_success, long trials) {
  syt::SkewShape s = syt::parse_shape(shape_text);
  json results;
  if (walk_success) {
    syt::WalkSuccessEstimate e = syt::estimate_walk_success(s, trials, g.seed);
    syt::Rat exact = syt::walk_success_exact(s);
    results = {{"estimate_approx", e.estimate_approx},
               {"hits", e.hits},
               {"trials", e.trials},
               {"hoeffding_halfwidth_approx", e.hoeffding_halfwidth_approx},
               {"lemma_floor_approx", e.lemma_floor_approx},
               {"exact", syt::rat_str(exact)},
               {"exact_approx", mpq_get_d(exact.get_mpq_t())}};
  } else {
    syt::Cell x = parse_cell(pair[0]), y = parse_cell(pair[1]);
    syt::McPairEstimate e = syt::mc_prob_before(s, x, y, trials, g.seed);
    results = {{"estimate_approx", e.estimate_approx},
               {"hits", e.hits},
               {"trials", e.trials},
               {"hoeffding_halfwidth_approx", e.hoeffding_halfwidth_approx}};
  }
  emit(g, json{{"command", "mc"},
               {"inputs", {{"shape", s.str()}, {"trials", trials}, {"seed", g.seed}}},
               {"results", results}});
  return kExitOk;
}

int cmd_classify(const GlobalOpts& g, const std::string& lambda_text, const std::string& gamma_text,
                 const std::string& mu_text, int d, const std::string& eps_text) {
  syt::Partition lambda = syt::parse_shape(lambda_text).outer();
  syt::Partition gamma = syt::parse_shape(gamma_text).outer();
  syt::Partition mu = mu_text.empty() ? syt::Partition{} : syt::parse_shape(mu_text).outer();
  if (d <= 0) d = std::max(1, lambda.length());
  syt::Rat eps = syt::parse_rat(eps_text);
  syt::TripletClassification c = syt::classify_triplet(lambda, gamma, mu, d, eps);
  json y = json::array();
  for (const syt::Rat& num : c.y.numerators) y.push_back(syt::rat_str(num));
  emit(g, json{{"command", "classify"},
               {"inputs",
                {{"lambda", lambda.str()},
                 {"gamma", gamma.str()},
                 {"mu", mu.str()},
                 {"d", d},
                 {"eps", syt::rat_str(eps)}}},
               {"results",
                {{"pair_admissible", c.pair_admissible},
                 {"separated", c.separated},
                 {"progressive", c.progressive},
                 {"admissible", c.admissible},
                 {"p", syt::rat_str(c.p)},
                 {"y_numerators_over_sqrt_n", y},
                 {"n", c.y.n},
                 {"solid_ratio_inner", syt::rat_str(c.solid_ratios[0])},
                 {"solid_ratio_outer", syt::rat_str(c.solid_ratios[1])},
                 {"solid_ratio_full", syt::rat_str(c.solid_ratios[2])}}}});
  return kExitOk;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite, int d_max, const std::string& eps,
               long trials) {
  syt::SuiteParams params;
  params.n_max = g.n_max;
  params.d_max = d_max;
  params.seed = g.seed;
  params.threads = g.threads;
  params.trials = trials;
  if (!eps.empty()) params.eps = syt::parse_rat(eps);
  syt::SuiteReport rep = syt::run_suite(suite, params);

  if (g.csv_out) {
    std::cout << "suite,verdict,instances,violations\n";
    std::cout << rep.suite << "," << syt::verdict_str(rep.verdict) << "," << rep.instances << ","
              << rep.violations.size() << "\n";
    for (auto& [shape, detail] : rep.violations)
      std::cout << "violation,\"" << shape << "\",\"" << detail << "\"\n";
    for (auto& [name, value] : rep.extrema) std::cout << "stat," << name << ",\"" << value << "\"\n";
  } else {
    json violations = json::array();
    for (auto& [shape, detail] : rep.violations)
      violations.push_back({{"shape", shape}, {"detail", detail}});
    json extrema;
    for (auto& [name, value] : rep.extrema) extrema[name] = value;
    emit(g, json{{"command", "verify"},
                 {"inputs", {{"suite", rep.suite}}},
                 {"results",
                  {{"verdict", syt::verdict_str(rep.verdict)},
                   {"instances", rep.instances},
                   {"violations", violations},
                   {"extrema", extrema},
                   {"notes", rep.notes}}}});
  }
  return rep.verdict == syt::Verdict::fail ? kExitFail : kExitOk;
}

struct Range {
  long lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    long v = std::stol(text);
    return {v, v};
  }
  return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
}

int cmd_scan(const GlobalOpts& g, const std::string& family, const std::string& range_text,
             int rows, const std::string& alpha_text) {
  (void)g;
  Range r = parse_range(range_text);
  std::cout << "n,delta_num,delta_den,sqrt_n_delta_approx\n";
  for (long m = r.lo; m <= r.hi; ++m) {
    syt::SkewShape s;
    if (family == "two_chain") {
      if (m < 2) continue;
      s = syt::SkewShape(syt::Partition({m, 1}), syt::Partition({1}));
    } else if (family == "n2") {
      if (m < 3) continue;
      s = syt::SkewShape(syt::Partition({m, 2}), syt::Partition({2}));
    } else if (family == "catalan") {
      s = syt::SkewShape(syt::Partition({m, m}), syt::Partition{});
    } else if (family == "rect") {
      s = syt::SkewShape(syt::Partition(std::vector<long>(static_cast<std::size_t>(rows), m)),
                         syt::Partition{});
    } else if (family == "tvk") {
      std::vector<long> parts;
      std::size_t pos = 0;
      while (pos < alpha_text.size()) {
        auto comma = alpha_text.find(',', pos);
        syt::Rat a = syt::parse_rat(alpha_text.substr(pos, comma - pos));
        syt::Rat v = a * m;
        parts.push_back(mpz_get_si(syt::Int(v.get_num() / v.get_den()).get_mpz_t()));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      s = syt::SkewShape(syt::Partition(std::move(parts)), syt::Partition{});
    } else {
      syt::fail(syt::errc::bad_params, "unknown family: " + family);
    }
    if (s.size() < 2) continue;
    syt::Rat delta = syt::delta_poset(s).delta;
    double sqrt_n_delta =
        std::sqrt(static_cast<double>(s.size())) * mpq_get_d(delta.get_mpq_t());
    std::cout << s.size() << "," << delta.get_num().get_str() << ","
              << delta.get_den().get_str() << "," << fmt_double(sqrt_n_delta) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counting, sorting probabilities, and verification suites for skew tableaux"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_flag("--json", g.json_out, "machine-readable JSON output (default)");
  app.add_flag("--csv", g.csv_out, "CSV output where supported");
  app.add_flag("--timing", g.timing, "include wall-clock timing fields");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--threads", g.threads, "worker threads for suite corpora");
  app.add_option("--n-max", g.n_max, "corpus size bound for verify");

  std::string shape, method = "paths", blocks, suite, family, range_text = "2..20";
  std::string lambda_text, gamma_text, mu_text, eps_text = "1/4", alpha_text = "1/2,1/3,1/6";
  std::vector<std::string> pair;
  long trials = 10000, phi_a = -1;
  int d_opt = 0, d_max = -1, rows = 2;

  auto* count = app.add_subcommand("count", "exact tableau counts");
  count->add_option("shape", shape)->required();
  count->add_option("--method", method)
      ->check(CLI::IsMember({"hlf", "frobenius", "det", "paths", "nhlf", "flagged", "all"}));

  auto* delta = app.add_subcommand("delta", "sorting probability of the poset or one pair");
  delta->add_option("shape", shape)->required();
  delta->add_option("--pair", pair)->expected(2);
  delta->add_option("--phi", phi_a);

  auto* pairprob = app.add_subcommand("pairprob", "P[x before y] for one pair");
  pairprob->add_option("shape", shape)->required();
  pairprob->add_option("--pair", pair)->expected(2)->required();

  auto* bound = app.add_subcommand("bound", "hook/Schur/interval bounds and balance function");
  bound->add_option("shape", shape)->required();
  bound->add_option("--blocks", blocks, "comma list of block right-endpoints");

  auto* sample = app.add_subcommand("sample", "uniform tableau sampling frequency table");
  sample->add_option("shape", shape)->required();
  sample->add_option("--trials", trials);

  auto* mc = app.add_subcommand("mc", "Monte Carlo estimates with Hoeffding bands");
  mc->add_option("shape", shape)->required();
  mc->add_option("--pair", pair)->expected(2);
  bool walk_success = false;
  mc->add_flag("--walk-success", walk_success, "estimate the biased-walk success probability");
  mc->add_option("--trials", trials);

  auto* classify = app.add_subcommand("classify", "admissibility and solidity of a triplet");
  classify->add_option("lambda", lambda_text)->required();
  classify->add_option("gamma", gamma_text)->required();
  classify->add_option("mu", mu_text)->required();
  classify->add_option("--d", d_opt);
  classify->add_option("--eps", eps_text);

  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("suite", suite)->required();
  verify->add_option("--d-max", d_max);
  verify->add_option("--eps", eps_text);
  verify->add_option("--trials", trials)->default_val(-1);

  auto* scan = app.add_subcommand("scan", "delta along a shape family, CSV");
  scan->add_option("family", family)->required()
      ->check(CLI::IsMember({"two_chain", "n2", "catalan", "rect", "tvk"}));
  scan->add_option("--m", range_text);
  scan->add_option("--rows", rows);
  scan->add_option("--alpha", alpha_text);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (count->parsed()) return cmd_count(g, shape, method);
    if (delta->parsed()) return cmd_delta(g, shape, pair, phi_a);
    if (pairprob->parsed()) return cmd_pairprob(g, shape, pair);
    if (bound->parsed()) return cmd_bound(g, shape, blocks);
    if (sample->parsed()) return cmd_sample(g, shape, trials);
    if (mc->parsed()) return cmd_mc(g, shape, pair, walk_success, trials);
    if (classify->parsed()) return cmd_classify(g, lambda_text, gamma_text, mu_text, d_opt, eps_text);
    if (verify->parsed()) return cmd_verify(g, suite, d_max, eps_text, trials);
    if (scan->parsed()) return cmd_scan(g, family, range_text, rows, alpha_text);
  } catch (const syt::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

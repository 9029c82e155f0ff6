#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "syt/verify.hpp"

using namespace syt;

namespace {

std::string serialize(const SuiteReport& r) {
  std::ostringstream os;
  os << r.suite << "|" << r.instances << "|" << verdict_str(r.verdict);
  for (auto& [a, b] : r.violations) os << "|" << a << ":" << b;
  for (auto& [a, b] : r.extrema) os << "|" << a << "=" << b;
  for (auto& n : r.notes) os << "|" << n;
  return os.str();
}

}  // namespace

TEST_SUITE_BEGIN("verify");

TEST_CASE("registry") {
  auto names = registered_suites();
  for (const char* expected :
       {"one_third", "q_monotone", "sandwich", "nhlf_agreement", "warmup", "two_chain",
        "n2_family", "thick_scaling", "tvk_scaling", "smooth_ratio", "conjecture_ratio",
        "schur_conjecture", "inequality_suite", "excited_zeta"})
    CHECK(std::count(names.begin(), names.end(), expected) == 1);
  CHECK_THROWS_AS(run_suite("no_such_suite"), error);
}

TEST_CASE("corpus generators cover every partition") {
  CHECK(partitions_of(10).size() == 42);
  for (int n = 1; n <= 12; ++n)
    CHECK(Int(static_cast<long>(partitions_of(n).size())) == oracle::partition_count(n));
  // reverse-lexicographic order per size
  auto ps = partitions_of(6);
  CHECK(ps.front() == Partition({6}));
  CHECK(ps.back() == Partition({1, 1, 1, 1, 1, 1}));
  for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1].parts() > ps[i].parts());
  // subdiagram scan matches the direct interval scan
  for (const Partition& p : partitions_of(7))
    CHECK(subdiagrams(p).size() ==
          oracle::interval_partitions(SkewShape(p, Partition{})).size());
}

TEST_CASE("suites pass at reduced bounds") {
  SuiteParams quick;
  quick.n_max = 8;
  CHECK(run_suite("one_third", quick).verdict == Verdict::pass);
  CHECK(run_suite("q_monotone", quick).verdict == Verdict::pass);
  CHECK(run_suite("sandwich", quick).verdict == Verdict::pass);
  CHECK(run_suite("nhlf_agreement", quick).verdict == Verdict::pass);
  CHECK(run_suite("warmup", quick).verdict == Verdict::pass);
  CHECK(run_suite("excited_zeta", quick).verdict == Verdict::pass);

  SuiteParams chains;
  chains.n_max = 40;
  SuiteReport r = run_suite("two_chain", chains);
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.instances == 39);

  SuiteParams scans;
  scans.n_max = 30;
  CHECK(run_suite("thick_scaling", scans).verdict == Verdict::pass);
  CHECK(run_suite("tvk_scaling", scans).verdict == Verdict::pass);
  CHECK(run_suite("smooth_ratio", scans).verdict == Verdict::pass);

  CHECK(run_suite("conjecture_ratio", quick).verdict == Verdict::report_only);
  SuiteParams sc;
  sc.trials = 50;
  CHECK(run_suite("schur_conjecture", sc).verdict == Verdict::report_only);

  SuiteParams ineq;
  ineq.n_max = 7;
  ineq.trials = 500;
  CHECK(run_suite("inequality_suite", ineq).verdict == Verdict::pass);
}

TEST_CASE("reports are deterministic") {
  SuiteParams params;
  params.n_max = 7;
  params.trials = 300;
  params.seed = 42;
  for (const char* name : {"one_third", "smooth_ratio", "inequality_suite", "schur_conjecture"})
    CHECK(serialize(run_suite(name, params)) == serialize(run_suite(name, params)));
  // thread count must not change the report
  SuiteParams threaded = params;
  threaded.threads = 4;
  CHECK(serialize(run_suite("one_third", params)) == serialize(run_suite("one_third", threaded)));
  CHECK(serialize(run_suite("sandwich", params)) == serialize(run_suite("sandwich", threaded)));
}

TEST_SUITE_END();

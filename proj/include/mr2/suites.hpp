#ifndef MR2_SUITES_HPP
#define MR2_SUITES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "mr2/oracle.hpp"
#include "mr2/schemes.hpp"

namespace mr2 {

/// Deterministic suite configuration; reports are byte-identical for a fixed
/// config. The prime must be prime and larger than every degree and contact
/// bound exercised by the selected suite.
struct SuiteConfig {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 20240001;
  int trials = 5;           // random trials per maximal-rank certificate
  int samples = 100;        // random realizations per length/contact pair
  int smoke_cases = 50;     // random collections in the smoke suite
  int oracle_samples = 50;  // sampled instances per randomized oracle family
};

/// One suite case: inputs echoed into data together with the derived per-case
/// seed, so every case can be re-run in isolation. expected_exception marks
/// deliberately deficient systems; such a case passes when the deficiency is
/// reproduced.
struct CaseRecord {
  std::string name;
  bool pass = false;
  bool expected_exception = false;
  std::string detail;  // first violated inequality or the rank gap
  nlohmann::json data;
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  std::vector<CaseRecord> cases;
  bool pass = false;

  /// Schema: { suite, config: {prime, seed, trials, samples, smoke_cases,
  /// oracle_samples}, cases: [{name, pass, expected_exception, detail,
  /// data}], pass }.
  nlohmann::json to_json() const;
  /// CSV of the rank records embedded in the cases, one line per case that
  /// carries one.
  std::string to_csv() const;
};

std::vector<std::string> suite_names();

/// Runs one of: "nodes-grid", "exceptions", "lastthm-table",
/// "secondthm-smoke", "chains", "barkats", "oracle". Throws
/// std::invalid_argument on an unknown name or a non-prime modulus. Case
/// work fans out to OpenMP threads; results are merged in input order.
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

/// Comma list of A<k> (singularity A_k), P (simple point), C<N>:<L>
/// (2-curvilinear), H<m>:<l0>,<l1>:<s>. Throws std::invalid_argument with
/// the offending token on bad syntax.
std::vector<Component> parse_components(const std::string& text);

nlohmann::json rank_report_json(const RankReport& r);

/// Random multiset of A_k singularities and simple points with total length
/// N and total contact ell. Throws std::invalid_argument when no such
/// multiset exists.
std::vector<Component> random_mult2_collection(long long N, long long ell,
                                               std::mt19937_64& rng);

/// All staircases with complement size in [1, max_complement], i.e. all
/// partitions read as weakly decreasing stair vectors.
std::vector<Staircase> enumerate_staircases(long long max_complement);

}  // namespace mr2

#endif

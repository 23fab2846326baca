// Report tables and the named invariant suites run by `reducts verify`.

#ifndef REDUCTS_VERIFY_HPP_
#define REDUCTS_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "reducts/io.hpp"

namespace reducts {

  struct ExperimentConfig {
    std::uint64_t seed   = 1;
    std::size_t   n      = 10;
    int           k      = 2;
    int           trials = 100;
  };

  struct CheckResult {
    std::string name;
    bool        pass = true;
    std::string detail;
    Json        counterexample;  // null when the check passed
  };

  struct SuiteResult {
    std::string              suite;
    std::vector<CheckResult> checks;

    bool pass() const;
  };

  std::vector<std::string> const& suite_names();

  // Throws std::invalid_argument for an unknown suite; "all" runs every
  // suite in turn.
  std::vector<SuiteResult> run_suite(std::string const& name, ExperimentConfig const& config);

  Json        to_json(SuiteResult const& r);
  std::string to_text(SuiteResult const& r);

  // 27 lines "Out,Out,Out -> 1" in code order.
  std::string rot_orbit_text();

  // One line per node: name and its signature.
  std::string signature_text();

  enum class BehaviorMode { NoConst, TwoOrbit };

  // Markdown table "behavior | case | verdict", one row per behaviour.
  std::string behavior_table_text(BehaviorMode mode);
  Json        behavior_table_json(BehaviorMode mode);

}  // namespace reducts

#endif  // REDUCTS_VERIFY_HPP_

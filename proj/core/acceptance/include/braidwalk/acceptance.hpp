#pragma once

#include "braidwalk/rng.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace braidwalk::acceptance {

struct Options {
  unsigned threads = 0;
  std::uint64_t seed = kDefaultSeed;
};

struct CriterionInfo {
  int id = 0;
  std::string title;
  double budget_seconds = 0;
};

struct CriterionResult {
  CriterionInfo info;
  bool passed = false;
  std::string detail;  // first failures, or a short summary of what was checked
  double seconds = 0;
};

/// The ten acceptance criteria, in order.
const std::vector<CriterionInfo>& criteria();

/// Runs one criterion. Exceptions are caught and reported as failures.
/// Throws std::out_of_range for an unknown id.
CriterionResult run_criterion(int id, const Options& options = {});

std::vector<CriterionResult> run_all(const Options& options = {});

/// `PASS  3  title  (1.23 s / 60 s)  detail`
std::string format_result(const CriterionResult& result);

}  // namespace braidwalk::acceptance

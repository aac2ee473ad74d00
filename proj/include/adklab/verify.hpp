#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adklab/domain_model.hpp"

namespace adklab {

struct TheoremCheck {
  std::string id;
  std::string statement;  // what is being checked, in formula form
  enum class Status { Pass, Fail, NotApplicable } status = Status::Pass;
  std::string detail;     // witness on failure, reason when not applicable
  bool model_contradiction = false;  // failure certifies unrealizability
};

struct VerifyConfig {
  std::uint64_t max_n = 16;
  std::uint64_t seed = 0x41444B31;  // "ADK1"
  std::size_t samples = 24;
  std::size_t sample_depth = 120;
};

// Runs every checkable claim against the model. For builtin models every
// check passes; user-model failures are labeled as model contradictions
// (valid data, but no almost Dedekind domain behind it).
std::vector<TheoremCheck> run_suite(const DomainModel& model, const VerifyConfig& cfg = {});

bool all_green(const std::vector<TheoremCheck>& checks);

}  // namespace adklab

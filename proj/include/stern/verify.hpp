#pragma once

#include <string>
#include <vector>

#include "stern/serialize.hpp"

namespace stern {

enum class CheckStatus { Pass, Fail, FlaggedErratum };
enum class Profile { Quick, Full };

std::string status_name(CheckStatus status);

struct Check {
  std::string id;
  int criterion = 0;
  std::string anchor;  // where the reference value comes from
  CheckStatus status = CheckStatus::Fail;
  std::string expected;
  std::string computed;
  std::string note;
  double runtime_ms = 0;
};

struct VerificationReport {
  Profile profile = Profile::Quick;
  std::vector<Check> checks;

  // No check failed (flagged errata do not count as failures).
  bool ok() const;
  CheckStatus criterion_status(int criterion) const;
  // Byte-identical across runs unless timings are requested.
  Json to_json(bool with_timings = false) const;
};

inline constexpr int kCriterionCount = 14;

// The checks belonging to one acceptance criterion (1..14).
std::vector<Check> run_criterion(int criterion, Profile profile, unsigned threads);

VerificationReport verify_paper(Profile profile, unsigned threads);

}  // namespace stern

#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mdslab {

struct Outcome {
  std::string claim;  // e.g. "C2.delta-set"; the prefix names the acceptance criterion
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<Outcome> outcomes;
  std::chrono::duration<double> elapsed{};

  bool all_pass() const;
};

// Identifiers accepted by reproduce().
const std::vector<std::string>& reproduce_ids();

// Rebuilds a worked example from scratch and checks every stated fact.
// Throws BadInput for an unknown id.
RunReport reproduce(std::string_view id);

}  // namespace mdslab

#pragma once

#include <string>

#include <json.hpp>

namespace relkit {

enum class CheckStatus { pass, fail, hypothesis_violated };

std::string to_string(CheckStatus s);

/// One verified identity or inequality. residual is the worst observed
/// deviation from an exact identity (want ~0); slack is the smallest margin
/// left in the verified inequalities (negative means a violation).
struct CheckResult {
  std::string check_id;
  std::string paper_ref;
  CheckStatus status = CheckStatus::pass;
  double residual = 0.0;
  double slack = 0.0;
  nlohmann::json details = nlohmann::json::object();

  bool passed() const { return status == CheckStatus::pass; }
};

}  // namespace relkit

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace capelli {

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);
CheckStatus parse_status(const std::string& s);

struct WitnessLocation {
  std::string sigma;      // group element in cycle notation, "" when not applicable
  std::string out_index;  // "(i1,...,ir)" or "" for scalar identities
  std::string in_index;
  friend bool operator==(const WitnessLocation&, const WitnessLocation&) = default;
};

// One monomial whose coefficient differs between the two sides.
struct Witness {
  std::string monomial;
  std::string lhs_coefficient;
  std::string rhs_coefficient;
  WitnessLocation location;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct TermCounts {
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  friend bool operator==(const TermCounts&, const TermCounts&) = default;
};

struct CheckReport {
  std::string check_id;
  std::map<std::string, std::string> params;
  CheckStatus status = CheckStatus::Pass;
  std::optional<Witness> witness;
  TermCounts term_counts;
  double elapsed_ms = 0;
  std::vector<std::string> model_notes;
  // Reason for a skip; also serialized so skipped reports are self-explaining.
  std::string skip_reason;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

nlohmann::json to_json(const CheckReport& r);
// Throws UsageError when the document does not match the schema.
CheckReport report_from_json(const nlohmann::json& j);
// Schema problems, empty when valid. Checks field presence, types, the status vocabulary and
// that a witness is present exactly when the status is fail.
std::vector<std::string> validate_report_json(const nlohmann::json& j);

// Same document with elapsed_ms removed; used for reproducibility comparisons.
nlohmann::json strip_timing(nlohmann::json j);

}  // namespace capelli

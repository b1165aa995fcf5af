#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qpentagon {

enum class Status { holds, fails };

/// Coefficient of x^m y^n where the two sides of a check disagree.
struct Witness {
  int m = 0;
  int n = 0;
  std::string lhs;
  std::string rhs;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of one identity check. witness is present iff status == fails.
struct VerificationReport {
  std::string identity;
  int degree = 0;
  std::string q_mode;
  Status status = Status::holds;
  std::optional<Witness> witness;
  std::int64_t elapsed_millis = 0;

  bool holds() const { return status == Status::holds; }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

bool all_hold(const std::vector<VerificationReport>& reports);

/// One-line JSON object: identity, degree, q_mode, status, witness {m, n, lhs,
/// rhs} (only on failure), elapsed_millis.
std::string to_json(const VerificationReport& report);
/// Inverse of to_json. Throws std::invalid_argument on malformed input.
VerificationReport report_from_json(std::string_view json);

/// Aligned single-line text form for terminal output.
std::string to_text(const VerificationReport& report);

}  // namespace qpentagon

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpentagon/qmode.hpp"

namespace qpentagon::cli {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitUsage = 2;

struct CliConfig {
  /// Unset means the mode default: 8 symbolic, 16 specialized.
  std::optional<int> degree;
  QMode q_mode = QMode::symbolic();
  bool json = false;
  bool all = false;
  std::vector<std::string> identities;
  double tolerance = 1e-10;
  int grid = 20;
  bool torus = false;

  int effective_degree() const { return degree.value_or(q_mode.is_symbolic() ? 8 : 16); }
};

/// Strings for both sides of the named identities, written in the expression
/// language so `check-equal` can retype them.
struct CatalogEntry {
  std::string identity;
  std::string lhs;
  std::string rhs;
};
const std::vector<CatalogEntry>& identity_catalog();

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_check_equal(std::string_view lhs, std::string_view rhs, const CliConfig& cfg, std::ostream& out,
                    std::ostream& err);
int cmd_eval(std::string_view expr, const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_dilog(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and dispatches. Returns the
/// process exit status: 0 all hold, 1 some check fails, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpentagon::cli

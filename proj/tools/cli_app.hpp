#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "eulerian/catalog.hpp"
#include "json.hpp"

namespace eulerian::cli {

// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPole = 3;

struct TableOptions {
  std::string kind;
  long n_max = 0;
  std::string format = "json";
};

struct ExpandOptions {
  std::string gf;
  long order = 0;
  std::vector<std::pair<std::string, std::string>> bindings;  // var -> rational
  std::string format = "json";
};

struct VerifyOptions {
  std::vector<std::string> identities;  // tags, or the single word "all"
  long n_max = 8;
  std::string format = "json";
};

int run_table(const TableOptions& opt, std::ostream& out, std::ostream& err);
int run_expand(const ExpandOptions& opt, std::ostream& out, std::ostream& err);
int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);

nlohmann::json report_to_json(const catalog::IdentityReport& report);

}  // namespace eulerian::cli

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_app.hpp"

namespace {

std::vector<std::pair<std::string, std::string>> split_bindings(
    const std::vector<std::string>& raw, bool& ok) {
  std::vector<std::pair<std::string, std::string>> out;
  ok = true;
  for (const auto& b : raw) {
    const auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == b.size()) {
      ok = false;
      return out;
    }
    out.emplace_back(b.substr(0, eq), b.substr(eq + 1));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Eulerian-family sequence tables, expansions and identity verification"};
  app.require_subcommand(1);

  eulerian::cli::TableOptions table_opt;
  auto* table = app.add_subcommand("table", "emit a number triangle or sequence");
  table->add_option("kind", table_opt.kind,
                    "eulerian | stirling1 | stirling2 | deg-eulerian | deg-stirling1 | ordered-bell")
      ->required();
  table->add_option("--n-max", table_opt.n_max, "largest row index")->required();
  table->add_option("--format", table_opt.format, "json | csv");

  eulerian::cli::ExpandOptions expand_opt;
  std::vector<std::string> raw_binds;
  auto* expand = app.add_subcommand("expand", "expand a generating function");
  expand->add_option("gf", expand_opt.gf,
                     "eulerian | deg-eulerian | ordered-bell | frobenius-euler")
      ->required();
  expand->add_option("--order", expand_opt.order, "truncation order")->required();
  expand->add_option("--bind", raw_binds, "fix a variable, e.g. --bind t=2 or --bind u=1/3")
      ->expected(-1);
  expand->add_option("--format", expand_opt.format, "json");

  eulerian::cli::VerifyOptions verify_opt;
  std::vector<std::string> positional_ids;
  std::vector<std::string> flag_ids;
  auto* verify = app.add_subcommand("verify", "check identities over an index range");
  verify->add_option("identities", positional_ids, "identity tags, or 'all'");
  verify->add_option("--identity", flag_ids, "identity tag (repeatable)")->expected(-1);
  verify->add_option("--n-max", verify_opt.n_max, "largest index to check");
  verify->add_option("--format", verify_opt.format, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return eulerian::cli::kExitUsage;
  }

  if (table->parsed()) {
    return eulerian::cli::run_table(table_opt, std::cout, std::cerr);
  }
  if (expand->parsed()) {
    bool ok = false;
    expand_opt.bindings = split_bindings(raw_binds, ok);
    if (!ok) {
      std::cerr << "expand: --bind expects var=value\n";
      return eulerian::cli::kExitUsage;
    }
    return eulerian::cli::run_expand(expand_opt, std::cout, std::cerr);
  }
  verify_opt.identities = positional_ids;
  verify_opt.identities.insert(verify_opt.identities.end(), flag_ids.begin(), flag_ids.end());
  return eulerian::cli::run_verify(verify_opt, std::cout, std::cerr);
}

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace triplepoint::cli {

enum class OutputFormat { Text, Json };

struct CliConfig {
  double tol = 1e-6;
  OutputFormat format = OutputFormat::Text;
  bool parallel = false;
  std::vector<std::string> inputs;
};

/// Exit codes shared by every subcommand.
inline constexpr int kExitPass = 0;
inline constexpr int kExitObstructed = 1;
inline constexpr int kExitUsage = 2;

int cmd_check(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_ratios(int n, double delta, const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_matrix(int n, double delta, double p, double q, int im_sign, const CliConfig& config,
               std::ostream& out, std::ostream& err);
int cmd_qnum(double delta, int max_k, const CliConfig& config, std::ostream& out,
             std::ostream& err);

/// Full command line, `args[0]` being the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace triplepoint::cli

#ifndef PDC_TOOLS_CLI_HPP_
#define PDC_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "pdc/symlin.hpp"

namespace pdc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNegative = 2;

enum class Command { kNone, kComplete, kCheck, kInverse, kDet, kCounterexample, kC4, kOrientations };
enum class Space { kPd, kP };
enum class CheckKind { kNone, kPerfect, kDecomposable, kQd, kInPd, kInP };
enum class Output { kText, kJson };

struct RunConfig {
  Command command = Command::kNone;
  Space space = Space::kPd;
  CheckKind check = CheckKind::kNone;
  std::string graph_path;
  std::string matrix_path;
  std::string out_path;
  double tol = kDefaultPdTolerance;
  Output output = Output::kText;
  bool diagnose = false;
  bool relabel = false;
  bool verbose = false;
  int precision = 6;
  double epsilon = 0.0;
  std::vector<double> c4_args;
};

// Parses argv (argv[0] is the program name) and runs the command. Returns
// the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Convenience overload; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Executes an already-parsed configuration.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

std::string format_number(double v, int precision);
// One row per line, columns separated by two spaces; NaN renders as '*'.
std::string format_matrix(const SymMatrix& m, int precision);
std::string format_matrix(const Matrix& m, int precision);

}  // namespace pdc::cli

#endif  // PDC_TOOLS_CLI_HPP_

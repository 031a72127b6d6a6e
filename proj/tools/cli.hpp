#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "maglab/graph.hpp"

namespace maglab::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,            ///< solved / accepted / found
  kUnsolved = 1,      ///< unsolved at the iteration cap, rejected, or proven absent
  kUsage = 2,         ///< bad flags
  kInvalidInput = 3,  ///< unreadable or invalid input file
  kBudget = 4,        ///< oracle node budget exceeded
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Builds a graph from a generator spec such as {"petersen", "5", "2"}.
/// Throws std::invalid_argument on an unknown family or bad parameters.
Graph graph_from_spec(const std::vector<std::string>& spec, bool faces);

}  // namespace maglab::cli

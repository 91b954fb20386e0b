#pragma once

#include <stdexcept>
#include <string>

namespace treeweave {

// Bad arguments or violated operation preconditions.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file; message carries "file:line".
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// No b-balanced cut exists for the given vertex weights.
struct NoBalancedCutError : std::runtime_error {
  NoBalancedCutError() : std::runtime_error("no b-balanced cut exists") {}
  explicit NoBalancedCutError(const std::string& msg) : std::runtime_error(msg) {}
};

// The exact separator ran out of its branch-and-bound node budget.
struct BudgetExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A cross-check the library performs on its own output failed.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

// Process exit codes used by the CLI, one class per error family.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitPrecondition = 3,
  kExitBudget = 4,
  kExitInternal = 5,
};

}  // namespace treeweave

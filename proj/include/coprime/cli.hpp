#pragma once

#include <string>
#include <vector>

#include "coprime/numtheory.hpp"

namespace coprime::cli {

enum class Status { kOk, kNegative, kInvalidInput, kUnsupported, kInternalError };

std::string_view to_string(Status status);

/// 0 / 1 / 2 / 2 / 3 for OK / NEGATIVE / INVALID_INPUT / UNSUPPORTED / INTERNAL_ERROR.
int exit_code(Status status);

/// Output is line-oriented: one `{key: value, ...}` record per line, integers
/// in full decimal. `error` is a human-readable message for stderr.
struct CommandResult {
  Status status = Status::kOk;
  std::string output;
  std::string error;
};

struct IntRange {
  BigInt lo;
  BigInt hi;
};

/// Parses "lo:hi" (inclusive). Throws std::invalid_argument.
IntRange parse_range(const std::string& text);

/// Parses "4,5,6". Throws std::invalid_argument.
std::vector<int> parse_lengths(const std::string& text);

/// Parses a comma-separated vertex list.
std::vector<BigInt> parse_vertices(const std::string& text);

CommandResult cmd_decide(const BigInt& k, int n);
CommandResult cmd_cycle(const BigInt& k, int n, bool verify);
CommandResult cmd_verify(const BigInt& k, int n, const std::vector<BigInt>& cycle);
CommandResult cmd_label(const std::vector<int>& lengths);
CommandResult cmd_sweep(const IntRange& k, const IntRange& n, bool oracle);
CommandResult cmd_oracle_cycle(const BigInt& k, int n);
CommandResult cmd_oracle_label(const std::vector<int>& lengths);
CommandResult cmd_check();

/// Parses argv (without the program name) and dispatches.
CommandResult run(const std::vector<std::string>& args);

}  // namespace coprime::cli

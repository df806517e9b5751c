#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "galmod/group/checks.hpp"
#include "json.hpp"

namespace galmod::cli {

struct RunConfig {
  std::string command;
  std::uint32_t p = 2, n = 2;
  std::size_t k = 1;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t max_enum = std::uint64_t{1} << 20;
  std::optional<std::string> module_file;
  std::optional<std::string> builtin;  // decompose
  std::optional<std::string> delta;    // realize: override of the default class of t
};

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kInputError = 2 };

struct Report {
  std::string command;
  nlohmann::json config;
  nlohmann::json result;
  nlohmann::json verifications = nlohmann::json::object();  // name -> bool
  bool passed = false;
  double timing_ms = 0;
  int exit_code = kInputError;
};

/// {command, config, result, verifications, passed, timing_ms}.  Everything
/// except timing_ms is a function of the config.
nlohmann::json to_json(const Report& r);

/// Never throws for bad input: library errors become exit code 2 with an
/// "error" result.
Report run(const RunConfig& config);

Report cmd_decompose(const RunConfig& config);
Report cmd_family(const RunConfig& config);
Report cmd_group_verify(const RunConfig& config);
Report cmd_realize(const RunConfig& config);
Report cmd_pairing(const RunConfig& config);

/// Reads a module JSON file; syntax errors are reported as path:line:column.
nlohmann::json read_module_file(const std::string& path);

}  // namespace galmod::cli

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hopfcat/report.hpp"
#include "hopfcat/scalar.hpp"

namespace hopfcat::cli {

/// Process exit codes.
enum Exit : int {
  exit_pass = 0,
  exit_axiom_failure = 1,
  exit_input_error = 2,
  exit_invariant_breach = 3,
};

struct GlobalOptions {
  std::optional<Field> field;
  std::uint64_t seed = 42;
  std::optional<std::filesystem::path> report;
  bool quiet = false;
  std::vector<std::string> argv;  // recorded in the manifest
};

struct VerifyOptions {
  std::optional<std::string> level;
  std::vector<std::string> checks;
};

int cmd_verify(const std::filesystem::path& input, const VerifyOptions& v, const GlobalOptions& g,
               std::ostream& out);
int cmd_transform(const std::string& op, const std::filesystem::path& input, const std::filesystem::path& output,
                  const GlobalOptions& g, std::ostream& out);
int cmd_analyze(const std::string& op, const std::filesystem::path& input,
                const std::optional<std::filesystem::path>& output, const GlobalOptions& g, std::ostream& out);

/// Parses the arguments (program name excluded) and runs one command;
/// exceptions become exit codes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Text table, one finding per line, then a summary line.
void print_report(std::ostream& os, const Report& r, const std::string& title);

/// One JSON object per finding.
std::string report_json_lines(const Report& r);

/// Writes via a temporary file in the same directory and a rename.
void write_atomic(const std::filesystem::path& path, const std::string& content);

std::string sha256_hex(const std::string& data);

}  // namespace hopfcat::cli

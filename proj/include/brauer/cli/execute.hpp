#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "brauer/cli/request.hpp"
#include "json.hpp"

namespace brauer::cli {

/// Result of one request. `result` holds canonical strings that parse back
/// with the literal parsers, plus flags and witness lists.
struct Report {
  std::string request;
  std::vector<std::string> lines;
  nlohmann::json result = nlohmann::json::object();
  std::vector<std::string> citations;
  std::vector<std::string> trace;
};

/// Dispatches to the core modules. Reproduce requests are handled by
/// run_reproduce and rejected here.
Report execute(const Request& r);

struct OutputOptions {
  bool json = false;
  bool trace = false;
};

nlohmann::json to_json(const Report& r, bool with_trace);
std::string render_text(const Report& r, bool with_trace);

enum ExitCode : int {
  kExitOk = 0,
  kExitReproduceFailed = 1,
  kExitParse = 2,
  kExitSemantic = 3,
  kExitUnsupported = 4,
};

struct LineOutcome {
  int exit_code = kExitOk;
  /// Rendered report or error, without a trailing newline.
  std::string output;
};

/// Parses, executes and renders one request line, mapping errors to exit
/// codes.
LineOutcome run_line(std::string_view line, std::size_t line_number, const OutputOptions& opts);

/// Evaluates lines concurrently on up to `jobs` threads; outcomes are in
/// input order. Blank lines and lines starting with '#' are skipped.
std::vector<LineOutcome> run_batch(const std::vector<std::string>& lines, const OutputOptions& opts,
                                   unsigned jobs);

}  // namespace brauer::cli

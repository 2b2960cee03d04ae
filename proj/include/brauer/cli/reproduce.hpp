#pragma once

// Worked-example table run end to end through the request parser.

#include <string>
#include <vector>

#include "json.hpp"

namespace brauer::cli {

struct ReproduceItem {
  std::string group;
  std::string request;
  /// JSON pointer into the report's result.
  std::string field;
  std::string expected;
  std::string actual;
  bool passed = false;
};

struct ReproduceOptions {
  /// Corrupts one expected-value formula: `gcd` replaces gcd(m, n) by
  /// gcd(m, n) + 1 in the exterior-square and Kunneth items.
  std::string inject_fault;
};

std::vector<ReproduceItem> run_reproduce(const ReproduceOptions& opts = {});

std::string render_reproduce_text(const std::vector<ReproduceItem>& items);
nlohmann::json reproduce_to_json(const std::vector<ReproduceItem>& items);

}  // namespace brauer::cli

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "galcoh/scenario.hpp"

namespace galcoh {

/// "galcoh <version>"
std::string engine_version();

enum class ReportFormat { Text, Machine };

struct ReportOptions {
  bool verbose_witnesses = false;
};

using Fields = std::vector<std::pair<std::string, std::string>>;

struct ReportSection {
  std::size_t index = 0;  // 1-based directive index
  std::vector<std::string> text;
  Fields fields;
};

struct Report {
  std::vector<std::string> header;
  Fields header_fields;
  std::vector<ReportSection> sections;

  /// Text: header lines, then one block per directive. Machine: one key=value record per line.
  std::string render(ReportFormat format) const;
};

/// Runs every directive in order. Engine errors are rethrown with the directive index and text.
Report run(const Scenario& scenario, const ReportOptions& options = {});

}  // namespace galcoh

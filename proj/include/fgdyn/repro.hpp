#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fgdyn {

/// Canned reproductions: sec2, omega, matrix, fig1 ... fig5.
const std::vector<std::string>& repro_ids();

/// Deterministic text for one reproduction. Throws std::invalid_argument for unknown ids.
std::string repro_output(std::string_view id);

struct ReproCheck {
  bool matches = false;
  bool golden_missing = false;
  std::string actual;
  /// First differing line, as "line N: expected '...' got '...'".
  std::string difference;
};

/// Compares against <golden_dir>/<id>.txt; with update, rewrites the golden file instead.
ReproCheck repro_check(std::string_view id, const std::string& golden_dir, bool update = false);

}  // namespace fgdyn

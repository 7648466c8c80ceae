#pragma once

#include <functional>
#include <string>
#include <vector>

#include "eulerian/triangle.hpp"

namespace eulerian {

/// Supplies the triangle under test; the battery never builds one itself.
using TriangleSource = std::function<EulerianTriangle(unsigned m, unsigned n_max)>;

TriangleSource recurrence_source();

/// Recurrence source with T(m; n, k) replaced by T + 1 wherever that entry
/// exists. Used as a negative control.
TriangleSource corrupted_source(unsigned m, unsigned n, unsigned k);

struct CheckResult {
  std::string suite;
  std::string identity;
  std::string case_label;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  unsigned m_max = 4;
  unsigned n_max = 6;
  /// all | core | oracle | fractions | stirling | integral
  std::string suite = "all";
  double tol = 1e-9;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  std::size_t failures() const;
  /// Distinct identity names that failed, in first-seen order.
  std::vector<std::string> failed_identities() const;
};

/// The suites `all` expands to; `integral` is separate and opt-in.
const std::vector<std::string>& default_suites();
bool is_known_suite(const std::string& name);

/// Runs the named suite(s) against `source`. Throws std::invalid_argument for
/// an unknown suite name.
VerifyReport run_verify(const VerifyOptions& options, const TriangleSource& source);

}  // namespace eulerian

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "onsager/kernels.hpp"

namespace onsager {

enum class Suite { all, ring, loop, symmetry, likeness, bases, transitions, expr };

std::string_view suite_name(Suite s);
/// Throws std::invalid_argument for an unknown name.
Suite parse_suite(std::string_view text);

struct CheckResult {
  Suite suite;
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string first_failure;  // empty when failed == 0

  void record(bool ok, const std::string& what);
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  [[nodiscard]] std::size_t passed() const;
  [[nodiscard]] std::size_t failed() const;
  [[nodiscard]] bool ok() const { return failed() == 0; }
};

/// Runs the invariant checks of one suite (or all of them) with indices up to
/// max_index. With Exec::parallel independent checks run concurrently; the
/// report order and contents do not depend on the schedule.
VerifyReport run_verify(unsigned max_index, Suite suite, Exec exec = Exec::parallel);

}  // namespace onsager

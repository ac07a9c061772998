// SPDX-License-Identifier: Apache-2.0
//
// Tiny shared report vocabulary: named pass/fail checks with a human-readable
// detail string, aggregated by the verification suites and the CLI.

#pragma once

#include <string>
#include <vector>

namespace linkcomm {

struct NamedCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::string title;
  std::vector<NamedCheck> checks;

  bool ok() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
  void add(std::string name, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
};

}  // namespace linkcomm

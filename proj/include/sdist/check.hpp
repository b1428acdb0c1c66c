/*
   Copyright 2026 The sdist authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SDIST_CHECK_HPP
#define SDIST_CHECK_HPP

#include <string>
#include <vector>

namespace sdist {

enum class CheckStatus { pass, fail, not_applicable };

/// One named check with its measured value against a pinned threshold.
/// measured/threshold are 0 for exact (all-or-nothing) checks.
struct CheckReport {
  std::string name;
  CheckStatus status = CheckStatus::fail;
  double measured = 0.0;
  double threshold = 0.0;
  std::string note;  // short human-readable detail, empty if none

  bool passed() const { return status == CheckStatus::pass; }
  bool failed() const { return status == CheckStatus::fail; }
};

inline bool all_passed(const std::vector<CheckReport>& checks) {
  for (const CheckReport& c : checks)
    if (c.failed()) return false;
  return true;
}

}  // namespace sdist

#endif  // SDIST_CHECK_HPP

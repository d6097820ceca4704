// SPDX-License-Identifier: Apache-2.0
//
// oamcap: capacity simulator for power-domain NOMA downlinks multiplexed
// over orbital-angular-momentum modes between uniform circular arrays.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef OAMCAP_ERRORS_HPP
#define OAMCAP_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oamcap
{

// Process exit codes: 0 success, 1 validation error, 2 runtime or
// degenerate-geometry error, 3 oracle failure.
enum ExitCode
{
    exit_ok = 0,
    exit_validation = 1,
    exit_runtime = 2,
    exit_oracle_failure = 3
};

/// Aggregated configuration report: one entry per offending key, all of them
/// collected before the error is raised.
class ValidationError : public std::runtime_error
{
  public:
    explicit ValidationError(std::vector<std::string> issues)
        : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

    const std::vector<std::string> &issues() const { return issues_; }

  private:
    static std::string join(const std::vector<std::string> &issues)
    {
        std::string msg = "invalid configuration:";
        for (const auto &s : issues)
            msg += "\n  - " + s;
        return msg;
    }

    std::vector<std::string> issues_;
};

/// A mode whose channel gain is numerically zero makes the inverse-gain power
/// weighting undefined (rank-deficient geometry, e.g. a vanishing array
/// radius). Carries the offending mode index; the caller must shrink the
/// active mode set.
class DegenerateModeError : public std::runtime_error
{
  public:
    explicit DegenerateModeError(int mode)
        : std::runtime_error("degenerate mode " + std::to_string(mode) +
                             ": channel gain is numerically zero"),
          mode_(mode) {}

    int mode() const { return mode_; }

  private:
    int mode_;
};

namespace detail
{
    inline void require(bool condition, const char *message)
    {
        if (!condition)
            throw std::invalid_argument(message);
    }
} // namespace detail

} // namespace oamcap

#endif

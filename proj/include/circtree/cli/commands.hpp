/*
   Copyright 2026 The circtree Authors

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

#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <iosfwd>
#include <string>
#include <vector>

namespace circtree::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
    kExitInternal = 3,
};

inline constexpr std::uint32_t kMaxSafeJump = 6;
inline constexpr std::size_t kMaxSafeTerms = 500;

/// Relative tolerance for the floating-point tau path.
inline constexpr long double kNumericTolerance = 1e-8L;

/**
 * Entry point shared by the executable and the tests. `args` excludes the
 * program name. Reads CIRCTREE_MAX_DIM from the environment.
 */
/**
 * Maps an escaped exception to an exit code and writes one line to `err`:
 * parse, usage and limit errors give kExitUsage, everything else
 * (InvariantViolation included) kExitInternal.
 */
int report_failure(std::exception_ptr failure, std::ostream& err);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circtree::cli

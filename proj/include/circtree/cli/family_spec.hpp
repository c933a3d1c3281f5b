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
#include <stdexcept>
#include <string>
#include <string_view>

#include "circtree/graphcore/circulant.hpp"

namespace circtree::cli {

class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t position, std::string expected);

    /// Zero-based offset into the input.
    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

/**
 * Parses `C[s1,...,sk]` (even valency) or `C2[s1,...,sk]` (odd valency, the
 * diameter jump implied). Whitespace may appear between any two tokens.
 * Jumps must be strictly increasing positive integers.
 */
CirculantFamily parse_family(std::string_view text);

}  // namespace circtree::cli

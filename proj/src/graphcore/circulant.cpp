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

#include "circtree/graphcore/circulant.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace circtree {

CirculantFamily::CirculantFamily(Valency kind, std::vector<std::uint32_t> jumps)
    : kind_(kind), jumps_(std::move(jumps)), q_(0) {
    if (jumps_.empty()) throw std::invalid_argument("circulant family needs at least one jump");
    for (std::size_t i = 0; i < jumps_.size(); ++i) {
        if (jumps_[i] == 0) throw std::invalid_argument("jumps must be >= 1");
        if (i > 0 && jumps_[i] <= jumps_[i - 1]) {
            throw std::invalid_argument("jumps must be strictly increasing");
        }
        q_ += static_cast<std::uint64_t>(jumps_[i]) * jumps_[i];
    }
}

std::string CirculantFamily::to_spec() const {
    std::ostringstream os;
    os << (kind_ == Valency::Even ? "C[" : "C2[");
    for (std::size_t i = 0; i < jumps_.size(); ++i) {
        if (i) os << ',';
        os << jumps_[i];
    }
    os << ']';
    return os.str();
}

GraphInstance::GraphInstance(CirculantFamily family, std::uint32_t n, EdgeConvention convention)
    : family_(std::move(family)), n_(n), convention_(convention) {
    if (n_ == 0) throw std::invalid_argument("instance parameter n must be >= 1");
}

std::size_t GraphInstance::vertex_count() const noexcept {
    return family_.kind() == Valency::Even ? n_ : 2 * static_cast<std::size_t>(n_);
}

bool GraphInstance::simple() const noexcept {
    const std::uint64_t s = family_.s_max();
    return family_.kind() == Valency::Even ? 2 * s < n_ : s < n_;
}

std::uint64_t connected_components(const GraphInstance& g) {
    std::uint64_t d = g.n();
    for (std::uint32_t s : g.family().jumps()) d = std::gcd(d, static_cast<std::uint64_t>(s));
    return d;
}

}  // namespace circtree

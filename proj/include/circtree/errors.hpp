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

#include <stdexcept>
#include <string>

namespace circtree {

/// Division by a zero polynomial, zero rational function, or a pole where a
/// value was requested.
class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A quantity that must be an integer (series coefficient, exact quotient)
/// turned out not to be.
class NotIntegral : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A configured size cap (subset-product dimension, vertex count, ...) would
/// be exceeded.
class LimitExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Numerical root finding did not converge.
class NoConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Carries the name of
/// the check so callers can report which invariant broke.
class InvariantViolation : public std::logic_error {
public:
    InvariantViolation(std::string check, const std::string& detail)
        : std::logic_error(check + ": " + detail), check_(std::move(check)) {}

    const std::string& check() const noexcept { return check_; }

private:
    std::string check_;
};

}  // namespace circtree

/*
   Copyright 2026 The fewnomial authors

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

namespace fewnomial {

// Every failure the library reports derives from Error. The CLI maps the
// concrete type onto its exit-code protocol.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad JSON, wrong shapes, violated preconditions.
class InputError : public Error {
public:
    using Error::Error;
};

// Polyhedral input whose Minkowski sum is not full dimensional.
class DimensionError : public InputError {
public:
    using InputError::InputError;
};

// Not enough p-adic / t-adic digits to decide the requested quantity.
class PrecisionError : public Error {
public:
    using Error::Error;
};

// Hensel's criterion ord f(r) > 2 ord f'(r) fails at the given point.
class NotHenselLiftable : public Error {
public:
    using Error::Error;
};

// A size or precision ceiling was hit.
class GuardrailError : public Error {
public:
    using Error::Error;
};

// A counting procedure could not reach a decision. Carries the partial
// count established before giving up.
class Undecided : public Error {
public:
    Undecided(const std::string& what, long partial_count)
        : Error(what), partial_(partial_count) {}
    long partial_count() const noexcept { return partial_; }

private:
    long partial_;
};

}  // namespace fewnomial

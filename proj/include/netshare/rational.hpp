// Copyright 2026 The netshare Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace netshare {

/// Exact value used for every cost, valuation, share and welfare figure.
using Rational = boost::rational<std::int64_t>;

/// Raised for malformed or inconsistent input documents.
class InputError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Raised when an exponential routine is asked to run past its size cap.
class SizeCapError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Parses "7", "-3", "2.25" or "5/4" into an exact rational.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise. Inverse of parse_rational.
std::string to_string(Rational const &value);

}  // namespace netshare

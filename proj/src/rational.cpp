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

#include "netshare/rational.hpp"

#include <charconv>
#include <limits>

namespace netshare {
namespace {

std::int64_t parse_integer(std::string_view digits, std::string_view whole)
{
  std::int64_t value = 0;
  auto const *first  = digits.data();
  auto const *last   = digits.data() + digits.size();
  auto [ptr, ec]     = std::from_chars(first, last, value);
  if (digits.empty() || ec != std::errc{} || ptr != last)
  {
    throw InputError("malformed number: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
  if (text.empty())
  {
    throw InputError("malformed number: empty string");
  }

  if (auto slash = text.find('/'); slash != std::string_view::npos)
  {
    auto num = parse_integer(text.substr(0, slash), text);
    auto den = parse_integer(text.substr(slash + 1), text);
    if (den <= 0)
    {
      throw InputError("malformed number: '" + std::string(text) + "' has non-positive denominator");
    }
    return {num, den};
  }

  auto dot = text.find('.');
  if (dot == std::string_view::npos)
  {
    return Rational{parse_integer(text, text)};
  }

  std::string_view int_part  = text.substr(0, dot);
  std::string_view frac_part = text.substr(dot + 1);
  bool const negative        = !int_part.empty() && int_part.front() == '-';
  if (negative || (!int_part.empty() && int_part.front() == '+'))
  {
    int_part.remove_prefix(1);
  }
  if ((int_part.empty() && frac_part.empty()) || frac_part.size() > 17)
  {
    throw InputError("malformed number: '" + std::string(text) + "'");
  }
  for (char c : frac_part)
  {
    if (c < '0' || c > '9')
    {
      throw InputError("malformed number: '" + std::string(text) + "'");
    }
  }

  std::int64_t const whole = int_part.empty() ? 0 : parse_integer(int_part, text);
  std::int64_t const frac  = frac_part.empty() ? 0 : parse_integer(frac_part, text);
  std::int64_t scale       = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i)
  {
    scale *= 10;
  }
  if (whole > (std::numeric_limits<std::int64_t>::max() - frac) / scale)
  {
    throw InputError("number out of range: '" + std::string(text) + "'");
  }
  Rational value{whole * scale + frac, scale};
  return negative ? -value : value;
}

std::string to_string(Rational const &value)
{
  if (value.denominator() == 1)
  {
    return std::to_string(value.numerator());
  }
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

}  // namespace netshare

/*
 * Copyright 2026 The ponplan Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ponplan/format.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include <fmt/format.h>

namespace ponplan {

std::string format_significant(double value, int digits) {
  if (digits < 1) digits = 1;
  if (!std::isfinite(value)) return fmt::format("{}", value);
  if (value == 0.0) return digits > 1 ? "0." + std::string(digits - 1, '0') : "0";

  // Scientific form gives the correctly rounded significand and the
  // exponent after rounding (9.996 -> 1.00e+01).
  const std::string sci = fmt::format("{:.{}e}", value, digits - 1);
  const auto e = sci.find('e');
  const int exponent = std::atoi(sci.c_str() + e + 1);

  if (exponent < digits - 1) {
    const int decimals = digits - 1 - exponent;
    return fmt::format("{:.{}f}", value, decimals);
  }

  // Large magnitude: digits of the significand followed by zeros.
  std::string out;
  for (std::size_t i = 0; i < e; ++i) {
    if (sci[i] != '.') out += sci[i];
  }
  const auto significant = static_cast<int>(out.size()) - (out.front() == '-' ? 1 : 0);
  out.append(static_cast<std::size_t>(exponent + 1 - significant), '0');
  return out;
}

std::string format_exact(double value) { return fmt::format("{}", value); }

}  // namespace ponplan

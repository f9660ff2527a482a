/*
 * Copyright 2026 The NetSpam Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef NETSPAM_DATE_HPP_
#define NETSPAM_DATE_HPP_

#include <cstdint>
#include <string>
#include <string_view>

namespace netspam {

/// Calendar day stored as days since 1970-01-01 (proleptic Gregorian).
/// Day resolution only; all date arithmetic in the pipeline is whole days.
using Day = std::int32_t;

/// Days since epoch for a civil date. No range validation here.
constexpr Day days_from_civil(int y, int m, int d) noexcept {
  y -= m <= 2;
  const int era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy =
      (153 * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2) / 5 +
      static_cast<unsigned>(d) - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return static_cast<Day>(era) * 146097 + static_cast<Day>(doe) - 719468;
}

struct CivilDate {
  int year;
  int month;
  int day;
};

CivilDate civil_from_days(Day z) noexcept;

/// Parses strict ISO-8601 "YYYY-MM-DD". Throws Error(kInvalidDate) on
/// malformed syntax or an impossible calendar day (e.g. 2024-02-30).
Day parse_iso_date(std::string_view text);

/// Formats as "YYYY-MM-DD".
std::string format_iso_date(Day day);

}  // namespace netspam

#endif  // NETSPAM_DATE_HPP_

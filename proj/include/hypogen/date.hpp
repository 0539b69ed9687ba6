#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace hypogen {

// Calendar date with day precision. Year-only inputs resolve to January 1.
struct Date {
    std::int32_t year = 0;
    std::uint8_t month = 1;
    std::uint8_t day = 1;

    auto operator<=>(const Date&) const = default;

    // Accepts "YYYY-MM-DD" or "YYYY". Throws DataError on anything else
    // (bad shape, month 13, February 30, ...).
    static Date parse(std::string_view text);

    std::string to_string() const;  // always "YYYY-MM-DD"

    // Same month/day, year shifted back. Feb 29 clamps to Feb 28 when the
    // target year is not a leap year.
    Date minus_years(int n) const;
};

// Whole calendar periods between two dates, ignoring finer resolution.
// years_between(2001-01-01, 2003-06-15) == 2.
int years_between(const Date& from, const Date& to);
int months_between(const Date& from, const Date& to);

}  // namespace hypogen

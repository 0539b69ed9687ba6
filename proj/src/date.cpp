#include "hypogen/date.hpp"

#include <charconv>
#include <cstdio>

#include "hypogen/errors.hpp"

namespace hypogen {

namespace {

bool is_leap(std::int32_t y) {
    return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

int days_in_month(std::int32_t y, unsigned m) {
    static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return kDays[m - 1];
}

bool parse_int(std::string_view s, int& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

Date Date::parse(std::string_view text) {
    int y = 0, m = 1, d = 1;
    if (text.size() == 4) {
        if (!parse_int(text, y))
            throw DataError("unparseable date: '" + std::string(text) + "'");
    } else if (text.size() == 10 && text[4] == '-' && text[7] == '-') {
        if (!parse_int(text.substr(0, 4), y) || !parse_int(text.substr(5, 2), m) ||
            !parse_int(text.substr(8, 2), d))
            throw DataError("unparseable date: '" + std::string(text) + "'");
    } else {
        throw DataError("unparseable date: '" + std::string(text) + "' (want YYYY-MM-DD or YYYY)");
    }
    if (m < 1 || m > 12 || d < 1 || d > days_in_month(y, static_cast<unsigned>(m)))
        throw DataError("invalid calendar date: '" + std::string(text) + "'");
    return Date{y, static_cast<std::uint8_t>(m), static_cast<std::uint8_t>(d)};
}

std::string Date::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", year, unsigned(month), unsigned(day));
    return buf;
}

Date Date::minus_years(int n) const {
    Date out = *this;
    out.year -= n;
    if (out.month == 2 && out.day == 29 && !is_leap(out.year)) out.day = 28;
    return out;
}

int years_between(const Date& from, const Date& to) {
    return to.year - from.year;
}

int months_between(const Date& from, const Date& to) {
    return (to.year - from.year) * 12 + (int(to.month) - int(from.month));
}

}  // namespace hypogen

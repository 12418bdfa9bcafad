// SPDX-License-Identifier: Apache-2.0
#include "amoc/dates.hpp"

#include "amoc/error.hpp"

#include <cctype>
#include <cstdio>
#include <string_view>

namespace amoc {

namespace {

bool allDigits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            return false;
        }
    }
    return true;
}

int toInt(std::string_view s) {
    int v = 0;
    for (char c : s) {
        v = v * 10 + (c - '0');
    }
    return v;
}

Date makeDate(int y, int m, int d, const std::string& original) {
    Date date{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
              std::chrono::day{static_cast<unsigned>(d)}};
    if (!date.ok()) {
        throw DataError("invalid calendar date: " + original);
    }
    return date;
}

} // namespace

Date parseDate(const std::string& text) {
    std::string_view s{text};
    if (s.size() != 10 || s[4] != '-' || s[7] != '-' || !allDigits(s.substr(0, 4)) ||
        !allDigits(s.substr(5, 2)) || !allDigits(s.substr(8, 2))) {
        throw DataError("expected date as YYYY-MM-DD, got \"" + text + "\"");
    }
    return makeDate(toInt(s.substr(0, 4)), toInt(s.substr(5, 2)), toInt(s.substr(8, 2)), text);
}

std::string formatDate(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(d.year()),
                  static_cast<unsigned>(d.month()), static_cast<unsigned>(d.day()));
    return buf;
}

UtcTime parseTimestamp(const std::string& text) {
    using namespace std::chrono;
    std::string_view s{text};
    auto bad = [&](const std::string& why) {
        return DataError("bad timestamp \"" + text + "\": " + why);
    };

    // YYYY-MM-DD
    if (s.size() < 20 || s[4] != '-' || s[7] != '-') {
        throw bad("expected RFC 3339 format");
    }
    if (!allDigits(s.substr(0, 4)) || !allDigits(s.substr(5, 2)) || !allDigits(s.substr(8, 2))) {
        throw bad("non-numeric date part");
    }
    Date date = makeDate(toInt(s.substr(0, 4)), toInt(s.substr(5, 2)), toInt(s.substr(8, 2)), text);

    if (s[10] != 'T' && s[10] != 't' && s[10] != ' ') {
        throw bad("expected 'T' between date and time");
    }

    // HH:MM:SS
    if (s[13] != ':' || s[16] != ':' || !allDigits(s.substr(11, 2)) ||
        !allDigits(s.substr(14, 2)) || !allDigits(s.substr(17, 2))) {
        throw bad("malformed time part");
    }
    int hh = toInt(s.substr(11, 2));
    int mm = toInt(s.substr(14, 2));
    int ss = toInt(s.substr(17, 2));
    if (hh > 23 || mm > 59 || ss > 59) {
        throw bad("time of day out of range");
    }

    std::size_t pos = 19;
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        std::size_t digits = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])) != 0) {
            ++pos;
            ++digits;
        }
        if (digits == 0) {
            throw bad("empty fractional seconds");
        }
    }

    if (pos >= s.size()) {
        throw bad("missing UTC offset");
    }

    seconds offset{0};
    char c = s[pos];
    if (c == 'Z' || c == 'z') {
        ++pos;
    } else if (c == '+' || c == '-') {
        if (s.size() - pos != 6 || s[pos + 3] != ':' || !allDigits(s.substr(pos + 1, 2)) ||
            !allDigits(s.substr(pos + 4, 2))) {
            throw bad("malformed UTC offset");
        }
        int oh = toInt(s.substr(pos + 1, 2));
        int om = toInt(s.substr(pos + 4, 2));
        if (oh > 23 || om > 59) {
            throw bad("UTC offset out of range");
        }
        offset = hours{oh} + minutes{om};
        if (c == '-') {
            offset = -offset;
        }
        pos += 6;
    } else {
        throw bad("expected 'Z' or numeric UTC offset");
    }
    if (pos != s.size()) {
        throw bad("trailing characters");
    }

    sys_seconds local = sys_days{date} + hours{hh} + minutes{mm} + seconds{ss};
    return local - offset;
}

Date utcDate(UtcTime t) {
    return Date{std::chrono::floor<std::chrono::days>(t)};
}

Date addDays(const Date& d, long n) {
    using namespace std::chrono;
    return Date{sys_days{d} + days{n}};
}

long daysBetween(const Date& a, const Date& b) {
    using namespace std::chrono;
    return (sys_days{b} - sys_days{a}).count();
}

long DateRange::indexOf(const Date& d) const {
    long i = daysBetween(start, d);
    return (i >= 0 && i < size()) ? i : -1;
}

DateRange makeDateRange(const Date& start, const Date& end) {
    if (daysBetween(start, end) < 0) {
        throw ConfigError("date range start " + formatDate(start) + " is after end " +
                          formatDate(end));
    }
    return DateRange{start, end};
}

} // namespace amoc

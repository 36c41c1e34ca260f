#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace dcnet {

// Calendar dates as day counts (sys_days); cheap to compare, hash and step.
using Date = std::chrono::sys_days;

// Strict ISO-8601 YYYY-MM-DD. Throws std::runtime_error on anything else.
Date parse_date(std::string_view text);

std::string format_date(Date d);

// Calendar-month addition with end-of-month clamping: Jan 31 + 1 month is
// Feb 28 (or 29). Throws on calendar overflow.
Date add_months_clamped(Date d, int months);

int year_of(Date d);

} // namespace dcnet

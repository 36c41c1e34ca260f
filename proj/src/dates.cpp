#include "dcnet/dates.hpp"

#include <cstdio>
#include <stdexcept>

namespace dcnet {

namespace chr = std::chrono;

Date parse_date(std::string_view text) {
    auto bad = [&] {
        return std::runtime_error("invalid date '" + std::string(text) + "', expected YYYY-MM-DD");
    };
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') throw bad();
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
        if (text[i] < '0' || text[i] > '9') throw bad();
    auto num = [&](std::size_t pos, std::size_t len) {
        int v = 0;
        for (std::size_t i = pos; i < pos + len; ++i) v = v * 10 + (text[i] - '0');
        return v;
    };
    chr::year_month_day ymd{chr::year{num(0, 4)}, chr::month{static_cast<unsigned>(num(5, 2))},
                            chr::day{static_cast<unsigned>(num(8, 2))}};
    if (!ymd.ok()) throw bad();
    return chr::sys_days{ymd};
}

std::string format_date(Date d) {
    chr::year_month_day ymd{d};
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

Date add_months_clamped(Date d, int months) {
    chr::year_month_day ymd{d};
    chr::year_month_day shifted = ymd + chr::months{months};
    if (!shifted.year().ok())
        throw std::runtime_error("date overflow adding " + std::to_string(months) + " months to " +
                                 format_date(d));
    if (!shifted.ok()) shifted = shifted.year() / shifted.month() / chr::last;
    return chr::sys_days{shifted};
}

int year_of(Date d) {
    return static_cast<int>(chr::year_month_day{d}.year());
}

} // namespace dcnet

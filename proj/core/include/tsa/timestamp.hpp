#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace tsa {

/// UTC instant truncated to whole minutes.
using Minute = std::chrono::sys_time<std::chrono::minutes>;
/// Calendar day.
using Date = std::chrono::sys_days;

inline constexpr int kMinutesPerDay = 1440;

/// Parses an ISO-8601 timestamp such as `2021-04-07T13:05:00Z`,
/// `2021-04-07 13:05`, or `2021-04-07T15:05:00.250+02:00`. A missing zone
/// designator means UTC. Seconds and fractions are floored away.
std::optional<Minute> parse_timestamp(std::string_view text);

/// `YYYY-MM-DDTHH:MM:00Z`
std::string format_timestamp(Minute t);

std::optional<Date> parse_date(std::string_view text);
/// `YYYY-MM-DD`
std::string format_date(Date d);

/// Calendar day of `t` after shifting it by `utc_offset`.
inline Date day_of(Minute t, std::chrono::minutes utc_offset = {}) {
  return std::chrono::floor<std::chrono::days>(t + utc_offset);
}

/// Minute index within the (offset) day, 0..1439.
inline int minute_of_day(Minute t, std::chrono::minutes utc_offset = {}) {
  const auto shifted = t + utc_offset;
  return static_cast<int>((shifted - std::chrono::floor<std::chrono::days>(shifted)).count());
}

}  // namespace tsa

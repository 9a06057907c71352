#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tsa/grid.hpp"
#include "tsa/timestamp.hpp"
#include "tsa/tracking.hpp"

namespace tsa {

enum class ActivityLabel { kSleeping, kDaily, kNoActivity };

std::string_view to_string(ActivityLabel label) noexcept;
std::optional<ActivityLabel> parse_activity_label(std::string_view text);

/// Bed and table zones. Throws Error(kInvalidZone) from validate() when
/// either zone is invalid or the two overlap.
struct ZoneMap {
  ZoneRect bed{"bed"};
  ZoneRect table{"table"};

  void validate() const;

  friend bool operator==(const ZoneMap&, const ZoneMap&) = default;
};

ActivityLabel classify(std::optional<Point> point, const ZoneMap& zones);

struct ActivityEntry {
  Minute timestamp;
  ActivityLabel label = ActivityLabel::kNoActivity;
  bool present = true;

  friend bool operator==(const ActivityEntry&, const ActivityEntry&) = default;
};

/// Per-minute labels of one day, strictly increasing in time. Only minutes
/// with a frame are listed.
struct ActivitySeries {
  Date day;
  std::vector<ActivityEntry> entries;

  friend bool operator==(const ActivitySeries&, const ActivitySeries&) = default;
};

/// Throws Error(kPrecondition) if a fix falls outside `day` or the fixes
/// are not strictly increasing.
ActivitySeries build_series(std::span<const PersonFix> track, const ZoneMap& zones, Date day,
                            std::chrono::minutes utc_offset = {});

inline constexpr int kDefaultMinBlock = 30;

/// Runs of `activity` are maximal stretches of consecutive minutes. Runs
/// closer than `min_block` minutes are joined; the day is interrupted when
/// at least two joined runs span `min_block` minutes or more each.
bool flag_interrupted(const ActivitySeries& series, ActivityLabel activity, int min_block);

struct DailyReport {
  Date date;
  int sleeping_minutes = 0;
  int daily_minutes = 0;
  int none_minutes = 0;
  int coverage_minutes = 0;
  bool interrupted_sleep = false;

  double sleeping_hours() const { return sleeping_minutes / 60.0; }
  double daily_hours() const { return daily_minutes / 60.0; }
  double none_hours() const { return none_minutes / 60.0; }

  friend bool operator==(const DailyReport&, const DailyReport&) = default;
};

DailyReport daily_report(const ActivitySeries& series, int min_block = kDefaultMinBlock);

struct DescriptiveStats {
  std::size_t count = 0;
  double mean = 0.0;
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  double min = 0.0;
  double max = 0.0;
};

struct SummaryStats {
  DescriptiveStats sleeping;
  DescriptiveStats daily;
  DescriptiveStats none;
};

/// Linear interpolation between order statistics at rank p * (n - 1).
/// `sorted` must be ascending and non-empty.
double quantile(std::span<const double> sorted, double p);

DescriptiveStats describe(std::span<const double> values);

/// Hours per activity across days. Throws Error(kEmptyInput).
SummaryStats summary_stats(std::span<const DailyReport> reports);

/// `timestamp,label`, all days in one file.
void write_activity_csv(std::ostream& out, std::span<const ActivitySeries> series);
/// `date,sleeping_hours,daily_hours,none_hours,coverage_minutes,interrupted_sleep`
void write_report_csv(std::ostream& out, std::span<const DailyReport> reports);
void write_stats_table(std::ostream& out, const SummaryStats& stats);

}  // namespace tsa

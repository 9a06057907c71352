#include "tsa/activity.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "tsa/error.hpp"

namespace tsa {

std::string_view to_string(ActivityLabel label) noexcept {
  switch (label) {
    case ActivityLabel::kSleeping: return "Sleeping";
    case ActivityLabel::kDaily: return "Daily";
    case ActivityLabel::kNoActivity: return "NoActivity";
  }
  return "NoActivity";
}

std::optional<ActivityLabel> parse_activity_label(std::string_view text) {
  for (const auto l : {ActivityLabel::kSleeping, ActivityLabel::kDaily, ActivityLabel::kNoActivity}) {
    if (text == to_string(l)) return l;
  }
  return std::nullopt;
}

void ZoneMap::validate() const {
  bed.validate();
  table.validate();
  if (bed.overlaps(table)) {
    throw Error(ErrorCode::kInvalidZone,
                fmt::format("zones '{}' and '{}' overlap", bed.label, table.label));
  }
}

ActivityLabel classify(std::optional<Point> point, const ZoneMap& zones) {
  if (!point) return ActivityLabel::kNoActivity;
  if (zones.bed.contains(*point)) return ActivityLabel::kSleeping;
  if (zones.table.contains(*point)) return ActivityLabel::kDaily;
  return ActivityLabel::kNoActivity;
}

ActivitySeries build_series(std::span<const PersonFix> track, const ZoneMap& zones, Date day,
                            std::chrono::minutes utc_offset) {
  ActivitySeries series{day, {}};
  series.entries.reserve(track.size());
  for (const auto& fix : track) {
    if (day_of(fix.timestamp, utc_offset) != day) {
      throw Error(ErrorCode::kPrecondition,
                  fmt::format("{} is outside day {}", format_timestamp(fix.timestamp), format_date(day)));
    }
    if (!series.entries.empty() && fix.timestamp <= series.entries.back().timestamp) {
      throw Error(ErrorCode::kPrecondition, "track minutes must be strictly increasing");
    }
    series.entries.push_back({fix.timestamp, classify(fix.position, zones), true});
  }
  return series;
}

bool flag_interrupted(const ActivitySeries& series, ActivityLabel activity, int min_block) {
  if (min_block < 1) throw Error(ErrorCode::kPrecondition, "min_block must be at least 1");

  struct Run {
    Minute first;
    Minute last;
  };
  std::vector<Run> runs;
  for (const auto& e : series.entries) {
    if (!e.present || e.label != activity) continue;
    // A gap of fewer than min_block minutes keeps the block going.
    if (!runs.empty() && (e.timestamp - runs.back().last).count() - 1 < min_block) {
      runs.back().last = e.timestamp;
    } else {
      runs.push_back({e.timestamp, e.timestamp});
    }
  }
  const auto long_runs = std::count_if(runs.begin(), runs.end(), [&](const Run& r) {
    return (r.last - r.first).count() + 1 >= min_block;
  });
  return long_runs >= 2;
}

DailyReport daily_report(const ActivitySeries& series, int min_block) {
  DailyReport report;
  report.date = series.day;
  for (const auto& e : series.entries) {
    if (!e.present) continue;
    ++report.coverage_minutes;
    switch (e.label) {
      case ActivityLabel::kSleeping: ++report.sleeping_minutes; break;
      case ActivityLabel::kDaily: ++report.daily_minutes; break;
      case ActivityLabel::kNoActivity: ++report.none_minutes; break;
    }
  }
  report.interrupted_sleep = flag_interrupted(series, ActivityLabel::kSleeping, min_block);
  return report;
}

double quantile(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw Error(ErrorCode::kEmptyInput, "quantile of an empty sample");
  const double rank = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(rank));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = rank - static_cast<double>(lo);
  return sorted[lo] + (sorted[hi] - sorted[lo]) * frac;
}

DescriptiveStats describe(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::kEmptyInput, "no values to describe");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  DescriptiveStats s;
  s.count = sorted.size();
  double sum = 0.0;
  for (const double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.count);
  s.median = quantile(sorted, 0.5);
  s.q1 = quantile(sorted, 0.25);
  s.q3 = quantile(sorted, 0.75);
  s.min = sorted.front();
  s.max = sorted.back();
  return s;
}

SummaryStats summary_stats(std::span<const DailyReport> reports) {
  if (reports.empty()) throw Error(ErrorCode::kEmptyInput, "no daily reports");
  std::vector<double> sleeping, daily, none;
  for (const auto& r : reports) {
    sleeping.push_back(r.sleeping_hours());
    daily.push_back(r.daily_hours());
    none.push_back(r.none_hours());
  }
  return {describe(sleeping), describe(daily), describe(none)};
}

void write_activity_csv(std::ostream& out, std::span<const ActivitySeries> series) {
  out << "timestamp,label\n";
  for (const auto& day : series) {
    for (const auto& e : day.entries) {
      out << format_timestamp(e.timestamp) << ',' << to_string(e.label) << '\n';
    }
  }
}

void write_report_csv(std::ostream& out, std::span<const DailyReport> reports) {
  out << "date,sleeping_hours,daily_hours,none_hours,coverage_minutes,interrupted_sleep\n";
  for (const auto& r : reports) {
    out << fmt::format("{},{:.4f},{:.4f},{:.4f},{},{}\n", format_date(r.date), r.sleeping_hours(),
                       r.daily_hours(), r.none_hours(), r.coverage_minutes,
                       r.interrupted_sleep ? "true" : "false");
  }
}

void write_stats_table(std::ostream& out, const SummaryStats& stats) {
  out << fmt::format("{:<12}{:>6}{:>10}{:>10}{:>10}{:>10}{:>10}{:>10}\n", "activity", "days", "mean",
                     "median", "q1", "q3", "min", "max");
  const auto row = [&](std::string_view name, const DescriptiveStats& s) {
    out << fmt::format("{:<12}{:>6}{:>10.4f}{:>10.4f}{:>10.4f}{:>10.4f}{:>10.4f}{:>10.4f}\n", name,
                       s.count, s.mean, s.median, s.q1, s.q3, s.min, s.max);
  };
  row("sleeping", stats.sleeping);
  row("daily", stats.daily);
  row("none", stats.none);
}

}  // namespace tsa

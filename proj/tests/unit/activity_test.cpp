#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "tsa/activity.hpp"
#include "tsa/error.hpp"
#include "tsa/pipeline.hpp"
#include "tsa/synth.hpp"

namespace tsa {
namespace {

using namespace std::chrono_literals;

const Date kDay = std::chrono::year{2021} / 4 / 7;
const Minute kT0{kDay};

ZoneMap zones() { return {{"bed", 1, 3, 5, 9}, {"table", 9, 1, 13, 5}}; }

std::vector<PersonFix> fixes(int minutes, std::optional<Point> p, int start = 0) {
  std::vector<PersonFix> out;
  for (int m = 0; m < minutes; ++m) out.push_back({kT0 + std::chrono::minutes(start + m), p});
  return out;
}

ActivitySeries sleep_runs(std::initializer_list<std::pair<int, int>> runs) {
  ActivitySeries s{kDay, {}};
  for (const auto& [start, len] : runs) {
    for (int m = start; m < start + len; ++m) {
      s.entries.push_back({kT0 + std::chrono::minutes(m), ActivityLabel::kSleeping, true});
    }
  }
  return s;
}

TEST(Classify, Zones) {
  EXPECT_EQ(classify(Point{3, 6}, zones()), ActivityLabel::kSleeping);
  EXPECT_EQ(classify(Point{11, 3}, zones()), ActivityLabel::kDaily);
  EXPECT_EQ(classify(Point{7, 7}, zones()), ActivityLabel::kNoActivity);
  EXPECT_EQ(classify(std::nullopt, zones()), ActivityLabel::kNoActivity);
  EXPECT_EQ(classify(Point{5, 9}, zones()), ActivityLabel::kSleeping);
}

TEST(Classify, LabelNames) {
  for (const auto l : {ActivityLabel::kSleeping, ActivityLabel::kDaily, ActivityLabel::kNoActivity}) {
    EXPECT_EQ(parse_activity_label(to_string(l)), l);
  }
  EXPECT_FALSE(parse_activity_label("sleeping"));
}

TEST(ZoneMap, OverlapRejected) {
  EXPECT_NO_THROW(zones().validate());
  ZoneMap bad = zones();
  bad.table = {"table", 4, 4, 8, 8};
  EXPECT_THROW(bad.validate(), Error);
}

TEST(BuildSeries, Preconditions) {
  auto f = fixes(3, Point{3, 6});
  EXPECT_EQ(build_series(f, zones(), kDay).entries.size(), 3u);
  std::swap(f[0], f[1]);
  EXPECT_THROW(build_series(f, zones(), kDay), Error);
  const auto late = fixes(1, Point{3, 6}, 1440);
  EXPECT_THROW(build_series(late, zones(), kDay), Error);
  EXPECT_NO_THROW(build_series(late, zones(), kDay + std::chrono::days{1}));
}

TEST(DailyReport, HoursExamples) {
  auto f = fixes(60, Point{3, 6});
  const auto table = fixes(30, Point{11, 3}, 60);
  f.insert(f.end(), table.begin(), table.end());
  const auto r = daily_report(build_series(f, zones(), kDay));
  EXPECT_DOUBLE_EQ(r.sleeping_hours(), 1.0);
  EXPECT_DOUBLE_EQ(r.daily_hours(), 0.5);
  EXPECT_EQ(r.coverage_minutes, 90);

  const auto full = daily_report(build_series(fixes(1440, Point{3, 6}), zones(), kDay));
  EXPECT_DOUBLE_EQ(full.sleeping_hours(), 24.0);
  EXPECT_DOUBLE_EQ(full.none_hours(), 0.0);
}

TEST(DailyReport, PartitionIdentityOnRandomTracks) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ux(0, 15.99), uy(0, 11.99);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<PersonFix> f;
    for (int m = 0; m < 1440; ++m) {
      if (rng() % 3 == 0) continue;
      std::optional<Point> p;
      if (rng() % 4) p = Point{ux(rng), uy(rng)};
      f.push_back({kT0 + std::chrono::minutes(m), p});
    }
    const auto r = daily_report(build_series(f, zones(), kDay));
    EXPECT_EQ(r.sleeping_minutes + r.daily_minutes + r.none_minutes, r.coverage_minutes);
    EXPECT_EQ(r.coverage_minutes, static_cast<int>(f.size()));
    EXPECT_LE(r.coverage_minutes, 1440);

    // Growing the bed zone never decreases sleeping minutes.
    ZoneMap bigger = zones();
    bigger.bed.x0 = 0;
    bigger.bed.y0 = 2;
    const auto r2 = daily_report(build_series(f, bigger, kDay));
    EXPECT_GE(r2.sleeping_minutes, r.sleeping_minutes);
  }
}

TEST(Interrupted, Examples) {
  EXPECT_FALSE(flag_interrupted(sleep_runs({{0, 480}}), ActivityLabel::kSleeping, 30));
  EXPECT_TRUE(flag_interrupted(sleep_runs({{0, 120}, {180, 120}}), ActivityLabel::kSleeping, 30));
  EXPECT_FALSE(flag_interrupted(ActivitySeries{kDay, {}}, ActivityLabel::kSleeping, 30));
  // Short gaps join; short runs do not count.
  EXPECT_FALSE(flag_interrupted(sleep_runs({{0, 120}, {130, 120}}), ActivityLabel::kSleeping, 30));
  EXPECT_FALSE(flag_interrupted(sleep_runs({{0, 120}, {300, 10}}), ActivityLabel::kSleeping, 30));
  EXPECT_TRUE(flag_interrupted(sleep_runs({{0, 30}, {90, 30}}), ActivityLabel::kSleeping, 30));
  EXPECT_THROW(flag_interrupted(sleep_runs({}), ActivityLabel::kSleeping, 0), Error);
}

TEST(Stats, Examples) {
  const double one[] = {8.0};
  const auto s = describe(one);
  EXPECT_EQ(s.mean, 8.0);
  EXPECT_EQ(s.median, 8.0);
  EXPECT_EQ(s.q1, 8.0);
  EXPECT_EQ(s.q3, 8.0);
  const double two[] = {10.0, 8.0};
  const auto t = describe(two);
  EXPECT_EQ(t.mean, 9.0);
  EXPECT_EQ(t.median, 9.0);
  EXPECT_EQ(t.q1, 8.5);
  EXPECT_EQ(t.q3, 9.5);
  EXPECT_EQ(t.min, 8.0);
  EXPECT_EQ(t.max, 10.0);
  EXPECT_THROW(describe(std::span<const double>{}), Error);
  EXPECT_THROW(summary_stats(std::span<const DailyReport>{}), Error);
}

TEST(Stats, MatchBruteForce) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<DailyReport> reports;
    const int n = 1 + static_cast<int>(rng() % 40);
    for (int i = 0; i < n; ++i) {
      DailyReport r;
      r.sleeping_minutes = static_cast<int>(rng() % 720);
      r.daily_minutes = static_cast<int>(rng() % 720);
      r.none_minutes = 1440 - r.sleeping_minutes - r.daily_minutes;
      reports.push_back(r);
    }
    const auto stats = summary_stats(reports);
    long double sum = 0;
    std::vector<double> hours;
    for (const auto& r : reports) {
      sum += static_cast<long double>(r.sleeping_minutes) / 60.0L;
      hours.push_back(r.sleeping_minutes / 60.0);
    }
    EXPECT_NEAR(stats.sleeping.mean, static_cast<double>(sum / n), 1e-12);
    // Median by nth_element and averaging the two middle values.
    std::vector<double> h = hours;
    std::nth_element(h.begin(), h.begin() + n / 2, h.end());
    double median = h[n / 2];
    if (n % 2 == 0) {
      median = (median + *std::max_element(h.begin(), h.begin() + n / 2)) / 2.0;
    }
    EXPECT_NEAR(stats.sleeping.median, median, 1e-12);
    EXPECT_EQ(stats.sleeping.min, *std::min_element(hours.begin(), hours.end()));
    EXPECT_EQ(stats.sleeping.max, *std::max_element(hours.begin(), hours.end()));
    EXPECT_LE(stats.sleeping.q1, stats.sleeping.median);
    EXPECT_LE(stats.sleeping.median, stats.sleeping.q3);
    EXPECT_EQ(stats.sleeping.count, static_cast<std::size_t>(n));
  }
}

TEST(Series, SimulatedDayMatchesTruth) {
  Scenario s;
  s.start_date = kDay;
  s.zones = default_zone_map();
  s.schedule = {{{ActivityLabel::kSleeping, 0, 400, {3, 6}},
                 {ActivityLabel::kDaily, 430, 700, {11, 3}},
                 {ActivityLabel::kSleeping, 760, 800, {3, 6}}}};
  const auto em = emit(s);
  PipelineOptions opt;
  opt.zones = s.zones;
  const auto day = process_day(kDay, em.series.samples, opt);
  ASSERT_EQ(day.series.entries.size(), em.truth.minutes.size());
  for (std::size_t i = 0; i < em.truth.minutes.size(); ++i) {
    EXPECT_EQ(day.series.entries[i].timestamp, em.truth.minutes[i].timestamp);
    EXPECT_EQ(day.series.entries[i].label, em.truth.minutes[i].label) << i;
  }
  EXPECT_EQ(day.report.sleeping_minutes, 440);
  EXPECT_EQ(day.report.daily_minutes, 270);
  EXPECT_TRUE(day.report.interrupted_sleep);
}

TEST(Csv, ReportAndActivityFormat) {
  auto f = fixes(2, Point{3, 6});
  const auto series = build_series(f, zones(), kDay);
  std::ostringstream a;
  write_activity_csv(a, std::span(&series, 1));
  EXPECT_EQ(a.str(), "timestamp,label\n2021-04-07T00:00:00Z,Sleeping\n2021-04-07T00:01:00Z,Sleeping\n");
  const auto r = daily_report(series);
  std::ostringstream b;
  write_report_csv(b, std::span(&r, 1));
  EXPECT_EQ(b.str(),
            "date,sleeping_hours,daily_hours,none_hours,coverage_minutes,interrupted_sleep\n"
            "2021-04-07,0.0333,0.0000,0.0000,2,false\n");
}

}  // namespace
}  // namespace tsa

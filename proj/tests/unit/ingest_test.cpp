#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "tsa/error.hpp"
#include "tsa/ingest.hpp"
#include "tsa/synth.hpp"

namespace tsa {
namespace {

using std::chrono::minutes;

std::string row_of(double v) {
  TemperatureRow row;
  row.fill(v);
  return format_frame_line(row);
}

FrameSeries parse_text(const std::string& ts, const std::string& frames) {
  std::istringstream a(ts);
  std::istringstream b(frames);
  return parse_recording(a, b);
}

Minute at(int y, unsigned m, unsigned d, int hh, int mm) {
  return Minute{std::chrono::sys_days{std::chrono::year{y} / m / d}} + std::chrono::hours{hh} + minutes{mm};
}

TEST(ParseRecording, ThreeLinesInOrder) {
  const auto s = parse_text("2021-04-07T00:00:00Z\n2021-04-07T00:01:00Z\n2021-04-07T00:02:00Z\n",
                            row_of(20) + "\n" + row_of(21) + "\n" + row_of(22) + "\n");
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s.samples[0].timestamp, at(2021, 4, 7, 0, 0));
  EXPECT_EQ(s.samples[2].timestamp, at(2021, 4, 7, 0, 2));
  EXPECT_DOUBLE_EQ(s.samples[1].values[191], 21.0);
}

TEST(ParseRecording, EmptyFilesGiveEmptySeries) { EXPECT_TRUE(parse_text("", "").empty()); }

TEST(ParseRecording, SortsAndKeepsFirstDuplicate) {
  const auto s = parse_text("2021-04-07T00:02:00Z\n2021-04-07T00:01:00Z\n2021-04-07T00:02:30Z\n",
                            row_of(22) + "\n" + row_of(21) + "\n" + row_of(99) + "\n");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_DOUBLE_EQ(s.samples[0].values[0], 21.0);
  EXPECT_DOUBLE_EQ(s.samples[1].values[0], 22.0);
}

TEST(ParseRecording, LineCountMismatch) {
  try {
    parse_text("2021-04-07T00:00:00Z\n2021-04-07T00:01:00Z\n", row_of(20) + "\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLineCountMismatch);
  }
}

TEST(ParseRecording, ReportsLineAndField) {
  TemperatureRow row;
  row.fill(20.0);
  std::string line = format_frame_line(row);
  // Corrupt field 5.
  std::size_t pos = 0;
  for (int i = 0; i < 5; ++i) pos = line.find(',', pos) + 1;
  line.replace(pos, 5, "2x.00");
  try {
    parse_text("2021-04-07T00:00:00Z\n2021-04-07T00:01:00Z\n", row_of(20) + "\n" + line + "\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.field(), 5u);
  }
}

TEST(ParseRecording, WrongFieldCount) {
  EXPECT_THROW(parse_text("2021-04-07T00:00:00Z\n", "20.0,21.0\n"), ParseError);
  EXPECT_THROW(parse_text("2021-04-07T00:00:00Z\n", row_of(20) + ",20.0\n"), ParseError);
}

TEST(ParseRecording, NonFiniteAndImplausible) {
  std::string nan_line = row_of(20);
  nan_line.replace(0, 5, "nan");
  try {
    parse_text("2021-04-07T00:00:00Z\n", nan_line + "\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonFiniteTemperature);
    EXPECT_EQ(e.field(), 0u);
  }
  try {
    parse_text("2021-04-07T00:00:00Z\n", row_of(301) + "\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kImplausibleTemperature);
  }
}

TEST(ParseRecording, BadTimestamp) {
  try {
    parse_text("yesterday\n", row_of(20) + "\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
}

TEST(ParseRecording, MissingFileIsIoError) {
  try {
    parse_recording(RawRecording{"/nonexistent/ts.txt", "/nonexistent/frames.csv"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST(Timestamp, AcceptedForms) {
  const Minute expect = at(2021, 4, 7, 13, 5);
  EXPECT_EQ(parse_timestamp("2021-04-07T13:05:00Z"), expect);
  EXPECT_EQ(parse_timestamp("2021-04-07 13:05"), expect);
  EXPECT_EQ(parse_timestamp("2021-04-07T13:05:59.999Z"), expect);
  EXPECT_EQ(parse_timestamp("2021-04-07T15:05:00+02:00"), expect);
  EXPECT_EQ(parse_timestamp("2021-04-07T08:05:00-0500"), expect);
  EXPECT_FALSE(parse_timestamp("2021-02-30T00:00:00Z"));
  EXPECT_FALSE(parse_timestamp("2021-04-07T24:00:00Z"));
  EXPECT_FALSE(parse_timestamp("2021-04-07T13:05:00Zjunk"));
  EXPECT_EQ(format_timestamp(expect), "2021-04-07T13:05:00Z");
}

FrameSeries minutes_on(Date day, int first, int count) {
  FrameSeries s;
  for (int m = first; m < first + count; ++m) s.samples.push_back({Minute{day} + minutes{m}, {}});
  return s;
}

const Date kDay = std::chrono::sys_days{std::chrono::year{2021} / 4 / 7};

TEST(DayCoverage, ThresholdRule) {
  const auto c721 = day_coverage(minutes_on(kDay, 0, 721));
  ASSERT_EQ(c721.size(), 1u);
  EXPECT_EQ(c721[0].minutes_present, 721);
  EXPECT_TRUE(c721[0].retained);
  EXPECT_TRUE(day_coverage(minutes_on(kDay, 0, 720))[0].retained);
  EXPECT_FALSE(day_coverage(minutes_on(kDay, 0, 719))[0].retained);
}

TEST(DayCoverage, EmptySeries) { EXPECT_TRUE(day_coverage(FrameSeries{}).empty()); }

TEST(DayCoverage, GapDaysListedWithZero) {
  FrameSeries s = minutes_on(kDay, 0, 10);
  const auto later = minutes_on(kDay + std::chrono::days{3}, 0, 10);
  s.samples.insert(s.samples.end(), later.samples.begin(), later.samples.end());
  const auto cov = day_coverage(s);
  ASSERT_EQ(cov.size(), 4u);
  EXPECT_EQ(cov[1].minutes_present, 0);
  EXPECT_EQ(cov[2].minutes_present, 0);
  EXPECT_EQ(cov[3].date, kDay + std::chrono::days{3});
}

TEST(DayCoverage, OffsetShiftsDayBoundary) {
  // 23:00-23:59 UTC on the 7th is 01:00-01:59 on the 8th at UTC+2.
  const auto s = minutes_on(kDay, 23 * 60, 60);
  const auto cov = day_coverage(s, minutes{120});
  ASSERT_EQ(cov.size(), 1u);
  EXPECT_EQ(cov[0].date, kDay + std::chrono::days{1});
}

TEST(DayCoverage, MatchesBruteForceDistinctMinutes) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    FrameSeries s;
    std::uniform_int_distribution<int> minute(0, 3 * kMinutesPerDay - 1);
    std::set<int> chosen;
    for (int i = 0; i < 1500; ++i) chosen.insert(minute(rng));
    for (const int m : chosen) s.samples.push_back({Minute{kDay} + minutes{m}, {}});
    const auto cov = day_coverage(s);
    const int first_day = *chosen.begin() / kMinutesPerDay;
    for (const auto& c : cov) {
      const int d = static_cast<int>((c.date - kDay).count());
      const int brute = static_cast<int>(std::count_if(chosen.begin(), chosen.end(), [&](int m) {
        return m / kMinutesPerDay == d;
      }));
      EXPECT_EQ(c.minutes_present, brute);
      EXPECT_LE(c.minutes_present, kMinutesPerDay);
      EXPECT_EQ(c.retained, brute >= 720);
    }
    EXPECT_EQ(cov.front().date, kDay + std::chrono::days{first_day});
  }
}

TEST(FilterRetained, IdentityAndEmpty) {
  const FrameSeries full = minutes_on(kDay, 0, 800);
  EXPECT_EQ(filter_retained(full, day_coverage(full)), full);
  const FrameSeries sparse = minutes_on(kDay, 0, 100);
  EXPECT_TRUE(filter_retained(sparse, day_coverage(sparse)).empty());
}

TEST(FilterRetained, SetEqualityWithBruteForce) {
  FrameSeries s = minutes_on(kDay, 0, 900);
  const auto b = minutes_on(kDay + std::chrono::days{1}, 100, 300);
  const auto c = minutes_on(kDay + std::chrono::days{2}, 0, 1440);
  s.samples.insert(s.samples.end(), b.samples.begin(), b.samples.end());
  s.samples.insert(s.samples.end(), c.samples.begin(), c.samples.end());
  const auto kept = filter_retained(s, day_coverage(s));
  EXPECT_EQ(kept.size(), 900u + 1440u);
  for (const auto& x : kept.samples) EXPECT_NE(day_of(x.timestamp), kDay + std::chrono::days{1});
}

TEST(FileFormat, QuantizedValuesRoundTripBitExact) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> t(-40.0, 300.0);
  FrameSeries s;
  for (int i = 0; i < 50; ++i) {
    FrameSample sample{Minute{kDay} + minutes{i}, {}};
    for (auto& v : sample.values) v = quantize_temperature(t(rng));
    s.samples.push_back(sample);
  }
  std::ostringstream ts, fr;
  for (const auto& x : s.samples) {
    ts << format_timestamp(x.timestamp) << '\n';
    fr << format_frame_line(x.values) << '\n';
  }
  EXPECT_EQ(parse_text(ts.str(), fr.str()), s);
}

TEST(FileFormat, TwoFractionalDigits) {
  TemperatureRow row;
  row.fill(0.0);
  row[0] = -0.5;
  row[1] = 20.006;
  row[2] = 36.4;
  const std::string line = format_frame_line(row);
  EXPECT_EQ(line.substr(0, 18), "-0.50,20.01,36.40,");
}

TEST(ParseRecording, SimulatorRecordingCount) {
  const Scenario sc = make_reference_scenario();
  const Emission em = emit(sc);
  const auto dir = std::filesystem::temp_directory_path() / "tsa_ingest_sim";
  std::filesystem::remove_all(dir);
  const auto files = write_emission(sc, em, dir);
  const FrameSeries parsed = parse_recording(files.recording);
  EXPECT_EQ(parsed.size(), em.series.size());
  const auto cov = day_coverage(parsed);
  const auto kept = filter_retained(parsed, cov);
  std::size_t dense = 0;
  for (const auto& d : em.truth.days) dense += d.retained ? d.present_minutes : 0;
  EXPECT_EQ(kept.size(), dense);
  std::filesystem::remove_all(dir);
}

TEST(CoverageCsv, Format) {
  std::ostringstream out;
  const DayCoverage rows[] = {{kDay, 721, true}, {kDay + std::chrono::days{1}, 0, false}};
  write_coverage_csv(out, rows);
  EXPECT_EQ(out.str(), "date,minutes_present,retained\n2021-04-07,721,true\n2021-04-08,0,false\n");
}

}  // namespace
}  // namespace tsa

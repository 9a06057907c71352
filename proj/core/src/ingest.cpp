#include "tsa/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <set>

#include <fmt/format.h>

#include "tsa/error.hpp"
#include "tsa/io.hpp"

namespace tsa {

namespace {

std::string_view trim_spaces(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

TemperatureRow parse_frame_line(std::string_view line, const std::string& file, std::size_t lineno) {
  TemperatureRow row{};
  std::size_t field = 0;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = line.find(',', pos);
    const std::string_view token =
        trim_spaces(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                      : comma - pos));
    if (field >= kGridCells) {
      throw ParseError(ErrorCode::kParse, file, lineno, field,
                       fmt::format("expected {} values", kGridCells));
    }
    double value = 0.0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
      throw ParseError(ErrorCode::kParse, file, lineno, field,
                       fmt::format("not a decimal value: '{}'", token));
    }
    if (!std::isfinite(value)) {
      throw ParseError(ErrorCode::kNonFiniteTemperature, file, lineno, field,
                       fmt::format("non-finite temperature '{}'", token));
    }
    if (value < kMinTemperature || value > kMaxTemperature) {
      throw ParseError(ErrorCode::kImplausibleTemperature, file, lineno, field,
                       fmt::format("temperature {} outside [{}, {}]", value, kMinTemperature,
                                   kMaxTemperature));
    }
    row[field++] = value;
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (field != kGridCells) {
    throw ParseError(ErrorCode::kParse, file, lineno, ParseError::npos,
                     fmt::format("expected {} values, found {}", kGridCells, field));
  }
  return row;
}

}  // namespace

FrameSeries parse_recording(std::istream& timestamps, std::istream& frames,
                            const std::string& timestamps_name, const std::string& frames_name) {
  const auto ts_lines = read_lines(timestamps);
  const auto frame_lines = read_lines(frames);
  if (ts_lines.size() != frame_lines.size()) {
    throw Error(ErrorCode::kLineCountMismatch,
                fmt::format("{} has {} lines but {} has {}", timestamps_name, ts_lines.size(),
                            frames_name, frame_lines.size()));
  }

  FrameSeries series;
  series.samples.reserve(ts_lines.size());
  for (std::size_t i = 0; i < ts_lines.size(); ++i) {
    const auto ts = parse_timestamp(ts_lines[i]);
    if (!ts) {
      throw ParseError(ErrorCode::kParse, timestamps_name, i + 1, 0,
                       fmt::format("not an ISO-8601 timestamp: '{}'", ts_lines[i]));
    }
    series.samples.push_back({*ts, parse_frame_line(frame_lines[i], frames_name, i + 1)});
  }

  std::stable_sort(series.samples.begin(), series.samples.end(),
                   [](const FrameSample& a, const FrameSample& b) { return a.timestamp < b.timestamp; });
  const auto dup = std::unique(series.samples.begin(), series.samples.end(),
                               [](const FrameSample& a, const FrameSample& b) {
                                 return a.timestamp == b.timestamp;
                               });
  series.samples.erase(dup, series.samples.end());
  return series;
}

FrameSeries parse_recording(const RawRecording& recording) {
  std::ifstream ts(recording.timestamp_path);
  if (!ts) throw Error(ErrorCode::kIo, "cannot read " + recording.timestamp_path.string());
  std::ifstream frames(recording.frames_path);
  if (!frames) throw Error(ErrorCode::kIo, "cannot read " + recording.frames_path.string());
  return parse_recording(ts, frames, recording.timestamp_path.string(),
                         recording.frames_path.string());
}

std::vector<DayCoverage> day_coverage(const FrameSeries& series, std::chrono::minutes utc_offset) {
  std::vector<DayCoverage> out;
  if (series.empty()) return out;

  std::map<Date, std::set<Minute>> minutes;
  Date first = day_of(series.samples.front().timestamp, utc_offset);
  Date last = first;
  for (const auto& s : series.samples) {
    const Date d = day_of(s.timestamp, utc_offset);
    first = std::min(first, d);
    last = std::max(last, d);
    minutes[d].insert(s.timestamp);
  }
  for (Date d = first; d <= last; d += std::chrono::days{1}) {
    const auto it = minutes.find(d);
    const int present = it == minutes.end() ? 0 : static_cast<int>(it->second.size());
    out.push_back({d, present, present >= kRetainMinutes});
  }
  return out;
}

FrameSeries filter_retained(const FrameSeries& series, std::span<const DayCoverage> coverage,
                            std::chrono::minutes utc_offset) {
  std::set<Date> retained;
  for (const auto& c : coverage) {
    if (c.retained) retained.insert(c.date);
  }
  FrameSeries out;
  for (const auto& s : series.samples) {
    if (retained.contains(day_of(s.timestamp, utc_offset))) out.samples.push_back(s);
  }
  return out;
}

double quantize_temperature(double celsius) {
  return static_cast<double>(std::llround(celsius * 100.0)) / 100.0;
}

std::string format_frame_line(const TemperatureRow& values) {
  std::string line;
  line.reserve(values.size() * 7);
  char buf[32];
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) line.push_back(',');
    long long centi = std::llround(values[i] * 100.0);
    if (centi < 0) {
      line.push_back('-');
      centi = -centi;
    }
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, centi / 100);
    line.append(buf, end);
    line.push_back('.');
    line.push_back(static_cast<char>('0' + (centi % 100) / 10));
    line.push_back(static_cast<char>('0' + centi % 10));
  }
  return line;
}

void write_recording(const FrameSeries& series, const RawRecording& recording) {
  write_file_atomic(recording.timestamp_path, [&](std::ostream& out) {
    for (const auto& s : series.samples) out << format_timestamp(s.timestamp) << '\n';
  });
  write_file_atomic(recording.frames_path, [&](std::ostream& out) {
    for (const auto& s : series.samples) out << format_frame_line(s.values) << '\n';
  });
}

void write_coverage_csv(std::ostream& out, std::span<const DayCoverage> coverage) {
  out << "date,minutes_present,retained\n";
  for (const auto& c : coverage) {
    out << format_date(c.date) << ',' << c.minutes_present << ',' << (c.retained ? "true" : "false")
        << '\n';
  }
}

}  // namespace tsa

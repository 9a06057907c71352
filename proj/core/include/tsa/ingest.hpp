#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "tsa/grid.hpp"
#include "tsa/timestamp.hpp"

namespace tsa {

// Sensor plausibility bounds, °C.
inline constexpr double kMinTemperature = -40.0;
inline constexpr double kMaxTemperature = 300.0;

// A day is retained when at least half of its minutes carry a frame.
inline constexpr int kRetainMinutes = kMinutesPerDay / 2;

using TemperatureRow = std::array<double, kGridCells>;

/// The two files a recording is stored in. Line i of the timestamp file
/// belongs to line i of the frames file.
struct RawRecording {
  std::filesystem::path timestamp_path;
  std::filesystem::path frames_path;
};

struct FrameSample {
  Minute timestamp;
  TemperatureRow values{};

  friend bool operator==(const FrameSample&, const FrameSample&) = default;
};

/// Samples ordered by strictly increasing timestamp.
struct FrameSeries {
  std::vector<FrameSample> samples;

  std::size_t size() const noexcept { return samples.size(); }
  bool empty() const noexcept { return samples.empty(); }

  friend bool operator==(const FrameSeries&, const FrameSeries&) = default;
};

struct DayCoverage {
  Date date;
  int minutes_present = 0;
  bool retained = false;

  friend bool operator==(const DayCoverage&, const DayCoverage&) = default;
};

/// Reads and merges a two-file recording. Samples come back sorted by
/// timestamp; repeated timestamps keep the first occurrence in file order.
///
/// Throws Error(kIo) for unreadable files, Error(kLineCountMismatch) when the
/// files differ in length, and ParseError for malformed lines, non-finite
/// values or values outside [kMinTemperature, kMaxTemperature].
FrameSeries parse_recording(const RawRecording& recording);

/// Same as parse_recording over already-open streams. The names are only
/// used in diagnostics.
FrameSeries parse_recording(std::istream& timestamps, std::istream& frames,
                            const std::string& timestamps_name = "timestamps",
                            const std::string& frames_name = "frames");

/// One entry per calendar day from the first to the last sample's day,
/// including days without any sample.
std::vector<DayCoverage> day_coverage(const FrameSeries& series,
                                      std::chrono::minutes utc_offset = {});

/// Samples whose day is marked retained in `coverage`.
FrameSeries filter_retained(const FrameSeries& series, std::span<const DayCoverage> coverage,
                            std::chrono::minutes utc_offset = {});

// File format helpers. Temperatures are written with exactly two fractional
// digits; quantize_temperature gives the value a reader will see.
double quantize_temperature(double celsius);
std::string format_frame_line(const TemperatureRow& values);
void write_recording(const FrameSeries& series, const RawRecording& recording);

/// `date,minutes_present,retained`
void write_coverage_csv(std::ostream& out, std::span<const DayCoverage> coverage);

}  // namespace tsa

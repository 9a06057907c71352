#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "tsa/activity.hpp"
#include "tsa/blobdetect.hpp"
#include "tsa/ingest.hpp"
#include "tsa/spatial.hpp"
#include "tsa/tracking.hpp"

namespace tsa {

/// Contents of a zones config file:
/// `{"bed": {...}, "table": {...}, "static": [{"label": "heater", ...}]}`.
struct ZoneConfig {
  ZoneMap zones;
  std::vector<ZoneRect> static_zones;
};

/// Throws Error(kInvalidConfig) for malformed JSON or missing fields and
/// Error(kInvalidZone) for rectangles that fail validation.
ZoneConfig parse_zone_config(std::string_view json_text);
ZoneConfig load_zone_config(const std::filesystem::path& path);
/// Accepts either a bare array of zones or an object with a "static" array.
std::vector<ZoneRect> load_static_zones(const std::filesystem::path& path);

struct PipelineOptions {
  DetectConfig detect;
  ZoneMap zones;
  std::vector<ZoneRect> static_zones;
  std::chrono::minutes utc_offset{0};
  int min_block = kDefaultMinBlock;
};

struct DayResult {
  Date date;
  std::vector<FrameDetections> detections;
  CentroidTrack track;
  std::vector<PersonFix> person;
  ActivitySeries series;
  DailyReport report;
  SpatialDistribution distribution;
};

struct PipelineResult {
  std::vector<DayCoverage> coverage;
  std::vector<DayResult> days;          // retained days only, in date order
  std::optional<SummaryStats> stats;    // empty when no day was retained
};

/// Detection and tracking for one day's samples.
DayResult process_day(Date date, std::span<const FrameSample> samples,
                      const PipelineOptions& options);

/// Coverage, day filter, then process_day on every retained day.
PipelineResult run_pipeline(const FrameSeries& series, const PipelineOptions& options);

/// Person positions of a day, in time order.
std::vector<Point> person_positions(const DayResult& day);

}  // namespace tsa

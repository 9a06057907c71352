#include "tsa/pipeline.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "tsa/error.hpp"
#include "tsa/framegrid.hpp"

namespace tsa {

namespace {

using nlohmann::json;

ZoneRect zone_from_json(const json& j, const std::string& default_label) {
  if (!j.is_object()) throw Error(ErrorCode::kInvalidConfig, "zone must be a JSON object");
  ZoneRect z;
  z.label = j.value("label", default_label);
  for (const char* key : {"x0", "y0", "x1", "y1"}) {
    if (!j.contains(key) || !j.at(key).is_number()) {
      throw Error(ErrorCode::kInvalidConfig,
                  fmt::format("zone '{}' needs a numeric '{}'", z.label, key));
    }
  }
  z.x0 = j.at("x0").get<double>();
  z.y0 = j.at("y0").get<double>();
  z.x1 = j.at("x1").get<double>();
  z.y1 = j.at("y1").get<double>();
  z.validate();
  return z;
}

std::vector<ZoneRect> static_from_json(const json& arr) {
  if (!arr.is_array()) throw Error(ErrorCode::kInvalidConfig, "'static' must be an array");
  std::vector<ZoneRect> zones;
  for (const auto& item : arr) {
    if (!item.is_object() || !item.contains("label")) {
      throw Error(ErrorCode::kInvalidConfig, "static zones need a 'label'");
    }
    zones.push_back(zone_from_json(item, ""));
  }
  return zones;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidConfig, fmt::format("invalid JSON: {}", e.what()));
  }
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

ZoneConfig parse_zone_config(std::string_view json_text) {
  const json j = parse_json(json_text);
  if (!j.is_object() || !j.contains("bed") || !j.contains("table")) {
    throw Error(ErrorCode::kInvalidConfig, "zones config needs 'bed' and 'table'");
  }
  ZoneConfig cfg;
  cfg.zones.bed = zone_from_json(j.at("bed"), "bed");
  cfg.zones.table = zone_from_json(j.at("table"), "table");
  cfg.zones.validate();
  if (j.contains("static")) cfg.static_zones = static_from_json(j.at("static"));
  return cfg;
}

ZoneConfig load_zone_config(const std::filesystem::path& path) {
  return parse_zone_config(slurp(path));
}

std::vector<ZoneRect> load_static_zones(const std::filesystem::path& path) {
  const json j = parse_json(slurp(path));
  if (j.is_object() && j.contains("static")) return static_from_json(j.at("static"));
  return static_from_json(j);
}

DayResult process_day(Date date, std::span<const FrameSample> samples,
                      const PipelineOptions& options) {
  DayResult day;
  day.date = date;
  day.detections.reserve(samples.size());
  for (const auto& s : samples) {
    const ThermalFrame frame = reshape(s.values, s.timestamp);
    day.detections.push_back({s.timestamp, detect(frame, options.detect)});
  }
  day.track = exclude_static(day.detections, options.static_zones);
  day.person = select_person(day.track);
  day.series = build_series(day.person, options.zones, date, options.utc_offset);
  day.report = daily_report(day.series, options.min_block);
  day.distribution = histogram(person_positions(day));
  return day;
}

PipelineResult run_pipeline(const FrameSeries& series, const PipelineOptions& options) {
  options.zones.validate();
  for (const auto& z : options.static_zones) z.validate();

  PipelineResult result;
  result.coverage = day_coverage(series, options.utc_offset);
  const FrameSeries kept = filter_retained(series, result.coverage, options.utc_offset);

  std::map<Date, std::vector<FrameSample>> by_day;
  for (const auto& s : kept.samples) by_day[day_of(s.timestamp, options.utc_offset)].push_back(s);
  for (const auto& [date, samples] : by_day) {
    result.days.push_back(process_day(date, samples, options));
  }

  if (!result.days.empty()) {
    std::vector<DailyReport> reports;
    for (const auto& d : result.days) reports.push_back(d.report);
    result.stats = summary_stats(reports);
  }
  return result;
}

std::vector<Point> person_positions(const DayResult& day) {
  std::vector<Point> points;
  for (const auto& fix : day.person) {
    if (fix.position) points.push_back(*fix.position);
  }
  return points;
}

}  // namespace tsa

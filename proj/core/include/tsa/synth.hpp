#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tsa/activity.hpp"
#include "tsa/ingest.hpp"
#include "tsa/pipeline.hpp"
#include "tsa/tracking.hpp"

namespace tsa {

/// Heater cycle: on during [phase, phase + on) of every `period` minutes,
/// counted from midnight of each day.
struct HeaterDuty {
  int period_minutes = kMinutesPerDay;
  int on_minutes = kMinutesPerDay;
  int phase_minutes = 0;

  bool is_on(int minute_of_day) const;
  friend bool operator==(const HeaterDuty&, const HeaterDuty&) = default;
};

struct HeaterSpec {
  ZoneRect rect{"heater"};
  double temperature = 34.0;
  HeaterDuty duty;

  friend bool operator==(const HeaterSpec&, const HeaterSpec&) = default;
};

/// Occupant in the zone matching `activity` during [start_minute,
/// end_minute). Minutes not covered by any entry have the room empty.
struct ScheduledActivity {
  ActivityLabel activity = ActivityLabel::kSleeping;
  int start_minute = 0;
  int end_minute = 0;
  Point anchor;

  friend bool operator==(const ScheduledActivity&, const ScheduledActivity&) = default;
};

/// A day that only records `coverage_minutes` contiguous minutes.
struct SparseDay {
  int day = 0;
  int coverage_minutes = 0;

  friend bool operator==(const SparseDay&, const SparseDay&) = default;
};

struct Scenario {
  Date start_date;
  int days = 1;
  ZoneMap zones;
  std::optional<HeaterSpec> heater;
  std::vector<std::vector<ScheduledActivity>> schedule;  // one list per day
  double ambient = 20.0;
  double body_peak = 34.0;
  double body_radius = 1.5;
  double noise_sd = 0.0;
  std::uint64_t seed = 1;
  std::vector<SparseDay> sparse_days;

  /// Throws Error(kInvalidScenario) describing the first violated rule.
  void validate() const;

  /// Zones the pipeline should run with: bed, table, and the heater as a
  /// static zone when present.
  ZoneConfig zone_config() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

Scenario parse_scenario(std::string_view json_text);
std::string scenario_to_json(const Scenario& scenario);
Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const Scenario& scenario, const std::filesystem::path& path);

struct TruthMinute {
  Minute timestamp;
  ActivityLabel label = ActivityLabel::kNoActivity;
  std::optional<Point> position;
};

/// Minute counts over the minutes that were actually emitted.
struct TruthDay {
  Date date;
  int present_minutes = 0;
  int sleeping_minutes = 0;
  int daily_minutes = 0;
  int none_minutes = 0;
  bool retained = false;
  bool interrupted_sleep = false;
};

struct GroundTruth {
  std::vector<TruthMinute> minutes;  // emitted minutes only
  std::vector<TruthDay> days;
  std::set<Date> retained_days;
};

struct Emission {
  FrameSeries series;  // values already quantized to the file precision
  GroundTruth truth;
};

/// Renders every emitted minute of the scenario. Deterministic in the
/// scenario (seed included).
Emission emit(const Scenario& scenario);

struct EmittedFiles {
  RawRecording recording;
  std::filesystem::path truth_activity;
  std::filesystem::path truth_report;
  std::filesystem::path zones;
};

/// Writes timestamps.txt, frames.csv, zones.json and the truth_*.csv files
/// into `outdir`.
EmittedFiles write_emission(const Scenario& scenario, const Emission& emission,
                            const std::filesystem::path& outdir);

struct ValidationTolerances {
  int max_duration_error_minutes = 2;
  double min_label_accuracy = 1.0;
};

/// 2 minutes / 100 % for noise-free scenarios, 10 minutes / 99 % otherwise.
ValidationTolerances default_tolerances(const Scenario& scenario);

struct DayValidation {
  Date date;
  int sleeping_error_minutes = 0;
  int daily_error_minutes = 0;
  int none_error_minutes = 0;
  int present_minutes = 0;
  int correct_minutes = 0;

  int max_error() const;
  double label_accuracy() const;
};

struct ValidationReport {
  std::vector<DayValidation> days;
  bool retained_days_match = false;
  std::optional<bool> heater_invariant;  // set only when the scenario has a heater
  ValidationTolerances tolerances;
  bool passed = false;

  int max_duration_error() const;
  double label_accuracy() const;
};

/// Compares pipeline output on emit(scenario) with the ground truth. When
/// the scenario has a heater the pipeline is re-run on the heater-free
/// emission and the person tracks must match exactly. Throws
/// Error(kMissingOutput) if a retained truth day has no pipeline result.
ValidationReport validate(const Scenario& scenario, const GroundTruth& truth,
                          const PipelineResult& output, const PipelineOptions& options,
                          const ValidationTolerances& tolerances);

void write_validation_report(std::ostream& out, const ValidationReport& report);

// Scenario builders.

/// Default room: bed on the left, table on the right, heater bottom right.
ZoneMap default_zone_map();
HeaterSpec default_heater();

struct MonthlyScenarioParams {
  Date start_date;
  int days = 28;
  std::vector<int> sparse_day_indices;
  int mean_sleep_minutes = 576;  // 9.6 h
  int mean_daily_minutes = 450;  // 7.5 h
  bool heater = false;
  double noise_sd = 0.0;
  std::uint64_t seed = 1;
};

/// Day schedules whose sleep and daily minutes average exactly the requested
/// means over the dense days. Every fourth dense day has split sleep.
Scenario make_monthly_scenario(const MonthlyScenarioParams& params);

/// 35 days starting 2021-04-07, 7 sparse days, heater on, noise-free.
Scenario make_reference_scenario();

/// Randomized noise-free, heater-free scenario of `days` dense days.
Scenario make_clean_scenario(std::uint64_t seed, int days);

}  // namespace tsa

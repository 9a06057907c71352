#include "cli/commands.hpp"

#include <filesystem>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "tsa/error.hpp"
#include "tsa/io.hpp"
#include "tsa/pipeline.hpp"
#include "tsa/synth.hpp"

namespace tsa::cli {

namespace fs = std::filesystem;

namespace {

struct RecordingArgs {
  std::string frames;
  std::string timestamps;
  int tz_offset_minutes = 0;
  std::string out = ".";
};

struct DetectArgs {
  std::string zones;
  std::string static_zones;
  std::string threshold = "otsu";
  int min_area = 2;
  bool morphology = false;
  double min_contrast = 3.0;
  int min_block = kDefaultMinBlock;
};

void add_recording_options(CLI::App& cmd, RecordingArgs& a) {
  cmd.add_option("--frames", a.frames, "Frames CSV (192 values per line)")->required();
  cmd.add_option("--timestamps", a.timestamps, "Timestamps file (one ISO-8601 per line)")->required();
  cmd.add_option("--tz-offset-minutes", a.tz_offset_minutes, "UTC offset applied before day bucketing");
  cmd.add_option("--out", a.out, "Output directory");
}

void add_detect_options(CLI::App& cmd, DetectArgs& a, bool zones_required) {
  auto* zones = cmd.add_option("--zones", a.zones, "Zones config JSON");
  if (zones_required) zones->required();
  cmd.add_option("--static-zones", a.static_zones, "Extra static zones JSON");
  cmd.add_option("--threshold", a.threshold, "otsu | fixed:<t>");
  cmd.add_option("--min-area", a.min_area, "Smallest blob kept, in cells")->check(CLI::PositiveNumber);
  cmd.add_flag("--morphology", a.morphology, "Apply a 3x3 cross opening before labeling");
  cmd.add_option("--min-contrast", a.min_contrast, "Frames with a smaller temperature range (°C) have no blobs")
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--min-block", a.min_block, "Minimum block (minutes) for interrupted sleep")
      ->check(CLI::PositiveNumber);
}

PipelineOptions make_options(const DetectArgs& a, int tz_offset_minutes, const ZoneConfig* zones) {
  PipelineOptions opt;
  opt.detect.method = parse_threshold_method(a.threshold);
  opt.detect.min_area = a.min_area;
  opt.detect.morphology = a.morphology;
  opt.detect.min_contrast = a.min_contrast;
  opt.min_block = a.min_block;
  opt.utc_offset = std::chrono::minutes{tz_offset_minutes};
  ZoneConfig cfg = zones ? *zones : load_zone_config(a.zones);
  opt.zones = cfg.zones;
  opt.static_zones = cfg.static_zones;
  if (!a.static_zones.empty()) {
    for (auto& z : load_static_zones(a.static_zones)) opt.static_zones.push_back(std::move(z));
  }
  return opt;
}

FrameSeries read_recording(const RecordingArgs& a) {
  return parse_recording(RawRecording{a.timestamps, a.frames});
}

std::string coverage_summary(std::span<const DayCoverage> coverage) {
  if (coverage.empty()) return "0 days";
  const auto retained = std::count_if(coverage.begin(), coverage.end(), [](const auto& c) { return c.retained; });
  const auto dropped = static_cast<long>(coverage.size()) - retained;
  return fmt::format("{} retained / {} dropped ({:.1f}%)", retained, dropped,
                     100.0 * static_cast<double>(dropped) / static_cast<double>(coverage.size()));
}

template <typename F>
void write_to(const fs::path& path, F&& f) {
  write_file_atomic(path, std::forward<F>(f));
}

void write_coverage(const fs::path& out, std::span<const DayCoverage> coverage) {
  write_to(out / "coverage.csv", [&](std::ostream& os) { write_coverage_csv(os, coverage); });
  const std::string summary = coverage_summary(coverage);
  write_to(out / "coverage_summary.txt", [&](std::ostream& os) { os << summary << '\n'; });
}

void write_report_outputs(const fs::path& out, const PipelineResult& result, std::ostream& stdout_,
                          std::ostream& err) {
  write_coverage(out, result.coverage);

  std::vector<DailyReport> reports;
  std::vector<ActivitySeries> series;
  std::vector<FrameDetections> detections;
  for (const auto& d : result.days) {
    reports.push_back(d.report);
    series.push_back(d.series);
    detections.insert(detections.end(), d.detections.begin(), d.detections.end());
  }
  write_to(out / "reports.csv", [&](std::ostream& os) { write_report_csv(os, reports); });
  write_to(out / "activity.csv", [&](std::ostream& os) { write_activity_csv(os, series); });
  write_to(out / "blobs.csv", [&](std::ostream& os) { write_blob_csv(os, detections); });

  if (result.stats) {
    std::ostringstream table;
    write_stats_table(table, *result.stats);
    write_to(out / "stats.txt", [&](std::ostream& os) { os << table.str(); });
    stdout_ << table.str();
  } else {
    err << "warning: no retained days; statistics not computed\n";
  }
}

void write_heatmap_outputs(const fs::path& out, const std::vector<const DayResult*>& days,
                           bool upsample, bool with_aggregate, std::ostream& err) {
  const std::optional<std::pair<int, int>> size =
      upsample ? std::optional<std::pair<int, int>>({kRenderWidth, kRenderHeight}) : std::nullopt;

  const auto emit_one = [&](const std::string& stem, const SpatialDistribution& dist) {
    write_to(out / "heatmap" / (stem + "_distribution.csv"),
             [&](std::ostream& os) { write_distribution_csv(os, dist); });
    write_to(out / "heatmap" / (stem + "_marginals.csv"),
             [&](std::ostream& os) { write_marginals_csv(os, dist); });
    render(log_normalize(dist), size, out / "heatmap" / (stem + "_heatmap.pgm"));
  };

  std::vector<Point> all_points;
  for (const DayResult* d : days) {
    const std::string stem = format_date(d->date);
    if (d->distribution.empty()) err << "warning: " << stem << ": no person detections\n";
    emit_one(stem, d->distribution);
    write_to(out / "scatter" / (stem + ".csv"), [&](std::ostream& os) { write_scatter_csv(os, d->track); });
    const auto pts = person_positions(*d);
    all_points.insert(all_points.end(), pts.begin(), pts.end());
  }
  if (with_aggregate) emit_one("all", histogram(all_points));

  write_to(out / "comparison.csv", [&](std::ostream& os) {
    os << "day_a,day_b,tv_distance\n";
    for (std::size_t i = 0; i < days.size(); ++i) {
      for (std::size_t j = i + 1; j < days.size(); ++j) {
        if (days[i]->distribution.empty() || days[j]->distribution.empty()) continue;
        os << fmt::format("{},{},{:.6f}\n", format_date(days[i]->date), format_date(days[j]->date),
                          compare_days(days[i]->distribution, days[j]->distribution));
      }
    }
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thermal sensor array activity toolkit", args.empty() ? "tsactl" : args.front()};
  app.require_subcommand(1);

  RecordingArgs rec;
  DetectArgs det;
  std::string day = "all";
  bool upsample = false;
  std::string scenario_path;
  std::string out_dir = ".";

  auto* coverage = app.add_subcommand("coverage", "Per-day coverage and the 12-hour day filter");
  add_recording_options(*coverage, rec);

  auto* report = app.add_subcommand("report", "Per-day activity durations, series and statistics");
  add_recording_options(*report, rec);
  add_detect_options(*report, det, true);

  auto* heatmap = app.add_subcommand("heatmap", "Spatial distributions, heatmaps and scatter data");
  add_recording_options(*heatmap, rec);
  add_detect_options(*heatmap, det, true);
  heatmap->add_option("--day", day, "YYYY-MM-DD or 'all'");
  heatmap->add_flag("--upsample", upsample, "Render heatmaps at 800x600");

  auto* simulate = app.add_subcommand("simulate", "Emit a synthetic recording with ground truth");
  simulate->add_option("--scenario", scenario_path, "Scenario JSON")->required();
  simulate->add_option("--out", out_dir, "Output directory");

  auto* validate_cmd = app.add_subcommand("validate", "Simulate, run the pipeline, check against truth");
  validate_cmd->add_option("--scenario", scenario_path, "Scenario JSON")->required();
  validate_cmd->add_option("--out", out_dir, "Output directory");
  validate_cmd->add_option("--threshold", det.threshold, "otsu | fixed:<t>");
  validate_cmd->add_option("--min-area", det.min_area, "Smallest blob kept, in cells")->check(CLI::PositiveNumber);
  validate_cmd->add_flag("--morphology", det.morphology, "Apply a 3x3 cross opening before labeling");
  validate_cmd->add_option("--min-contrast", det.min_contrast,
                           "Frames with a smaller temperature range (°C) have no blobs")
      ->check(CLI::NonNegativeNumber);

  std::string kind = "reference";
  std::uint64_t seed = 1;
  int days = 28;
  std::string scenario_out;
  auto* make = app.add_subcommand("make-scenario", "Write a built-in scenario as JSON");
  make->add_option("--kind", kind, "reference | monthly | clean")
      ->check(CLI::IsMember({"reference", "monthly", "clean"}));
  make->add_option("--seed", seed, "Seed for monthly/clean scenarios");
  make->add_option("--days", days, "Days for monthly/clean scenarios")->check(CLI::PositiveNumber);
  make->add_option("--out", scenario_out, "Scenario JSON path")->required();

  std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    const std::chrono::minutes tz{rec.tz_offset_minutes};
    if (coverage->parsed()) {
      const FrameSeries series = read_recording(rec);
      const auto cov = day_coverage(series, tz);
      write_coverage(rec.out, cov);
      out << coverage_summary(cov) << '\n';
      return kExitOk;
    }
    if (report->parsed()) {
      const PipelineOptions opt = make_options(det, rec.tz_offset_minutes, nullptr);
      const PipelineResult result = run_pipeline(read_recording(rec), opt);
      out << coverage_summary(result.coverage) << '\n';
      write_report_outputs(rec.out, result, out, err);
      return kExitOk;
    }
    if (heatmap->parsed()) {
      const PipelineOptions opt = make_options(det, rec.tz_offset_minutes, nullptr);
      const PipelineResult result = run_pipeline(read_recording(rec), opt);
      std::vector<const DayResult*> selected;
      if (day == "all") {
        for (const auto& d : result.days) selected.push_back(&d);
      } else {
        const auto date = parse_date(day);
        if (!date) throw Error(ErrorCode::kInvalidConfig, "--day must be YYYY-MM-DD or 'all'");
        for (const auto& d : result.days) {
          if (d.date == *date) selected.push_back(&d);
        }
        if (selected.empty()) throw Error(ErrorCode::kInvalidConfig, day + " is not a retained day");
      }
      write_heatmap_outputs(rec.out, selected, upsample, day == "all", err);
      out << fmt::format("{} day(s) rendered\n", selected.size());
      return kExitOk;
    }
    if (simulate->parsed()) {
      const Scenario scenario = load_scenario(scenario_path);
      const Emission emission = emit(scenario);
      write_emission(scenario, emission, out_dir);
      out << fmt::format("{} frames over {} days, {} retained\n", emission.series.size(), scenario.days,
                         emission.truth.retained_days.size());
      return kExitOk;
    }
    if (validate_cmd->parsed()) {
      const Scenario scenario = load_scenario(scenario_path);
      const Emission emission = emit(scenario);
      const EmittedFiles files = write_emission(scenario, emission, out_dir);
      const ZoneConfig zones = scenario.zone_config();
      const PipelineOptions opt = make_options(det, 0, &zones);
      const PipelineResult result = run_pipeline(parse_recording(files.recording), opt);
      write_report_outputs(out_dir, result, out, err);
      const ValidationReport vr = validate(scenario, emission.truth, result, opt, default_tolerances(scenario));
      std::ostringstream text;
      write_validation_report(text, vr);
      write_to(fs::path(out_dir) / "validation.txt", [&](std::ostream& os) { os << text.str(); });
      out << text.str();
      return vr.passed ? kExitOk : kExitValidationFailed;
    }
    if (make->parsed()) {
      Scenario s;
      if (kind == "reference") {
        s = make_reference_scenario();
      } else if (kind == "clean") {
        s = make_clean_scenario(seed, days);
      } else {
        MonthlyScenarioParams p;
        p.start_date = std::chrono::sys_days{std::chrono::year{2021} / 4 / 7};
        p.days = days;
        p.seed = seed;
        s = make_monthly_scenario(p);
      }
      save_scenario(s, scenario_out);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace tsa::cli

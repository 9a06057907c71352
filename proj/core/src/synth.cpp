#include "tsa/synth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "tsa/error.hpp"
#include "tsa/framegrid.hpp"
#include "tsa/io.hpp"

namespace tsa {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::kInvalidScenario, what); }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

enum class Stream : std::uint64_t { kSparse = 1, kJitter = 2, kNoise = 3 };

// Independent generator per (seed, day, purpose), so changing one part of
// a scenario (the heater, say) leaves every other random draw in place.
std::mt19937_64 stream_rng(std::uint64_t seed, int day, Stream stream) {
  const std::uint64_t key =
      splitmix64(splitmix64(seed) ^ (static_cast<std::uint64_t>(day) << 8) ^ static_cast<std::uint64_t>(stream));
  return std::mt19937_64(key);
}

const ZoneRect& zone_for(const ZoneMap& zones, ActivityLabel label) {
  return label == ActivityLabel::kSleeping ? zones.bed : zones.table;
}

bool plausible(double t) { return t >= kMinTemperature && t <= kMaxTemperature; }

}  // namespace

bool HeaterDuty::is_on(int minute_of_day) const {
  const int phase = ((minute_of_day - phase_minutes) % period_minutes + period_minutes) % period_minutes;
  return phase < on_minutes;
}

void Scenario::validate() const {
  if (days < 1) invalid("days must be at least 1");
  if (schedule.size() > static_cast<std::size_t>(days)) invalid("schedule lists more days than 'days'");
  try {
    zones.validate();
  } catch (const Error& e) {
    invalid(e.what());
  }
  if (!(noise_sd >= 0.0) || !std::isfinite(noise_sd)) invalid("noise_sd must be finite and >= 0");
  if (!(body_radius >= 1.0) || !std::isfinite(body_radius)) invalid("body_radius must be >= 1 cell");
  if (!plausible(ambient) || !plausible(body_peak)) invalid("temperatures outside sensor range");
  if (!(body_peak > ambient + 6.0 * noise_sd)) {
    invalid(fmt::format("body_peak {} must exceed ambient {} + 6 * noise_sd {}", body_peak, ambient, noise_sd));
  }
  if (heater) {
    try {
      heater->rect.validate();
    } catch (const Error& e) {
      invalid(e.what());
    }
    if (heater->rect.overlaps(zones.bed) || heater->rect.overlaps(zones.table)) {
      invalid("heater overlaps an activity zone");
    }
    if (!plausible(heater->temperature)) invalid("heater temperature outside sensor range");
    const auto& d = heater->duty;
    if (d.period_minutes < 1 || d.on_minutes < 0 || d.on_minutes > d.period_minutes || d.phase_minutes < 0) {
      invalid("heater duty needs period >= 1, 0 <= on <= period, phase >= 0");
    }
  }
  for (std::size_t day = 0; day < schedule.size(); ++day) {
    auto entries = schedule[day];
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.start_minute < b.start_minute; });
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto& e = entries[i];
      if (e.activity == ActivityLabel::kNoActivity) {
        invalid(fmt::format("day {}: NoActivity is implied by gaps, not scheduled", day));
      }
      if (e.start_minute < 0 || e.end_minute > kMinutesPerDay || e.start_minute >= e.end_minute) {
        invalid(fmt::format("day {}: interval [{}, {}) outside the day", day, e.start_minute, e.end_minute));
      }
      if (i > 0 && entries[i - 1].end_minute > e.start_minute) {
        invalid(fmt::format("day {}: overlapping intervals at minute {}", day, e.start_minute));
      }
      const ZoneRect& z = zone_for(zones, e.activity);
      if (!z.contains(e.anchor)) {
        invalid(fmt::format("day {}: anchor ({}, {}) outside zone '{}'", day, e.anchor.x, e.anchor.y, z.label));
      }
    }
  }
  std::set<int> seen;
  for (const auto& s : sparse_days) {
    if (s.day < 0 || s.day >= days) invalid(fmt::format("sparse day {} out of range", s.day));
    if (!seen.insert(s.day).second) invalid(fmt::format("sparse day {} listed twice", s.day));
    if (s.coverage_minutes < 0 || s.coverage_minutes >= kRetainMinutes) {
      invalid(fmt::format("sparse day {} must cover fewer than {} minutes", s.day, kRetainMinutes));
    }
  }
}

ZoneConfig Scenario::zone_config() const {
  ZoneConfig cfg{zones, {}};
  if (heater) cfg.static_zones.push_back(heater->rect);
  return cfg;
}

// JSON encoding.

namespace {

json rect_json(const ZoneRect& z) {
  return json{{"label", z.label}, {"x0", z.x0}, {"y0", z.y0}, {"x1", z.x1}, {"y1", z.y1}};
}

ZoneRect rect_from(const json& j, const std::string& label) {
  ZoneRect z;
  z.label = j.value("label", label);
  z.x0 = j.at("x0").get<double>();
  z.y0 = j.at("y0").get<double>();
  z.x1 = j.at("x1").get<double>();
  z.y1 = j.at("y1").get<double>();
  return z;
}

}  // namespace

std::string scenario_to_json(const Scenario& s) {
  json j;
  j["start_date"] = format_date(s.start_date);
  j["days"] = s.days;
  j["zones"] = json{{"bed", rect_json(s.zones.bed)}, {"table", rect_json(s.zones.table)}};
  if (s.heater) {
    const auto& h = *s.heater;
    j["heater"] = rect_json(h.rect);
    j["heater"]["temperature"] = h.temperature;
    j["heater"]["duty"] = json{{"period_minutes", h.duty.period_minutes},
                               {"on_minutes", h.duty.on_minutes},
                               {"phase_minutes", h.duty.phase_minutes}};
  } else {
    j["heater"] = nullptr;
  }
  json sched = json::array();
  for (const auto& day : s.schedule) {
    json entries = json::array();
    for (const auto& e : day) {
      entries.push_back(json{{"activity", std::string(to_string(e.activity))},
                             {"start", e.start_minute},
                             {"end", e.end_minute},
                             {"anchor", json::array({e.anchor.x, e.anchor.y})}});
    }
    sched.push_back(std::move(entries));
  }
  j["schedule"] = std::move(sched);
  j["ambient"] = s.ambient;
  j["body_peak"] = s.body_peak;
  j["body_radius"] = s.body_radius;
  j["noise_sd"] = s.noise_sd;
  j["seed"] = s.seed;
  json sparse = json::array();
  for (const auto& d : s.sparse_days) {
    sparse.push_back(json{{"day", d.day}, {"coverage_minutes", d.coverage_minutes}});
  }
  j["sparse_days"] = std::move(sparse);
  return j.dump(1);
}

Scenario parse_scenario(std::string_view json_text) {
  Scenario s;
  try {
    const json j = json::parse(json_text);
    const auto date = parse_date(j.at("start_date").get<std::string>());
    if (!date) invalid("start_date must be YYYY-MM-DD");
    s.start_date = *date;
    s.days = j.at("days").get<int>();
    s.zones.bed = rect_from(j.at("zones").at("bed"), "bed");
    s.zones.table = rect_from(j.at("zones").at("table"), "table");
    if (j.contains("heater") && !j.at("heater").is_null()) {
      const auto& h = j.at("heater");
      HeaterSpec spec;
      spec.rect = rect_from(h, "heater");
      spec.temperature = h.at("temperature").get<double>();
      if (h.contains("duty")) {
        const auto& d = h.at("duty");
        spec.duty.period_minutes = d.value("period_minutes", kMinutesPerDay);
        spec.duty.on_minutes = d.value("on_minutes", spec.duty.period_minutes);
        spec.duty.phase_minutes = d.value("phase_minutes", 0);
      }
      s.heater = spec;
    }
    for (const auto& day : j.value("schedule", json::array())) {
      std::vector<ScheduledActivity> entries;
      for (const auto& e : day) {
        const auto label = parse_activity_label(e.at("activity").get<std::string>());
        if (!label) invalid("unknown activity '" + e.at("activity").get<std::string>() + "'");
        const auto& a = e.at("anchor");
        entries.push_back({*label, e.at("start").get<int>(), e.at("end").get<int>(),
                           Point{a.at(0).get<double>(), a.at(1).get<double>()}});
      }
      s.schedule.push_back(std::move(entries));
    }
    s.ambient = j.value("ambient", s.ambient);
    s.body_peak = j.value("body_peak", s.body_peak);
    s.body_radius = j.value("body_radius", s.body_radius);
    s.noise_sd = j.value("noise_sd", s.noise_sd);
    s.seed = j.value("seed", s.seed);
    for (const auto& d : j.value("sparse_days", json::array())) {
      s.sparse_days.push_back({d.at("day").get<int>(), d.at("coverage_minutes").get<int>()});
    }
  } catch (const json::exception& e) {
    invalid(fmt::format("malformed scenario JSON: {}", e.what()));
  }
  s.validate();
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

void save_scenario(const Scenario& scenario, const std::filesystem::path& path) {
  const std::string text = scenario_to_json(scenario);
  write_file_atomic(path, [&](std::ostream& out) { out << text << '\n'; });
}

// Emission.

Emission emit(const Scenario& scenario) {
  scenario.validate();
  Emission out;
  const double r2 = scenario.body_radius * scenario.body_radius;

  for (int day = 0; day < scenario.days; ++day) {
    const Date date = scenario.start_date + std::chrono::days{day};

    // Per-minute schedule lookup.
    std::vector<const ScheduledActivity*> slot(kMinutesPerDay, nullptr);
    if (static_cast<std::size_t>(day) < scenario.schedule.size()) {
      for (const auto& e : scenario.schedule[day]) {
        for (int m = e.start_minute; m < e.end_minute; ++m) slot[m] = &e;
      }
    }

    // Contiguous recorded window.
    int first = 0;
    int count = kMinutesPerDay;
    const auto sparse = std::find_if(scenario.sparse_days.begin(), scenario.sparse_days.end(),
                                     [&](const SparseDay& s) { return s.day == day; });
    if (sparse != scenario.sparse_days.end()) {
      count = sparse->coverage_minutes;
      auto rng = stream_rng(scenario.seed, day, Stream::kSparse);
      first = std::uniform_int_distribution<int>(0, kMinutesPerDay - count)(rng);
    }

    // Jitter is drawn for every minute of the day so it does not depend on
    // which minutes end up recorded.
    auto jitter_rng = stream_rng(scenario.seed, day, Stream::kJitter);
    std::uniform_real_distribution<double> jitter(-0.5, 0.5);
    std::vector<Point> offsets(kMinutesPerDay);
    for (auto& o : offsets) {
      o.x = jitter(jitter_rng);
      o.y = jitter(jitter_rng);
    }
    auto noise_rng = stream_rng(scenario.seed, day, Stream::kNoise);
    std::normal_distribution<double> noise(0.0, 1.0);

    TruthDay truth_day;
    truth_day.date = date;
    ActivitySeries truth_series{date, {}};
    for (int m = first; m < first + count; ++m) {
      const Minute ts = Minute{date} + std::chrono::minutes{m};
      ThermalFrame frame;
      frame.timestamp = ts;
      frame.cells.fill(scenario.ambient);

      if (scenario.heater && scenario.heater->duty.is_on(m)) {
        const auto& h = *scenario.heater;
        for (int r = 0; r < kGridRows; ++r) {
          for (int c = 0; c < kGridCols; ++c) {
            if (h.rect.contains({double(c), double(r)})) frame.at(r, c) = std::max(frame.at(r, c), h.temperature);
          }
        }
      }

      TruthMinute truth{ts, ActivityLabel::kNoActivity, std::nullopt};
      if (const ScheduledActivity* e = slot[m]) {
        const ZoneRect& z = zone_for(scenario.zones, e->activity);
        const Point pos{std::clamp(e->anchor.x + offsets[m].x, z.x0, z.x1),
                        std::clamp(e->anchor.y + offsets[m].y, z.y0, z.y1)};
        for (int r = 0; r < kGridRows; ++r) {
          for (int c = 0; c < kGridCols; ++c) {
            const double dx = c - pos.x;
            const double dy = r - pos.y;
            if (dx * dx + dy * dy <= r2) frame.at(r, c) = std::max(frame.at(r, c), scenario.body_peak);
          }
        }
        truth.label = e->activity;
        truth.position = pos;
      }

      if (scenario.noise_sd > 0.0) {
        for (auto& v : frame.cells) v += scenario.noise_sd * noise(noise_rng);
      }
      for (auto& v : frame.cells) v = quantize_temperature(std::clamp(v, kMinTemperature, kMaxTemperature));

      out.series.samples.push_back({ts, flatten(frame)});
      out.truth.minutes.push_back(truth);
      truth_series.entries.push_back({ts, truth.label, true});
      ++truth_day.present_minutes;
      switch (truth.label) {
        case ActivityLabel::kSleeping: ++truth_day.sleeping_minutes; break;
        case ActivityLabel::kDaily: ++truth_day.daily_minutes; break;
        case ActivityLabel::kNoActivity: ++truth_day.none_minutes; break;
      }
    }
    truth_day.retained = truth_day.present_minutes >= kRetainMinutes;
    truth_day.interrupted_sleep = flag_interrupted(truth_series, ActivityLabel::kSleeping, kDefaultMinBlock);
    if (truth_day.retained) out.truth.retained_days.insert(date);
    out.truth.days.push_back(truth_day);
  }
  return out;
}

EmittedFiles write_emission(const Scenario& scenario, const Emission& emission,
                            const std::filesystem::path& outdir) {
  EmittedFiles files;
  files.recording = {outdir / "timestamps.txt", outdir / "frames.csv"};
  files.truth_activity = outdir / "truth_activity.csv";
  files.truth_report = outdir / "truth_report.csv";
  files.zones = outdir / "zones.json";

  write_recording(emission.series, files.recording);

  write_file_atomic(files.truth_activity, [&](std::ostream& out) {
    out << "timestamp,label,x,y\n";
    for (const auto& m : emission.truth.minutes) {
      out << format_timestamp(m.timestamp) << ',' << to_string(m.label);
      if (m.position) {
        out << fmt::format(",{:.4f},{:.4f}\n", m.position->x, m.position->y);
      } else {
        out << ",,\n";
      }
    }
  });

  write_file_atomic(files.truth_report, [&](std::ostream& out) {
    std::vector<DailyReport> rows;
    for (const auto& d : emission.truth.days) {
      rows.push_back({d.date, d.sleeping_minutes, d.daily_minutes, d.none_minutes, d.present_minutes,
                      d.interrupted_sleep});
    }
    write_report_csv(out, rows);
  });

  const ZoneConfig cfg = scenario.zone_config();
  write_file_atomic(files.zones, [&](std::ostream& out) {
    json j{{"bed", rect_json(cfg.zones.bed)}, {"table", rect_json(cfg.zones.table)}};
    json st = json::array();
    for (const auto& z : cfg.static_zones) st.push_back(rect_json(z));
    j["static"] = std::move(st);
    out << j.dump(1) << '\n';
  });
  return files;
}

// Validation.

ValidationTolerances default_tolerances(const Scenario& scenario) {
  if (scenario.noise_sd == 0.0) return {2, 1.0};
  return {10, 0.99};
}

int DayValidation::max_error() const {
  return std::max({sleeping_error_minutes, daily_error_minutes, none_error_minutes});
}

double DayValidation::label_accuracy() const {
  return present_minutes == 0 ? 1.0 : static_cast<double>(correct_minutes) / present_minutes;
}

int ValidationReport::max_duration_error() const {
  int worst = 0;
  for (const auto& d : days) worst = std::max(worst, d.max_error());
  return worst;
}

double ValidationReport::label_accuracy() const {
  long present = 0;
  long correct = 0;
  for (const auto& d : days) {
    present += d.present_minutes;
    correct += d.correct_minutes;
  }
  return present == 0 ? 1.0 : static_cast<double>(correct) / static_cast<double>(present);
}

ValidationReport validate(const Scenario& scenario, const GroundTruth& truth,
                          const PipelineResult& output, const PipelineOptions& options,
                          const ValidationTolerances& tolerances) {
  ValidationReport report;
  report.tolerances = tolerances;

  std::set<Date> produced;
  std::map<Date, const DayResult*> by_date;
  for (const auto& d : output.days) {
    produced.insert(d.date);
    by_date[d.date] = &d;
  }
  report.retained_days_match = produced == truth.retained_days;

  std::map<Minute, ActivityLabel> truth_labels;
  for (const auto& m : truth.minutes) truth_labels[m.timestamp] = m.label;

  for (const auto& td : truth.days) {
    if (!td.retained) continue;
    const auto it = by_date.find(td.date);
    if (it == by_date.end()) {
      throw Error(ErrorCode::kMissingOutput, "no pipeline output for " + format_date(td.date));
    }
    const DayResult& day = *it->second;
    DayValidation v;
    v.date = td.date;
    v.sleeping_error_minutes = std::abs(day.report.sleeping_minutes - td.sleeping_minutes);
    v.daily_error_minutes = std::abs(day.report.daily_minutes - td.daily_minutes);
    v.none_error_minutes = std::abs(day.report.none_minutes - td.none_minutes);
    for (const auto& e : day.series.entries) {
      ++v.present_minutes;
      const auto t = truth_labels.find(e.timestamp);
      if (t != truth_labels.end() && t->second == e.label) ++v.correct_minutes;
    }
    report.days.push_back(v);
  }

  if (scenario.heater) {
    Scenario bare = scenario;
    bare.heater.reset();
    PipelineOptions bare_options = options;
    bare_options.static_zones.clear();
    const PipelineResult bare_output = run_pipeline(emit(bare).series, bare_options);
    bool same = bare_output.days.size() == output.days.size();
    for (std::size_t i = 0; same && i < output.days.size(); ++i) {
      const auto& a = output.days[i];
      const auto& b = bare_output.days[i];
      same = a.date == b.date && a.person == b.person && a.report == b.report &&
             a.distribution == b.distribution;
    }
    report.heater_invariant = same;
  }

  report.passed = report.retained_days_match &&
                  report.max_duration_error() <= tolerances.max_duration_error_minutes &&
                  report.label_accuracy() >= tolerances.min_label_accuracy &&
                  report.heater_invariant.value_or(true);
  return report;
}

void write_validation_report(std::ostream& out, const ValidationReport& report) {
  out << fmt::format("{:<12}{:>10}{:>10}{:>10}{:>10}{:>10}\n", "date", "sleep_err", "daily_err",
                     "none_err", "minutes", "accuracy");
  for (const auto& d : report.days) {
    out << fmt::format("{:<12}{:>10}{:>10}{:>10}{:>10}{:>10.4f}\n", format_date(d.date),
                       d.sleeping_error_minutes, d.daily_error_minutes, d.none_error_minutes,
                       d.present_minutes, d.label_accuracy());
  }
  out << fmt::format("retained days match: {}\n", report.retained_days_match ? "yes" : "no");
  out << fmt::format("max duration error: {} min (limit {})\n", report.max_duration_error(),
                     report.tolerances.max_duration_error_minutes);
  out << fmt::format("label accuracy: {:.6f} (limit {:.6f})\n", report.label_accuracy(),
                     report.tolerances.min_label_accuracy);
  if (report.heater_invariant) {
    out << fmt::format("heater invariance: {}\n", *report.heater_invariant ? "yes" : "no");
  }
  out << (report.passed ? "PASS\n" : "FAIL\n");
}

// Builders.

ZoneMap default_zone_map() {
  return ZoneMap{ZoneRect{"bed", 1.0, 3.0, 5.0, 9.0}, ZoneRect{"table", 9.0, 1.0, 13.0, 5.0}};
}

HeaterSpec default_heater() {
  // Not hotter than the occupant, so per-frame normalization maps the
  // occupant to full scale whether or not the heater runs.
  return HeaterSpec{ZoneRect{"heater", 13.0, 8.0, 15.0, 11.0}, 32.0, HeaterDuty{240, 180, 0}};
}

namespace {

Point random_anchor(const ZoneRect& z, std::mt19937_64& rng) {
  // One cell of margin keeps jittered occupants well inside the zone.
  std::uniform_real_distribution<double> ux(z.x0 + 1.0, z.x1 - 1.0);
  std::uniform_real_distribution<double> uy(z.y0 + 1.0, z.y1 - 1.0);
  const double x = ux(rng);
  const double y = uy(rng);
  return {std::round(x * 100.0) / 100.0, std::round(y * 100.0) / 100.0};
}

std::vector<int> balanced_deviations(std::size_t n, int spread, std::mt19937_64& rng) {
  std::vector<int> dev(n, 0);
  std::uniform_int_distribution<int> u(-spread, spread);
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    const int a = u(rng);
    dev[i] = a;
    dev[i + 1] = -a;
  }
  std::shuffle(dev.begin(), dev.end(), rng);
  return dev;
}

// Sleep from shortly after midnight, then three daily blocks. Fits in a day
// for sleep <= 640 and daily <= 540 minutes.
std::vector<ScheduledActivity> day_schedule(const ZoneMap& zones, int sleep, int daily, bool split_sleep,
                                            std::mt19937_64& rng) {
  std::vector<ScheduledActivity> out;
  std::uniform_int_distribution<int> start_u(0, 30);
  std::uniform_int_distribution<int> gap_u(20, 40);
  int t = start_u(rng);
  if (split_sleep) {
    const int first = sleep / 2;
    out.push_back({ActivityLabel::kSleeping, t, t + first, random_anchor(zones.bed, rng)});
    t += first + 60;
    out.push_back({ActivityLabel::kSleeping, t, t + (sleep - first), random_anchor(zones.bed, rng)});
    t += sleep - first;
  } else {
    out.push_back({ActivityLabel::kSleeping, t, t + sleep, random_anchor(zones.bed, rng)});
    t += sleep;
  }
  const int part = daily / 3;
  const int parts[3] = {part, part, daily - 2 * part};
  for (const int p : parts) {
    t += gap_u(rng);
    if (p > 0) out.push_back({ActivityLabel::kDaily, t, t + p, random_anchor(zones.table, rng)});
    t += p;
  }
  return out;
}

}  // namespace

Scenario make_monthly_scenario(const MonthlyScenarioParams& params) {
  Scenario s;
  s.start_date = params.start_date;
  s.days = params.days;
  s.zones = default_zone_map();
  if (params.heater) s.heater = default_heater();
  s.noise_sd = params.noise_sd;
  s.seed = params.seed;

  std::mt19937_64 rng(splitmix64(params.seed ^ 0x5c4ed01eULL));
  std::set<int> sparse(params.sparse_day_indices.begin(), params.sparse_day_indices.end());
  std::vector<int> dense;
  for (int d = 0; d < params.days; ++d) {
    if (!sparse.contains(d)) dense.push_back(d);
  }
  const auto sleep_dev = balanced_deviations(dense.size(), 60, rng);
  const auto daily_dev = balanced_deviations(dense.size(), 90, rng);

  s.schedule.resize(params.days);
  std::size_t k = 0;
  for (int d = 0; d < params.days; ++d) {
    if (sparse.contains(d)) {
      s.schedule[d] = day_schedule(s.zones, params.mean_sleep_minutes, params.mean_daily_minutes, false, rng);
      std::uniform_int_distribution<int> cov(240, kRetainMinutes - 1);
      s.sparse_days.push_back({d, cov(rng)});
      continue;
    }
    const bool split = k % 4 == 3;
    s.schedule[d] = day_schedule(s.zones, params.mean_sleep_minutes + sleep_dev[k],
                                 params.mean_daily_minutes + daily_dev[k], split, rng);
    ++k;
  }
  s.validate();
  return s;
}

Scenario make_reference_scenario() {
  MonthlyScenarioParams p;
  p.start_date = std::chrono::sys_days{std::chrono::year{2021} / 4 / 7};
  p.days = 35;
  p.sparse_day_indices = {4, 9, 13, 18, 22, 27, 31};
  p.heater = true;
  p.seed = 20210407;
  return make_monthly_scenario(p);
}

Scenario make_clean_scenario(std::uint64_t seed, int days) {
  std::mt19937_64 rng(splitmix64(seed));
  MonthlyScenarioParams p;
  p.start_date = std::chrono::sys_days{std::chrono::year{2021} / 4 / 7} +
                 std::chrono::days{std::uniform_int_distribution<int>(0, 300)(rng)};
  p.days = days;
  p.mean_sleep_minutes = std::uniform_int_distribution<int>(420, 580)(rng);
  p.mean_daily_minutes = std::uniform_int_distribution<int>(300, 450)(rng);
  p.seed = seed;
  return make_monthly_scenario(p);
}

}  // namespace tsa

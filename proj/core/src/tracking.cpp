#include "tsa/tracking.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <ostream>
#include <set>

#include <fmt/format.h>

#include "tsa/error.hpp"

namespace tsa {

void ZoneRect::validate() const {
  if (label.empty()) throw Error(ErrorCode::kInvalidZone, "zone label is empty");
  const bool finite = std::isfinite(x0) && std::isfinite(y0) && std::isfinite(x1) && std::isfinite(y1);
  if (!finite || x0 > x1 || y0 > y1) {
    throw Error(ErrorCode::kInvalidZone,
                fmt::format("zone '{}' is not a rectangle: ({}, {})-({}, {})", label, x0, y0, x1, y1));
  }
  if (x0 < 0.0 || y0 < 0.0 || x1 >= kGridCols || y1 >= kGridRows) {
    throw Error(ErrorCode::kInvalidZone,
                fmt::format("zone '{}' leaves the {}x{} grid", label, kGridCols, kGridRows));
  }
}

namespace {

const ZoneRect* match_zone(Point p, std::span<const ZoneRect> zones) {
  for (const auto& z : zones) {
    if (z.contains(p)) return &z;
  }
  return nullptr;
}

void validate_all(std::span<const ZoneRect> zones) {
  for (const auto& z : zones) z.validate();
}

}  // namespace

CentroidTrack exclude_static(std::span<const FrameDetections> detections,
                             std::span<const ZoneRect> static_zones) {
  validate_all(static_zones);
  CentroidTrack track;
  track.frames.reserve(detections.size());
  for (const auto& frame : detections) {
    track.frames.push_back(frame.timestamp);
    for (const auto& blob : frame.blobs) {
      if (const ZoneRect* z = match_zone(blob.centroid, static_zones)) {
        track.excluded.push_back({frame.timestamp, blob.centroid, blob.area, z->label});
      } else {
        track.points.push_back({frame.timestamp, blob.centroid, blob.area});
      }
    }
  }
  return track;
}

CentroidTrack exclude_static(const CentroidTrack& track, std::span<const ZoneRect> static_zones) {
  validate_all(static_zones);
  CentroidTrack out;
  out.frames = track.frames;
  out.excluded = track.excluded;
  for (const auto& p : track.points) {
    if (const ZoneRect* z = match_zone(p.position, static_zones)) {
      out.excluded.push_back({p.timestamp, p.position, p.area, z->label});
    } else {
      out.points.push_back(p);
    }
  }
  std::stable_sort(out.excluded.begin(), out.excluded.end(),
                   [](const ExcludedPoint& a, const ExcludedPoint& b) { return a.timestamp < b.timestamp; });
  return out;
}

std::vector<ZoneRect> suggest_static_zones(std::span<const FrameDetections> detections,
                                           double presence_fraction, int cell_radius) {
  if (!(presence_fraction > 0.0 && presence_fraction <= 1.0)) {
    throw Error(ErrorCode::kPrecondition, "presence_fraction must be in (0, 1]");
  }
  if (cell_radius < 0) throw Error(ErrorCode::kPrecondition, "cell_radius must be >= 0");
  std::vector<ZoneRect> zones;
  if (detections.empty()) return zones;

  std::array<std::size_t, kGridCells> frames_with_centroid{};
  for (const auto& frame : detections) {
    std::set<std::size_t> cells;
    for (const auto& blob : frame.blobs) {
      const int c = std::clamp(static_cast<int>(std::floor(blob.centroid.x)), 0, kGridCols - 1);
      const int r = std::clamp(static_cast<int>(std::floor(blob.centroid.y)), 0, kGridRows - 1);
      cells.insert(cell_index(r, c));
    }
    for (const auto i : cells) ++frames_with_centroid[i];
  }

  const double needed = presence_fraction * static_cast<double>(detections.size());
  BinaryFrame mask(kGridCols, kGridRows);
  for (int r = 0; r < kGridRows; ++r) {
    for (int c = 0; c < kGridCols; ++c) {
      if (static_cast<double>(frames_with_centroid[cell_index(r, c)]) < needed) continue;
      for (int rr = std::max(0, r - cell_radius); rr <= std::min(kGridRows - 1, r + cell_radius); ++rr) {
        for (int cc = std::max(0, c - cell_radius); cc <= std::min(kGridCols - 1, c + cell_radius); ++cc) {
          mask.set(rr, cc, true);
        }
      }
    }
  }

  int n = 0;
  for (const auto& group : connected_components(mask, 1)) {
    zones.push_back({fmt::format("static_{}", n++), static_cast<double>(group.bbox.min_col),
                     static_cast<double>(group.bbox.min_row), static_cast<double>(group.bbox.max_col),
                     static_cast<double>(group.bbox.max_row)});
  }
  return zones;
}

std::vector<PersonFix> select_person(const CentroidTrack& track) {
  std::map<Minute, const TrackPoint*> best;
  for (const auto& p : track.points) {
    auto [it, inserted] = best.try_emplace(p.timestamp, &p);
    if (inserted) continue;
    const TrackPoint& cur = *it->second;
    const bool better = p.area != cur.area ? p.area > cur.area
                        : p.position.y != cur.position.y ? p.position.y < cur.position.y
                                                         : p.position.x < cur.position.x;
    if (better) it->second = &p;
  }

  std::set<Minute> minutes(track.frames.begin(), track.frames.end());
  for (const auto& [t, _] : best) minutes.insert(t);

  std::vector<PersonFix> out;
  out.reserve(minutes.size());
  for (const auto t : minutes) {
    const auto it = best.find(t);
    out.push_back({t, it == best.end() ? std::nullopt : std::optional<Point>(it->second->position)});
  }
  return out;
}

void write_scatter_csv(std::ostream& out, const CentroidTrack& track) {
  out << "timestamp,x,y,status\n";
  // Merge the two time-ordered lists so the file stays in time order.
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < track.points.size() || j < track.excluded.size()) {
    const bool take_point =
        j >= track.excluded.size() ||
        (i < track.points.size() && track.points[i].timestamp <= track.excluded[j].timestamp);
    if (take_point) {
      const auto& p = track.points[i++];
      out << fmt::format("{},{:.4f},{:.4f},person\n", format_timestamp(p.timestamp), p.position.x,
                         p.position.y);
    } else {
      const auto& e = track.excluded[j++];
      out << fmt::format("{},{:.4f},{:.4f},excluded:{}\n", format_timestamp(e.timestamp),
                         e.position.x, e.position.y, e.reason);
    }
  }
}

}  // namespace tsa

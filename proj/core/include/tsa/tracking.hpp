#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tsa/blobdetect.hpp"
#include "tsa/grid.hpp"
#include "tsa/timestamp.hpp"

namespace tsa {

/// Closed axis-aligned rectangle in native grid coordinates.
struct ZoneRect {
  std::string label;
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;

  bool contains(Point p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
  bool overlaps(const ZoneRect& other) const {
    return x0 <= other.x1 && other.x0 <= x1 && y0 <= other.y1 && other.y0 <= y1;
  }
  /// Throws Error(kInvalidZone) unless the label is non-empty, x0 <= x1,
  /// y0 <= y1 and the rectangle lies within [0,16) x [0,12).
  void validate() const;

  friend bool operator==(const ZoneRect&, const ZoneRect&) = default;
};

struct TrackPoint {
  Minute timestamp;
  Point position;
  int area = 0;

  friend bool operator==(const TrackPoint&, const TrackPoint&) = default;
};

struct ExcludedPoint {
  Minute timestamp;
  Point position;
  int area = 0;
  std::string reason;

  friend bool operator==(const ExcludedPoint&, const ExcludedPoint&) = default;
};

/// Centroids of one day's detections split into the candidate person points
/// and the ones dropped as static sources. `frames` lists every frame minute
/// seen, including frames without detections.
struct CentroidTrack {
  std::vector<Minute> frames;
  std::vector<TrackPoint> points;
  std::vector<ExcludedPoint> excluded;

  friend bool operator==(const CentroidTrack&, const CentroidTrack&) = default;
};

/// A centroid inside any static zone is excluded with the first matching
/// zone's label as reason.
CentroidTrack exclude_static(std::span<const FrameDetections> detections,
                             std::span<const ZoneRect> static_zones);
/// Re-applies the exclusion to an existing track.
CentroidTrack exclude_static(const CentroidTrack& track, std::span<const ZoneRect> static_zones);

/// Candidate static zones: cells holding a centroid in at least
/// `presence_fraction` of the frames, dilated by `cell_radius`, merged into
/// bounding rectangles of their 8-connected groups. Labels are
/// `static_<n>`. Never applied automatically.
std::vector<ZoneRect> suggest_static_zones(std::span<const FrameDetections> detections,
                                           double presence_fraction, int cell_radius);

struct PersonFix {
  Minute timestamp;
  std::optional<Point> position;

  friend bool operator==(const PersonFix&, const PersonFix&) = default;
};

/// One entry per frame minute. Several candidates resolve to the largest
/// blob, then smallest y, then smallest x.
std::vector<PersonFix> select_person(const CentroidTrack& track);

/// `timestamp,x,y,status` with status `person` or `excluded:<label>`.
void write_scatter_csv(std::ostream& out, const CentroidTrack& track);

}  // namespace tsa

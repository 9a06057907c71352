#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tsa/framegrid.hpp"
#include "tsa/grid.hpp"
#include "tsa/timestamp.hpp"

namespace tsa {

struct BinaryFrame {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> warm;  // 0 or 1, row-major

  BinaryFrame() = default;
  BinaryFrame(int w, int h) : width(w), height(h), warm(static_cast<std::size_t>(w) * h, 0) {}

  bool at(int row, int col) const { return warm[static_cast<std::size_t>(row) * width + col] != 0; }
  void set(int row, int col, bool value) {
    warm[static_cast<std::size_t>(row) * width + col] = value ? 1 : 0;
  }
  std::size_t count() const;

  friend bool operator==(const BinaryFrame&, const BinaryFrame&) = default;
};

struct FixedThreshold {
  int value = 127;
  friend bool operator==(const FixedThreshold&, const FixedThreshold&) = default;
};
struct OtsuThreshold {
  friend bool operator==(const OtsuThreshold&, const OtsuThreshold&) = default;
};
using ThresholdMethod = std::variant<OtsuThreshold, FixedThreshold>;

/// Accepts `otsu` or `fixed:<0..255>`. Throws Error(kInvalidConfig).
ThresholdMethod parse_threshold_method(std::string_view text);
std::string to_string(const ThresholdMethod& method);

/// Otsu's threshold over the 256-bin histogram: the t maximizing the
/// between-class variance of {v <= t} and {v > t}, smallest t on ties.
/// nullopt when the image has at most one distinct level. Comparisons are
/// exact (integer arithmetic), so images are limited to 2^19 pixels.
std::optional<int> otsu_threshold(const GrayFrame& gray);

/// warm <=> intensity > t. Otsu on a degenerate histogram yields no warm cells.
BinaryFrame threshold(const GrayFrame& gray, const ThresholdMethod& method);

/// Erosion then dilation with the 3x3 cross. Out-of-image neighbours are
/// ignored by both passes.
BinaryFrame morphological_open(const BinaryFrame& mask);

struct BoundingBox {
  int min_col = 0;
  int min_row = 0;
  int max_col = 0;
  int max_row = 0;

  bool contains(Point p) const {
    return p.x >= min_col && p.x <= max_col && p.y >= min_row && p.y <= max_row;
  }
  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

/// One 8-connected warm region. Pixels are in raster order.
struct Blob {
  std::vector<Cell> pixels;
  int area = 0;
  Point centroid;
  BoundingBox bbox;

  friend bool operator==(const Blob&, const Blob&) = default;
};

/// 8-connected components with at least `min_area` cells, ordered by the
/// bounding box's (min row, min col), then by first pixel in raster order.
std::vector<Blob> connected_components(const BinaryFrame& mask, int min_area);

struct DetectConfig {
  ThresholdMethod method = OtsuThreshold{};
  int min_area = 2;
  bool morphology = false;
  // Frames whose temperature range (max - min, °C) is below this are treated
  // as uniform and yield no blobs. 0 disables the check.
  double min_contrast = 3.0;
};

/// to_gray -> threshold -> optional opening -> connected_components, on the
/// native grid.
std::vector<Blob> detect(const ThermalFrame& frame, const DetectConfig& config);

struct FrameDetections {
  Minute timestamp;
  std::vector<Blob> blobs;
};

/// `timestamp,blob_index,area,centroid_x,centroid_y`
void write_blob_csv(std::ostream& out, std::span<const FrameDetections> detections);

}  // namespace tsa

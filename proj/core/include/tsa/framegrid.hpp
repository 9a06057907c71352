#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "tsa/grid.hpp"
#include "tsa/ingest.hpp"
#include "tsa/timestamp.hpp"

namespace tsa {

/// One 12-row by 16-column frame of temperatures, stored row-major.
struct ThermalFrame {
  Minute timestamp;
  TemperatureRow cells{};

  double at(int row, int col) const { return cells[cell_index(row, col)]; }
  double& at(int row, int col) { return cells[cell_index(row, col)]; }

  friend bool operator==(const ThermalFrame&, const ThermalFrame&) = default;
};

/// Builds a frame from a 192-value row. The row is split into 16 segments
/// of 12 values and each segment becomes one image column:
/// cell(r, c) = values[c * 12 + r]. Throws Error(kWrongLength).
ThermalFrame reshape(std::span<const double> values, Minute timestamp = {});

/// Inverse of reshape.
TemperatureRow flatten(const ThermalFrame& frame);

/// 8-bit intensity image, row-major.
struct GrayFrame {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  GrayFrame() = default;
  GrayFrame(int w, int h, std::uint8_t fill = 0)
      : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

  std::uint8_t at(int row, int col) const {
    return pixels[static_cast<std::size_t>(row) * width + col];
  }
  std::uint8_t& at(int row, int col) { return pixels[static_cast<std::size_t>(row) * width + col]; }

  friend bool operator==(const GrayFrame&, const GrayFrame&) = default;
};

/// Per-frame min/max stretch to [0, 255] with round-half-up. A constant
/// frame maps to all zeros.
GrayFrame to_gray(const ThermalFrame& frame);

/// Bilinear upsampling with corner-aligned sampling: output pixel (X, Y)
/// samples the source at (X * (w-1)/(W-1), Y * (h-1)/(H-1)). Throws
/// Error(kBadDimensions) when the target is smaller than the source.
GrayFrame interpolate(const GrayFrame& gray, int width = kRenderWidth, int height = kRenderHeight);

/// Binary PGM (P5, maxval 255).
void write_pgm(std::ostream& out, const GrayFrame& gray);
void write_pgm(const std::filesystem::path& path, const GrayFrame& gray);

}  // namespace tsa

#include "tsa/framegrid.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "tsa/error.hpp"
#include "tsa/io.hpp"

namespace tsa {

ThermalFrame reshape(std::span<const double> values, Minute timestamp) {
  if (values.size() != kGridCells) {
    throw Error(ErrorCode::kWrongLength,
                fmt::format("frame needs {} values, got {}", kGridCells, values.size()));
  }
  ThermalFrame frame;
  frame.timestamp = timestamp;
  for (int c = 0; c < kGridCols; ++c) {
    for (int r = 0; r < kGridRows; ++r) {
      frame.at(r, c) = values[static_cast<std::size_t>(c) * kGridRows + r];
    }
  }
  return frame;
}

TemperatureRow flatten(const ThermalFrame& frame) {
  TemperatureRow values{};
  for (int c = 0; c < kGridCols; ++c) {
    for (int r = 0; r < kGridRows; ++r) {
      values[static_cast<std::size_t>(c) * kGridRows + r] = frame.at(r, c);
    }
  }
  return values;
}

GrayFrame to_gray(const ThermalFrame& frame) {
  GrayFrame gray(kGridCols, kGridRows);
  const auto [lo, hi] = std::minmax_element(frame.cells.begin(), frame.cells.end());
  const double tmin = *lo;
  const double span = *hi - tmin;
  if (!(span > 0.0)) return gray;
  for (std::size_t i = 0; i < kGridCells; ++i) {
    const double level = std::round(255.0 * (frame.cells[i] - tmin) / span);
    gray.pixels[i] = static_cast<std::uint8_t>(std::clamp(level, 0.0, 255.0));
  }
  return gray;
}

GrayFrame interpolate(const GrayFrame& gray, int width, int height) {
  if (gray.width < 1 || gray.height < 1 || width < gray.width || height < gray.height) {
    throw Error(ErrorCode::kBadDimensions,
                fmt::format("cannot resample {}x{} to {}x{}", gray.width, gray.height, width, height));
  }
  GrayFrame out(width, height);
  const double sx = width > 1 ? static_cast<double>(gray.width - 1) / (width - 1) : 0.0;
  const double sy = height > 1 ? static_cast<double>(gray.height - 1) / (height - 1) : 0.0;
  for (int y = 0; y < height; ++y) {
    const double v = y * sy;
    const int r0 = std::min(static_cast<int>(v), gray.height - 1);
    const int r1 = std::min(r0 + 1, gray.height - 1);
    const double fy = v - r0;
    for (int x = 0; x < width; ++x) {
      const double u = x * sx;
      const int c0 = std::min(static_cast<int>(u), gray.width - 1);
      const int c1 = std::min(c0 + 1, gray.width - 1);
      const double fx = u - c0;
      const double top = gray.at(r0, c0) * (1.0 - fx) + gray.at(r0, c1) * fx;
      const double bottom = gray.at(r1, c0) * (1.0 - fx) + gray.at(r1, c1) * fx;
      const double value = top * (1.0 - fy) + bottom * fy;
      out.at(y, x) = static_cast<std::uint8_t>(std::clamp(std::round(value), 0.0, 255.0));
    }
  }
  return out;
}

void write_pgm(std::ostream& out, const GrayFrame& gray) {
  out << "P5\n" << gray.width << ' ' << gray.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(gray.pixels.data()),
            static_cast<std::streamsize>(gray.pixels.size()));
}

void write_pgm(const std::filesystem::path& path, const GrayFrame& gray) {
  write_file_atomic(path, [&](std::ostream& out) { write_pgm(out, gray); });
}

}  // namespace tsa

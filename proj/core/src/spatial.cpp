#include "tsa/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "tsa/error.hpp"

namespace tsa {

namespace {

int bin(double v, int cells, char axis) {
  if (!std::isfinite(v) || v < 0.0 || v > cells) {
    throw Error(ErrorCode::kOutOfBounds, fmt::format("{} = {} outside [0, {}]", axis, v, cells));
  }
  return std::min(static_cast<int>(std::floor(v)), cells - 1);
}

}  // namespace

SpatialDistribution histogram(std::span<const Point> points) {
  SpatialDistribution dist;
  for (const auto& p : points) {
    const int c = bin(p.x, kGridCols, 'x');
    const int r = bin(p.y, kGridRows, 'y');
    ++dist.counts[cell_index(r, c)];
  }
  dist.total = points.size();
  if (dist.total == 0) return dist;

  const double total = static_cast<double>(dist.total);
  for (int r = 0; r < kGridRows; ++r) {
    for (int c = 0; c < kGridCols; ++c) {
      dist.mass[cell_index(r, c)] = static_cast<double>(dist.counts[cell_index(r, c)]) / total;
    }
  }
  for (int r = 0; r < kGridRows; ++r) {
    for (int c = 0; c < kGridCols; ++c) {
      dist.marginal_x[c] += dist.mass[cell_index(r, c)];
      dist.marginal_y[r] += dist.mass[cell_index(r, c)];
    }
  }
  return dist;
}

HeatmapImage log_normalize(const SpatialDistribution& dist) {
  HeatmapImage image{kGridCols, kGridRows, std::vector<double>(kGridCells, 0.0)};
  const std::uint64_t max_count = *std::max_element(dist.counts.begin(), dist.counts.end());
  if (max_count == 0) return image;
  const double denom = std::log1p(static_cast<double>(max_count));
  for (std::size_t i = 0; i < kGridCells; ++i) {
    image.intensity[i] = std::log1p(static_cast<double>(dist.counts[i])) / denom;
  }
  return image;
}

double compare_days(const SpatialDistribution& a, const SpatialDistribution& b) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorCode::kEmptyDistribution, "cannot compare an empty distribution");
  }
  double tv = 0.0;
  for (std::size_t i = 0; i < kGridCells; ++i) tv += std::abs(a.mass[i] - b.mass[i]);
  return std::clamp(0.5 * tv, 0.0, 1.0);
}

GrayFrame heatmap_to_gray(const HeatmapImage& image, std::optional<std::pair<int, int>> upsample) {
  GrayFrame gray(image.width, image.height);
  for (std::size_t i = 0; i < image.intensity.size(); ++i) {
    gray.pixels[i] =
        static_cast<std::uint8_t>(std::clamp(std::round(255.0 * image.intensity[i]), 0.0, 255.0));
  }
  if (upsample) return interpolate(gray, upsample->first, upsample->second);
  return gray;
}

void render(const HeatmapImage& image, std::optional<std::pair<int, int>> upsample,
            const std::filesystem::path& path) {
  write_pgm(path, heatmap_to_gray(image, upsample));
}

void write_distribution_csv(std::ostream& out, const SpatialDistribution& dist) {
  out << "row,col,count,mass\n";
  for (int r = 0; r < kGridRows; ++r) {
    for (int c = 0; c < kGridCols; ++c) {
      const auto i = cell_index(r, c);
      out << fmt::format("{},{},{},{:.9f}\n", r, c, dist.counts[i], dist.mass[i]);
    }
  }
}

void write_marginals_csv(std::ostream& out, const SpatialDistribution& dist) {
  out << "axis,index,mass\n";
  for (int c = 0; c < kGridCols; ++c) out << fmt::format("x,{},{:.9f}\n", c, dist.marginal_x[c]);
  for (int r = 0; r < kGridRows; ++r) out << fmt::format("y,{},{:.9f}\n", r, dist.marginal_y[r]);
}

}  // namespace tsa

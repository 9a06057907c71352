#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "tsa/framegrid.hpp"
#include "tsa/grid.hpp"

namespace tsa {

/// Visit counts of person positions over the native cells and the derived
/// probability mass. Arrays are row-major like ThermalFrame.
struct SpatialDistribution {
  std::array<std::uint64_t, kGridCells> counts{};
  std::array<double, kGridCells> mass{};
  std::array<double, kGridCols> marginal_x{};
  std::array<double, kGridRows> marginal_y{};
  std::uint64_t total = 0;

  // Mass and marginals are all zero when nothing was binned.
  bool empty() const noexcept { return total == 0; }

  friend bool operator==(const SpatialDistribution&, const SpatialDistribution&) = default;
};

/// Bins each point into (floor(x), floor(y)); x == 16 and y == 12 fall into
/// the last column/row. Throws Error(kOutOfBounds) for anything else outside
/// the grid.
SpatialDistribution histogram(std::span<const Point> points);

struct HeatmapImage {
  int width = 0;
  int height = 0;
  std::vector<double> intensity;  // [0, 1], row-major

  friend bool operator==(const HeatmapImage&, const HeatmapImage&) = default;
};

/// ln(1 + count) / ln(1 + max_count); all zeros when the histogram is empty.
HeatmapImage log_normalize(const SpatialDistribution& dist);

/// Total variation distance of the two masses. Throws
/// Error(kEmptyDistribution) when either side is empty.
double compare_days(const SpatialDistribution& a, const SpatialDistribution& b);

/// Intensities scaled to [0, 255], optionally upsampled bilinearly.
GrayFrame heatmap_to_gray(const HeatmapImage& image,
                          std::optional<std::pair<int, int>> upsample = std::nullopt);

/// Writes the heatmap as a PGM. Throws Error(kIo).
void render(const HeatmapImage& image, std::optional<std::pair<int, int>> upsample,
            const std::filesystem::path& path);

/// `row,col,count,mass`
void write_distribution_csv(std::ostream& out, const SpatialDistribution& dist);
/// `axis,index,mass`
void write_marginals_csv(std::ostream& out, const SpatialDistribution& dist);

}  // namespace tsa

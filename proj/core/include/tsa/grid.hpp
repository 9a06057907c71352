#pragma once

#include <cstddef>

namespace tsa {

// Native sensor grid: 16 columns (x) by 12 rows (y).
inline constexpr int kGridCols = 16;
inline constexpr int kGridRows = 12;
inline constexpr std::size_t kGridCells = static_cast<std::size_t>(kGridCols) * kGridRows;

// Default render target; same 4:3 aspect as the native grid.
inline constexpr int kRenderWidth = 800;
inline constexpr int kRenderHeight = 600;

/// Continuous position in native grid coordinates. Cell (col, row) has its
/// center at (col, row).
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Cell {
  int col = 0;
  int row = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

constexpr std::size_t cell_index(int row, int col) noexcept {
  return static_cast<std::size_t>(row) * kGridCols + static_cast<std::size_t>(col);
}

}  // namespace tsa

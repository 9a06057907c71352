#pragma once

// Brute-force reference implementations used only by tests. Each one takes
// a different route from the production code it checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "tsa/blobdetect.hpp"
#include "tsa/framegrid.hpp"
#include "tsa/grid.hpp"

namespace tsa::oracle {

using CellSet = std::set<std::pair<int, int>>;  // (row, col)

/// 8-connected components by depth-first flood fill from every unvisited
/// warm cell, sorted by their smallest (row, col) member.
inline std::vector<CellSet> flood_fill(const BinaryFrame& mask) {
  std::vector<std::vector<bool>> seen(mask.height, std::vector<bool>(mask.width, false));
  std::vector<CellSet> out;
  for (int r = 0; r < mask.height; ++r) {
    for (int c = 0; c < mask.width; ++c) {
      if (!mask.at(r, c) || seen[r][c]) continue;
      CellSet comp;
      std::vector<std::pair<int, int>> stack{{r, c}};
      seen[r][c] = true;
      while (!stack.empty()) {
        const auto [cr, cc] = stack.back();
        stack.pop_back();
        comp.insert({cr, cc});
        for (int dr = -1; dr <= 1; ++dr) {
          for (int dc = -1; dc <= 1; ++dc) {
            const int nr = cr + dr;
            const int nc = cc + dc;
            if (nr < 0 || nc < 0 || nr >= mask.height || nc >= mask.width) continue;
            if (!mask.at(nr, nc) || seen[nr][nc]) continue;
            seen[nr][nc] = true;
            stack.push_back({nr, nc});
          }
        }
      }
      out.push_back(std::move(comp));
    }
  }
  return out;
}

inline CellSet cells_of(const Blob& b) {
  CellSet s;
  for (const auto& p : b.pixels) s.insert({p.row, p.col});
  return s;
}

/// Otsu by exhaustive search minimizing within-class variance, evaluated
/// by rescanning every pixel for each t. Within-class variance times N is
/// Q - (s0^2/n0 + s1^2/n1), so the best t maximizes s0^2/n0 + s1^2/n1,
/// compared as exact rationals. Smallest t wins ties.
inline std::optional<int> otsu(const std::vector<std::uint8_t>& pixels) {
  __extension__ typedef __int128 i128;
  std::set<int> levels(pixels.begin(), pixels.end());
  if (levels.size() <= 1) return std::nullopt;
  int best = -1;
  i128 best_num = 0;
  i128 best_den = 1;
  for (int t = 0; t <= 255; ++t) {
    i128 n0 = 0, n1 = 0, s0 = 0, s1 = 0;
    for (const auto p : pixels) {
      if (p <= t) {
        ++n0;
        s0 += p;
      } else {
        ++n1;
        s1 += p;
      }
    }
    if (n0 == 0 || n1 == 0) continue;
    const i128 num = s0 * s0 * n1 + s1 * s1 * n0;
    const i128 den = n0 * n1;
    if (best < 0 || num * best_den > best_num * den) {
      best = t;
      best_num = num;
      best_den = den;
    }
  }
  return best;
}

/// Bilinear value at output pixel (x, y) for a source of w x h resampled to
/// W x H, computed from the four weighted neighbours directly.
inline double bilinear(const GrayFrame& src, int x, int y, int W, int H) {
  const double u = W > 1 ? x * double(src.width - 1) / (W - 1) : 0.0;
  const double v = H > 1 ? y * double(src.height - 1) / (H - 1) : 0.0;
  double acc = 0.0;
  for (int r = 0; r < src.height; ++r) {
    for (int c = 0; c < src.width; ++c) {
      const double wx = std::max(0.0, 1.0 - std::abs(u - c));
      const double wy = std::max(0.0, 1.0 - std::abs(v - r));
      acc += wx * wy * src.at(r, c);
    }
  }
  return acc;
}

/// Binning by scanning every cell's half-open interval; the far boundary
/// belongs to the last cell.
inline std::vector<std::uint64_t> bin_counts(const std::vector<Point>& pts) {
  std::vector<std::uint64_t> counts(kGridCells, 0);
  for (const auto& p : pts) {
    for (int r = 0; r < kGridRows; ++r) {
      for (int c = 0; c < kGridCols; ++c) {
        const bool in_x = (p.x >= c && p.x < c + 1) || (c == kGridCols - 1 && p.x == kGridCols);
        const bool in_y = (p.y >= r && p.y < r + 1) || (r == kGridRows - 1 && p.y == kGridRows);
        if (in_x && in_y) ++counts[static_cast<std::size_t>(r) * kGridCols + c];
      }
    }
  }
  return counts;
}

inline BinaryFrame random_mask(std::mt19937_64& rng, double density, int w = kGridCols, int h = kGridRows) {
  BinaryFrame m(w, h);
  std::bernoulli_distribution on(density);
  for (auto& v : m.warm) v = on(rng) ? 1 : 0;
  return m;
}

}  // namespace tsa::oracle

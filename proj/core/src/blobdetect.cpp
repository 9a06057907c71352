#include "tsa/blobdetect.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <ostream>

#include <fmt/format.h>

#include "tsa/error.hpp"

namespace tsa {

std::size_t BinaryFrame::count() const {
  return static_cast<std::size_t>(std::count(warm.begin(), warm.end(), std::uint8_t{1}));
}

ThresholdMethod parse_threshold_method(std::string_view text) {
  if (text == "otsu") return OtsuThreshold{};
  constexpr std::string_view prefix = "fixed:";
  if (text.starts_with(prefix)) {
    const auto digits = text.substr(prefix.size());
    int value = -1;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec == std::errc{} && end == digits.data() + digits.size() && value >= 0 && value <= 255) {
      return FixedThreshold{value};
    }
  }
  throw Error(ErrorCode::kInvalidConfig,
              fmt::format("threshold must be 'otsu' or 'fixed:<0..255>', got '{}'", text));
}

std::string to_string(const ThresholdMethod& method) {
  if (const auto* fixed = std::get_if<FixedThreshold>(&method)) {
    return fmt::format("fixed:{}", fixed->value);
  }
  return "otsu";
}

std::optional<int> otsu_threshold(const GrayFrame& gray) {
  __extension__ typedef unsigned __int128 u128;
  const std::size_t n = gray.pixels.size();
  if (n > (std::size_t{1} << 19)) {
    throw Error(ErrorCode::kBadDimensions, "Otsu threshold limited to 2^19 pixels");
  }
  std::array<std::int64_t, 256> hist{};
  for (const auto p : gray.pixels) ++hist[p];
  if (std::count_if(hist.begin(), hist.end(), [](auto h) { return h > 0; }) <= 1) {
    return std::nullopt;
  }

  const std::int64_t total = static_cast<std::int64_t>(n);
  std::int64_t sum_all = 0;
  for (int v = 0; v < 256; ++v) sum_all += v * hist[v];

  // Between-class variance is (s0*N - S*n0)^2 / (N^2 * n0 * n1); the N^2
  // factor is common to all t, so compare num/den by cross-multiplication.
  int best_t = -1;
  u128 best_num = 0;
  u128 best_den = 1;
  std::int64_t n0 = 0;
  std::int64_t s0 = 0;
  for (int t = 0; t < 255; ++t) {
    n0 += hist[t];
    s0 += static_cast<std::int64_t>(t) * hist[t];
    const std::int64_t n1 = total - n0;
    if (n0 == 0 || n1 == 0) continue;
    const std::int64_t diff = s0 * total - sum_all * n0;
    const u128 mag = static_cast<u128>(diff < 0 ? -diff : diff);
    const u128 num = mag * mag;
    const u128 den = static_cast<u128>(n0) * static_cast<u128>(n1);
    if (best_t < 0 || num * best_den > best_num * den) {
      best_t = t;
      best_num = num;
      best_den = den;
    }
  }
  return best_t;
}

BinaryFrame threshold(const GrayFrame& gray, const ThresholdMethod& method) {
  BinaryFrame mask(gray.width, gray.height);
  int t = 255;  // nothing is > 255
  if (const auto* fixed = std::get_if<FixedThreshold>(&method)) {
    t = fixed->value;
  } else if (const auto otsu = otsu_threshold(gray)) {
    t = *otsu;
  }
  for (std::size_t i = 0; i < gray.pixels.size(); ++i) {
    mask.warm[i] = gray.pixels[i] > t ? 1 : 0;
  }
  return mask;
}

namespace {

constexpr std::array<std::array<int, 2>, 4> kCross{{{-1, 0}, {1, 0}, {0, -1}, {0, 1}}};

BinaryFrame cross_pass(const BinaryFrame& in, bool erode) {
  BinaryFrame out(in.width, in.height);
  for (int r = 0; r < in.height; ++r) {
    for (int c = 0; c < in.width; ++c) {
      bool v = in.at(r, c);
      for (const auto& [dr, dc] : kCross) {
        const int rr = r + dr;
        const int cc = c + dc;
        if (rr < 0 || rr >= in.height || cc < 0 || cc >= in.width) continue;
        v = erode ? (v && in.at(rr, cc)) : (v || in.at(rr, cc));
      }
      out.set(r, c, v);
    }
  }
  return out;
}

class DisjointSet {
 public:
  int make() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

BinaryFrame morphological_open(const BinaryFrame& mask) {
  return cross_pass(cross_pass(mask, true), false);
}

std::vector<Blob> connected_components(const BinaryFrame& mask, int min_area) {
  if (min_area < 1) throw Error(ErrorCode::kPrecondition, "min_area must be at least 1");
  const int w = mask.width;
  const int h = mask.height;
  std::vector<int> label(static_cast<std::size_t>(w) * h, -1);
  DisjointSet sets;

  // First pass: provisional labels from the already-visited 8-neighbours
  // (W, NW, N, NE).
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (!mask.at(r, c)) continue;
      int current = -1;
      constexpr std::array<std::array<int, 2>, 4> kPrior{{{0, -1}, {-1, -1}, {-1, 0}, {-1, 1}}};
      for (const auto& [dr, dc] : kPrior) {
        const int rr = r + dr;
        const int cc = c + dc;
        if (rr < 0 || cc < 0 || cc >= w) continue;
        const int nl = label[static_cast<std::size_t>(rr) * w + cc];
        if (nl < 0) continue;
        if (current < 0) {
          current = nl;
        } else {
          sets.unite(current, nl);
        }
      }
      if (current < 0) current = sets.make();
      label[static_cast<std::size_t>(r) * w + c] = current;
    }
  }

  // Second pass: gather pixels per root in raster order.
  std::vector<int> root_to_blob;
  std::vector<Blob> blobs;
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const int l = label[static_cast<std::size_t>(r) * w + c];
      if (l < 0) continue;
      const int root = sets.find(l);
      if (root_to_blob.size() <= static_cast<std::size_t>(root)) {
        root_to_blob.resize(static_cast<std::size_t>(root) + 1, -1);
      }
      if (root_to_blob[root] < 0) {
        root_to_blob[root] = static_cast<int>(blobs.size());
        blobs.emplace_back();
        blobs.back().bbox = {c, r, c, r};
      }
      Blob& b = blobs[root_to_blob[root]];
      b.pixels.push_back({c, r});
      b.bbox.min_col = std::min(b.bbox.min_col, c);
      b.bbox.max_col = std::max(b.bbox.max_col, c);
      b.bbox.max_row = std::max(b.bbox.max_row, r);
    }
  }

  std::vector<Blob> kept;
  for (auto& b : blobs) {
    b.area = static_cast<int>(b.pixels.size());
    if (b.area < min_area) continue;
    double sx = 0.0;
    double sy = 0.0;
    for (const auto& p : b.pixels) {
      sx += p.col;
      sy += p.row;
    }
    b.centroid = {sx / b.area, sy / b.area};
    kept.push_back(std::move(b));
  }
  std::sort(kept.begin(), kept.end(), [](const Blob& a, const Blob& b) {
    if (a.bbox.min_row != b.bbox.min_row) return a.bbox.min_row < b.bbox.min_row;
    if (a.bbox.min_col != b.bbox.min_col) return a.bbox.min_col < b.bbox.min_col;
    const auto& pa = a.pixels.front();
    const auto& pb = b.pixels.front();
    return pa.row != pb.row ? pa.row < pb.row : pa.col < pb.col;
  });
  return kept;
}

std::vector<Blob> detect(const ThermalFrame& frame, const DetectConfig& config) {
  const auto [lo, hi] = std::minmax_element(frame.cells.begin(), frame.cells.end());
  if (*hi - *lo < config.min_contrast) return {};
  BinaryFrame mask = threshold(to_gray(frame), config.method);
  if (config.morphology) mask = morphological_open(mask);
  return connected_components(mask, std::max(config.min_area, 1));
}

void write_blob_csv(std::ostream& out, std::span<const FrameDetections> detections) {
  out << "timestamp,blob_index,area,centroid_x,centroid_y\n";
  for (const auto& frame : detections) {
    const std::string ts = format_timestamp(frame.timestamp);
    for (std::size_t i = 0; i < frame.blobs.size(); ++i) {
      const auto& b = frame.blobs[i];
      out << fmt::format("{},{},{},{:.4f},{:.4f}\n", ts, i, b.area, b.centroid.x, b.centroid.y);
    }
  }
}

}  // namespace tsa

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rpdmd {

// Range/mean below this absolute threshold counts as degenerate.
inline constexpr double kDegenerateEps = 1e-12;

/// Dense F x H x W scalar field, row-major (frame, row, column).
/// The shared carrier for rollouts, saliency maps and weight maps.
class VideoVolume {
 public:
  VideoVolume() = default;

  VideoVolume(std::size_t frames, std::size_t height, std::size_t width,
              double fill = 0.0)
      : frames_(frames),
        height_(height),
        width_(width),
        data_(checked_size(frames, height, width), fill) {}

  VideoVolume(std::size_t frames, std::size_t height, std::size_t width,
              std::vector<double> data)
      : frames_(frames), height_(height), width_(width), data_(std::move(data)) {
    if (data_.size() != checked_size(frames, height, width)) {
      throw std::invalid_argument("VideoVolume: data length must equal F*H*W");
    }
  }

  std::size_t frames() const { return frames_; }
  std::size_t height() const { return height_; }
  std::size_t width() const { return width_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  std::size_t index(std::size_t f, std::size_t h, std::size_t w) const {
    return (f * height_ + h) * width_ + w;
  }

  double& at(std::size_t f, std::size_t h, std::size_t w) {
    return data_[index(f, h, w)];
  }
  double at(std::size_t f, std::size_t h, std::size_t w) const {
    return data_[index(f, h, w)];
  }

  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool same_shape(const VideoVolume& other) const {
    return frames_ == other.frames_ && height_ == other.height_ &&
           width_ == other.width_;
  }

 private:
  static std::size_t checked_size(std::size_t f, std::size_t h, std::size_t w) {
    if (f == 0 || h == 0 || w == 0) {
      throw std::invalid_argument("VideoVolume: every dimension must be >= 1");
    }
    return f * h * w;
  }

  std::size_t frames_ = 0;
  std::size_t height_ = 0;
  std::size_t width_ = 0;
  std::vector<double> data_;
};

/// One scalar per frame.
using TemporalProfile = std::vector<double>;

inline void require_same_shape(const VideoVolume& a, const VideoVolume& b,
                               const char* op) {
  if (!a.same_shape(b)) {
    throw std::invalid_argument(std::string(op) + ": shape mismatch");
  }
}

inline void require_nonempty(const VideoVolume& v, const char* op) {
  if (v.empty()) {
    throw std::invalid_argument(std::string(op) + ": empty volume");
  }
}

inline double global_mean(const VideoVolume& v) {
  require_nonempty(v, "global_mean");
  double sum = 0.0;
  for (double x : v.data()) sum += x;
  return sum / static_cast<double>(v.size());
}

inline TemporalProfile spatial_mean(const VideoVolume& v) {
  require_nonempty(v, "spatial_mean");
  const double inv_hw = 1.0 / static_cast<double>(v.height() * v.width());
  TemporalProfile profile(v.frames());
  for (std::size_t f = 0; f < v.frames(); ++f) {
    double sum = 0.0;
    for (std::size_t h = 0; h < v.height(); ++h) {
      for (std::size_t w = 0; w < v.width(); ++w) {
        sum += v.at(f, h, w);
      }
    }
    profile[f] = sum * inv_hw;
  }
  return profile;
}

/// Maps each x to (x - min)/(max - min). A degenerate range (max - min
/// below kDegenerateEps) maps to all-ones so downstream mean-normalization
/// yields uniform weights.
inline std::vector<double> minmax_normalize(const std::vector<double>& values) {
  if (values.empty()) {
    throw std::invalid_argument("minmax_normalize: empty input");
  }
  double lo = values[0];
  double hi = values[0];
  for (double x : values) {
    if (x < lo) lo = x;
    if (x > hi) hi = x;
  }
  const double range = hi - lo;
  if (range < kDegenerateEps) {
    return std::vector<double>(values.size(), 1.0);
  }
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = (values[i] - lo) / range;
  }
  return out;
}

inline std::vector<double> clamp_floor(const std::vector<double>& values,
                                       double floor) {
  if (!(floor >= 0.0 && floor <= 1.0)) {
    throw std::invalid_argument("clamp_floor: floor must lie in [0, 1]");
  }
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = values[i] > floor ? values[i] : floor;
  }
  return out;
}

/// Divides by the vector mean; output mean is 1.
inline std::vector<double> mean_normalize(const std::vector<double>& values) {
  if (values.empty()) {
    throw std::invalid_argument("mean_normalize: empty input");
  }
  double sum = 0.0;
  for (double x : values) sum += x;
  const double mean = sum / static_cast<double>(values.size());
  if (mean <= kDegenerateEps) {
    throw std::invalid_argument("mean_normalize: mean must be positive");
  }
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = values[i] / mean;
  }
  return out;
}

inline VideoVolume hadamard(const VideoVolume& a, const VideoVolume& b) {
  require_same_shape(a, b, "hadamard");
  VideoVolume out = a;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] *= b[i];
  }
  return out;
}

inline bool all_finite(const VideoVolume& v) {
  for (double x : v.data()) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

inline double mean_abs(const VideoVolume& v) {
  require_nonempty(v, "mean_abs");
  double sum = 0.0;
  for (double x : v.data()) sum += std::abs(x);
  return sum / static_cast<double>(v.size());
}

/// Root-mean-square distance between two equally shaped volumes.
inline double rms_distance(const VideoVolume& a, const VideoVolume& b) {
  require_same_shape(a, b, "rms_distance");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(a.size()));
}

}  // namespace rpdmd

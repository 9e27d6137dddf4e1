#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "scene123/core/errors.hpp"

namespace scene123 {

/// Row-major 2-D array of scalars (depth maps, masks, transmittance maps).
template <typename T>
class Plane {
 public:
  Plane() = default;
  Plane(int height, int width, T fill = T{})
      : h_(height), w_(width), data_(static_cast<size_t>(height) * width, fill) {
    if (height < 0 || width < 0) throw DomainError("Plane: negative dimensions");
  }

  int height() const { return h_; }
  int width() const { return w_; }
  bool empty() const { return data_.empty(); }
  size_t size() const { return data_.size(); }

  T& at(int y, int x) { return data_[static_cast<size_t>(y) * w_ + x]; }
  const T& at(int y, int x) const { return data_[static_cast<size_t>(y) * w_ + x]; }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  std::vector<T>& storage() { return data_; }
  const std::vector<T>& storage() const { return data_; }

  template <typename U>
  bool same_shape(const Plane<U>& other) const {
    return h_ == other.height() && w_ == other.width();
  }

  bool operator==(const Plane& other) const {
    return h_ == other.h_ && w_ == other.w_ && data_ == other.data_;
  }

 private:
  int h_ = 0;
  int w_ = 0;
  std::vector<T> data_;
};

using DepthMap = Plane<float>;
using MaskMap = Plane<std::uint8_t>;

/// H x W x 3 float image, values in [0,1], row-major with interleaved channels.
class ImageRGB {
 public:
  ImageRGB() = default;
  ImageRGB(int height, int width, float fill = 0.0f)
      : h_(height), w_(width), data_(static_cast<size_t>(height) * width * 3, fill) {
    if (height < 0 || width < 0) throw DomainError("ImageRGB: negative dimensions");
  }

  int height() const { return h_; }
  int width() const { return w_; }
  bool empty() const { return data_.empty(); }
  size_t size() const { return data_.size(); }

  float& at(int y, int x, int c) { return data_[(static_cast<size_t>(y) * w_ + x) * 3 + c]; }
  const float& at(int y, int x, int c) const {
    return data_[(static_cast<size_t>(y) * w_ + x) * 3 + c];
  }

  std::array<float, 3> pixel(int y, int x) const {
    size_t i = (static_cast<size_t>(y) * w_ + x) * 3;
    return {data_[i], data_[i + 1], data_[i + 2]};
  }
  void set_pixel(int y, int x, float r, float g, float b) {
    size_t i = (static_cast<size_t>(y) * w_ + x) * 3;
    data_[i] = r;
    data_[i + 1] = g;
    data_[i + 2] = b;
  }

  float* data() { return data_.data(); }
  const float* data() const { return data_.data(); }
  std::vector<float>& storage() { return data_; }
  const std::vector<float>& storage() const { return data_; }

  bool same_shape(const ImageRGB& other) const {
    return h_ == other.h_ && w_ == other.w_;
  }
  template <typename U>
  bool same_shape(const Plane<U>& other) const {
    return h_ == other.height() && w_ == other.width();
  }

  bool operator==(const ImageRGB& other) const {
    return h_ == other.h_ && w_ == other.w_ && data_ == other.data_;
  }

 private:
  int h_ = 0;
  int w_ = 0;
  std::vector<float> data_;
};

/// Mean squared error between two images over all pixel-channels (double accumulation).
double image_mse(const ImageRGB& a, const ImageRGB& b);

/// MSE restricted to pixels where mask is true (all 3 channels of those pixels).
double image_mse_masked(const ImageRGB& a, const ImageRGB& b, const MaskMap& mask);

}  // namespace scene123

#include "scene123/core/image.hpp"

namespace scene123 {

double image_mse(const ImageRGB& a, const ImageRGB& b) {
  if (!a.same_shape(b)) throw DomainError("image_mse: shape mismatch");
  if (a.size() == 0) throw DataError("image_mse: empty images");
  double acc = 0.0;
  const float* pa = a.data();
  const float* pb = b.data();
  for (size_t i = 0; i < a.size(); ++i) {
    double d = static_cast<double>(pa[i]) - static_cast<double>(pb[i]);
    acc += d * d;
  }
  return acc / static_cast<double>(a.size());
}

double image_mse_masked(const ImageRGB& a, const ImageRGB& b, const MaskMap& mask) {
  if (!a.same_shape(b) || !a.same_shape(mask)) throw DomainError("image_mse_masked: shape mismatch");
  double acc = 0.0;
  size_t n = 0;
  for (int y = 0; y < a.height(); ++y) {
    for (int x = 0; x < a.width(); ++x) {
      if (!mask.at(y, x)) continue;
      for (int c = 0; c < 3; ++c) {
        double d = static_cast<double>(a.at(y, x, c)) - static_cast<double>(b.at(y, x, c));
        acc += d * d;
      }
      n += 3;
    }
  }
  if (n == 0) throw DataError("image_mse_masked: empty mask");
  return acc / static_cast<double>(n);
}

}  // namespace scene123

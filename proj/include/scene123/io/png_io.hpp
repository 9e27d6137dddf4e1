#pragma once

#include <string>

#include "scene123/core/image.hpp"

namespace scene123::io {

// 8-bit RGB PNG <-> float image in [0,1] (value/255 on read, round(value*255) on write).
ImageRGB read_png_rgb(const std::string& path);
void write_png_rgb(const std::string& path, const ImageRGB& image);

// 8-bit grayscale PNG for masks (0 = invalid, 255 = valid).
MaskMap read_png_mask(const std::string& path);
void write_png_mask(const std::string& path, const MaskMap& mask);

}  // namespace scene123::io

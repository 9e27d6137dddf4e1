#include "scene123/io/png_io.hpp"

#include <png.h>

#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <memory>
#include <vector>

namespace scene123::io {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

std::vector<unsigned char> read_png_bytes(const std::string& path, int& width, int& height,
                                          int& channels) {
  FilePtr fp(std::fopen(path.c_str(), "rb"));
  if (!fp) throw IoError("read_png: cannot open " + path);

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw IoError("read_png: png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw IoError("read_png: png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("read_png: decode error in " + path);
  }

  png_init_io(png, fp.get());
  png_read_info(png, info);

  // Normalize any input to 8-bit RGB or gray.
  png_byte color_type = png_get_color_type(png, info);
  png_byte bit_depth = png_get_bit_depth(png, info);
  if (bit_depth == 16) png_set_strip_16(png);
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  png_set_strip_alpha(png);
  png_read_update_info(png, info);

  width = static_cast<int>(png_get_image_width(png, info));
  height = static_cast<int>(png_get_image_height(png, info));
  channels = static_cast<int>(png_get_channels(png, info));

  std::vector<unsigned char> bytes(static_cast<size_t>(width) * height * channels);
  std::vector<png_bytep> rows(static_cast<size_t>(height));
  for (int y = 0; y < height; ++y) {
    rows[y] = bytes.data() + static_cast<size_t>(y) * width * channels;
  }
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return bytes;
}

void write_png_bytes(const std::string& path, const unsigned char* bytes, int width, int height,
                     int channels) {
  FilePtr fp(std::fopen(path.c_str(), "wb"));
  if (!fp) throw IoError("write_png: cannot open " + path);

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw IoError("write_png: png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("write_png: png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("write_png: encode error for " + path);
  }

  png_init_io(png, fp.get());
  png_set_compression_level(png, 6);
  png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), 8,
               channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);

  std::vector<png_bytep> rows(static_cast<size_t>(height));
  for (int y = 0; y < height; ++y) {
    rows[y] = const_cast<png_bytep>(bytes + static_cast<size_t>(y) * width * channels);
  }
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace

ImageRGB read_png_rgb(const std::string& path) {
  int w = 0, h = 0, ch = 0;
  std::vector<unsigned char> bytes = read_png_bytes(path, w, h, ch);
  ImageRGB image(h, w);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const unsigned char* px = bytes.data() + (static_cast<size_t>(y) * w + x) * ch;
      if (ch == 1) {
        float v = static_cast<float>(px[0]) / 255.0f;
        image.set_pixel(y, x, v, v, v);
      } else {
        image.set_pixel(y, x, px[0] / 255.0f, px[1] / 255.0f, px[2] / 255.0f);
      }
    }
  }
  return image;
}

void write_png_rgb(const std::string& path, const ImageRGB& image) {
  if (image.empty()) throw DomainError("write_png_rgb: empty image");
  std::vector<unsigned char> bytes(static_cast<size_t>(image.height()) * image.width() * 3);
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      for (int c = 0; c < 3; ++c) {
        float v = image.at(y, x, c);
        v = v < 0.0f ? 0.0f : (v > 1.0f ? 1.0f : v);
        bytes[(static_cast<size_t>(y) * image.width() + x) * 3 + c] =
            static_cast<unsigned char>(std::lround(v * 255.0f));
      }
    }
  }
  write_png_bytes(path, bytes.data(), image.width(), image.height(), 3);
}

MaskMap read_png_mask(const std::string& path) {
  int w = 0, h = 0, ch = 0;
  std::vector<unsigned char> bytes = read_png_bytes(path, w, h, ch);
  MaskMap mask(h, w);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      mask.at(y, x) = bytes[(static_cast<size_t>(y) * w + x) * ch] >= 128 ? 1 : 0;
    }
  }
  return mask;
}

void write_png_mask(const std::string& path, const MaskMap& mask) {
  if (mask.empty()) throw DomainError("write_png_mask: empty mask");
  std::vector<unsigned char> bytes(static_cast<size_t>(mask.height()) * mask.width());
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      bytes[static_cast<size_t>(y) * mask.width() + x] = mask.at(y, x) ? 255 : 0;
    }
  }
  write_png_bytes(path, bytes.data(), mask.width(), mask.height(), 1);
}

}  // namespace scene123::io

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace iafa {

/// Row-major grayscale image. Samples are stored in 16 bits so the 9- and
/// 10-bit adder outputs fit without clipping; maxval records the nominal
/// sample range for file output and metric normalization.
struct GrayImage {
  int width = 0;
  int height = 0;
  int maxval = 255;
  std::vector<std::uint16_t> samples;

  GrayImage() = default;
  GrayImage(int w, int h, int maxval_ = 255)
      : width(w), height(h), maxval(maxval_),
        samples(static_cast<std::size_t>(w) * h, 0) {}

  std::uint16_t &at(int x, int y) {
    return samples[static_cast<std::size_t>(y) * width + x];
  }
  std::uint16_t at(int x, int y) const {
    return samples[static_cast<std::size_t>(y) * width + x];
  }
  std::size_t pixel_count() const { return samples.size(); }
};

/// Row-major 8-bit RGB image, interleaved samples.
struct RgbImage {
  int width = 0;
  int height = 0;
  int maxval = 255;
  std::vector<std::uint8_t> samples;

  RgbImage() = default;
  RgbImage(int w, int h)
      : width(w), height(h), samples(static_cast<std::size_t>(w) * h * 3, 0) {}

  std::uint8_t channel(int x, int y, int ch) const {
    return samples[(static_cast<std::size_t>(y) * width + x) * 3 + ch];
  }
  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width) * height;
  }
};

// Binary PGM (P5) / PPM (P6). Samples above 255 are written as two bytes,
// most significant first. Read errors throw std::runtime_error.
GrayImage read_pgm(const std::string &path);
void write_pgm(const GrayImage &image, const std::string &path);
RgbImage read_ppm(const std::string &path);
void write_ppm(const RgbImage &image, const std::string &path);

/// True when the file starts with a P6 magic.
bool is_ppm_file(const std::string &path);

} // namespace iafa

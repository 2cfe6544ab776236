#include "core/image.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace iafa {

namespace {

[[noreturn]] void fail(const std::string &path, const std::string &what) {
  throw std::runtime_error(path + ": " + what);
}

// Skips whitespace and '#' comment lines, then reads one ASCII integer.
int read_header_int(std::istream &in, const std::string &path) {
  int ch = in.get();
  while (ch != EOF) {
    if (ch == '#') {
      while (ch != EOF && ch != '\n')
        ch = in.get();
    } else if (!std::isspace(ch)) {
      break;
    }
    ch = in.get();
  }
  if (ch == EOF || !std::isdigit(ch))
    fail(path, "malformed header");
  int value = 0;
  while (ch != EOF && std::isdigit(ch)) {
    value = value * 10 + (ch - '0');
    ch = in.get();
  }
  return value;
}

struct Header {
  char magic;
  int width;
  int height;
  int maxval;
};

Header read_header(std::istream &in, const std::string &path) {
  if (in.get() != 'P')
    fail(path, "not a PNM file");
  const int magic = in.get();
  if (magic != '5' && magic != '6')
    fail(path, "only binary P5/P6 files are supported");
  Header h;
  h.magic = static_cast<char>(magic);
  h.width = read_header_int(in, path);
  h.height = read_header_int(in, path);
  h.maxval = read_header_int(in, path);
  if (h.width <= 0 || h.height <= 0)
    fail(path, "bad dimensions");
  if (h.maxval <= 0 || h.maxval > 65535)
    fail(path, "unsupported maxval");
  // The single whitespace byte after maxval was already consumed by
  // read_header_int.
  return h;
}

} // namespace

GrayImage read_pgm(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(path, "cannot open");
  const Header h = read_header(in, path);
  if (h.magic != '5')
    fail(path, "expected a P5 grayscale file");
  GrayImage image(h.width, h.height, h.maxval);
  const bool wide = h.maxval > 255;
  std::vector<char> raw(image.pixel_count() * (wide ? 2 : 1));
  in.read(raw.data(), static_cast<std::streamsize>(raw.size()));
  if (static_cast<std::size_t>(in.gcount()) != raw.size())
    fail(path, "truncated pixel data");
  for (std::size_t i = 0; i < image.pixel_count(); ++i) {
    if (wide)
      image.samples[i] = static_cast<std::uint16_t>(
          (static_cast<unsigned char>(raw[2 * i]) << 8) |
          static_cast<unsigned char>(raw[2 * i + 1]));
    else
      image.samples[i] = static_cast<unsigned char>(raw[i]);
  }
  return image;
}

void write_pgm(const GrayImage &image, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    fail(path, "cannot open for writing");
  out << "P5\n" << image.width << ' ' << image.height << '\n'
      << image.maxval << '\n';
  const bool wide = image.maxval > 255;
  std::vector<char> raw;
  raw.reserve(image.pixel_count() * (wide ? 2 : 1));
  for (std::uint16_t sample : image.samples) {
    if (wide) {
      raw.push_back(static_cast<char>(sample >> 8));
      raw.push_back(static_cast<char>(sample & 0xff));
    } else {
      raw.push_back(static_cast<char>(sample & 0xff));
    }
  }
  out.write(raw.data(), static_cast<std::streamsize>(raw.size()));
  if (!out)
    fail(path, "write failed");
}

RgbImage read_ppm(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(path, "cannot open");
  const Header h = read_header(in, path);
  if (h.magic != '6')
    fail(path, "expected a P6 color file");
  if (h.maxval > 255)
    fail(path, "16-bit color files are not supported");
  RgbImage image(h.width, h.height);
  image.maxval = h.maxval;
  in.read(reinterpret_cast<char *>(image.samples.data()),
          static_cast<std::streamsize>(image.samples.size()));
  if (static_cast<std::size_t>(in.gcount()) != image.samples.size())
    fail(path, "truncated pixel data");
  return image;
}

void write_ppm(const RgbImage &image, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    fail(path, "cannot open for writing");
  out << "P6\n" << image.width << ' ' << image.height << '\n'
      << image.maxval << '\n';
  out.write(reinterpret_cast<const char *>(image.samples.data()),
            static_cast<std::streamsize>(image.samples.size()));
  if (!out)
    fail(path, "write failed");
}

bool is_ppm_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  char magic[2] = {0, 0};
  in.read(magic, 2);
  return in && magic[0] == 'P' && magic[1] == '6';
}

} // namespace iafa

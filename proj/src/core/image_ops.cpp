#include "core/image_ops.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <vector>

#include "core/error_analysis.hpp"

namespace iafa {

namespace {

void require_same_size(const GrayImage &a, const GrayImage &b) {
  if (a.width != b.width || a.height != b.height)
    throw std::invalid_argument("image dimensions do not match");
}

// Per-bit lookup table of a cell, indexed by (a << 2) | (b << 1) | carry.
std::array<std::uint8_t, 8> cell_lut(CellKind kind) {
  std::array<std::uint8_t, 8> lut{};
  for (int i = 0; i < 8; ++i) {
    auto [s, co] = behavioral_cell(kind, (i >> 2) & 1, (i >> 1) & 1, i & 1);
    lut[i] = static_cast<std::uint8_t>(2 * co + s);
  }
  return lut;
}

std::uint32_t rca_lut(const std::array<std::uint8_t, 8> &lut, int n, int m,
                      std::uint32_t a, std::uint32_t b, unsigned carry) {
  std::uint32_t out = 0;
  for (int i = 0; i < n; ++i) {
    const unsigned ai = (a >> i) & 1;
    const unsigned bi = (b >> i) & 1;
    if (i < m) {
      const std::uint8_t v = lut[(ai << 2) | (bi << 1) | carry];
      out |= std::uint32_t(v & 1) << i;
      carry = v >> 1;
    } else {
      out |= std::uint32_t(ai ^ bi ^ carry) << i;
      carry = (ai & bi) | (ai & carry) | (bi & carry);
    }
  }
  return out | (std::uint32_t(carry) << n);
}

template <typename Fn> void parallel_rows(int height, Fn &&fn) {
  const int workers = std::min(worker_count(), height);
  if (workers <= 1) {
    fn(0, height);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    const int begin = height * w / workers;
    const int end = height * (w + 1) / workers;
    threads.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (std::thread &t : threads)
    t.join();
}

} // namespace

ApplicationResult image_add(const GrayImage &a, const GrayImage &b,
                            const RcaConfig &config, AddOptions options) {
  require_same_size(a, b);
  validate_config(config);
  const auto lut = cell_lut(config.cell);
  const int n = config.n;
  const int m = config.approx_lsbs;

  ApplicationResult result;
  const int out_maxval = options.clip ? 255 : 1023;
  result.approx = GrayImage(a.width, a.height, out_maxval);
  result.exact = GrayImage(a.width, a.height, out_maxval);
  parallel_rows(a.height, [&](int y0, int y1) {
    for (int y = y0; y < y1; ++y)
      for (int x = 0; x < a.width; ++x) {
        std::uint32_t approx = rca_lut(lut, n, m, a.at(x, y), b.at(x, y), 0);
        std::uint32_t exact = a.at(x, y) + b.at(x, y);
        if (options.clip) {
          approx = approx > 255 ? 255 : approx;
          exact = exact > 255 ? 255 : exact;
        }
        result.approx.at(x, y) = static_cast<std::uint16_t>(approx);
        result.exact.at(x, y) = static_cast<std::uint16_t>(exact);
      }
  });
  return result;
}

ApplicationResult motion_detect(const GrayImage &a, const GrayImage &b,
                                const RcaConfig &config) {
  require_same_size(a, b);
  validate_config(config);
  if (config.n != 8)
    throw std::invalid_argument("motion detection expects an 8-bit adder");
  const auto lut = cell_lut(config.cell);
  const int m = config.approx_lsbs;

  ApplicationResult result;
  result.approx = GrayImage(a.width, a.height, 255);
  result.exact = GrayImage(a.width, a.height, 255);
  auto difference = [&](std::uint32_t p1, std::uint32_t p2, int approx_bits) {
    // p1 + NOT(p2) + 1 equals p1 - p2 + 256 exactly; the offset-256
    // magnitude is the absolute difference.
    const std::uint32_t v = rca_lut(lut, 8, approx_bits, p1, (~p2) & 0xff, 1);
    const std::int32_t signed_diff = static_cast<std::int32_t>(v) - 256;
    const std::uint32_t magnitude =
        static_cast<std::uint32_t>(std::abs(signed_diff));
    return magnitude > 255 ? 255u : magnitude;
  };
  parallel_rows(a.height, [&](int y0, int y1) {
    for (int y = y0; y < y1; ++y)
      for (int x = 0; x < a.width; ++x) {
        result.approx.at(x, y) =
            static_cast<std::uint16_t>(difference(a.at(x, y), b.at(x, y), m));
        result.exact.at(x, y) =
            static_cast<std::uint16_t>(difference(a.at(x, y), b.at(x, y), 0));
      }
  });
  return result;
}

ApplicationResult grayscale_filter(const RgbImage &rgb,
                                   const RcaConfig &config) {
  validate_config(config);
  const auto lut = cell_lut(config.cell);
  const int m = config.approx_lsbs;

  ApplicationResult result;
  result.approx = GrayImage(rgb.width, rgb.height, 255);
  result.exact = GrayImage(rgb.width, rgb.height, 255);
  auto gray = [&](int x, int y, int approx_bits) {
    const std::uint32_t r = rgb.channel(x, y, 0);
    const std::uint32_t g = rgb.channel(x, y, 1);
    const std::uint32_t b = rgb.channel(x, y, 2);
    // R+G <= 510 and the second operand stays below 1024, so both additions
    // fit the 10-bit adder.
    std::uint32_t t = rca_lut(lut, 10, approx_bits, r, g, 0);
    t = t > 1023 ? 1023 : t;
    t = rca_lut(lut, 10, approx_bits, t, b, 0);
    t /= 3;
    return t > 255 ? 255u : t;
  };
  parallel_rows(rgb.height, [&](int y0, int y1) {
    for (int y = y0; y < y1; ++y)
      for (int x = 0; x < rgb.width; ++x) {
        result.approx.at(x, y) = static_cast<std::uint16_t>(gray(x, y, m));
        result.exact.at(x, y) = static_cast<std::uint16_t>(gray(x, y, 0));
      }
  });
  return result;
}

} // namespace iafa

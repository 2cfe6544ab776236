#pragma once

#include "core/image.hpp"
#include "core/rca.hpp"

namespace iafa {

struct AddOptions {
  /// Saturate outputs at 255 (and compare at 8 bits) instead of keeping the
  /// full 9-bit sum range.
  bool clip = false;
};

/// Application output next to its exact reference (same operation with
/// approx_lsbs = 0).
struct ApplicationResult {
  GrayImage approx;
  GrayImage exact;
};

/// Pixel-wise addition through the configured n=8 RCA; outputs are 9-bit
/// (maxval 1023 storage) unless options.clip is set.
ApplicationResult image_add(const GrayImage &a, const GrayImage &b,
                            const RcaConfig &config, AddOptions options = {});

/// |a - b| via two's-complement addition: a + NOT(b) + 1 through the
/// configured RCA (the +1 enters as the LSB carry-in), then the absolute
/// value of the offset-256 result.
ApplicationResult motion_detect(const GrayImage &a, const GrayImage &b,
                                const RcaConfig &config);

/// (R + G + B) / 3 with both additions chained through a 10-bit RCA whose
/// approximate cells sit in the same LSB positions; the division is exact.
ApplicationResult grayscale_filter(const RgbImage &rgb,
                                   const RcaConfig &config);

} // namespace iafa

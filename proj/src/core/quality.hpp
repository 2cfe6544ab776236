#pragma once

#include "core/image.hpp"

namespace iafa {

/// 10 * log10(peak^2 / MSE). Identical images return +infinity.
double psnr(const GrayImage &reference, const GrayImage &test, double peak);

struct SsimResult {
  double ssim = 0;  // single window spanning the whole image
  double mssim = 0; // mean of the 11x11 Gaussian-windowed local SSIM map
};

/// Standard constants K1 = 0.01, K2 = 0.03 on an L = 255 dynamic range;
/// samples are rescaled by 255/maxval first so wider-range images compare
/// on the 8-bit scale.
SsimResult ssim_mssim(const GrayImage &reference, const GrayImage &test);

struct ImageQualityReport {
  double psnr_db = 0;
  double ssim = 0;
  double mssim = 0;
};

ImageQualityReport quality_report(const GrayImage &reference,
                                  const GrayImage &test, double peak);

} // namespace iafa

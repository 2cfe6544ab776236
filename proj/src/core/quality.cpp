#include "core/quality.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace iafa {

namespace {

void require_same_size(const GrayImage &a, const GrayImage &b) {
  if (a.width != b.width || a.height != b.height)
    throw std::invalid_argument("image dimensions do not match");
}

constexpr double kSsimL = 255.0;
constexpr double kC1 = (0.01 * kSsimL) * (0.01 * kSsimL);
constexpr double kC2 = (0.03 * kSsimL) * (0.03 * kSsimL);
constexpr int kWindow = 11;
constexpr double kSigma = 1.5;

// Valid-mode separable Gaussian filter; output is (h-10) x (w-10).
std::vector<double> gauss_filter(const std::vector<double> &src, int w, int h,
                                 const std::array<double, kWindow> &kernel) {
  const int ow = w - kWindow + 1;
  const int oh = h - kWindow + 1;
  std::vector<double> rows(static_cast<std::size_t>(ow) * h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < ow; ++x) {
      double acc = 0;
      for (int k = 0; k < kWindow; ++k)
        acc += kernel[k] * src[static_cast<std::size_t>(y) * w + x + k];
      rows[static_cast<std::size_t>(y) * ow + x] = acc;
    }
  std::vector<double> out(static_cast<std::size_t>(ow) * oh);
  for (int y = 0; y < oh; ++y)
    for (int x = 0; x < ow; ++x) {
      double acc = 0;
      for (int k = 0; k < kWindow; ++k)
        acc += kernel[k] * rows[static_cast<std::size_t>(y + k) * ow + x];
      out[static_cast<std::size_t>(y) * ow + x] = acc;
    }
  return out;
}

} // namespace

double psnr(const GrayImage &reference, const GrayImage &test, double peak) {
  require_same_size(reference, test);
  double sq = 0.0;
  for (std::size_t i = 0; i < reference.samples.size(); ++i) {
    const double d = double(reference.samples[i]) - double(test.samples[i]);
    sq += d * d;
  }
  const double mse = sq / static_cast<double>(reference.samples.size());
  if (mse == 0.0)
    return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(peak * peak / mse);
}

SsimResult ssim_mssim(const GrayImage &reference, const GrayImage &test) {
  require_same_size(reference, test);
  const std::size_t count = reference.samples.size();
  const double scale_ref = kSsimL / reference.maxval;
  const double scale_test = kSsimL / test.maxval;

  std::vector<double> x(count), y(count);
  for (std::size_t i = 0; i < count; ++i) {
    x[i] = reference.samples[i] * scale_ref;
    y[i] = test.samples[i] * scale_test;
  }

  SsimResult result;

  // Global statistic over the whole image.
  double sum_x = 0, sum_y = 0;
  for (std::size_t i = 0; i < count; ++i) {
    sum_x += x[i];
    sum_y += y[i];
  }
  const double mu_x = sum_x / count;
  const double mu_y = sum_y / count;
  double var_x = 0, var_y = 0, cov = 0;
  for (std::size_t i = 0; i < count; ++i) {
    var_x += (x[i] - mu_x) * (x[i] - mu_x);
    var_y += (y[i] - mu_y) * (y[i] - mu_y);
    cov += (x[i] - mu_x) * (y[i] - mu_y);
  }
  var_x /= count;
  var_y /= count;
  cov /= count;
  result.ssim = ((2.0 * mu_x * mu_y + kC1) * (2.0 * cov + kC2)) /
                ((mu_x * mu_x + mu_y * mu_y + kC1) * (var_x + var_y + kC2));

  // Windowed local map, valid positions only.
  const int w = reference.width, h = reference.height;
  if (w < kWindow || h < kWindow) {
    result.mssim = result.ssim;
    return result;
  }
  std::array<double, kWindow> kernel{};
  double ksum = 0;
  for (int k = 0; k < kWindow; ++k) {
    const double d = k - (kWindow - 1) / 2.0;
    kernel[k] = std::exp(-d * d / (2.0 * kSigma * kSigma));
    ksum += kernel[k];
  }
  for (double &k : kernel)
    k /= ksum;

  std::vector<double> xx(count), yy(count), xy(count);
  for (std::size_t i = 0; i < count; ++i) {
    xx[i] = x[i] * x[i];
    yy[i] = y[i] * y[i];
    xy[i] = x[i] * y[i];
  }
  const std::vector<double> m_x = gauss_filter(x, w, h, kernel);
  const std::vector<double> m_y = gauss_filter(y, w, h, kernel);
  const std::vector<double> m_xx = gauss_filter(xx, w, h, kernel);
  const std::vector<double> m_yy = gauss_filter(yy, w, h, kernel);
  const std::vector<double> m_xy = gauss_filter(xy, w, h, kernel);

  double map_sum = 0;
  for (std::size_t i = 0; i < m_x.size(); ++i) {
    const double lvar_x = m_xx[i] - m_x[i] * m_x[i];
    const double lvar_y = m_yy[i] - m_y[i] * m_y[i];
    const double lcov = m_xy[i] - m_x[i] * m_y[i];
    map_sum += ((2.0 * m_x[i] * m_y[i] + kC1) * (2.0 * lcov + kC2)) /
               ((m_x[i] * m_x[i] + m_y[i] * m_y[i] + kC1) *
                (lvar_x + lvar_y + kC2));
  }
  result.mssim = map_sum / static_cast<double>(m_x.size());
  return result;
}

ImageQualityReport quality_report(const GrayImage &reference,
                                  const GrayImage &test, double peak) {
  ImageQualityReport report;
  report.psnr_db = psnr(reference, test, peak);
  const SsimResult s = ssim_mssim(reference, test);
  report.ssim = s.ssim;
  report.mssim = s.mssim;
  return report;
}

} // namespace iafa

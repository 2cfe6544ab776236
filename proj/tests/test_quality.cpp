#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "core/quality.hpp"

using namespace iafa;

namespace {

GrayImage constant_image(int w, int h, std::uint16_t value) {
  GrayImage image(w, h);
  for (auto &s : image.samples)
    s = value;
  return image;
}

} // namespace

TEST_CASE("psnr") {
  const GrayImage a = constant_image(8, 8, 40);
  SUBCASE("identical images saturate to infinity") {
    CHECK(std::isinf(psnr(a, a, 255.0)));
  }
  SUBCASE("full-scale error gives 0 dB") {
    const GrayImage zero = constant_image(8, 8, 0);
    const GrayImage full = constant_image(8, 8, 255);
    CHECK(psnr(zero, full, 255.0) == doctest::Approx(0.0));
  }
  SUBCASE("hand-evaluated 2x1 case") {
    GrayImage ref(2, 1), test(2, 1);
    ref.samples = {0, 0};
    test.samples = {10, 0};
    CHECK(psnr(ref, test, 255.0) == doctest::Approx(31.1411).epsilon(1e-4));
  }
  SUBCASE("dimension mismatch") {
    const GrayImage b = constant_image(4, 4, 0);
    CHECK_THROWS_AS(psnr(a, b, 255.0), std::invalid_argument);
  }
}

TEST_CASE("ssim and mssim") {
  SUBCASE("identical images score 1") {
    GrayImage image(16, 16);
    for (int y = 0; y < 16; ++y)
      for (int x = 0; x < 16; ++x)
        image.at(x, y) = static_cast<std::uint16_t>((x * 16 + y * 3) % 256);
    const SsimResult r = ssim_mssim(image, image);
    CHECK(r.ssim == doctest::Approx(1.0));
    CHECK(r.mssim == doctest::Approx(1.0));
  }
  SUBCASE("constant images follow the closed form") {
    // Zero variances leave only the luminance term:
    // (2*50*60 + C1) / (50^2 + 60^2 + C1) with C1 = (0.01*255)^2.
    const GrayImage x = constant_image(20, 20, 50);
    const GrayImage y = constant_image(20, 20, 60);
    const SsimResult r = ssim_mssim(x, y);
    CHECK(r.ssim == doctest::Approx(0.9836240139).epsilon(1e-9));
    CHECK(r.mssim == doctest::Approx(0.9836240139).epsilon(1e-9));
  }
  SUBCASE("inversion destroys similarity") {
    GrayImage image(32, 32);
    for (int y = 0; y < 32; ++y)
      for (int x = 0; x < 32; ++x)
        image.at(x, y) = static_cast<std::uint16_t>((x * 7 + y * 5) % 256);
    GrayImage inverted = image;
    for (auto &s : inverted.samples)
      s = static_cast<std::uint16_t>(255 - s);
    const SsimResult r = ssim_mssim(image, inverted);
    CHECK(r.ssim < 1.0);
    CHECK(r.mssim < 1.0);
  }
  SUBCASE("wider-range images are rescaled before comparison") {
    // The same content at maxval 255 and maxval 1023 (samples x4) must
    // compare as similar once normalized.
    GrayImage narrow(16, 16);
    GrayImage wide(16, 16, 1023);
    for (int i = 0; i < 256; ++i) {
      narrow.samples[i] = static_cast<std::uint16_t>(i);
      wide.samples[i] = static_cast<std::uint16_t>(i * 4);
    }
    const SsimResult r = ssim_mssim(narrow, wide);
    CHECK(r.ssim > 0.999);
  }
}

TEST_CASE("quality report bundles the three metrics") {
  const GrayImage a = constant_image(16, 16, 100);
  GrayImage b = a;
  b.at(3, 3) = 110;
  const ImageQualityReport report = quality_report(a, b, 255.0);
  CHECK(report.psnr_db > 30.0);
  CHECK(report.ssim <= 1.0);
  CHECK(report.mssim <= 1.0);
}

#include "hscs/feature/color.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace hscs {

namespace {

// sRGB linearization table for 8-bit channels.
const std::array<double, 256>& srgb_linear_lut() {
  static const std::array<double, 256> lut = [] {
    std::array<double, 256> t{};
    for (int i = 0; i < 256; ++i) {
      const double c = i / 255.0;
      t[i] = c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
    }
    return t;
  }();
  return lut;
}

inline double lab_f(double t) {
  constexpr double kCube = 216.0 / 24389.0;  // (6/29)^3
  constexpr double kSlope = 841.0 / 108.0;   // 1/(3*(6/29)^2)
  return t > kCube ? std::cbrt(t) : kSlope * t + 4.0 / 29.0;
}

}  // namespace

Lab rgb_to_lab(Rgb8 c) {
  const auto& lut = srgb_linear_lut();
  const double r = lut[c.r], g = lut[c.g], b = lut[c.b];

  // sRGB -> XYZ (D65).
  const double x = 0.4124564 * r + 0.3575761 * g + 0.1804375 * b;
  const double y = 0.2126729 * r + 0.7151522 * g + 0.0721750 * b;
  const double z = 0.0193339 * r + 0.1191920 * g + 0.9503041 * b;

  const double fx = lab_f(x / 0.95047);
  const double fy = lab_f(y / 1.0);
  const double fz = lab_f(z / 1.08883);

  return Lab{116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)};
}

Hsv rgb_to_hsv(Rgb8 c) {
  const double r = c.r / 255.0, g = c.g / 255.0, b = c.b / 255.0;
  const double hi = std::max({r, g, b});
  const double lo = std::min({r, g, b});
  const double delta = hi - lo;

  Hsv out;
  out.v = hi;
  out.s = hi > 0.0 ? delta / hi : 0.0;
  if (delta <= 0.0) {
    out.h = 0.0;
  } else if (hi == r) {
    out.h = 60.0 * std::fmod((g - b) / delta + 6.0, 6.0);
  } else if (hi == g) {
    out.h = 60.0 * ((b - r) / delta + 2.0);
  } else {
    out.h = 60.0 * ((r - g) / delta + 4.0);
  }
  if (out.h >= 360.0) out.h -= 360.0;
  return out;
}

PlanarRaster lab_plane(const RgbRaster& rgb) {
  PlanarRaster out(rgb.width(), rgb.height());
  for (std::size_t i = 0; i < rgb.size(); ++i) {
    const Lab lab = rgb_to_lab(rgb[i]);
    out[i] = {static_cast<float>(lab.L), static_cast<float>(lab.a),
              static_cast<float>(lab.b)};
  }
  return out;
}

}  // namespace hscs

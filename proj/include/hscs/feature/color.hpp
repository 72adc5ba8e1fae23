#ifndef HSCS_FEATURE_COLOR_HPP
#define HSCS_FEATURE_COLOR_HPP

#include "hscs/core/raster.hpp"

namespace hscs {

// CIE Lab in native ranges: L in [0,100], a/b roughly [-128,127] (sRGB, D65).
struct Lab {
  double L = 0.0;
  double a = 0.0;
  double b = 0.0;
};

// HSV with h in [0,360), s and v in [0,1].
struct Hsv {
  double h = 0.0;
  double s = 0.0;
  double v = 0.0;
};

Lab rgb_to_lab(Rgb8 c);
Hsv rgb_to_hsv(Rgb8 c);

// Per-pixel Lab triples in native ranges (used by SLIC and the texton bank).
PlanarRaster lab_plane(const RgbRaster& rgb);

// Channel normalization used everywhere features are assembled:
// L/100, (a+128)/255, (b+128)/255, clamped to [0,1].
inline Vec3f lab_to_unit(const Lab& lab) {
  auto clamp01 = [](double v) {
    return static_cast<float>(v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v));
  };
  return {clamp01(lab.L / 100.0), clamp01((lab.a + 128.0) / 255.0),
          clamp01((lab.b + 128.0) / 255.0)};
}

inline Vec3f hsv_to_unit(const Hsv& hsv) {
  return {static_cast<float>(hsv.h / 360.0), static_cast<float>(hsv.s),
          static_cast<float>(hsv.v)};
}

}  // namespace hscs

#endif

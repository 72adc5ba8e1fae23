#include "hscs/feature/texton.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "hscs/core/kmeans.hpp"
#include "hscs/core/log.hpp"
#include "hscs/core/math.hpp"
#include "hscs/feature/color.hpp"

namespace hscs {

namespace {

constexpr int kSampleStride = 4;

std::vector<double> gauss_kernel(double sigma) {
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> k(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    k[i + radius] = std::exp(-0.5 * i * i / (sigma * sigma));
    sum += k[i + radius];
  }
  for (double& v : k) v /= sum;
  return k;
}

// d/dx of the (normalized) Gaussian; zero-sum by construction.
std::vector<double> gauss_d1_kernel(double sigma) {
  std::vector<double> g = gauss_kernel(sigma);
  const int radius = static_cast<int>(g.size()) / 2;
  std::vector<double> k(g.size());
  for (int i = -radius; i <= radius; ++i)
    k[i + radius] = -(i / (sigma * sigma)) * g[i + radius];
  return k;
}

// d2/dx2 of the Gaussian, adjusted to zero sum.
std::vector<double> gauss_d2_kernel(double sigma) {
  std::vector<double> g = gauss_kernel(sigma);
  const int radius = static_cast<int>(g.size()) / 2;
  std::vector<double> k(g.size());
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    k[i + radius] =
        ((i * i - sigma * sigma) / (sigma * sigma * sigma * sigma)) *
        g[i + radius];
    sum += k[i + radius];
  }
  const double mean = sum / static_cast<double>(k.size());
  for (double& v : k) v -= mean;
  return k;
}

inline int reflect(int i, int n) {
  while (i < 0 || i >= n) {
    if (i < 0) i = -i - 1;
    if (i >= n) i = 2 * n - i - 1;
  }
  return i;
}

// Separable convolution with symmetric border handling.
GrayRaster conv_separable(const GrayRaster& src, const std::vector<double>& kx,
                          const std::vector<double>& ky) {
  const int w = src.width(), h = src.height();
  const int rx = static_cast<int>(kx.size()) / 2;
  const int ry = static_cast<int>(ky.size()) / 2;

  GrayRaster tmp(w, h), out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int i = -rx; i <= rx; ++i)
        acc += kx[i + rx] * src.at(reflect(x + i, w), y);
      tmp.at(x, y) = static_cast<float>(acc);
    }
  }
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int i = -ry; i <= ry; ++i)
        acc += ky[i + ry] * tmp.at(x, reflect(y + i, h));
      out.at(x, y) = static_cast<float>(acc);
    }
  }
  return out;
}

}  // namespace

FilterResponses filter_bank_responses(const RgbRaster& rgb) {
  const int w = rgb.width(), h = rgb.height();
  GrayRaster lum(w, h);
  {
    const PlanarRaster lab = lab_plane(rgb);
    for (std::size_t i = 0; i < lab.size(); ++i)
      lum[i] = lab[i][0] / 100.0f;
  }

  FilterResponses out(w, h);
  int slot = 0;
  auto store = [&](const GrayRaster& r) {
    for (std::size_t i = 0; i < r.size(); ++i) out[i][slot] = r[i];
    ++slot;
  };

  for (double sigma : {1.0, 2.0, 4.0})
    store(conv_separable(lum, gauss_kernel(sigma), gauss_kernel(sigma)));

  for (double sigma : {2.0, 4.0}) {
    const GrayRaster gxx =
        conv_separable(lum, gauss_d2_kernel(sigma), gauss_kernel(sigma));
    const GrayRaster gyy =
        conv_separable(lum, gauss_kernel(sigma), gauss_d2_kernel(sigma));
    GrayRaster log_r(w, h);
    for (std::size_t i = 0; i < log_r.size(); ++i) log_r[i] = gxx[i] + gyy[i];
    store(log_r);
  }

  // Oriented first derivatives, steered from the x/y responses.
  for (double sigma : {2.0, 4.0}) {
    const GrayRaster ix =
        conv_separable(lum, gauss_d1_kernel(sigma), gauss_kernel(sigma));
    const GrayRaster iy =
        conv_separable(lum, gauss_kernel(sigma), gauss_d1_kernel(sigma));
    for (int o = 0; o < 6; ++o) {
      const double theta = o * std::numbers::pi / 6.0;
      const float c = static_cast<float>(std::cos(theta));
      const float s = static_cast<float>(std::sin(theta));
      GrayRaster r(w, h);
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = c * ix[i] + s * iy[i];
      store(r);
    }
  }
  return out;
}

TextonModel compute_texton_map(const ImageGroup& group,
                               std::uint64_t rng_seed) {
  std::vector<FilterResponses> responses;
  responses.reserve(group.images.size());
  std::size_t n_samples = 0;
  for (const RgbdImage& img : group.images) {
    responses.push_back(filter_bank_responses(img.rgb));
    const auto& r = responses.back();
    n_samples += static_cast<std::size_t>((r.width() + kSampleStride - 1) / kSampleStride) *
                 ((r.height() + kSampleStride - 1) / kSampleStride);
  }

  Eigen::MatrixXd samples(n_samples, kFilterCount);
  std::size_t row = 0;
  for (const auto& r : responses) {
    for (int y = 0; y < r.height(); y += kSampleStride) {
      for (int x = 0; x < r.width(); x += kSampleStride) {
        const auto& v = r.at(x, y);
        for (int f = 0; f < kFilterCount; ++f) samples(row, f) = v[f];
        ++row;
      }
    }
  }

  KMeansResult km = kmeans_pp(samples, kTextonCount, sub_seed(rng_seed, 1));
  if (km.degenerate)
    HSCS_WARN("texton codebook collapsed; padded duplicate centroids");

  TextonModel model;
  model.codebook = km.centers;
  model.degenerate = km.degenerate;
  model.labels.reserve(responses.size());
  for (const auto& r : responses) {
    LabelRaster lbl(r.width(), r.height());
    for (std::size_t i = 0; i < r.size(); ++i) {
      int best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (int c = 0; c < kTextonCount; ++c) {
        double d = 0.0;
        for (int f = 0; f < kFilterCount; ++f) {
          const double diff = r[i][f] - model.codebook(c, f);
          d += diff * diff;
        }
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      lbl[i] = best;
    }
    model.labels.push_back(std::move(lbl));
  }
  return model;
}

}  // namespace hscs

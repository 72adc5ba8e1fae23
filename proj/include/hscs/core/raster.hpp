#ifndef HSCS_CORE_RASTER_HPP
#define HSCS_CORE_RASTER_HPP

#include <array>
#include <cassert>
#include <cstdint>
#include <vector>

namespace hscs {

struct Rgb8 {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  bool operator==(const Rgb8&) const = default;
};

// Row-major W x H grid of T, the backing store for all image-like data.
template <typename T>
class Raster {
 public:
  Raster() = default;
  Raster(int width, int height, T fill = T{})
      : width_(width), height_(height),
        data_(static_cast<std::size_t>(width) * height, fill) {
    assert(width >= 0 && height >= 0);
  }

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  T& at(int x, int y) {
    assert(in_bounds(x, y));
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }
  const T& at(int x, int y) const {
    assert(in_bounds(x, y));
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }

  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }

  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width_ && y >= 0 && y < height_;
  }

  template <typename U>
  bool same_size(const Raster<U>& other) const {
    return width_ == other.width() && height_ == other.height();
  }

  bool operator==(const Raster&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<T> data_;
};

using RgbRaster = Raster<Rgb8>;
using GrayRaster = Raster<float>;        // real-valued rasters in [0,1]
using LabelRaster = Raster<std::int32_t>;
using Vec3f = std::array<float, 3>;
using PlanarRaster = Raster<Vec3f>;      // e.g. per-pixel Lab or HSV triples

}  // namespace hscs

#endif

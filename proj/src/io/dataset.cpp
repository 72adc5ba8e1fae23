#include "hscs/io/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "hscs/core/errors.hpp"
#include "hscs/core/log.hpp"

namespace hscs {

namespace fs = std::filesystem;

namespace {

bool supported_extension(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext == ".png" || ext == ".bmp" || ext == ".jpg" || ext == ".jpeg";
}

// stem -> path; on duplicate stems the lexicographically smallest path wins.
std::map<std::string, fs::path> index_by_stem(const fs::path& dir) {
  std::map<std::string, fs::path> out;
  if (!fs::is_directory(dir)) return out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file() || !supported_extension(entry.path())) continue;
    const std::string stem = entry.path().stem().string();
    auto it = out.find(stem);
    if (it == out.end() || entry.path().string() < it->second.string())
      out[stem] = entry.path();
  }
  return out;
}

cv::Mat read_or_throw(const fs::path& path, int flags) {
  cv::Mat mat = cv::imread(path.string(), flags);
  if (mat.empty())
    throw PipelineError(ErrorCode::IoError, "cannot read " + path.string());
  return mat;
}

RgbRaster read_rgb(const fs::path& path) {
  cv::Mat mat = read_or_throw(path, cv::IMREAD_COLOR);  // 8-bit BGR
  RgbRaster out(mat.cols, mat.rows);
  for (int y = 0; y < mat.rows; ++y) {
    const cv::Vec3b* row = mat.ptr<cv::Vec3b>(y);
    for (int x = 0; x < mat.cols; ++x)
      out.at(x, y) = Rgb8{row[x][2], row[x][1], row[x][0]};
  }
  return out;
}

// Grayscale image as raw 8/16-bit values plus the detected bit depth.
// Multi-channel inputs are reduced to their mean channel.
std::pair<Raster<std::uint16_t>, int> read_gray_raw(const fs::path& path) {
  cv::Mat mat = read_or_throw(path, cv::IMREAD_UNCHANGED);
  const int bit_depth = mat.depth() == CV_16U ? 16 : 8;
  if (mat.depth() != CV_8U && mat.depth() != CV_16U)
    throw PipelineError(ErrorCode::IoError,
                        "unsupported pixel depth in " + path.string());
  Raster<std::uint16_t> out(mat.cols, mat.rows);
  const int ch = mat.channels();
  for (int y = 0; y < mat.rows; ++y) {
    for (int x = 0; x < mat.cols; ++x) {
      double acc = 0.0;
      for (int c = 0; c < ch; ++c) {
        acc += mat.depth() == CV_16U
                   ? mat.ptr<std::uint16_t>(y)[x * ch + c]
                   : mat.ptr<std::uint8_t>(y)[x * ch + c];
      }
      out.at(x, y) = static_cast<std::uint16_t>(std::lround(acc / ch));
    }
  }
  return {std::move(out), bit_depth};
}

GrayRaster read_unit_gray(const fs::path& path) {
  auto [raw, bits] = read_gray_raw(path);
  return normalize_depth(raw, bits);
}

GrayRaster read_binary_mask(const fs::path& path) {
  auto [raw, bits] = read_gray_raw(path);
  const int threshold = bits == 16 ? 32767 : 127;
  GrayRaster out(raw.width(), raw.height());
  for (std::size_t i = 0; i < raw.size(); ++i)
    out[i] = raw[i] > threshold ? 1.0f : 0.0f;
  return out;
}

}  // namespace

GrayRaster normalize_depth(const Raster<std::uint16_t>& raw, int bit_depth) {
  const float scale = bit_depth == 16 ? 65535.0f : 255.0f;
  GrayRaster out(raw.width(), raw.height());
  for (std::size_t i = 0; i < raw.size(); ++i) out[i] = raw[i] / scale;
  return out;
}

ImageGroup load_group(const fs::path& root, const PipelineConfig& cfg) {
  const auto rgb_files = index_by_stem(root / "rgb");
  const auto depth_files = index_by_stem(root / "depth");
  const auto gt_files = index_by_stem(root / "gt");
  const auto intra_files = index_by_stem(root / "intra");

  ImageGroup group;
  group.name = root.filename().string();

  for (const auto& [stem, rgb_path] : rgb_files) {  // std::map: sorted stems
    auto depth_it = depth_files.find(stem);
    if (depth_it == depth_files.end())
      throw PipelineError(ErrorCode::MissingDepth, stem);

    RgbdImage img;
    img.id = stem;
    img.rgb = read_rgb(rgb_path);
    img.depth = read_unit_gray(depth_it->second);
    if (cfg.invert_depth)
      for (std::size_t i = 0; i < img.depth.size(); ++i)
        img.depth[i] = 1.0f - img.depth[i];

    if (!img.rgb.same_size(img.depth))
      throw PipelineError(ErrorCode::DimensionMismatch, stem);
    if (img.width() < 16 || img.height() < 16)
      throw PipelineError(ErrorCode::ImageTooSmall, stem);

    if (!gt_files.empty()) {
      auto it = gt_files.find(stem);
      if (it == gt_files.end())
        throw PipelineError(ErrorCode::NoGroundTruth, stem);
      GrayRaster gt = read_binary_mask(it->second);
      if (!gt.same_size(img.rgb))
        throw PipelineError(ErrorCode::DimensionMismatch, stem + " (gt)");
      group.ground_truth.push_back(std::move(gt));
    }
    if (!intra_files.empty()) {
      auto it = intra_files.find(stem);
      if (it == intra_files.end())
        throw PipelineError(ErrorCode::MissingIntra, stem);
      GrayRaster intra = read_unit_gray(it->second);
      if (!intra.same_size(img.rgb))
        throw PipelineError(ErrorCode::DimensionMismatch, stem + " (intra)");
      group.intra_maps.push_back(std::move(intra));
    }
    group.images.push_back(std::move(img));
  }

  if (group.size() < 2)
    throw PipelineError(ErrorCode::EmptyGroup,
                        root.string() + " has " + std::to_string(group.size()) +
                            " matched image(s); co-saliency needs at least 2");
  return group;
}

void write_saliency_map(const GrayRaster& map, const fs::path& path) {
  cv::Mat mat(map.height(), map.width(), CV_8UC1);
  for (int y = 0; y < map.height(); ++y)
    for (int x = 0; x < map.width(); ++x)
      mat.at<std::uint8_t>(y, x) =
          static_cast<std::uint8_t>(std::lround(255.0 * map.at(x, y)));
  if (!cv::imwrite(path.string(), mat))
    throw PipelineError(ErrorCode::IoError, "cannot write " + path.string());
}

GrayRaster read_saliency_map(const fs::path& path) {
  return read_unit_gray(path);
}

void write_rgb_image(const RgbRaster& img, const fs::path& path) {
  cv::Mat mat(img.height(), img.width(), CV_8UC3);
  for (int y = 0; y < img.height(); ++y) {
    cv::Vec3b* row = mat.ptr<cv::Vec3b>(y);
    for (int x = 0; x < img.width(); ++x) {
      const Rgb8 c = img.at(x, y);
      row[x] = cv::Vec3b{c.b, c.g, c.r};
    }
  }
  if (!cv::imwrite(path.string(), mat))
    throw PipelineError(ErrorCode::IoError, "cannot write " + path.string());
}

void write_label_raster(const LabelRaster& labels, const fs::path& path) {
  cv::Mat mat(labels.height(), labels.width(), CV_16UC1);
  for (int y = 0; y < labels.height(); ++y)
    for (int x = 0; x < labels.width(); ++x)
      mat.at<std::uint16_t>(y, x) = static_cast<std::uint16_t>(labels.at(x, y));
  if (!cv::imwrite(path.string(), mat))
    throw PipelineError(ErrorCode::IoError, "cannot write " + path.string());
}

}  // namespace hscs

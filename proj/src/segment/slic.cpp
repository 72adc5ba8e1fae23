#include "hscs/segment/slic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hscs/core/errors.hpp"
#include "hscs/core/log.hpp"
#include "hscs/feature/color.hpp"

namespace hscs {

namespace {

struct Center {
  double x = 0.0, y = 0.0;
  double L = 0.0, a = 0.0, b = 0.0;
};

double gradient_at(const PlanarRaster& lab, int x, int y) {
  const int w = lab.width(), h = lab.height();
  const int xl = std::max(x - 1, 0), xr = std::min(x + 1, w - 1);
  const int yu = std::max(y - 1, 0), yd = std::min(y + 1, h - 1);
  const Vec3f& px = lab.at(xr, y);
  const Vec3f& mx = lab.at(xl, y);
  const Vec3f& py = lab.at(x, yd);
  const Vec3f& my = lab.at(x, yu);
  double g = 0.0;
  for (int c = 0; c < 3; ++c) {
    const double dx = px[c] - mx[c];
    const double dy = py[c] - my[c];
    g += dx * dx + dy * dy;
  }
  return g;
}

// Connected components of equal labels, row-major discovery order.
struct Component {
  int label = -1;
  int size = 0;
  std::array<double, 3> lab_sum{};
  std::vector<int> neighbors;  // component ids, sorted unique
};

std::vector<Component> connected_components(const LabelRaster& labels,
                                            const PlanarRaster& lab,
                                            Raster<std::int32_t>& comp_map) {
  const int w = labels.width(), h = labels.height();
  std::vector<Component> comps;
  std::vector<int> stack;
  for (int y0 = 0; y0 < h; ++y0) {
    for (int x0 = 0; x0 < w; ++x0) {
      if (comp_map.at(x0, y0) >= 0) continue;
      const int id = static_cast<int>(comps.size());
      const int label = labels.at(x0, y0);
      Component fresh;
      fresh.label = label;
      comps.push_back(std::move(fresh));
      Component& comp = comps.back();
      stack.push_back(y0 * w + x0);
      comp_map.at(x0, y0) = id;
      while (!stack.empty()) {
        const int p = stack.back();
        stack.pop_back();
        const int x = p % w, y = p / w;
        comp.size++;
        const Vec3f& c = lab.at(x, y);
        for (int k = 0; k < 3; ++k) comp.lab_sum[k] += c[k];
        const int nx[4] = {x - 1, x + 1, x, x};
        const int ny[4] = {y, y, y - 1, y + 1};
        for (int k = 0; k < 4; ++k) {
          if (!labels.in_bounds(nx[k], ny[k])) continue;
          if (labels.at(nx[k], ny[k]) != label) continue;
          if (comp_map.at(nx[k], ny[k]) >= 0) continue;
          comp_map.at(nx[k], ny[k]) = id;
          stack.push_back(ny[k] * w + nx[k]);
        }
      }
    }
  }
  // Neighbor components across 4-connected boundaries.
  std::vector<std::vector<int>> nbr(comps.size());
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const int a = comp_map.at(x, y);
      if (x + 1 < w) {
        const int b = comp_map.at(x + 1, y);
        if (a != b) {
          nbr[a].push_back(b);
          nbr[b].push_back(a);
        }
      }
      if (y + 1 < h) {
        const int b = comp_map.at(x, y + 1);
        if (a != b) {
          nbr[a].push_back(b);
          nbr[b].push_back(a);
        }
      }
    }
  }
  for (std::size_t i = 0; i < comps.size(); ++i) {
    std::sort(nbr[i].begin(), nbr[i].end());
    nbr[i].erase(std::unique(nbr[i].begin(), nbr[i].end()), nbr[i].end());
    comps[i].neighbors = std::move(nbr[i]);
  }
  return comps;
}

double comp_lab_distance(const Component& a, const Component& b) {
  double d = 0.0;
  for (int k = 0; k < 3; ++k) {
    const double diff = a.lab_sum[k] / a.size - b.lab_sum[k] / b.size;
    d += diff * diff;
  }
  return d;
}

}  // namespace

SuperpixelSegmentation slic_segment(const RgbdImage& img, int n_target,
                                    double compactness) {
  const int w = img.width(), h = img.height();
  const long long area = static_cast<long long>(w) * h;
  if (n_target < 4 || static_cast<long long>(n_target) * 16 > area)
    throw PipelineError(ErrorCode::ImageTooSmall,
                        "n_target=" + std::to_string(n_target) + " for " +
                            std::to_string(w) + "x" + std::to_string(h));

  const PlanarRaster lab = lab_plane(img.rgb);
  const double step = std::sqrt(static_cast<double>(area) / n_target);
  const int nx = std::max(1, static_cast<int>(std::lround(w / step)));
  const int ny = std::max(1, static_cast<int>(std::lround(h / step)));

  // Grid seeding, each seed nudged to the lowest-gradient pixel in its
  // 3x3 neighborhood.
  std::vector<Center> centers;
  centers.reserve(static_cast<std::size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      int cx = std::clamp(static_cast<int>((i + 0.5) * w / nx), 0, w - 1);
      int cy = std::clamp(static_cast<int>((j + 0.5) * h / ny), 0, h - 1);
      double best = gradient_at(lab, cx, cy);
      int bx = cx, by = cy;
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          const int px = cx + dx, py = cy + dy;
          if (!lab.in_bounds(px, py)) continue;
          const double g = gradient_at(lab, px, py);
          if (g < best) {
            best = g;
            bx = px;
            by = py;
          }
        }
      }
      const Vec3f& c = lab.at(bx, by);
      centers.push_back(Center{static_cast<double>(bx), static_cast<double>(by),
                               c[0], c[1], c[2]});
    }
  }

  const double spatial_weight = (compactness / step) * (compactness / step);
  LabelRaster labels(w, h, -1);
  std::vector<double> best_dist(static_cast<std::size_t>(area));

  for (int iter = 0; iter < kSlicIterations; ++iter) {
    std::fill(best_dist.begin(), best_dist.end(),
              std::numeric_limits<double>::infinity());
    std::fill(labels.data(), labels.data() + labels.size(), -1);

    for (std::size_t ci = 0; ci < centers.size(); ++ci) {
      const Center& c = centers[ci];
      const int x0 = std::max(0, static_cast<int>(c.x - 2 * step));
      const int x1 = std::min(w - 1, static_cast<int>(c.x + 2 * step));
      const int y0 = std::max(0, static_cast<int>(c.y - 2 * step));
      const int y1 = std::min(h - 1, static_cast<int>(c.y + 2 * step));
      for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
          const Vec3f& p = lab.at(x, y);
          const double dl = p[0] - c.L, da = p[1] - c.a, db = p[2] - c.b;
          const double dx = x - c.x, dy = y - c.y;
          const double d = dl * dl + da * da + db * db +
                           spatial_weight * (dx * dx + dy * dy);
          const std::size_t idx = static_cast<std::size_t>(y) * w + x;
          if (d < best_dist[idx]) {
            best_dist[idx] = d;
            labels[idx] = static_cast<int>(ci);
          }
        }
      }
    }

    // Pixels outside every search window (possible near borders when the
    // grid rounds aggressively) go to the globally nearest center.
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        if (labels.at(x, y) >= 0) continue;
        const Vec3f& p = lab.at(x, y);
        double best = std::numeric_limits<double>::infinity();
        int pick = 0;
        for (std::size_t ci = 0; ci < centers.size(); ++ci) {
          const Center& c = centers[ci];
          const double dl = p[0] - c.L, da = p[1] - c.a, db = p[2] - c.b;
          const double dx = x - c.x, dy = y - c.y;
          const double d = dl * dl + da * da + db * db +
                           spatial_weight * (dx * dx + dy * dy);
          if (d < best) {
            best = d;
            pick = static_cast<int>(ci);
          }
        }
        labels.at(x, y) = pick;
      }
    }

    std::vector<Center> next(centers.size());
    std::vector<int> counts(centers.size(), 0);
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        const int l = labels.at(x, y);
        const Vec3f& p = lab.at(x, y);
        next[l].x += x;
        next[l].y += y;
        next[l].L += p[0];
        next[l].a += p[1];
        next[l].b += p[2];
        counts[l]++;
      }
    }
    for (std::size_t ci = 0; ci < centers.size(); ++ci) {
      if (counts[ci] == 0) continue;
      next[ci].x /= counts[ci];
      next[ci].y /= counts[ci];
      next[ci].L /= counts[ci];
      next[ci].a /= counts[ci];
      next[ci].b /= counts[ci];
      centers[ci] = next[ci];
    }
  }

  // Connectivity enforcement: every connected component of at least
  // kMinRegionPixels becomes a region; smaller fragments merge into the
  // most Lab-similar adjacent kept region.
  Raster<std::int32_t> comp_map(w, h, -1);
  std::vector<Component> comps = connected_components(labels, lab, comp_map);
  const int n_comps = static_cast<int>(comps.size());

  std::vector<int> target(n_comps);
  std::iota(target.begin(), target.end(), 0);
  std::vector<bool> kept(n_comps, false);
  bool any_kept = false;
  for (int i = 0; i < n_comps; ++i) {
    kept[i] = comps[i].size >= kMinRegionPixels;
    any_kept = any_kept || kept[i];
  }
  if (!any_kept) {
    int biggest = 0;
    for (int i = 1; i < n_comps; ++i)
      if (comps[i].size > comps[biggest].size) biggest = i;
    kept[biggest] = true;
  }

  std::vector<int> pending;
  for (int i = 0; i < n_comps; ++i)
    if (!kept[i]) pending.push_back(i);
  std::sort(pending.begin(), pending.end(), [&](int a, int b) {
    return comps[a].size != comps[b].size ? comps[a].size < comps[b].size
                                          : a < b;
  });
  while (!pending.empty()) {
    std::vector<int> deferred;
    bool progressed = false;
    for (int c : pending) {
      if (kept[c]) {  // promoted in a previous pass; stays a region
        progressed = true;
        continue;
      }
      int best_nbr = -1;
      double best_d = std::numeric_limits<double>::infinity();
      for (int n : comps[c].neighbors) {
        if (!kept[target[n]]) continue;
        const double d = comp_lab_distance(comps[c], comps[n]);
        if (d < best_d) {
          best_d = d;
          best_nbr = n;
        }
      }
      if (best_nbr < 0) {
        deferred.push_back(c);
        continue;
      }
      target[c] = target[best_nbr];
      kept[c] = true;  // resolved; other fragments may chain through it
      progressed = true;
    }
    if (!progressed && !deferred.empty()) {
      // Isolated cluster of fragments: promote the largest to a region.
      int promote = deferred.front();
      for (int c : deferred)
        if (comps[c].size > comps[promote].size) promote = c;
      kept[promote] = true;
    }
    pending = std::move(deferred);
  }
  // Resolve chains (fragment merged into fragment merged into region).
  for (int i = 0; i < n_comps; ++i) {
    int t = i;
    while (target[t] != t) t = target[t];
    target[i] = t;
  }

  // Compact relabel in row-major first-occurrence order.
  std::vector<int> final_label(n_comps, -1);
  int n_regions = 0;
  SuperpixelSegmentation seg;
  seg.labels = LabelRaster(w, h, 0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const int root = target[comp_map.at(x, y)];
      if (final_label[root] < 0) final_label[root] = n_regions++;
      seg.labels.at(x, y) = final_label[root];
    }
  }

  if (n_regions < n_target / 2 || n_regions > n_target + n_target / 2)
    HSCS_WARN("slic produced %d regions for target %d", n_regions, n_target);

  // Region statistics.
  seg.regions.assign(n_regions, Superpixel{});
  for (int i = 0; i < n_regions; ++i) seg.regions[i].index = i;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      Superpixel& sp = seg.regions[seg.labels.at(x, y)];
      sp.pixel_count++;
      sp.centroid[0] += x;
      sp.centroid[1] += y;
      const Rgb8 c = img.rgb.at(x, y);
      sp.mean_rgb[0] += c.r / 255.0;
      sp.mean_rgb[1] += c.g / 255.0;
      sp.mean_rgb[2] += c.b / 255.0;
      const Vec3f& l = lab.at(x, y);
      const Vec3f lu = lab_to_unit(Lab{l[0], l[1], l[2]});
      const Vec3f hu = hsv_to_unit(rgb_to_hsv(c));
      for (int k = 0; k < 3; ++k) {
        sp.mean_lab[k] += lu[k];
        sp.mean_hsv[k] += hu[k];
      }
      sp.mean_depth += img.depth.at(x, y);
    }
  }
  for (Superpixel& sp : seg.regions) {
    const double n = sp.pixel_count;
    sp.centroid[0] = w > 1 ? sp.centroid[0] / n / (w - 1) : 0.5;
    sp.centroid[1] = h > 1 ? sp.centroid[1] / n / (h - 1) : 0.5;
    for (int k = 0; k < 3; ++k) {
      sp.mean_rgb[k] /= n;
      sp.mean_lab[k] /= n;
      sp.mean_hsv[k] /= n;
    }
    sp.mean_depth /= n;
  }
  return seg;
}

bool Adjacency::contains(int m, int n) const {
  if (m < 0 || m >= static_cast<int>(neighbors.size())) return false;
  return std::binary_search(neighbors[m].begin(), neighbors[m].end(), n);
}

std::vector<std::pair<int, int>> Adjacency::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int m = 0; m < static_cast<int>(neighbors.size()); ++m)
    for (int n : neighbors[m])
      if (m < n) out.emplace_back(m, n);
  return out;
}

Adjacency build_adjacency(const SuperpixelSegmentation& seg) {
  Adjacency adj;
  adj.neighbors.assign(seg.n_regions(), {});
  const LabelRaster& labels = seg.labels;
  for (int y = 0; y < labels.height(); ++y) {
    for (int x = 0; x < labels.width(); ++x) {
      const int a = labels.at(x, y);
      if (x + 1 < labels.width()) {
        const int b = labels.at(x + 1, y);
        if (a != b) {
          adj.neighbors[a].push_back(b);
          adj.neighbors[b].push_back(a);
        }
      }
      if (y + 1 < labels.height()) {
        const int b = labels.at(x, y + 1);
        if (a != b) {
          adj.neighbors[a].push_back(b);
          adj.neighbors[b].push_back(a);
        }
      }
    }
  }
  for (auto& list : adj.neighbors) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return adj;
}

}  // namespace hscs

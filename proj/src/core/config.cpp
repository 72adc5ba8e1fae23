#include "hscs/core/config.hpp"

#include <fstream>
#include <sstream>

#include "hscs/core/errors.hpp"
#include "json.hpp"

namespace hscs {

namespace {

using nlohmann::json;

void require(bool ok, const std::string& what) {
  if (!ok) throw PipelineError(ErrorCode::InvalidConfig, what);
}

json to_json(const PipelineConfig& c) {
  return json{
      {"n_superpixels", c.n_superpixels},
      {"k_seeds", c.k_seeds},
      {"keep_ratio", c.keep_ratio},
      {"clusters", c.clusters},
      {"xi", c.xi},
      {"sigma2", c.sigma2},
      {"sigma2_recon", c.sigma2_recon},
      {"beta2", c.beta2},
      {"top_fg", c.top_fg},
      {"rng_seed", c.rng_seed},
      {"jobs", c.jobs},
      {"require_intra", c.require_intra},
      {"invert_depth", c.invert_depth},
      {"dump_superpixels", c.dump_superpixels},
      {"dump_seeds", c.dump_seeds},
      {"dump_inter", c.dump_inter},
      {"dump_energy", c.dump_energy},
      {"dump_features", c.dump_features},
  };
}

template <typename T>
void pick(const json& j, const char* key, T& field, ConfigOrigin& origin) {
  if (j.contains(key)) {
    field = j.at(key).get<T>();
    origin[key] = "config";
  }
}

}  // namespace

void PipelineConfig::validate() const {
  require(n_superpixels >= 4, "n_superpixels must be >= 4");
  require(k_seeds >= 1, "k_seeds must be >= 1");
  require(keep_ratio > 0.0 && keep_ratio <= 1.0, "keep_ratio must be in (0,1]");
  require(clusters >= 1, "clusters must be >= 1");
  require(xi >= 0.0, "xi must be >= 0");
  require(sigma2 > 0.0, "sigma2 must be > 0");
  require(sigma2_recon > 0.0, "sigma2_recon must be > 0");
  require(beta2 > 0.0, "beta2 must be > 0");
  require(top_fg >= 1, "top_fg must be >= 1");
  require(jobs >= 0, "jobs must be >= 0");
}

void load_config_file(PipelineConfig& cfg, const std::filesystem::path& path,
                      ConfigOrigin& origin) {
  std::ifstream in(path);
  if (!in) throw PipelineError(ErrorCode::IoError, "cannot read " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw PipelineError(ErrorCode::InvalidConfig,
                        path.string() + ": " + e.what());
  }
  pick(j, "n_superpixels", cfg.n_superpixels, origin);
  pick(j, "k_seeds", cfg.k_seeds, origin);
  pick(j, "keep_ratio", cfg.keep_ratio, origin);
  pick(j, "clusters", cfg.clusters, origin);
  pick(j, "xi", cfg.xi, origin);
  pick(j, "sigma2", cfg.sigma2, origin);
  pick(j, "sigma2_recon", cfg.sigma2_recon, origin);
  pick(j, "beta2", cfg.beta2, origin);
  pick(j, "top_fg", cfg.top_fg, origin);
  pick(j, "rng_seed", cfg.rng_seed, origin);
  pick(j, "jobs", cfg.jobs, origin);
  pick(j, "require_intra", cfg.require_intra, origin);
  pick(j, "invert_depth", cfg.invert_depth, origin);
  pick(j, "dump_superpixels", cfg.dump_superpixels, origin);
  pick(j, "dump_seeds", cfg.dump_seeds, origin);
  pick(j, "dump_inter", cfg.dump_inter, origin);
  pick(j, "dump_energy", cfg.dump_energy, origin);
  pick(j, "dump_features", cfg.dump_features, origin);
}

void save_config_file(const PipelineConfig& cfg,
                      const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw PipelineError(ErrorCode::IoError, "cannot write " + path.string());
  out << to_json(cfg).dump(2) << "\n";
}

std::string print_config(const PipelineConfig& cfg, const ConfigOrigin& origin) {
  const json j = to_json(cfg);
  std::ostringstream out;
  for (const auto& [key, value] : j.items()) {
    auto it = origin.find(key);
    const std::string& src = it == origin.end() ? "default" : it->second;
    out << key << " = " << value.dump() << "  [" << src << "]\n";
  }
  return out.str();
}

}  // namespace hscs

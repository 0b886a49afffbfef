#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "urbansir/contacts.hpp"
#include "urbansir/network.hpp"
#include "urbansir/population.hpp"

namespace urbansir {

struct DensityConfig {
  enum class Kind { Uniform, Radial, Csv } kind = Kind::Radial;
  double total = 5000.0;
  std::optional<Point> center;  // radial; defaults to the bbox center
  double decay_length = 2000.0;
  std::filesystem::path path;   // csv

  std::unique_ptr<DensitySource> make(const BoundingBox& bbox) const;
};

/// Where the index case starts. Tile ids refer to retained tiles.
struct Placement {
  enum class Mode { Random, Central, Peripheral, Tile } mode = Mode::Random;
  TileId tile = 0;  // Mode::Tile

  std::string name() const;
  static Placement parse(std::string_view text);
};

struct ScanConfig {
  double beta_min = 0.005;
  double beta_max = 0.08;
  double beta_step = 0.005;
  std::size_t replicas = 100;
  int contact_days = 20;
};

struct ExperimentConfig {
  std::filesystem::path source;  // config file, if any

  std::uint64_t seed = 1;
  std::filesystem::path output_dir = "urbansir-out";
  unsigned workers = 1;

  BoundingBox bbox{0.0, 0.0, 10000.0, 10000.0};
  double tile_side = 500.0;
  std::int64_t min_tile_population = 10;
  DensityConfig density;

  AgeDistribution ages = kDefaultAgeDistribution;
  HouseholdSizeDistribution household_sizes = HouseholdSizeDistribution::italian_default();
  std::string mixing_source = "default";  // "default", "constant" or a CSV path
  double acquaintance_mean_degree = 8.0;

  std::vector<Configuration> configurations{kAllConfigurations.begin(), kAllConfigurations.end()};
  double r0 = 1.3;
  double mu = 1.0 / 3.0;
  std::optional<double> beta;  // overrides calibration
  std::size_t replicas = 100;
  int max_days = 365;
  double outbreak_threshold = 0.25;
  Placement index_case;

  std::optional<ScanConfig> scan;

  std::vector<Placement> placements{{Placement::Mode::Random}, {Placement::Mode::Central},
                                    {Placement::Mode::Peripheral}};
  std::optional<TileId> central_tile;
  std::optional<TileId> peripheral_tile;

  bool write_tile_series = false;  // wide per-tile prevalence per replica

  /// Checks parameter domains; throws ConfigError naming the key.
  void validate() const;
  MixingMatrix mixing() const;
};

/// Parses a TOML experiment file. Unknown keys, wrong types and out-of-range
/// values raise ConfigError naming the key. Relative paths resolve against
/// the file's directory.
ExperimentConfig load_config(const std::filesystem::path& path);
ExperimentConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {});

/// Reads `group,probability` rows for the four age groups.
AgeDistribution read_age_distribution(const std::filesystem::path& path);

}  // namespace urbansir

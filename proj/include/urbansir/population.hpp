#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace urbansir {

using AgentId = std::uint32_t;
using TileId = std::uint32_t;
using HouseholdId = std::uint32_t;

inline constexpr HouseholdId kNoHousehold = std::numeric_limits<HouseholdId>::max();

// ---------------------------------------------------------------------------
// Age groups
// ---------------------------------------------------------------------------

/// Children [0,17], young [18,34], adults [35,64], elderly 65+.
enum class AgeGroup : std::uint8_t { Children = 0, Young = 1, Adults = 2, Elderly = 3 };

inline constexpr std::size_t kAgeGroupCount = 4;
inline constexpr std::array<AgeGroup, kAgeGroupCount> kAgeGroups = {
    AgeGroup::Children, AgeGroup::Young, AgeGroup::Adults, AgeGroup::Elderly};

AgeGroup age_group_for_years(int years);
std::string_view to_string(AgeGroup group);
AgeGroup parse_age_group(std::string_view name);

inline std::size_t index(AgeGroup g) { return static_cast<std::size_t>(g); }

/// Probability of each age group, indexed by AgeGroup.
using AgeDistribution = std::array<double, kAgeGroupCount>;

/// Italian-census-style default (provincial aggregates are not bundled).
inline constexpr AgeDistribution kDefaultAgeDistribution = {0.16, 0.17, 0.44, 0.23};

// ---------------------------------------------------------------------------
// Grid geometry
// ---------------------------------------------------------------------------

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Rectangle in a local metric plane (meters).
struct BoundingBox {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
};

/// Square cells of side `tile_side` laid over a bounding box, row-major from
/// (x_min, y_min). The last row/column may overhang the box.
struct GridSpec {
  BoundingBox bbox;
  double tile_side = 500.0;
  int rows = 0;
  int cols = 0;

  static GridSpec over(const BoundingBox& bbox, double tile_side);

  std::size_t cell_count() const { return static_cast<std::size_t>(rows) * cols; }
  Point cell_center(int row, int col) const;
};

// ---------------------------------------------------------------------------
// Density sources
// ---------------------------------------------------------------------------

/// Produces the (possibly fractional) population mass of every grid cell.
class DensitySource {
 public:
  virtual ~DensitySource() = default;
  /// Row-major vector of length grid.cell_count().
  virtual std::vector<double> cell_masses(const GridSpec& grid) const = 0;
};

/// Per-cell populations from a CSV with header `row,col,population`.
/// Cells absent from the file have zero population.
class CsvDensity final : public DensitySource {
 public:
  struct Entry {
    int row;
    int col;
    double population;
  };

  explicit CsvDensity(std::vector<Entry> entries) : entries_(std::move(entries)) {}
  static CsvDensity from_file(const std::filesystem::path& path);
  static CsvDensity from_stream(std::istream& in, std::string_view source_name = "<stream>");

  std::vector<double> cell_masses(const GridSpec& grid) const override;
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

/// Spreads `total` evenly over all cells.
class UniformDensity final : public DensitySource {
 public:
  explicit UniformDensity(double total) : total_(total) {}
  std::vector<double> cell_masses(const GridSpec& grid) const override;

 private:
  double total_;
};

/// Density proportional to exp(-r / decay_length) around `center`, evaluated
/// at cell centers and scaled so that the grid holds `total`.
class RadialDensity final : public DensitySource {
 public:
  RadialDensity(double total, Point center, double decay_length)
      : total_(total), center_(center), decay_length_(decay_length) {}
  std::vector<double> cell_masses(const GridSpec& grid) const override;

 private:
  double total_;
  Point center_;
  double decay_length_;
};

/// Rounds non-negative masses to integers whose sum is round(sum(masses)):
/// floors first, then hands the remaining units to the largest fractional
/// parts (ties broken by lower index).
std::vector<std::int64_t> largest_remainder_round(std::span<const double> masses);

// ---------------------------------------------------------------------------
// Territory
// ---------------------------------------------------------------------------

struct Tile {
  TileId id = 0;
  int row = 0;
  int col = 0;
  Point center;
  std::int64_t population = 0;
};

/// d(a, b) = max(l/2, |center_a - center_b|).
double tile_distance(const Tile& a, const Tile& b, double tile_side);

class Territory {
 public:
  Territory(GridSpec grid, std::vector<Tile> tiles);

  const GridSpec& grid() const { return grid_; }
  double tile_side() const { return grid_.tile_side; }
  std::size_t tile_count() const { return tiles_.size(); }
  const Tile& tile(TileId id) const { return tiles_.at(id); }
  const std::vector<Tile>& tiles() const { return tiles_; }
  std::int64_t total_population() const { return total_population_; }

  double distance(TileId a, TileId b) const {
    return tile_distance(tiles_[a], tiles_[b], grid_.tile_side);
  }

  /// Retained tile at a grid position, if any.
  std::optional<TileId> tile_at(int row, int col) const;

  /// Population-weighted centroid of the tile centers.
  Point population_centroid() const;
  /// Tile with the largest population (lowest id on ties).
  TileId most_populated_tile() const;
  /// Tile whose center is farthest from the population centroid.
  TileId most_peripheral_tile() const;

 private:
  GridSpec grid_;
  std::vector<Tile> tiles_;
  std::int64_t total_population_ = 0;
};

/// Lays the grid over `bbox`, rounds the density to integer cell populations
/// and keeps cells with at least `min_population` residents. Dropped mass is
/// not redistributed.
Territory build_grid(const BoundingBox& bbox, double tile_side, const DensitySource& density,
                     std::int64_t min_population = 10);

// ---------------------------------------------------------------------------
// Agents
// ---------------------------------------------------------------------------

struct Agent {
  AgentId id = 0;
  TileId tile = 0;
  AgeGroup age = AgeGroup::Adults;
  double fitness = 0.0;  // assigned by sample_fitness
  HouseholdId household = kNoHousehold;
};

/// Creates exactly N_j agents per tile. Agent ids are dense and grouped by
/// tile in increasing tile order; age groups are drawn independently.
std::vector<Agent> populate(const Territory& territory, const AgeDistribution& ages,
                            std::uint64_t seed);

/// Half-open agent-id range [begin, end) of every tile's residents, for agent
/// vectors produced by populate().
std::vector<std::pair<AgentId, AgentId>> tile_rosters(std::span<const Agent> agents,
                                                      std::size_t tile_count);

void validate_age_distribution(const AgeDistribution& ages);

}  // namespace urbansir

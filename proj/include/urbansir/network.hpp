#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "urbansir/population.hpp"
#include "urbansir/random.hpp"

namespace urbansir {

enum class Layer : std::uint8_t { Household = 0, Acquaintance = 1, Fortuitous = 2 };

char layer_code(Layer layer);  // 'H', 'A', 'F'
Layer parse_layer(char code);

/// Undirected edge, stored with u < v.
struct Edge {
  AgentId u = 0;
  AgentId v = 0;

  static Edge make(AgentId a, AgentId b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// ---------------------------------------------------------------------------
// Households
// ---------------------------------------------------------------------------

struct Household {
  HouseholdId id = 0;
  TileId tile = 0;
  std::vector<AgentId> members;
};

/// Categorical distribution of household sizes; probabilities[k] is the
/// probability of size k + 1.
struct HouseholdSizeDistribution {
  std::vector<double> probabilities;

  static HouseholdSizeDistribution italian_default() { return {{0.33, 0.27, 0.19, 0.15, 0.06}}; }
  static HouseholdSizeDistribution fixed(std::size_t size);
  void validate() const;
  double mean_size() const;
};

struct HouseholdPartition {
  std::vector<Household> households;
  std::vector<Edge> edges;  // all within-household pairs, sorted
  /// Tiles where the child/adult co-residence rule could not be met and
  /// children were grouped without an adult-or-elderly member.
  std::vector<TileId> relaxed_tiles;
};

/// Partitions every tile's residents into households. Sizes are drawn from
/// `sizes`; each multi-member household gets an adult-or-elderly head when one
/// is available, a partner from the head's or an adjacent adult age group, and
/// children are placed only next to an adult-or-elderly member. Sets
/// Agent::household.
HouseholdPartition build_households(std::span<Agent> agents, std::size_t tile_count,
                                    const HouseholdSizeDistribution& sizes, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Fitness and mixing
// ---------------------------------------------------------------------------

/// f = 1 + X with ln X ~ Normal(ln 2, 1/4).
inline constexpr double kFitnessLogMean = 0.69314718055994530942;
inline constexpr double kFitnessLogSigma = 0.25;

double draw_fitness(Rng& rng);
void sample_fitness(std::span<Agent> agents, std::uint64_t seed);

/// Symmetric, non-negative 4x4 age-mixing propensities s_{i,j}.
class MixingMatrix {
 public:
  using Values = std::array<std::array<double, kAgeGroupCount>, kAgeGroupCount>;

  explicit MixingMatrix(const Values& values);
  static MixingMatrix constant(double value = 1.0);
  /// Bundled default (data/mixing_default.csv).
  static MixingMatrix default_matrix();
  /// 4x4 CSV, one row per age group, optional header line starting with a letter.
  static MixingMatrix from_csv(const std::filesystem::path& path);

  double operator()(AgeGroup a, AgeGroup b) const { return values_[index(a)][index(b)]; }
  double at(std::size_t i, std::size_t j) const { return values_[i][j]; }
  double row_max(AgeGroup a) const;
  double max() const;
  const Values& values() const { return values_; }

 private:
  Values values_;
};

/// w(u, v) = s[g_u][g_v] / d(t_u, t_v) * f_u * f_v.
double acquaintance_weight(const Agent& u, const Agent& v, const MixingMatrix& mixing,
                           const Territory& territory);

// ---------------------------------------------------------------------------
// Acquaintance graph
// ---------------------------------------------------------------------------

/// Inclusion model for acquaintance edges: every pair (u, v) not in the same
/// household is an edge independently with probability min(1, C * w(u, v)),
/// with C calibrated so the expected mean acquaintance degree equals the
/// target.
class AcquaintanceModel {
 public:
  AcquaintanceModel(std::span<const Agent> agents, const MixingMatrix& mixing,
                    const Territory& territory, double target_mean_degree);

  double scale() const { return scale_; }
  double probability(AgentId u, AgentId v) const;
  /// Sum of probabilities over all candidate pairs.
  double expected_edge_count() const { return expected_edges_; }
  double target_mean_degree() const { return target_; }
  /// Largest mean degree reachable with every positive-weight pair certain.
  double max_mean_degree() const { return max_mean_degree_; }
  bool cap_binds() const { return cap_binds_; }

  /// Draws one graph. Pair trials for agent u (against all v > u) use their
  /// own stream derived from (seed, u).
  std::vector<Edge> sample(std::uint64_t seed) const;

 private:
  double weight(AgentId u, AgentId v) const;
  double capped_sum(double scale) const;
  double capped_excess(double scale) const;

  std::span<const Agent> agents_;
  const MixingMatrix& mixing_;
  const Territory& territory_;
  double target_ = 0.0;
  double scale_ = 0.0;
  double expected_edges_ = 0.0;
  double max_mean_degree_ = 0.0;
  double uncapped_weight_sum_ = 0.0;
  double max_fitness_ = 0.0;
  bool cap_binds_ = false;
  std::vector<double> inverse_distance_;  // tile_count^2
};

// ---------------------------------------------------------------------------
// Social graph
// ---------------------------------------------------------------------------

struct Neighbor {
  AgentId id;
  Layer layer;
};

/// G = (V, E_H ∪ E_A) with E_H ∩ E_A = ∅. Immutable after construction.
class SocialGraph {
 public:
  SocialGraph(std::size_t agent_count, std::vector<Edge> household_edges,
              std::vector<Edge> acquaintance_edges);

  std::size_t agent_count() const { return agent_count_; }
  const std::vector<Edge>& household_edges() const { return household_; }
  const std::vector<Edge>& acquaintance_edges() const { return acquaintance_; }
  std::size_t edge_count() const { return household_.size() + acquaintance_.size(); }

  /// Neighbors sorted by id.
  std::span<const Neighbor> neighbors(AgentId u) const {
    return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
  }
  std::size_t degree(AgentId u) const { return offsets_[u + 1] - offsets_[u]; }
  std::optional<Layer> layer_between(AgentId u, AgentId v) const;

  /// ν = 2|E_H| / N.
  double mean_household_degree() const;
  double mean_degree() const;

 private:
  std::size_t agent_count_;
  std::vector<Edge> household_;
  std::vector<Edge> acquaintance_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
};

// ---------------------------------------------------------------------------
// Degree statistics
// ---------------------------------------------------------------------------

struct DegreeStats {
  std::vector<std::uint64_t> histogram;  // histogram[k] = #samples with degree k
  std::uint64_t samples = 0;
  double mean = 0.0;
  double second_moment = 0.0;

  void add(std::uint64_t degree);
  void merge(const DegreeStats& other);
  void finalize();

  /// <k> / (<k^2> - <k>): the critical transmissibility per unit infectious
  /// time under heterogeneous mean-field theory.
  double hmf_ratio() const;
};

DegreeStats degree_stats(const SocialGraph& graph);
DegreeStats degree_stats(std::span<const std::uint64_t> degrees);

/// β_c^HMF = μ <k> / (<k^2> - <k>), k being the daily contact degree.
double hmf_threshold(const DegreeStats& stats, double mu);

// ---------------------------------------------------------------------------
// Whole network
// ---------------------------------------------------------------------------

struct NetworkParams {
  HouseholdSizeDistribution household_sizes = HouseholdSizeDistribution::italian_default();
  double acquaintance_mean_degree = 8.0;
};

struct Network {
  SocialGraph graph;
  std::vector<Household> households;
  std::vector<TileId> relaxed_tiles;
  double acquaintance_scale = 0.0;
  double expected_acquaintance_edges = 0.0;
};

/// Fitness, households and acquaintances for a populated territory. Mutates
/// the agents' fitness and household fields.
Network build_network(std::span<Agent> agents, const Territory& territory,
                      const MixingMatrix& mixing, const NetworkParams& params,
                      std::uint64_t seed);

}  // namespace urbansir

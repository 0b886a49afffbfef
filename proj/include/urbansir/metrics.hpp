#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "urbansir/contacts.hpp"
#include "urbansir/epidemic.hpp"

namespace urbansir {

// ---------------------------------------------------------------------------
// Daily series reconstructed from event logs
// ---------------------------------------------------------------------------

/// counts[t][k] = infected agents of stratum k on day t, for t in
/// [0, result.last_day()]. An agent is infected on days
/// [infection_day, recovery_day).
using StratifiedCounts = std::vector<std::vector<std::int64_t>>;

StratifiedCounts tile_prevalence(const SimulationResult& result, std::span<const Agent> agents,
                                 std::size_t tile_count);
StratifiedCounts age_prevalence(const SimulationResult& result, std::span<const Agent> agents);

// ---------------------------------------------------------------------------
// Reproduction number
// ---------------------------------------------------------------------------

struct CohortPoint {
  int day = 0;
  std::int64_t cohort = 0;      // agents infected on `day`
  std::int64_t secondary = 0;   // their lifetime secondary infections
  double r() const { return static_cast<double>(secondary) / static_cast<double>(cohort); }
};

/// R(t) by infection-day cohort. Days with an empty cohort are omitted. With
/// `agents` and `group` set, only agents of that age group form the cohorts.
std::vector<CohortPoint> reproduction_number(const SimulationResult& result);
std::vector<CohortPoint> reproduction_number(const SimulationResult& result,
                                             std::span<const Agent> agents, AgeGroup group);

struct MeanPoint {
  double x = 0.0;
  double mean = 0.0;
  std::size_t samples = 0;
};

/// Mean of per-run R(t) over the selected runs, at each day where at least
/// one run has a cohort.
std::vector<MeanPoint> mean_reproduction_number(std::span<const SimulationResult> results,
                                                std::span<const std::size_t> selection);

// ---------------------------------------------------------------------------
// Epidemic threshold
// ---------------------------------------------------------------------------

/// Coefficient of variation sqrt(<ρ²> - <ρ>²) / <ρ>; absent when <ρ> = 0.
std::optional<double> epidemic_variability(std::span<const double> rho);

struct ThresholdPoint {
  double beta = 0.0;
  std::vector<double> attack_rates;
  double mean_attack_rate = 0.0;
  std::optional<double> delta;
};

struct ThresholdScan {
  std::vector<ThresholdPoint> points;
  std::optional<double> beta_c_delta;  // grid value maximizing Δ
  DegreeStats contact_degrees;
  double beta_c_hmf = 0.0;
};

struct ScanSettings {
  std::vector<double> betas;  // strictly increasing
  std::size_t replicas = 100;
  double mu = 1.0 / 3.0;
  int max_days = 365;
  int contact_days = 20;  // days of G_I^t pooled for the degree moments
  unsigned workers = 1;
};

/// Evenly spaced grid from `first` to `last` inclusive.
std::vector<double> beta_grid(double first, double last, double step);

/// β_c^Δ = argmax Δ(β) over points where Δ is defined.
std::optional<double> argmax_variability(std::span<const ThresholdPoint> points);

/// Runs `replicas` unfiltered epidemics per grid value. Seeds derive from
/// (seed, Stage::Scan, {grid index, replica}).
ThresholdScan threshold_scan(const ContactKernel& kernel, const ScanSettings& settings,
                             std::uint64_t seed);

/// Pooled degree histogram of the daily contact graphs G_I^t over `days`
/// sampled days (each agent contributes one sample per day).
DegreeStats degree_distribution_of_contacts(const ContactKernel& kernel, int days, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Geography
// ---------------------------------------------------------------------------

struct GeoSnapshot {
  double tau = 0.0;         // fraction of tiles with I_j > 0
  double prevalence = 0.0;  // i = sum I_j / N
  std::vector<double> q;    // normalized prevalence; empty when nobody is infected
  std::vector<double> pi;   // infected-location distribution; empty when nobody is infected
  std::optional<double> entropy;
};

/// Counts may be fractional (interpolated series).
GeoSnapshot geo_snapshot(std::span<const double> infected, std::span<const std::int64_t> population);

struct GeoSeries {
  std::vector<GeoSnapshot> days;  // index = day
};

GeoSeries geo_series(const SimulationResult& result, std::span<const Agent> agents,
                     const Territory& territory);

/// sim_H(x, y) = sum_j sqrt(x_j y_j).
double hellinger_affinity(std::span<const double> x, std::span<const double> y);

/// θ = sim_H((i_a, 1 - i_a), (i_b, 1 - i_b)) * sim_H(π_a, π_b); absent when
/// either snapshot has no infected.
std::optional<double> overlap(const GeoSnapshot& a, const GeoSnapshot& b);

/// Normalized time axis: point k of `points` sits at 2k/(points-1) in units of
/// the run's peak day.
inline constexpr std::size_t kNormalizedPoints = 100;
inline constexpr double kNormalizedSpan = 2.0;
double normalized_time(std::size_t k, std::size_t points = kNormalizedPoints);

/// Per-tile infected counts interpolated linearly at t = s * t_peak for each
/// normalized time s. Points past the run's last day are absent (empty
/// vector). A run peaking on day 0 is stretched as if it peaked on day 1.
std::vector<std::vector<double>> normalized_tile_prevalence(const SimulationResult& result,
                                                            const StratifiedCounts& tiles,
                                                            std::size_t points = kNormalizedPoints);

struct NormalizedGeo {
  std::vector<std::optional<GeoSnapshot>> points;
};

NormalizedGeo normalized_geo(const SimulationResult& result, std::span<const Agent> agents,
                             const Territory& territory, std::size_t points = kNormalizedPoints);

struct PairOverlap {
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<std::optional<double>> theta;  // per normalized point
};

struct OverlapBand {
  double s = 0.0;  // normalized time
  std::size_t pairs = 0;
  double mean = 0.0;
  double low = 0.0;   // 2.5th percentile
  double high = 0.0;  // 97.5th percentile
};

struct OverlapSeries {
  std::vector<PairOverlap> pairs;
  std::vector<OverlapBand> band;  // points with at least one defined pair
};

/// θ over all unordered pairs of `runs` on the normalized time axis.
OverlapSeries overlap_series(std::span<const NormalizedGeo> runs, std::span<const std::size_t> ids);

/// Linear-interpolated percentile (q in [0, 1]) of a non-empty sample.
double percentile(std::vector<double> values, double q);

// ---------------------------------------------------------------------------
// Tile statistics
// ---------------------------------------------------------------------------

struct TileRunStats {
  std::optional<int> first_infection;  // earliest infection day among residents
  std::optional<int> peak_interval;    // tile peak day minus first infection
  double attack_rate = 0.0;            // residents ever infected / N_j
};

/// One entry per tile.
std::vector<TileRunStats> tile_stats(const SimulationResult& result, std::span<const Agent> agents,
                                     const Territory& territory);

/// floor(log2 N_j).
int population_bin(std::int64_t population);

struct TileBinStats {
  int bin = 0;
  std::size_t tiles = 0;
  MeanPoint first_infection;
  MeanPoint peak_interval;
  MeanPoint attack_rate;
};

/// Means over runs and over the tiles of each log2 population bin. Tiles never
/// infected in a run are left out of the time averages and count as 0 in the
/// attack rate.
std::vector<TileBinStats> aggregate_tile_stats(std::span<const std::vector<TileRunStats>> runs,
                                               const Territory& territory);

// ---------------------------------------------------------------------------
// Peak-aligned series
// ---------------------------------------------------------------------------

/// series[k] over shifts s = first_shift + k, s = t - t_peak.
struct AlignedSeries {
  int first_shift = 0;
  std::vector<double> values;
  std::vector<std::size_t> samples;
};

/// Mean of per-run values aligned on each run's global peak. Values outside a
/// run count as 0 when `pad_zero`, otherwise that run is left out of the point.
AlignedSeries align_on_peak(std::span<const std::vector<std::optional<double>>> per_run,
                            std::span<const int> peaks, bool pad_zero);

struct AgeSeries {
  std::array<AlignedSeries, kAgeGroupCount> infected;
  std::array<AlignedSeries, kAgeGroupCount> reproduction;
};

AgeSeries age_series(std::span<const SimulationResult> results, std::span<const std::size_t> selection,
                     std::span<const Agent> agents);

/// Global I_t peak-aligned across the selected runs.
AlignedSeries aligned_prevalence(std::span<const SimulationResult> results,
                                 std::span<const std::size_t> selection);

// ---------------------------------------------------------------------------
// Deterministic references
// ---------------------------------------------------------------------------

/// Positive root of ρ = 1 - exp(-R0 ρ); 0 when R0 <= 1.
double mean_field_final_size(double r0);

struct MeanFieldTrajectory {
  std::vector<double> susceptible;
  std::vector<double> infected;
  std::vector<double> recovered;
  double peak_infected() const;
  double final_recovered() const { return recovered.empty() ? 0.0 : recovered.back() + infected.back(); }
};

/// Discrete-time fully mixed SIR matching the stochastic daily scheme:
/// new_t = S_t (1 - (1 - q β)^{I_t}), I_{t+1} = (1 - μ) I_t + new_t, where
/// q = per-pair daily contact probability. Runs until I_t < 1e-9 or max_days.
MeanFieldTrajectory mean_field_sir(double n, double q, double beta, double mu, double initial_infected = 1.0,
                                   int max_days = 10000);

}  // namespace urbansir

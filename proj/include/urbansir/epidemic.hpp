#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "urbansir/contacts.hpp"

namespace urbansir {

/// Where the index case is drawn from.
struct IndexCaseSelection {
  /// Unset: uniformly over the whole population. Set: uniformly among the
  /// residents of that tile.
  std::optional<TileId> tile;
  /// Set: always this agent (takes precedence over `tile`).
  std::optional<AgentId> agent;

  static IndexCaseSelection uniform() { return {}; }
  static IndexCaseSelection in_tile(TileId t) { return {t, std::nullopt}; }
  static IndexCaseSelection fixed(AgentId a) { return {std::nullopt, a}; }
};

struct EpidemicParams {
  double beta = 0.0;  // per-contact, per-day transmission probability
  double mu = 1.0 / 3.0;  // per-day recovery probability
  int max_days = 365;
  IndexCaseSelection index_case;

  void validate() const;
};

inline constexpr std::int64_t kNoInfector = -1;
inline constexpr int kNotRecovered = -1;

struct InfectionEvent {
  AgentId agent = 0;
  int infection_day = 0;  // first day the agent is infectious
  std::int64_t infector = kNoInfector;
  int recovery_day = kNotRecovered;  // first day the agent is recovered
};

/// Compartment sizes at the start of day t (after the previous day's
/// transmissions and recoveries).
struct DailyCounts {
  int day = 0;
  std::int64_t susceptible = 0;
  std::int64_t infected = 0;
  std::int64_t recovered = 0;
  std::int64_t new_infections = 0;  // agents whose infection_day == day
};

struct SimulationResult {
  std::uint64_t seed = 0;
  Configuration configuration = Configuration::HN;
  std::size_t population = 0;
  AgentId index_case = 0;
  std::vector<DailyCounts> daily;
  std::vector<InfectionEvent> events;  // ordered by infection day; events[0] is the index case
  /// False when max_days was reached with infectious agents left.
  bool complete = true;

  /// ρ: fraction of the population ever infected (R_∞ / N for complete runs).
  double attack_rate() const;
  /// Number of infections whose infector is the index case.
  std::int64_t index_secondary_infections() const;
  /// Secondary infections caused by each event's agent, aligned with `events`.
  std::vector<std::int64_t> secondary_counts() const;
  /// Day with the largest number of infected (earliest on ties).
  int peak_day() const;
  int last_day() const { return daily.empty() ? 0 : daily.back().day; }
};

/// Receives the full contact set of each simulated day.
using ContactSink = std::function<void(const ContactSet&)>;

/// Discrete-time stochastic SIR. Each day every infectious agent meets its
/// sampled contacts; each infectious-susceptible contact transmits with
/// probability β (if several succeed on the same susceptible, the infector is
/// chosen uniformly among them) and infections take effect the next day.
/// Afterwards every agent that was infectious during the day recovers with
/// probability μ. Stops when nobody is infectious or at max_days.
///
/// Without a sink only the contacts of infectious agents are sampled. With a
/// sink the whole E^t is drawn every day and handed to it; both modes have
/// the same distribution but consume random numbers differently.
SimulationResult run_epidemic(const ContactKernel& kernel, const EpidemicParams& params,
                              std::uint64_t seed, const ContactSink& sink = {});

/// Replica r uses seed derive_seed(master_seed, Stage::Ensemble, {r}).
std::uint64_t replica_seed(std::uint64_t master_seed, std::size_t replica);

/// n independent runs on one kernel, returned in replica order.
std::vector<SimulationResult> run_ensemble(const ContactKernel& kernel, const EpidemicParams& params,
                                           std::size_t replicas, std::uint64_t master_seed,
                                           unsigned workers = 1);

struct OutbreakPartition {
  std::vector<std::size_t> outbreaks;   // indices with ρ > threshold
  std::vector<std::size_t> extinctions;
  std::optional<std::string> warning;   // set when no run qualifies as an outbreak
};

OutbreakPartition outbreak_filter(std::span<const SimulationResult> results, double threshold = 0.25);

/// Secondary infections caused by the index case, one value per run.
std::vector<std::int64_t> r0_index(std::span<const SimulationResult> results);

/// Number of transmissions made by `index` over one infectious period in a
/// population that stays fully susceptible: each day its sampled contacts are
/// each infected with probability β, then it recovers with probability μ.
/// The expectation is sum_v p(index, v) β / μ.
std::int64_t one_generation_transmissions(const ContactKernel& kernel, double beta, double mu,
                                          AgentId index, Rng& rng);

}  // namespace urbansir

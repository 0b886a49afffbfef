#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "urbansir/network.hpp"
#include "urbansir/population.hpp"
#include "urbansir/random.hpp"

namespace urbansir {

/// Contact-model variants. All of them have total daily contact mass |E|.
///   HM  homogeneous mixing: every pair equally likely
///   SN  static network: p = 1 on E, 0 elsewhere
///   HN  household 1, acquaintance 0.5, uniform fortuitous noise
///   AN  as HN, fortuitous noise ∝ s(g_u, g_v)
///   DN  as HN, fortuitous noise ∝ 1 / d(u, v)
///   ADN as HN, fortuitous noise ∝ s(g_u, g_v) / d(u, v)
enum class Configuration : std::uint8_t { HM, SN, HN, AN, DN, ADN };

inline constexpr std::array<Configuration, 6> kAllConfigurations = {
    Configuration::HM, Configuration::SN, Configuration::HN,
    Configuration::AN, Configuration::DN, Configuration::ADN};

std::string_view to_string(Configuration config);
Configuration parse_configuration(std::string_view name);

struct Contact {
  AgentId u;
  AgentId v;
  Layer layer;
};

/// E^t: the contacts realized on one day.
struct ContactSet {
  int day = 0;
  std::vector<Contact> contacts;
};

struct LayerMass {
  double household = 0.0;
  double acquaintance = 0.0;
  double fortuitous = 0.0;
  double total() const { return household + acquaintance + fortuitous; }
};

/// Daily contact probabilities p(u, v) for one configuration over a fixed
/// social graph. Immutable after construction and safe to share between
/// threads; every sampling call takes the caller's RNG.
///
/// Fortuitous contacts (pairs outside E) have p(u, v) = c * phi(u, v), where
/// phi depends only on the age groups and tiles of u and v and c is fixed so
/// that the fortuitous layer carries W_F = |E| - |E_H| - |E_A| / 2.
class ContactKernel {
 public:
  ContactKernel(Configuration config, const SocialGraph& graph, std::span<const Agent> agents,
                const MixingMatrix& mixing, const Territory& territory);

  Configuration configuration() const { return config_; }
  const SocialGraph& graph() const { return graph_; }
  std::size_t agent_count() const { return n_; }
  std::span<const Agent> agents() const { return agents_; }
  const Territory& territory() const { return territory_; }

  double household_rate() const { return household_rate_; }
  double acquaintance_rate() const { return acquaintance_rate_; }
  /// W_F for the noise configurations, |E| for HM, 0 for SN.
  double fortuitous_mass() const { return fortuitous_mass_; }
  /// Probability shared by all pairs under HM, or the scale c otherwise.
  double fortuitous_scale() const { return scale_; }

  double pair_probability(AgentId u, AgentId v) const;

  /// Per-layer sums of p(u, v) over unordered pairs, from edge counts and the
  /// cell-level normalization.
  LayerMass analytic_mass() const;
  /// Brute-force sum of pair_probability over all N(N-1)/2 pairs.
  LayerMass enumerated_mass() const;

  /// Mean over agents of sum_v p(u, v), i.e. 2 * sum p / N.
  double mean_daily_contacts() const;

  /// Samples the full contact set E^t: every pair independently with its
  /// probability p(u, v).
  ContactSet sample_day(int day, Rng& rng) const;

  /// Samples the contacts of a single agent u on one day, calling
  /// visit(v, layer) for each. Each pair involving u is an independent
  /// Bernoulli(p(u, v)) trial, so this is the marginal of sample_day on u's
  /// pairs.
  template <class Visit>
  void for_each_contact(AgentId u, Rng& rng, Visit&& visit) const;

 private:
  double phi(AgentId u, AgentId v) const {
    double f = 1.0;
    if (use_age_) f *= mixing_[age_[u] * kAgeGroupCount + age_[v]];
    if (use_distance_) f *= inverse_distance_[static_cast<std::size_t>(tile_[u]) * tiles_ + tile_[v]];
    return f;
  }
  double phi_max(AgentId u) const {
    double f = 1.0;
    if (use_age_) f *= mixing_row_max_[age_[u]];
    if (use_distance_) f *= max_inverse_distance_;
    return f;
  }
  bool is_edge(AgentId u, AgentId v) const { return graph_.layer_between(u, v).has_value(); }

  /// Fortuitous trials of u against agents in [first, N) \ {u}.
  template <class Visit>
  void fortuitous_from(AgentId u, AgentId first, Rng& rng, Visit&& visit) const;

  Configuration config_;
  const SocialGraph& graph_;
  std::span<const Agent> agents_;
  const Territory& territory_;
  std::size_t n_;
  std::size_t tiles_;

  double household_rate_ = 0.0;
  double acquaintance_rate_ = 0.0;
  double fortuitous_mass_ = 0.0;
  double scale_ = 0.0;
  double phi_pair_sum_ = 0.0;  // sum of phi over fortuitous-eligible pairs
  bool has_fortuitous_ = false;
  bool use_age_ = false;
  bool use_distance_ = false;

  std::vector<std::uint32_t> tile_;
  std::vector<std::uint8_t> age_;
  std::array<double, kAgeGroupCount * kAgeGroupCount> mixing_{};
  std::array<double, kAgeGroupCount> mixing_row_max_{};
  std::vector<double> inverse_distance_;
  double max_inverse_distance_ = 0.0;
};

/// β = R0 * μ / m̄ with m̄ = 2 |E| / N, so that the expected number of
/// transmissions by a uniformly chosen index case over its infectious period
/// in a fully susceptible population equals R0.
double calibrate_beta(const ContactKernel& kernel, double r0_target, double mu);

struct MassReport {
  double edge_count = 0.0;  // |E|
  LayerMass analytic;
  double monte_carlo_mean = 0.0;
  double monte_carlo_stderr = 0.0;
  int days = 0;
};

/// Compares the analytic layer sums and a Monte-Carlo estimate of E|E^t|
/// against |E|.
MassReport kernel_mass_check(const ContactKernel& kernel, int days, std::uint64_t seed);

// ---------------------------------------------------------------------------

template <class Visit>
void ContactKernel::fortuitous_from(AgentId u, AgentId first, Rng& rng, Visit&& visit) const {
  const bool uniform_all = config_ == Configuration::HM;
  const double bound = uniform_all ? scale_ : scale_ * phi_max(u);
  if (bound <= 0.0) return;
  const GeometricSkipper skip(bound);
  std::uint64_t v = first;
  for (;;) {
    const std::uint64_t gap = skip.next(rng);
    if (gap >= n_ - v) return;
    v += gap;
    const auto w = static_cast<AgentId>(v);
    ++v;
    if (w != u) {
      if (uniform_all) {
        visit(w, Layer::Fortuitous);
      } else {
        const double ratio = phi(u, w) / phi_max(u);
        if ((ratio >= 1.0 || uniform01(rng) < ratio) && !is_edge(u, w)) visit(w, Layer::Fortuitous);
      }
    }
    if (v >= n_) return;
  }
}

template <class Visit>
void ContactKernel::for_each_contact(AgentId u, Rng& rng, Visit&& visit) const {
  if (config_ != Configuration::HM) {
    for (const Neighbor& nb : graph_.neighbors(u)) {
      const double p = nb.layer == Layer::Household ? household_rate_ : acquaintance_rate_;
      if (bernoulli(rng, p)) visit(nb.id, nb.layer);
    }
  }
  if (has_fortuitous_) fortuitous_from(u, 0, rng, visit);
}

}  // namespace urbansir

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dycla/graph.hpp"
#include "dycla/rng.hpp"

namespace dycla {

/// State of one pursuit learning automaton over N actions.
///
/// p is the action probability vector, z the per-action selection count
/// (initialized to 1, i.e. an optimistic pseudo-observation of reward 1),
/// and r the running-mean reward estimate per action. delta_step is the
/// fixed probability quantum 1/(resolution * N) moved per update.
struct AutomatonState {
  std::vector<double> p;
  std::vector<double> z;
  std::vector<double> r;
  double delta_step = 0.0;

  std::uint32_t n_actions() const { return static_cast<std::uint32_t>(p.size()); }

  friend bool operator==(const AutomatonState&, const AutomatonState&) = default;
};

inline AutomatonState init_automaton(std::uint32_t n_actions,
                                     std::uint32_t resolution) {
  if (n_actions < 2)
    throw std::invalid_argument("init_automaton: need at least 2 actions");
  if (resolution < 1)
    throw std::invalid_argument("init_automaton: resolution must be >= 1");
  AutomatonState s;
  s.p.assign(n_actions, 1.0 / n_actions);
  s.z.assign(n_actions, 1.0);
  s.r.assign(n_actions, 1.0);
  s.delta_step = 1.0 / (static_cast<double>(resolution) * n_actions);
  return s;
}

/// Samples an action index according to the probability vector.
inline VertexId select_action(const AutomatonState& s, Rng& rng) {
  return static_cast<VertexId>(sample_index(rng, s.p));
}

/// Index of the most probable action; lowest index wins ties.
inline std::uint32_t best_action(const AutomatonState& s) {
  return static_cast<std::uint32_t>(
      std::max_element(s.p.begin(), s.p.end()) - s.p.begin());
}

/// Discretized generalized pursuit update with running-mean estimates.
///
/// The reward estimate of the chosen action is folded into its running mean,
/// then probability mass moves in quanta of delta_step: every action whose
/// estimate strictly exceeds the chosen one's gains delta/W, every action
/// with a strictly lower estimate loses delta/(N-W), and the chosen action
/// absorbs the remainder so the vector stays on the simplex. Actions tied
/// with the chosen estimate are left untouched. Feedback may exceed 1;
/// only estimate comparisons matter, so rewards are not normalized.
inline void edgpa_update(AutomatonState& s, VertexId chosen, double feedback) {
  const std::uint32_t n = s.n_actions();
  if (chosen >= n)
    throw std::logic_error("edgpa_update: chosen action out of range");
  if (feedback < 0.0)
    throw std::invalid_argument("edgpa_update: feedback must be >= 0");

  s.r[chosen] = (s.z[chosen] * s.r[chosen] + feedback) / (s.z[chosen] + 1.0);
  s.z[chosen] += 1.0;
  const double r_chosen = s.r[chosen];

  std::uint32_t wins = 0;  // actions whose estimate beats the chosen one's
  std::uint32_t losses = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (s.r[i] > r_chosen) ++wins;
    if (s.r[i] < r_chosen) ++losses;
  }
  if (wins == 0 && losses == 0) return;  // every estimate tied: nothing moves

  if (wins > 0) {
    const double up = s.delta_step / wins;
    for (std::uint32_t i = 0; i < n; ++i)
      if (s.r[i] > r_chosen) s.p[i] = std::min(s.p[i] + up, 1.0);
  }
  const double down = s.delta_step / (n - wins);
  for (std::uint32_t i = 0; i < n; ++i)
    if (s.r[i] < r_chosen) s.p[i] = std::max(s.p[i] - down, 0.0);

  double sum_others = 0.0;
  for (std::uint32_t i = 0; i < n; ++i)
    if (i != chosen) sum_others += s.p[i];
  s.p[chosen] = 1.0 - sum_others;
  if (s.p[chosen] < 0.0) {
    // The clamps above can push the closing component slightly negative;
    // zero it and renormalize as the minimal simplex repair.
    s.p[chosen] = 0.0;
    double sum = 0.0;
    for (double v : s.p) sum += v;
    for (double& v : s.p) v /= sum;
  }
}

/// Partially rewinds the probability vector toward uniform, in proportion
/// to how strongly the seed set's influence range changed.
///
/// The maximal component drops by psi = min{phi * dsigma/(sigma_old +
/// sigma_new) * p_max, 1}, additionally capped so it never falls below 1/N
/// (full rewind lands exactly on the uniform vector); the removed mass is
/// spread evenly over the other N-1 components.
inline void smooth(AutomatonState& s, double delta_sigma, double sigma_old,
                   double sigma_new, double phi) {
  if (delta_sigma < 0.0)
    throw std::invalid_argument("smooth: delta_sigma must be >= 0");
  if (phi < 0.0) throw std::invalid_argument("smooth: phi must be >= 0");
  if (!(sigma_old + sigma_new > 0.0))
    throw std::invalid_argument("smooth: sigma_old + sigma_new must be > 0");

  const std::uint32_t n = s.n_actions();
  const std::uint32_t m = best_action(s);
  double psi =
      std::min(phi * delta_sigma / (sigma_old + sigma_new) * s.p[m], 1.0);
  const double headroom = s.p[m] - 1.0 / n;
  psi = headroom > 0.0 ? std::min(psi, headroom) : 0.0;
  if (psi == 0.0) return;

  s.p[m] -= psi;
  const double share = psi / (n - 1);
  for (std::uint32_t i = 0; i < n; ++i)
    if (i != m) s.p[i] += share;
}

/// Perturbs every reward estimate with independent Normal(0, delta_sigma)
/// noise (delta_sigma is the variance) and levels the selection counts to
/// their mean, so all actions are re-explored on the changed network.
inline void perturb_estimates(AutomatonState& s, double delta_sigma, Rng& rng) {
  if (delta_sigma < 0.0)
    throw std::invalid_argument("perturb_estimates: delta_sigma must be >= 0");
  const double stddev = std::sqrt(delta_sigma);
  for (double& estimate : s.r) estimate += normal_draw(rng, stddev);
  double z_sum = 0.0;
  for (double z : s.z) z_sum += z;
  const double z_mean = z_sum / s.n_actions();
  std::fill(s.z.begin(), s.z.end(), z_mean);
}

/// True once the automaton has committed: max probability >= threshold.
inline bool converged(const AutomatonState& s, double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0))
    throw std::invalid_argument("converged: threshold must be in (0, 1]");
  return *std::max_element(s.p.begin(), s.p.end()) >= threshold;
}

}  // namespace dycla

/*
 * Copyright 2026 the delannoy-adic authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "delannoy/diagram.hpp"
#include "delannoy/numbers.hpp"

namespace delannoy {

/// Edge weights (alpha on diagonal, beta on horizontal, gamma on vertical)
/// of an invariant measure: alpha + beta + gamma = 1 and beta*gamma = alpha.
/// The family is parametrized by beta; gamma = (1-beta)/(1+beta) and
/// alpha = beta*gamma solve the two constraints. Exact rationals are kept
/// whenever beta is given as a rational.
class MeasureParams {
 public:
  /// Exact-mode construction; throws std::domain_error unless 0 <= beta <= 1.
  static MeasureParams from_beta(const Rational& beta);
  /// Float-mode construction (beta irrational or decimal input).
  static MeasureParams from_beta(double beta);

  bool exact() const { return exact_; }

  double alpha() const { return alpha_d_; }
  double beta() const { return beta_d_; }
  double gamma() const { return gamma_d_; }

  // Exact weights; throw std::logic_error in float mode.
  const Rational& alpha_exact() const;
  const Rational& beta_exact() const;
  const Rational& gamma_exact() const;

 private:
  MeasureParams() = default;
  bool exact_ = false;
  Rational alpha_q_, beta_q_, gamma_q_;
  double alpha_d_ = 0, beta_d_ = 0, gamma_d_ = 0;
};

/// Measure of the cylinder set of x: alpha^#D * beta^#H * gamma^#V.
double cylinder_measure(const MeasureParams& p, const FinitePath& x);
/// Exact-rational cylinder measure; requires p.exact().
Rational cylinder_measure_exact(const MeasureParams& p, const FinitePath& x);

/// `depth` i.i.d. moves with P(H)=beta, P(V)=gamma, P(D)=alpha, drawn from a
/// SplitMix64 stream. Deterministic for fixed (p, depth, seed): move = H if
/// u < beta, V if u < beta+gamma, else D, with u the generator's uniform01.
FinitePath sample_path(const MeasureParams& p, std::uint64_t depth, std::uint64_t seed);

/// For every prefix vertex v_i of x dominating v0 componentwise, the ratio
/// dim(v0, v_i) / dim(root, v_i). The counts are exact big integers; the
/// quotient is taken in log-space so depths of 10^3 and beyond do not
/// overflow.
std::vector<double> ergodic_ratio(const FinitePath& x, const Vertex& v0);

/// Almost-sure slope rho = (alpha+gamma)/(alpha+beta) of a sampled path, and
/// the closed-form limit of the ergodic ratio for a cylinder ending at
/// (n0,k0). Requires beta, gamma > 0 (throws std::domain_error otherwise).
struct SlopeLimit {
  double rho = 0;
  double predicted_ratio(std::uint32_t n0, std::uint32_t k0) const;
};
SlopeLimit slope_and_limit(const MeasureParams& p);

/// Aggregate of the two-walker collision experiment.
struct WalkStats {
  std::uint64_t steps = 0;   // per trial
  std::uint64_t trials = 0;
  std::uint64_t collisions = 0;             // total over all trials, indices i >= 1
  std::uint64_t min_trial_collisions = 0;
  std::uint64_t max_trial_collisions = 0;
  std::uint64_t zero_collision_trials = 0;
  double mean_increment_x = 0;  // difference walk Z = X - X'
  double mean_increment_y = 0;
  double se_increment_x = 0;    // standard error of the mean
  double se_increment_y = 0;
  double mean_final_slope = 0;  // mean k/n over all simulated walkers
};

/// Simulates `trials` pairs of independent walkers (streams derived from
/// (seed, trial, walker)), counting indices i in [1, steps] where the two
/// positions coincide, and accumulating the difference-walk increment
/// statistics.
WalkStats collision_experiment(const MeasureParams& p, std::uint64_t steps,
                               std::uint64_t trials, std::uint64_t seed);

/// One pair of walkers with explicitly chosen streams (identical streams give
/// collisions == steps; used as a degenerate control).
std::uint64_t pair_collisions(const MeasureParams& p, std::uint64_t steps,
                              std::uint64_t stream_a, std::uint64_t stream_b);

}  // namespace delannoy

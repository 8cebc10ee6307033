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

#include "delannoy/measures.hpp"

#include <cmath>
#include <stdexcept>

#include "delannoy/rng.hpp"

namespace delannoy {

namespace {

Rational pow_q(const Rational& base, std::uint32_t e) {
  Rational out = 1;
  for (std::uint32_t i = 0; i < e; ++i) out *= base;
  return out;
}

double ln_mpz(const mpz_class& v) {
  signed long e = 0;
  const double d = mpz_get_d_2exp(&e, v.get_mpz_t());
  return std::log(d) + static_cast<double>(e) * 0.6931471805599453;
}

// Yields ln D(n,k) for queries with non-decreasing n; keeps one table row.
class DelannoyLnWalker {
 public:
  explicit DelannoyLnWalker(std::uint32_t kmax) : row_(kmax + 1, BigInt(1)) {}

  double ln_at(std::uint32_t n, std::uint32_t k) {
    while (n_ < n) {
      delannoy_advance_row(row_);
      ++n_;
    }
    return ln_mpz(row_[k]);
  }

 private:
  std::vector<BigInt> row_;
  std::uint32_t n_ = 0;
};

Move draw_move(SplitMix64& g, double beta, double beta_plus_gamma) {
  const double u = g.uniform01();
  if (u < beta) return Move::H;
  if (u < beta_plus_gamma) return Move::V;
  return Move::D;
}

}  // namespace

MeasureParams MeasureParams::from_beta(const Rational& beta) {
  Rational b = beta;
  b.canonicalize();
  if (b < 0 || b > 1) throw std::domain_error("beta must lie in [0,1]");
  MeasureParams p;
  p.exact_ = true;
  p.beta_q_ = b;
  p.gamma_q_ = Rational(1 - b) / Rational(1 + b);
  p.gamma_q_.canonicalize();
  p.alpha_q_ = p.beta_q_ * p.gamma_q_;
  p.alpha_q_.canonicalize();
  p.beta_d_ = p.beta_q_.get_d();
  p.gamma_d_ = p.gamma_q_.get_d();
  p.alpha_d_ = p.alpha_q_.get_d();
  return p;
}

MeasureParams MeasureParams::from_beta(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::domain_error("beta must lie in [0,1]");
  MeasureParams p;
  p.exact_ = false;
  p.beta_d_ = beta;
  p.gamma_d_ = (1.0 - beta) / (1.0 + beta);
  p.alpha_d_ = p.beta_d_ * p.gamma_d_;
  return p;
}

const Rational& MeasureParams::alpha_exact() const {
  if (!exact_) throw std::logic_error("measure parameters are not exact");
  return alpha_q_;
}
const Rational& MeasureParams::beta_exact() const {
  if (!exact_) throw std::logic_error("measure parameters are not exact");
  return beta_q_;
}
const Rational& MeasureParams::gamma_exact() const {
  if (!exact_) throw std::logic_error("measure parameters are not exact");
  return gamma_q_;
}

double cylinder_measure(const MeasureParams& p, const FinitePath& x) {
  return std::pow(p.alpha(), x.count(Move::D)) * std::pow(p.beta(), x.count(Move::H)) *
         std::pow(p.gamma(), x.count(Move::V));
}

Rational cylinder_measure_exact(const MeasureParams& p, const FinitePath& x) {
  Rational m = pow_q(p.alpha_exact(), x.count(Move::D));
  m *= pow_q(p.beta_exact(), x.count(Move::H));
  m *= pow_q(p.gamma_exact(), x.count(Move::V));
  m.canonicalize();
  return m;
}

FinitePath sample_path(const MeasureParams& p, std::uint64_t depth, std::uint64_t seed) {
  SplitMix64 g(seed);
  const double bg = p.beta() + p.gamma();
  std::vector<Move> ms;
  ms.reserve(depth);
  for (std::uint64_t i = 0; i < depth; ++i) ms.push_back(draw_move(g, p.beta(), bg));
  return FinitePath(std::move(ms));
}

std::vector<double> ergodic_ratio(const FinitePath& x, const Vertex& v0) {
  if (v0.kind != Vertex::Kind::Regular)
    throw std::invalid_argument("ergodic_ratio requires a regular base vertex");
  const auto vs = x.vertices();
  const Vertex t = vs.back();
  std::vector<double> out;
  if (t.n < v0.n || t.k < v0.k) return out;
  DelannoyLnWalker denominator(t.k);
  DelannoyLnWalker numerator(t.k - v0.k);
  for (const Vertex& v : vs) {
    if (v.n < v0.n || v.k < v0.k) continue;
    const double ln_den = denominator.ln_at(v.n, v.k);
    const double ln_num = numerator.ln_at(v.n - v0.n, v.k - v0.k);
    out.push_back(std::exp(ln_num - ln_den));
  }
  return out;
}

double SlopeLimit::predicted_ratio(std::uint32_t n0, std::uint32_t k0) const {
  const double s = std::sqrt(1.0 + rho * rho);
  return std::exp(-static_cast<double>(n0) * std::log(s + rho) -
                  static_cast<double>(k0) * std::log((s + 1.0) / rho));
}

SlopeLimit slope_and_limit(const MeasureParams& p) {
  if (p.beta() <= 0.0 || p.gamma() <= 0.0)
    throw std::domain_error("slope is undefined for degenerate beta or gamma");
  SlopeLimit s;
  s.rho = (p.alpha() + p.gamma()) / (p.alpha() + p.beta());
  return s;
}

std::uint64_t pair_collisions(const MeasureParams& p, std::uint64_t steps,
                              std::uint64_t stream_a, std::uint64_t stream_b) {
  SplitMix64 ga(stream_a), gb(stream_b);
  const double bg = p.beta() + p.gamma();
  std::int64_t dx = 0, dy = 0;
  std::uint64_t collisions = 0;
  for (std::uint64_t i = 1; i <= steps; ++i) {
    const Move ma = draw_move(ga, p.beta(), bg);
    const Move mb = draw_move(gb, p.beta(), bg);
    dx += (ma != Move::V) - (mb != Move::V);
    dy += (ma != Move::H) - (mb != Move::H);
    if (dx == 0 && dy == 0) ++collisions;
  }
  return collisions;
}

WalkStats collision_experiment(const MeasureParams& p, std::uint64_t steps,
                               std::uint64_t trials, std::uint64_t seed) {
  WalkStats st;
  st.steps = steps;
  st.trials = trials;
  st.min_trial_collisions = steps + 1;
  const double bg = p.beta() + p.gamma();
  double sum_dx = 0, sum_dy = 0, sumsq_dx = 0, sumsq_dy = 0;
  double slope_sum = 0;
  std::uint64_t slope_count = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    SplitMix64 ga(derive_stream(seed, 2 * t));
    SplitMix64 gb(derive_stream(seed, 2 * t + 1));
    std::int64_t ax = 0, ay = 0, bx = 0, by = 0;
    std::uint64_t collisions = 0;
    for (std::uint64_t i = 1; i <= steps; ++i) {
      const Move ma = draw_move(ga, p.beta(), bg);
      const Move mb = draw_move(gb, p.beta(), bg);
      const int ddx = (ma != Move::V) - (mb != Move::V);
      const int ddy = (ma != Move::H) - (mb != Move::H);
      ax += (ma != Move::V);
      ay += (ma != Move::H);
      bx += (mb != Move::V);
      by += (mb != Move::H);
      sum_dx += ddx;
      sum_dy += ddy;
      sumsq_dx += ddx * ddx;
      sumsq_dy += ddy * ddy;
      if (ax == bx && ay == by) ++collisions;
    }
    st.collisions += collisions;
    if (collisions == 0) ++st.zero_collision_trials;
    if (collisions < st.min_trial_collisions) st.min_trial_collisions = collisions;
    if (collisions > st.max_trial_collisions) st.max_trial_collisions = collisions;
    if (ax > 0) {
      slope_sum += static_cast<double>(ay) / static_cast<double>(ax);
      ++slope_count;
    }
    if (bx > 0) {
      slope_sum += static_cast<double>(by) / static_cast<double>(bx);
      ++slope_count;
    }
  }
  if (trials == 0) st.min_trial_collisions = 0;
  const double n = static_cast<double>(steps) * static_cast<double>(trials);
  if (n > 0) {
    st.mean_increment_x = sum_dx / n;
    st.mean_increment_y = sum_dy / n;
    if (n > 1) {
      const double var_x = (sumsq_dx - sum_dx * sum_dx / n) / (n - 1);
      const double var_y = (sumsq_dy - sum_dy * sum_dy / n) / (n - 1);
      st.se_increment_x = std::sqrt(var_x / n);
      st.se_increment_y = std::sqrt(var_y / n);
    }
  }
  if (slope_count > 0) st.mean_final_slope = slope_sum / static_cast<double>(slope_count);
  return st;
}

}  // namespace delannoy

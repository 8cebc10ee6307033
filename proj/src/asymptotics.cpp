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

#include "delannoy/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace delannoy {

double ln_big(const BigInt& v) {
  if (v <= 0) throw std::domain_error("ln_big requires a positive value");
  signed long e = 0;
  const double d = mpz_get_d_2exp(&e, v.get_mpz_t());
  return std::log(d) + static_cast<double>(e) * std::numbers::ln2;
}

double ln_delannoy(std::uint64_t n, std::uint64_t k) { return ln_big(delannoy_number(n, k)); }

double pemantle_wilson_ln(std::uint64_t n, std::uint64_t k) {
  if (n == 0 || k == 0) throw std::domain_error("pemantle_wilson requires n,k >= 1");
  const double nn = static_cast<double>(n), kk = static_cast<double>(k);
  const double s = std::hypot(nn, kk);
  // (s-k)/n = n/(s+k): the rewritten form avoids cancellation off-diagonal.
  const double t1 = -nn * std::log(nn / (s + kk));
  const double t2 = -kk * std::log(kk / (s + nn));
  const double t3 =
      0.5 * std::log(nn * kk / (2.0 * std::numbers::pi) / ((nn + kk - s) * (nn + kk - s) * s));
  return t1 + t2 + t3;
}

double pemantle_wilson(std::uint64_t n, std::uint64_t k) {
  return std::exp(pemantle_wilson_ln(n, k));
}

double diagonal_asymptotic_ln(std::uint64_t n) {
  if (n == 0) throw std::domain_error("diagonal_asymptotic requires n >= 1");
  const double nn = static_cast<double>(n);
  const double series =
      0.57 / std::sqrt(nn) - 0.067 * std::pow(nn, -1.5) + 0.006 * std::pow(nn, -2.5);
  return nn * std::log(3.0 + 2.0 * std::numbers::sqrt2) + std::log(series);
}

double diagonal_asymptotic(std::uint64_t n) { return std::exp(diagonal_asymptotic_ln(n)); }

ThetaFunctions theta_functions(double theta) {
  if (!(theta > 0)) throw std::domain_error("theta must be positive");
  const double s = std::sqrt(1.0 + theta * theta);
  ThetaFunctions f;
  f.a = (s + theta) * std::pow((s + 1.0) / theta, theta);
  f.g = std::log(f.a) - std::numbers::ln2 - theta * std::log(3.0);
  f.b = std::sqrt(theta) / std::sqrt((1.0 + theta - s) * (1.0 + theta - s) * s);
  return f;
}

EntropyLambda entropy_lambda(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::domain_error("epsilon must lie strictly between 0 and 1");
  EntropyLambda e;
  e.h = -epsilon * std::log(epsilon) - (1.0 - epsilon) * std::log(1.0 - epsilon);
  e.lambda = std::exp(e.h);
  return e;
}

double nicomachus_decay(std::uint32_t n, std::uint32_t k) {
  const double ln_ratio = ln_delannoy(n, k) - static_cast<double>(n) * std::numbers::ln2 -
                          static_cast<double>(k) * std::log(3.0);
  return std::exp(ln_ratio);
}

}  // namespace delannoy

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

#include "delannoy/numbers.hpp"

namespace delannoy {

/// Natural log of a positive big integer via mantissa/exponent splitting
/// (no overflow for values far beyond double range).
double ln_big(const BigInt& v);

/// ln D(n,k) computed exactly then converted; convenience for relative-error
/// comparisons in log-space.
double ln_delannoy(std::uint64_t n, std::uint64_t k);

/// Saddle-point approximation of D(n,k) for n,k >= 1, evaluated in log-space:
/// -n log((s-k)/n) - k log((s-n)/k) + (1/2) log(nk/(2 pi) / ((n+k-s)^2 s)),
/// s = sqrt(n^2+k^2). Symmetric in (n,k).
double pemantle_wilson_ln(std::uint64_t n, std::uint64_t k);
double pemantle_wilson(std::uint64_t n, std::uint64_t k);

/// Three-term diagonal expansion
/// D(n,n) ~ (3+2 sqrt 2)^n (.57 n^{-1/2} - .067 n^{-3/2} + .006 n^{-5/2}).
double diagonal_asymptotic_ln(std::uint64_t n);
double diagonal_asymptotic(std::uint64_t n);

/// Direction functions of the decay analysis, theta = k/n > 0:
///   a = (sqrt(1+theta^2)+theta) ((sqrt(1+theta^2)+1)/theta)^theta
///   g = log a - log 2 - theta log 3      (max 0, attained at theta = 3/4)
///   b = sqrt(theta) / sqrt((1+theta-sqrt(1+theta^2))^2 sqrt(1+theta^2))
struct ThetaFunctions {
  double a = 0;
  double g = 0;
  double b = 0;
};
ThetaFunctions theta_functions(double theta);

/// Binary entropy (natural log) and lambda = e^H; 0 < epsilon < 1.
struct EntropyLambda {
  double h = 0;
  double lambda = 0;
};
EntropyLambda entropy_lambda(double epsilon);

/// D(n,k) / (2^n 3^k) from the exact count, in log-space.
double nicomachus_decay(std::uint32_t n, std::uint32_t k);

}  // namespace delannoy

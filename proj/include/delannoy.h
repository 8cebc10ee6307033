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

/* C interface of libdelannoy.
 *
 * Conventions:
 *   - Every function returns a dla_status; results go to out-parameters.
 *   - Exact integers and rationals cross the boundary as decimal strings
 *     ("265729", "1/6"); free them with dla_string_free.
 *   - Paths are lowercase words over {h,d,v} read from the root.
 *   - Polynomials are comma-separated coefficient lists, lowest degree
 *     first ("1,3,1" is 1 + 3x + x^2; "" is the zero polynomial).
 *   - On failure, dla_last_error() returns a thread-local description.
 */

#ifndef DELANNOY_H
#define DELANNOY_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dla_status {
  DLA_OK = 0,
  DLA_ERR_DOMAIN = 1,        /* precondition violated */
  DLA_ERR_MAXIMAL_PATH = 2,  /* no successor */
  DLA_ERR_MINIMAL_PATH = 3,  /* no predecessor */
  DLA_ERR_NOT_DIVISIBLE = 4, /* B^{-1} undefined: r(0) != s(0) */
  DLA_ERR_TRUNCATED = 5,     /* coding ran past the finite truncation */
  DLA_ERR_PARSE = 6,         /* malformed path/rational/polynomial string */
  DLA_ERR_RESOURCE = 7,      /* configured sweep limit exceeded */
  DLA_ERR_NOMEM = 8,
  DLA_ERR_INTERNAL = 9
} dla_status;

const char* dla_version(void);
const char* dla_status_name(int status);
/* Thread-local detail message for the most recent failure. */
const char* dla_last_error(void);

void dla_string_free(char* s);
void dla_doubles_free(double* p);

/* ---- exact counts ---------------------------------------------------- */

int dla_delannoy(uint64_t n, uint64_t k, char** out);
int dla_binomial(uint64_t n, int64_t k, char** out);
int dla_nicomachus(uint64_t n, uint64_t k, char** out);
/* six independent closed-form evaluations of D(n,k); requires n >= k.
 * out must point at an array of 6 char*. */
int dla_closed_forms(uint64_t n, uint64_t k, char** out6);

typedef struct dla_grid dla_grid;
int dla_delannoy_table(uint32_t nmax, uint32_t kmax, dla_grid** out);
/* truncated coefficient table of 1/(1-(x+y+xy)); cells with n+k > nmax are 0 */
int dla_gf_table(uint32_t nmax, dla_grid** out);
int dla_grid_size(const dla_grid* g, uint32_t* rows, uint32_t* cols);
int dla_grid_at(const dla_grid* g, uint32_t n, uint32_t k, char** out);
void dla_grid_free(dla_grid* g);

/* ---- diagram and adic transformation --------------------------------- */

int dla_min_path(uint32_t n, uint32_t k, char** out);
int dla_max_path(uint32_t n, uint32_t k, char** out);
int dla_path_terminal(const char* path, uint32_t* n, uint32_t* k);
/* -1, 0, 1 in the tail order; both paths must share a terminal vertex */
int dla_compare_paths(const char* x, const char* y, int* out);
/* D(vn-un, vk-uk), or 0 when (vn,vk) does not dominate (un,uk) */
int dla_dim_between(uint32_t un, uint32_t uk, uint32_t vn, uint32_t vk, char** out);

int dla_successor(const char* path, char** out);
int dla_predecessor(const char* path, char** out);
/* symbols[i] = first move of the i-th transform, i = 0..iterations-1.
 * On DLA_ERR_TRUNCATED the partial word is still returned and *produced
 * holds its length. */
int dla_coding_sequence(const char* path, uint64_t iterations, char** out_symbols,
                        uint64_t* produced);

/* ---- invariant measures ---------------------------------------------- */

typedef struct dla_measure dla_measure;
/* "num/den" or an integer keeps exact rational arithmetic available;
 * a decimal like "0.25" selects float mode. */
int dla_measure_from_string(const char* beta, dla_measure** out);
int dla_measure_from_beta(double beta, dla_measure** out);
void dla_measure_free(dla_measure* m);
int dla_measure_is_exact(const dla_measure* m, int* out);
int dla_measure_weights(const dla_measure* m, double* alpha, double* beta, double* gamma);
/* exact weights as rational strings; DLA_ERR_DOMAIN in float mode */
int dla_measure_weights_str(const dla_measure* m, char** alpha, char** beta, char** gamma);

int dla_cylinder_measure(const dla_measure* m, const char* path, double* out);
int dla_cylinder_measure_str(const dla_measure* m, const char* path, char** out);
int dla_sample_path(const dla_measure* m, uint64_t depth, uint64_t seed, char** out);
/* ratios dim(v0,.)/dim(root,.) along the prefixes of path dominating v0 */
int dla_ergodic_ratios(const char* path, uint32_t v0n, uint32_t v0k, double** out,
                       uint64_t* len);
int dla_slope(const dla_measure* m, double* rho);
int dla_predicted_ratio(const dla_measure* m, uint32_t n0, uint32_t k0, double* out);

typedef struct dla_collision_stats {
  uint64_t steps; /* per trial */
  uint64_t trials;
  uint64_t collisions; /* total over trials, indices i >= 1 */
  uint64_t min_trial_collisions;
  uint64_t max_trial_collisions;
  uint64_t zero_collision_trials;
  double mean_dx, mean_dy; /* difference-walk increment mean */
  double se_dx, se_dy;     /* standard errors of the means */
  double mean_final_slope;
} dla_collision_stats;

int dla_collision_experiment(const dla_measure* m, uint64_t steps, uint64_t trials,
                             uint64_t seed, dla_collision_stats* out);

/* ---- congruences ------------------------------------------------------ */

int dla_binom_mod(uint64_t n, uint64_t k, uint32_t p, uint32_t* out);
int dla_delannoy_mod(uint64_t n, uint64_t k, uint32_t p, uint32_t* out);
int dla_delannoy_sign(uint64_t n, uint32_t p, uint32_t r, uint32_t* out);

typedef struct dla_check_report {
  int pass;
  uint64_t cases;
  int has_counterexample;
  uint64_t ce_a, ce_b;
  char range[64];
} dla_check_report;

int dla_check_lemma_alternating(uint32_t p, uint32_t r, dla_check_report* out);
int dla_check_lemma_periodic(uint32_t p, uint32_t r, uint32_t i_max, dla_check_report* out);
int dla_check_lemma_vanish(uint32_t p, uint32_t r, dla_check_report* out);
int dla_check_delannoy_sign(uint32_t p, uint32_t r, uint64_t n_max, dla_check_report* out);

typedef struct dla_blocking_hit {
  uint32_t n, k, residue;
} dla_blocking_hit;

/* prefix vertices of path on the rows/columns p^r-1 (1 <= r <= max_r), each
 * with D mod p; free with dla_hits_free */
int dla_blocking_hits(const char* path, uint32_t p, uint32_t max_r, dla_blocking_hit** out,
                      uint64_t* count);
void dla_hits_free(dla_blocking_hit* hits);

/* ---- dimension group -------------------------------------------------- */

typedef struct dla_polypair dla_polypair;
int dla_polypair_new(const char* r_coeffs, const char* s_coeffs, dla_polypair** out);
void dla_polypair_free(dla_polypair* p);
/* which: 0 for r, 1 for s */
int dla_polypair_coeffs(const dla_polypair* p, int which, char** out);
int dla_polypair_unit(dla_polypair** out);
int dla_apply_b(const dla_polypair* p, dla_polypair** out);
int dla_apply_b_inverse(const dla_polypair* p, dla_polypair** out);
int dla_canonical_form(const dla_polypair* p, dla_polypair** out);
int dla_class_add(const dla_polypair* a, const dla_polypair* b, dla_polypair** out);
int dla_class_equal(const dla_polypair* a, const dla_polypair* b, int* out);
int dla_delannoy_polynomial(uint32_t n, char** out);
/* the 2*level+1 vertex dimensions of a level, comma-separated */
int dla_level_dimensions(uint32_t level, char** out);

/* ---- asymptotics ------------------------------------------------------ */

int dla_delannoy_ln(uint64_t n, uint64_t k, double* out);
int dla_pemantle_wilson_ln(uint64_t n, uint64_t k, double* out);
int dla_diagonal_asymptotic_ln(uint64_t n, double* out);
int dla_theta_functions(double theta, double* a, double* g, double* b);
int dla_entropy_lambda(double epsilon, double* h, double* lambda);
int dla_nicomachus_decay(uint32_t n, uint32_t k, double* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DELANNOY_H */

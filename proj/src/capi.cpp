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

#include "delannoy.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "delannoy/asymptotics.hpp"
#include "delannoy/congruence.hpp"
#include "delannoy/diagram.hpp"
#include "delannoy/dimgroup.hpp"
#include "delannoy/measures.hpp"
#include "delannoy/numbers.hpp"
#include "delannoy/vershik.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int fail(int code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

// Runs fn, translating core exceptions into status codes.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const delannoy::MaximalPathError& e) {
    return fail(DLA_ERR_MAXIMAL_PATH, e.what());
  } catch (const delannoy::MinimalPathError& e) {
    return fail(DLA_ERR_MINIMAL_PATH, e.what());
  } catch (const delannoy::NotDivisibleError& e) {
    return fail(DLA_ERR_NOT_DIVISIBLE, e.what());
  } catch (const delannoy::ResourceLimitError& e) {
    return fail(DLA_ERR_RESOURCE, e.what());
  } catch (const delannoy::PathMismatchError& e) {
    return fail(DLA_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(DLA_ERR_PARSE, e.what());
  } catch (const std::domain_error& e) {
    return fail(DLA_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DLA_ERR_NOMEM, "out of memory");
  } catch (const std::exception& e) {
    return fail(DLA_ERR_INTERNAL, e.what());
  }
}

int put_string(const std::string& s, char** out) {
  if (!out) return fail(DLA_ERR_DOMAIN, "null output pointer");
  *out = dup_string(s);
  return *out ? DLA_OK : fail(DLA_ERR_NOMEM, "out of memory");
}

std::string join_coeffs(const std::vector<delannoy::BigInt>& cs) {
  std::string s;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) s.push_back(',');
    s += cs[i].get_str();
  }
  return s;
}

delannoy::IntPoly parse_poly(const char* text) {
  if (!text) throw std::invalid_argument("null polynomial string");
  const std::string all(text);
  if (all.find_first_not_of(" \t") == std::string::npos) return {};  // zero polynomial
  std::vector<delannoy::BigInt> cs;
  std::string tok;
  std::stringstream in(all);
  while (std::getline(in, tok, ',')) {
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw std::invalid_argument("empty coefficient in polynomial string");
    tok = tok.substr(b, e - b + 1);
    delannoy::BigInt c;
    if (mpz_set_str(c.get_mpz_t(), tok.c_str(), 10) != 0)
      throw std::invalid_argument("bad coefficient '" + tok + "'");
    cs.push_back(std::move(c));
  }
  return delannoy::IntPoly(std::move(cs));
}

struct MeasureWrap {
  delannoy::MeasureParams params;
};

struct PairWrap {
  delannoy::PolyPair pair;
};

struct GridWrap {
  delannoy::GridTable table;
};

}  // namespace

struct dla_measure : MeasureWrap {};
struct dla_polypair : PairWrap {};
struct dla_grid : GridWrap {};

namespace {

void fill_report(const delannoy::VerificationReport& rep, dla_check_report* out) {
  out->pass = rep.pass ? 1 : 0;
  out->cases = rep.cases;
  out->has_counterexample = rep.counterexample.has_value() ? 1 : 0;
  out->ce_a = rep.counterexample ? (*rep.counterexample)[0] : 0;
  out->ce_b = rep.counterexample ? (*rep.counterexample)[1] : 0;
  std::snprintf(out->range, sizeof(out->range), "%s", rep.range.c_str());
}

int wrap_pair(delannoy::PolyPair&& q, dla_polypair** out) {
  if (!out) return fail(DLA_ERR_DOMAIN, "null output pointer");
  auto* p = new dla_polypair;
  p->pair = std::move(q);
  *out = p;
  return DLA_OK;
}

}  // namespace

extern "C" {

const char* dla_version(void) { return "0.1.0"; }

const char* dla_status_name(int status) {
  switch (status) {
    case DLA_OK: return "ok";
    case DLA_ERR_DOMAIN: return "DomainError";
    case DLA_ERR_MAXIMAL_PATH: return "MaximalPath";
    case DLA_ERR_MINIMAL_PATH: return "MinimalPath";
    case DLA_ERR_NOT_DIVISIBLE: return "NotDivisible";
    case DLA_ERR_TRUNCATED: return "TruncationExhausted";
    case DLA_ERR_PARSE: return "ParseError";
    case DLA_ERR_RESOURCE: return "ResourceLimit";
    case DLA_ERR_NOMEM: return "OutOfMemory";
    case DLA_ERR_INTERNAL: return "InternalError";
    default: return "UnknownStatus";
  }
}

const char* dla_last_error(void) { return g_last_error.c_str(); }

void dla_string_free(char* s) { std::free(s); }
void dla_doubles_free(double* p) { std::free(p); }

/* ---- exact counts ---------------------------------------------------- */

int dla_delannoy(uint64_t n, uint64_t k, char** out) {
  return guarded([&] { return put_string(delannoy::delannoy_number(n, k).get_str(), out); });
}

int dla_binomial(uint64_t n, int64_t k, char** out) {
  return guarded([&] { return put_string(delannoy::binomial(n, k).get_str(), out); });
}

int dla_nicomachus(uint64_t n, uint64_t k, char** out) {
  return guarded([&] { return put_string(delannoy::nicomachus_count(n, k).get_str(), out); });
}

int dla_closed_forms(uint64_t n, uint64_t k, char** out6) {
  return guarded([&]() -> int {
    if (!out6) return fail(DLA_ERR_DOMAIN, "null output pointer");
    const auto forms = delannoy::delannoy_closed_forms(n, k);
    for (int i = 0; i < 6; ++i) out6[i] = nullptr;
    for (int i = 0; i < 6; ++i) {
      if (int rc = put_string(forms[static_cast<std::size_t>(i)].get_str(), &out6[i])) {
        for (int j = 0; j < i; ++j) dla_string_free(out6[j]);
        return rc;
      }
    }
    return DLA_OK;
  });
}

int dla_delannoy_table(uint32_t nmax, uint32_t kmax, dla_grid** out) {
  return guarded([&]() -> int {
    if (!out) return fail(DLA_ERR_DOMAIN, "null output pointer");
    auto* g = new dla_grid;
    g->table = delannoy::delannoy_table(nmax, kmax);
    *out = g;
    return DLA_OK;
  });
}

int dla_gf_table(uint32_t nmax, dla_grid** out) {
  return guarded([&]() -> int {
    if (!out) return fail(DLA_ERR_DOMAIN, "null output pointer");
    auto* g = new dla_grid;
    g->table = delannoy::gf_truncation(nmax);
    *out = g;
    return DLA_OK;
  });
}

int dla_grid_size(const dla_grid* g, uint32_t* rows, uint32_t* cols) {
  if (!g || !rows || !cols) return fail(DLA_ERR_DOMAIN, "null argument");
  *rows = static_cast<uint32_t>(g->table.rows);
  *cols = static_cast<uint32_t>(g->table.cols);
  return DLA_OK;
}

int dla_grid_at(const dla_grid* g, uint32_t n, uint32_t k, char** out) {
  return guarded([&]() -> int {
    if (!g) return fail(DLA_ERR_DOMAIN, "null grid");
    if (n >= g->table.rows || k >= g->table.cols)
      return fail(DLA_ERR_DOMAIN, "grid index out of range");
    return put_string(g->table.at(n, k).get_str(), out);
  });
}

void dla_grid_free(dla_grid* g) { delete g; }

/* ---- diagram and adic transformation --------------------------------- */

int dla_min_path(uint32_t n, uint32_t k, char** out) {
  return guarded([&] { return put_string(delannoy::min_path(n, k).to_string(), out); });
}

int dla_max_path(uint32_t n, uint32_t k, char** out) {
  return guarded([&] { return put_string(delannoy::max_path(n, k).to_string(), out); });
}

int dla_path_terminal(const char* path, uint32_t* n, uint32_t* k) {
  return guarded([&]() -> int {
    if (!path || !n || !k) return fail(DLA_ERR_DOMAIN, "null argument");
    const auto t = delannoy::FinitePath::from_string(path).terminal();
    *n = t.n;
    *k = t.k;
    return DLA_OK;
  });
}

int dla_compare_paths(const char* x, const char* y, int* out) {
  return guarded([&]() -> int {
    if (!x || !y || !out) return fail(DLA_ERR_DOMAIN, "null argument");
    const auto c = delannoy::compare_paths(delannoy::FinitePath::from_string(x),
                                           delannoy::FinitePath::from_string(y));
    *out = c < 0 ? -1 : (c > 0 ? 1 : 0);
    return DLA_OK;
  });
}

int dla_dim_between(uint32_t un, uint32_t uk, uint32_t vn, uint32_t vk, char** out) {
  return guarded([&] {
    return put_string(
        delannoy::dim_between(delannoy::regular(un, uk), delannoy::regular(vn, vk)).get_str(),
        out);
  });
}

int dla_successor(const char* path, char** out) {
  return guarded([&]() -> int {
    if (!path) return fail(DLA_ERR_DOMAIN, "null path");
    return put_string(
        delannoy::successor(delannoy::FinitePath::from_string(path)).to_string(), out);
  });
}

int dla_predecessor(const char* path, char** out) {
  return guarded([&]() -> int {
    if (!path) return fail(DLA_ERR_DOMAIN, "null path");
    return put_string(
        delannoy::predecessor(delannoy::FinitePath::from_string(path)).to_string(), out);
  });
}

int dla_coding_sequence(const char* path, uint64_t iterations, char** out_symbols,
                        uint64_t* produced) {
  return guarded([&]() -> int {
    if (!path || !out_symbols || !produced) return fail(DLA_ERR_DOMAIN, "null argument");
    const auto x = delannoy::FinitePath::from_string(path);
    std::vector<delannoy::Move> symbols;
    int code = DLA_OK;
    try {
      symbols = delannoy::coding_sequence(x, iterations);
    } catch (const delannoy::TruncationExhausted& e) {
      symbols = e.produced();
      code = DLA_ERR_TRUNCATED;
      g_last_error = e.what();
    }
    *produced = symbols.size();
    std::string word;
    word.reserve(symbols.size());
    for (auto m : symbols) word.push_back(delannoy::to_char(m));
    if (int rc = put_string(word, out_symbols)) return rc;
    return code;
  });
}

/* ---- invariant measures ----------------------------------------------- */

int dla_measure_from_string(const char* beta, dla_measure** out) {
  return guarded([&]() -> int {
    if (!beta || !out) return fail(DLA_ERR_DOMAIN, "null argument");
    const std::string text(beta);
    if (text.find_first_of(".eE") != std::string::npos) {
      char* end = nullptr;
      const double b = std::strtod(text.c_str(), &end);
      if (!end || *end != '\0') return fail(DLA_ERR_PARSE, "bad decimal beta '" + text + "'");
      *out = new dla_measure{{delannoy::MeasureParams::from_beta(b)}};
      return DLA_OK;
    }
    delannoy::Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0 ||
        mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
      return fail(DLA_ERR_PARSE, "bad rational beta '" + text + "'");
    *out = new dla_measure{{delannoy::MeasureParams::from_beta(q)}};
    return DLA_OK;
  });
}

int dla_measure_from_beta(double beta, dla_measure** out) {
  return guarded([&]() -> int {
    if (!out) return fail(DLA_ERR_DOMAIN, "null argument");
    *out = new dla_measure{{delannoy::MeasureParams::from_beta(beta)}};
    return DLA_OK;
  });
}

void dla_measure_free(dla_measure* m) { delete m; }

int dla_measure_is_exact(const dla_measure* m, int* out) {
  if (!m || !out) return fail(DLA_ERR_DOMAIN, "null argument");
  *out = m->params.exact() ? 1 : 0;
  return DLA_OK;
}

int dla_measure_weights(const dla_measure* m, double* alpha, double* beta, double* gamma) {
  if (!m || !alpha || !beta || !gamma) return fail(DLA_ERR_DOMAIN, "null argument");
  *alpha = m->params.alpha();
  *beta = m->params.beta();
  *gamma = m->params.gamma();
  return DLA_OK;
}

int dla_measure_weights_str(const dla_measure* m, char** alpha, char** beta, char** gamma) {
  return guarded([&]() -> int {
    if (!m || !alpha || !beta || !gamma) return fail(DLA_ERR_DOMAIN, "null argument");
    if (!m->params.exact()) return fail(DLA_ERR_DOMAIN, "measure is not exact");
    if (int rc = put_string(m->params.alpha_exact().get_str(), alpha)) return rc;
    if (int rc = put_string(m->params.beta_exact().get_str(), beta)) {
      dla_string_free(*alpha);
      return rc;
    }
    if (int rc = put_string(m->params.gamma_exact().get_str(), gamma)) {
      dla_string_free(*alpha);
      dla_string_free(*beta);
      return rc;
    }
    return DLA_OK;
  });
}

int dla_cylinder_measure(const dla_measure* m, const char* path, double* out) {
  return guarded([&]() -> int {
    if (!m || !path || !out) return fail(DLA_ERR_DOMAIN, "null argument");
    *out = delannoy::cylinder_measure(m->params, delannoy::FinitePath::from_string(path));
    return DLA_OK;
  });
}

int dla_cylinder_measure_str(const dla_measure* m, const char* path, char** out) {
  return guarded([&]() -> int {
    if (!m || !path) return fail(DLA_ERR_DOMAIN, "null argument");
    if (!m->params.exact()) return fail(DLA_ERR_DOMAIN, "measure is not exact");
    return put_string(
        delannoy::cylinder_measure_exact(m->params, delannoy::FinitePath::from_string(path))
            .get_str(),
        out);
  });
}

int dla_sample_path(const dla_measure* m, uint64_t depth, uint64_t seed, char** out) {
  return guarded([&]() -> int {
    if (!m) return fail(DLA_ERR_DOMAIN, "null measure");
    return put_string(delannoy::sample_path(m->params, depth, seed).to_string(), out);
  });
}

int dla_ergodic_ratios(const char* path, uint32_t v0n, uint32_t v0k, double** out,
                       uint64_t* len) {
  return guarded([&]() -> int {
    if (!path || !out || !len) return fail(DLA_ERR_DOMAIN, "null argument");
    const auto ratios = delannoy::ergodic_ratio(delannoy::FinitePath::from_string(path),
                                                delannoy::regular(v0n, v0k));
    auto* buf = static_cast<double*>(
        std::malloc(sizeof(double) * std::max<std::size_t>(ratios.size(), 1)));
    if (!buf) return fail(DLA_ERR_NOMEM, "out of memory");
    if (!ratios.empty()) std::memcpy(buf, ratios.data(), sizeof(double) * ratios.size());
    *out = buf;
    *len = ratios.size();
    return DLA_OK;
  });
}

int dla_slope(const dla_measure* m, double* rho) {
  return guarded([&]() -> int {
    if (!m || !rho) return fail(DLA_ERR_DOMAIN, "null argument");
    *rho = delannoy::slope_and_limit(m->params).rho;
    return DLA_OK;
  });
}

int dla_predicted_ratio(const dla_measure* m, uint32_t n0, uint32_t k0, double* out) {
  return guarded([&]() -> int {
    if (!m || !out) return fail(DLA_ERR_DOMAIN, "null argument");
    *out = delannoy::slope_and_limit(m->params).predicted_ratio(n0, k0);
    return DLA_OK;
  });
}

int dla_collision_experiment(const dla_measure* m, uint64_t steps, uint64_t trials,
                             uint64_t seed, dla_collision_stats* out) {
  return guarded([&]() -> int {
    if (!m || !out) return fail(DLA_ERR_DOMAIN, "null argument");
    const auto st = delannoy::collision_experiment(m->params, steps, trials, seed);
    out->steps = st.steps;
    out->trials = st.trials;
    out->collisions = st.collisions;
    out->min_trial_collisions = st.min_trial_collisions;
    out->max_trial_collisions = st.max_trial_collisions;
    out->zero_collision_trials = st.zero_collision_trials;
    out->mean_dx = st.mean_increment_x;
    out->mean_dy = st.mean_increment_y;
    out->se_dx = st.se_increment_x;
    out->se_dy = st.se_increment_y;
    out->mean_final_slope = st.mean_final_slope;
    return DLA_OK;
  });
}

/* ---- congruences ------------------------------------------------------ */

int dla_binom_mod(uint64_t n, uint64_t k, uint32_t p, uint32_t* out) {
  return guarded([&]() -> int {
    if (!out) return fail(DLA_ERR_DOMAIN, "null argument");
    *out = delannoy::binom_mod_lucas(n, k, p).value;
    return DLA_OK;
  });
}

int dla_delannoy_mod(uint64_t n, uint64_t k, uint32_t p, uint32_t* out) {
  return guarded([&]() -> int {
    if (!out) return fail(DLA_ERR_DOMAIN, "null argument");
    *out = delannoy::delannoy_mod(n, k, p).value;
    return DLA_OK;
  });
}

int dla_delannoy_sign(uint64_t n, uint32_t p, uint32_t r, uint32_t* out) {
  return guarded([&]() -> int {
    if (!out) return fail(DLA_ERR_DOMAIN, "null argument");
    *out = delannoy::delannoy_sign(n, p, r).value;
    return DLA_OK;
  });
}

int dla_check_lemma_alternating(uint32_t p, uint32_t r, dla_check_report* out) {
  return guarded([&]() -> int {
    if (!out) return fail(DLA_ERR_DOMAIN, "null argument");
    fill_report(delannoy::check_lemma_alternating(p, r), out);
    return DLA_OK;
  });
}

int dla_check_lemma_periodic(uint32_t p, uint32_t r, uint32_t i_max, dla_check_report* out) {
  return guarded([&]() -> int {
    if (!out) return fail(DLA_ERR_DOMAIN, "null argument");
    fill_report(delannoy::check_lemma_periodic(p, r, i_max), out);
    return DLA_OK;
  });
}

int dla_check_lemma_vanish(uint32_t p, uint32_t r, dla_check_report* out) {
  return guarded([&]() -> int {
    if (!out) return fail(DLA_ERR_DOMAIN, "null argument");
    fill_report(delannoy::check_lemma_vanish(p, r), out);
    return DLA_OK;
  });
}

int dla_check_delannoy_sign(uint32_t p, uint32_t r, uint64_t n_max, dla_check_report* out) {
  return guarded([&]() -> int {
    if (!out) return fail(DLA_ERR_DOMAIN, "null argument");
    fill_report(delannoy::check_delannoy_sign(p, r, n_max), out);
    return DLA_OK;
  });
}

int dla_blocking_hits(const char* path, uint32_t p, uint32_t max_r, dla_blocking_hit** out,
                      uint64_t* count) {
  return guarded([&]() -> int {
    if (!path || !out || !count) return fail(DLA_ERR_DOMAIN, "null argument");
    delannoy::BlockingSet set(p, max_r);
    const auto hits = set.hits(delannoy::FinitePath::from_string(path));
    auto* buf = static_cast<dla_blocking_hit*>(
        std::malloc(sizeof(dla_blocking_hit) * std::max<std::size_t>(hits.size(), 1)));
    if (!buf) return fail(DLA_ERR_NOMEM, "out of memory");
    for (std::size_t i = 0; i < hits.size(); ++i)
      buf[i] = {hits[i].first.n, hits[i].first.k, hits[i].second.value};
    *out = buf;
    *count = hits.size();
    return DLA_OK;
  });
}

void dla_hits_free(dla_blocking_hit* hits) { std::free(hits); }

/* ---- dimension group --------------------------------------------------- */

int dla_polypair_new(const char* r_coeffs, const char* s_coeffs, dla_polypair** out) {
  return guarded([&]() -> int {
    if (!out) return fail(DLA_ERR_DOMAIN, "null argument");
    auto* p = new dla_polypair;
    try {
      p->pair = {parse_poly(r_coeffs), parse_poly(s_coeffs)};
    } catch (...) {
      delete p;
      throw;
    }
    *out = p;
    return DLA_OK;
  });
}

void dla_polypair_free(dla_polypair* p) { delete p; }

int dla_polypair_coeffs(const dla_polypair* p, int which, char** out) {
  return guarded([&]() -> int {
    if (!p) return fail(DLA_ERR_DOMAIN, "null pair");
    if (which != 0 && which != 1) return fail(DLA_ERR_DOMAIN, "which must be 0 or 1");
    const auto& poly = which == 0 ? p->pair.r : p->pair.s;
    return put_string(join_coeffs(poly.coeffs()), out);
  });
}

int dla_polypair_unit(dla_polypair** out) {
  return guarded([&] { return wrap_pair(delannoy::unit_class(), out); });
}

int dla_apply_b(const dla_polypair* p, dla_polypair** out) {
  return guarded([&]() -> int {
    if (!p) return fail(DLA_ERR_DOMAIN, "null pair");
    return wrap_pair(delannoy::apply_b(p->pair), out);
  });
}

int dla_apply_b_inverse(const dla_polypair* p, dla_polypair** out) {
  return guarded([&]() -> int {
    if (!p) return fail(DLA_ERR_DOMAIN, "null pair");
    return wrap_pair(delannoy::apply_b_inverse(p->pair), out);
  });
}

int dla_canonical_form(const dla_polypair* p, dla_polypair** out) {
  return guarded([&]() -> int {
    if (!p) return fail(DLA_ERR_DOMAIN, "null pair");
    return wrap_pair(delannoy::canonical_form(p->pair), out);
  });
}

int dla_class_add(const dla_polypair* a, const dla_polypair* b, dla_polypair** out) {
  return guarded([&]() -> int {
    if (!a || !b) return fail(DLA_ERR_DOMAIN, "null pair");
    return wrap_pair(delannoy::class_add(a->pair, b->pair), out);
  });
}

int dla_class_equal(const dla_polypair* a, const dla_polypair* b, int* out) {
  return guarded([&]() -> int {
    if (!a || !b || !out) return fail(DLA_ERR_DOMAIN, "null argument");
    *out = delannoy::class_equal(a->pair, b->pair) ? 1 : 0;
    return DLA_OK;
  });
}

int dla_delannoy_polynomial(uint32_t n, char** out) {
  return guarded(
      [&] { return put_string(join_coeffs(delannoy::delannoy_polynomial(n).coeffs()), out); });
}

int dla_level_dimensions(uint32_t level, char** out) {
  return guarded(
      [&] { return put_string(join_coeffs(delannoy::level_dimensions(level)), out); });
}

/* ---- asymptotics -------------------------------------------------------- */

int dla_delannoy_ln(uint64_t n, uint64_t k, double* out) {
  return guarded([&]() -> int {
    if (!out) return fail(DLA_ERR_DOMAIN, "null argument");
    *out = delannoy::ln_delannoy(n, k);
    return DLA_OK;
  });
}

int dla_pemantle_wilson_ln(uint64_t n, uint64_t k, double* out) {
  return guarded([&]() -> int {
    if (!out) return fail(DLA_ERR_DOMAIN, "null argument");
    *out = delannoy::pemantle_wilson_ln(n, k);
    return DLA_OK;
  });
}

int dla_diagonal_asymptotic_ln(uint64_t n, double* out) {
  return guarded([&]() -> int {
    if (!out) return fail(DLA_ERR_DOMAIN, "null argument");
    *out = delannoy::diagonal_asymptotic_ln(n);
    return DLA_OK;
  });
}

int dla_theta_functions(double theta, double* a, double* g, double* b) {
  return guarded([&]() -> int {
    if (!a || !g || !b) return fail(DLA_ERR_DOMAIN, "null argument");
    const auto f = delannoy::theta_functions(theta);
    *a = f.a;
    *g = f.g;
    *b = f.b;
    return DLA_OK;
  });
}

int dla_entropy_lambda(double epsilon, double* h, double* lambda) {
  return guarded([&]() -> int {
    if (!h || !lambda) return fail(DLA_ERR_DOMAIN, "null argument");
    const auto e = delannoy::entropy_lambda(epsilon);
    *h = e.h;
    *lambda = e.lambda;
    return DLA_OK;
  });
}

int dla_nicomachus_decay(uint32_t n, uint32_t k, double* out) {
  return guarded([&]() -> int {
    if (!out) return fail(DLA_ERR_DOMAIN, "null argument");
    *out = delannoy::nicomachus_decay(n, k);
    return DLA_OK;
  });
}

} /* extern "C" */

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

// delannoy-cli: every experiment of libdelannoy behind deterministic,
// machine-readable output. Talks to the library exclusively through the C
// API in delannoy.h.

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "delannoy.h"

using json = nlohmann::json;  // std::map-backed: keys come out sorted

namespace {

// ---- small plumbing ---------------------------------------------------

struct CStr {
  char* p = nullptr;
  ~CStr() { dla_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct ApiError {
  int code;
};

void check(int rc) {
  if (rc != DLA_OK) throw ApiError{rc};
}

// All floating output is rounded to 12 significant digits first, so repeated
// runs and platforms print identical bytes.
double round12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw CLI::ValidationError("--format", "expected json, csv, or text");
}

std::string default_format(const char* fallback) {
  const char* env = std::getenv("DELANNOY_FORMAT");
  return env && *env ? env : fallback;
}

[[noreturn]] void die_unsupported_csv(const std::string& cmd) {
  std::cerr << json{{"error", "UnsupportedFormat"},
                    {"detail", "csv output is not defined for " + cmd}}
            << "\n";
  std::exit(2);
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

std::vector<std::string> split_csv_field(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = s.find(',', start);
    out.push_back(s.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

json coeff_list(const std::string& csv) {
  json arr = json::array();
  for (const auto& c : split_csv_field(csv)) arr.push_back(c);
  return arr;
}

// ---- measure helpers ---------------------------------------------------

struct Measure {
  dla_measure* m = nullptr;
  ~Measure() { dla_measure_free(m); }
};

void open_measure(const std::string& beta, Measure& out) {
  check(dla_measure_from_string(beta.c_str(), &out.m));
}

json measure_record(const Measure& mm) {
  double a = 0, b = 0, g = 0;
  check(dla_measure_weights(mm.m, &a, &b, &g));
  int exact = 0;
  check(dla_measure_is_exact(mm.m, &exact));
  json j{{"alpha", round12(a)}, {"beta", round12(b)}, {"gamma", round12(g)},
         {"exact", exact == 1}};
  if (exact) {
    CStr sa, sb, sg;
    check(dla_measure_weights_str(mm.m, &sa.p, &sb.p, &sg.p));
    j["alpha_exact"] = sa.str();
    j["beta_exact"] = sb.str();
    j["gamma_exact"] = sg.str();
  }
  return j;
}

// ---- subcommand bodies ---------------------------------------------------

int run_table(std::uint32_t nmax, std::uint32_t kmax, Format fmt, bool gf) {
  dla_grid* g = nullptr;
  if (gf)
    check(dla_gf_table(nmax, &g));
  else
    check(dla_delannoy_table(nmax, kmax, &g));
  uint32_t rows = 0, cols = 0;
  check(dla_grid_size(g, &rows, &cols));
  std::vector<std::vector<std::string>> cells(rows);
  std::size_t width = 0;
  for (uint32_t n = 0; n < rows; ++n) {
    for (uint32_t k = 0; k < cols; ++k) {
      if (gf && n + k > nmax) continue;  // outside the truncation triangle
      CStr s;
      check(dla_grid_at(g, n, k, &s.p));
      cells[n].push_back(s.str());
      width = std::max(width, cells[n].back().size());
    }
  }
  dla_grid_free(g);
  switch (fmt) {
    case Format::Text:
      for (uint32_t n = 0; n < rows; ++n) {
        std::string line;
        for (std::size_t k = 0; k < cells[n].size(); ++k) {
          std::string v = cells[n][k];
          if (k) line.push_back(' ');
          line += std::string(width - v.size(), ' ') + v;
        }
        std::cout << line << "\n";
      }
      break;
    case Format::Csv:
      std::cout << (gf ? "n,k,coefficient\n" : "n,k,delannoy\n");
      for (uint32_t n = 0; n < rows; ++n)
        for (std::size_t k = 0; k < cells[n].size(); ++k)
          std::cout << n << "," << k << "," << cells[n][k] << "\n";
      break;
    case Format::Json: {
      json out{{"nmax", nmax}, {"rows", json::array()}};
      if (!gf) out["kmax"] = kmax;
      out["series"] = gf;
      for (uint32_t n = 0; n < rows; ++n) {
        json row = json::array();
        for (const auto& v : cells[n]) row.push_back(v);
        out["rows"].push_back(row);
      }
      emit(out);
      break;
    }
  }
  return 0;
}

int run_closed_forms(std::uint64_t n, std::uint64_t k, Format fmt) {
  char* forms[6] = {};
  check(dla_closed_forms(n, k, forms));
  std::vector<std::string> vals;
  for (auto*& f : forms) {
    vals.emplace_back(f);
    dla_string_free(f);
  }
  CStr rec;
  check(dla_delannoy(n, k, &rec.p));
  if (fmt == Format::Csv) die_unsupported_csv("closed-forms");
  if (fmt == Format::Text) {
    for (std::size_t i = 0; i < vals.size(); ++i)
      std::cout << "form" << i + 1 << " " << vals[i] << "\n";
    std::cout << "recurrence " << rec.str() << "\n";
    return 0;
  }
  json out{{"n", n}, {"k", k}, {"recurrence", rec.str()}};
  out["forms"] = vals;
  emit(out);
  return 0;
}

int run_orbit(std::uint32_t n, std::uint32_t k, Format fmt) {
  std::vector<std::string> paths;
  CStr first;
  check(dla_min_path(n, k, &first.p));
  paths.push_back(first.str());
  for (;;) {
    CStr next;
    const int rc = dla_successor(paths.back().c_str(), &next.p);
    if (rc == DLA_ERR_MAXIMAL_PATH) break;
    check(rc);
    paths.push_back(next.str());
  }
  switch (fmt) {
    case Format::Text:
      for (const auto& p : paths) std::cout << p << "\n";
      break;
    case Format::Csv:
      std::cout << "index,path\n";
      for (std::size_t i = 0; i < paths.size(); ++i) std::cout << i << "," << paths[i] << "\n";
      break;
    case Format::Json:
      emit(json{{"n", n}, {"k", k}, {"count", paths.size()}, {"paths", paths}});
      break;
  }
  return 0;
}

int run_vershik_step(const std::string& path, bool inverse, Format fmt) {
  CStr out;
  check(inverse ? dla_predecessor(path.c_str(), &out.p) : dla_successor(path.c_str(), &out.p));
  if (fmt == Format::Json)
    emit(json{{"path", path}, {"inverse", inverse}, {"result", out.str()}});
  else
    std::cout << out.str() << "\n";
  return 0;
}

int run_coding(const std::string& path, std::uint64_t iterations, Format fmt) {
  CStr out;
  uint64_t produced = 0;
  const int rc = dla_coding_sequence(path.c_str(), iterations, &out.p, &produced);
  if (rc != DLA_OK && rc != DLA_ERR_TRUNCATED) throw ApiError{rc};
  if (fmt == Format::Json) {
    emit(json{{"path", path},
              {"iterations", iterations},
              {"symbols", out.str()},
              {"produced", produced},
              {"exhausted", rc == DLA_ERR_TRUNCATED}});
  } else {
    std::cout << out.str() << "\n";
  }
  if (rc == DLA_ERR_TRUNCATED) {
    std::cerr << json{{"error", dla_status_name(rc)},
                      {"detail", dla_last_error()},
                      {"produced", produced}}
              << "\n";
    return 1;
  }
  return 0;
}

int run_measure_params(const std::string& beta, Format fmt) {
  Measure mm;
  open_measure(beta, mm);
  const json rec = measure_record(mm);
  if (fmt == Format::Csv) die_unsupported_csv("measure params");
  if (fmt == Format::Text) {
    for (const auto& [key, val] : rec.items())
      std::cout << key << " " << (val.is_string() ? val.get<std::string>() : val.dump())
                << "\n";
    return 0;
  }
  emit(rec);
  return 0;
}

int run_measure_cylinder(const std::string& beta, const std::string& path, Format fmt) {
  Measure mm;
  open_measure(beta, mm);
  int exact = 0;
  check(dla_measure_is_exact(mm.m, &exact));
  double value = 0;
  check(dla_cylinder_measure(mm.m, path.c_str(), &value));
  json rec = measure_record(mm);
  rec["path"] = path;
  rec["measure"] = round12(value);
  if (exact) {
    CStr s;
    check(dla_cylinder_measure_str(mm.m, path.c_str(), &s.p));
    rec["measure_exact"] = s.str();
  }
  if (fmt == Format::Csv) die_unsupported_csv("measure cylinder");
  if (fmt == Format::Text) {
    std::cout << (rec.contains("measure_exact") ? rec["measure_exact"].get<std::string>()
                                                : fmt12(value))
              << "\n";
    return 0;
  }
  emit(rec);
  return 0;
}

int run_measure_ergodic_ratio(const std::string& beta, std::uint32_t v0n, std::uint32_t v0k,
                              std::uint64_t depth, std::uint64_t seed, Format fmt) {
  Measure mm;
  open_measure(beta, mm);
  CStr path;
  check(dla_sample_path(mm.m, depth, seed, &path.p));
  double* ratios = nullptr;
  uint64_t len = 0;
  check(dla_ergodic_ratios(path.p, v0n, v0k, &ratios, &len));
  std::vector<double> rs(ratios, ratios + len);
  dla_doubles_free(ratios);
  double rho = 0, predicted = 0;
  check(dla_slope(mm.m, &rho));
  check(dla_predicted_ratio(mm.m, v0n, v0k, &predicted));
  uint32_t tn = 0, tk = 0;
  check(dla_path_terminal(path.p, &tn, &tk));

  if (fmt == Format::Csv) die_unsupported_csv("measure ergodic-ratio");
  if (fmt == Format::Text) {
    for (double r : rs) std::cout << fmt12(r) << "\n";
    return 0;
  }
  json rec = measure_record(mm);
  rec["seed"] = seed;
  rec["depth"] = depth;
  rec["v0"] = json::array({v0n, v0k});
  rec["terminal"] = json::array({tn, tk});
  rec["rho"] = round12(rho);
  rec["predicted_limit"] = round12(predicted);
  json arr = json::array();
  for (double r : rs) arr.push_back(round12(r));
  rec["ratios"] = arr;
  emit(rec);
  return 0;
}

int run_collide(const std::string& beta, std::uint64_t steps, std::uint64_t trials,
                std::uint64_t seed, Format fmt) {
  Measure mm;
  open_measure(beta, mm);
  dla_collision_stats st{};
  check(dla_collision_experiment(mm.m, steps, trials, seed, &st));
  json rec = measure_record(mm);
  rec["seed"] = seed;
  rec["steps"] = st.steps;
  rec["trials"] = st.trials;
  rec["collisions"] = st.collisions;
  rec["min_trial_collisions"] = st.min_trial_collisions;
  rec["max_trial_collisions"] = st.max_trial_collisions;
  rec["zero_collision_trials"] = st.zero_collision_trials;
  rec["mean_increment"] = json::array({round12(st.mean_dx), round12(st.mean_dy)});
  rec["se_increment"] = json::array({round12(st.se_dx), round12(st.se_dy)});
  rec["mean_final_slope"] = round12(st.mean_final_slope);
  if (fmt == Format::Csv) die_unsupported_csv("collide");
  if (fmt == Format::Text) {
    for (const auto& [key, val] : rec.items())
      std::cout << key << " " << (val.is_string() ? val.get<std::string>() : val.dump())
                << "\n";
    return 0;
  }
  emit(rec);
  return 0;
}

json report_json(const char* lemma, std::uint32_t p, std::uint32_t r,
                 const dla_check_report& rep) {
  json j{{"lemma", lemma},
         {"p", p},
         {"r", r},
         {"range", rep.range},
         {"cases", rep.cases},
         {"status", rep.pass ? "pass" : "fail"}};
  if (rep.has_counterexample)
    j["first_counterexample"] = json::array({rep.ce_a, rep.ce_b});
  else
    j["first_counterexample"] = nullptr;
  return j;
}

int emit_report(const json& j, Format fmt) {
  if (fmt == Format::Csv) die_unsupported_csv("congruence");
  if (fmt == Format::Text) {
    std::cout << j["lemma"].get<std::string>() << " p=" << j["p"] << " r=" << j["r"] << " "
              << j["status"].get<std::string>() << "\n";
    return j["status"] == "pass" ? 0 : 1;
  }
  emit(j);
  return j["status"] == "pass" ? 0 : 1;
}

int run_blocking(const std::string& path, std::uint32_t p, std::uint32_t max_r, Format fmt) {
  dla_blocking_hit* hits = nullptr;
  uint64_t count = 0;
  check(dla_blocking_hits(path.c_str(), p, max_r, &hits, &count));
  json arr = json::array();
  for (uint64_t i = 0; i < count; ++i)
    arr.push_back(json{{"n", hits[i].n}, {"k", hits[i].k}, {"residue", hits[i].residue}});
  dla_hits_free(hits);
  if (fmt == Format::Csv) die_unsupported_csv("congruence blocking");
  if (fmt == Format::Text) {
    for (const auto& h : arr)
      std::cout << h["n"] << " " << h["k"] << " " << h["residue"] << "\n";
    return 0;
  }
  emit(json{{"p", p}, {"max_r", max_r}, {"path", path}, {"hits", arr}});
  return 0;
}

struct PairHandle {
  dla_polypair* p = nullptr;
  ~PairHandle() { dla_polypair_free(p); }
};

json pair_json(const dla_polypair* p) {
  CStr r, s;
  check(dla_polypair_coeffs(p, 0, &r.p));
  check(dla_polypair_coeffs(p, 1, &s.p));
  return json{{"r", coeff_list(r.str())}, {"s", coeff_list(s.str())}};
}

int emit_pair(const json& j, Format fmt) {
  if (fmt == Format::Csv) die_unsupported_csv("dimgroup");
  if (fmt == Format::Text) {
    auto join = [](const json& arr) {
      std::string out;
      for (const auto& c : arr) {
        if (!out.empty()) out.push_back(',');
        out += c.get<std::string>();
      }
      return out;
    };
    std::cout << "r " << join(j["r"]) << "\n" << "s " << join(j["s"]) << "\n";
    return 0;
  }
  emit(j);
  return 0;
}

// ---- asymptotics ---------------------------------------------------------

int run_asym_compare(const std::string& method, std::uint64_t nmax, Format fmt) {
  struct Row {
    std::uint64_t n, k;
    std::string exact;
    double approx_ln, exact_ln;
  };
  std::vector<Row> rows;
  for (std::uint64_t n = 1; n <= nmax; ++n) {
    Row row{n, n, "", 0, 0};
    CStr ex;
    check(dla_delannoy(n, n, &ex.p));
    row.exact = ex.str();
    check(dla_delannoy_ln(n, n, &row.exact_ln));
    if (method == "pw")
      check(dla_pemantle_wilson_ln(n, n, &row.approx_ln));
    else
      check(dla_diagonal_asymptotic_ln(n, &row.approx_ln));
    rows.push_back(row);
  }
  auto rel_error = [](const Row& r) { return std::exp(r.approx_ln - r.exact_ln) - 1.0; };
  if (fmt == Format::Json) {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back(json{{"n", r.n},
                         {"k", r.k},
                         {"exact", r.exact},
                         {"approx_ln", round12(r.approx_ln)},
                         {"rel_error", round12(rel_error(r))}});
    emit(json{{"method", method}, {"rows", arr}});
    return 0;
  }
  // csv (and text, which shares it): n,k,exact,approx,rel_error
  std::cout << "n,k,exact,approx,rel_error\n";
  for (const auto& r : rows)
    std::cout << r.n << "," << r.k << "," << r.exact << "," << fmt12(std::exp(r.approx_ln))
              << "," << fmt12(rel_error(r)) << "\n";
  return 0;
}

int run_asym_decay(std::uint32_t lmax, Format fmt) {
  struct Row {
    std::uint32_t level, n, k;
    double max_ratio;
  };
  std::vector<Row> rows;
  for (std::uint32_t level = 0; level <= lmax; ++level) {
    Row row{level, 0, level, 0};
    for (std::uint32_t n = 0; n <= level; ++n) {
      double d = 0;
      check(dla_nicomachus_decay(n, level - n, &d));
      if (d > row.max_ratio) {
        row.max_ratio = d;
        row.n = n;
        row.k = level - n;
      }
    }
    rows.push_back(row);
  }
  if (fmt == Format::Json) {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back(json{{"level", r.level},
                         {"n", r.n},
                         {"k", r.k},
                         {"max_ratio", round12(r.max_ratio)}});
    emit(json{{"lmax", lmax}, {"rows", arr}});
    return 0;
  }
  std::cout << "level,n,k,max_ratio\n";
  for (const auto& r : rows)
    std::cout << r.level << "," << r.n << "," << r.k << "," << fmt12(r.max_ratio) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delannoy adic dynamical system toolkit"};
  app.set_version_flag("--version", dla_version());
  app.require_subcommand(1);

  std::string format;
  app.add_option("--format", format, "output format: json, csv, or text")->capture_default_str();

  // table ------------------------------------------------------------------
  auto* table = app.add_subcommand("table", "exact Delannoy number grid");
  std::uint32_t t_nmax = 8, t_kmax = 0;
  table->add_option("--nmax", t_nmax, "largest n (and default largest k)")->required();
  auto* t_kmax_opt = table->add_option("--kmax", t_kmax, "largest k");

  // closed-forms -------------------------------------------------------------
  auto* forms = app.add_subcommand("closed-forms", "six closed-form evaluations of D(n,k)");
  std::uint64_t cf_n = 0, cf_k = 0;
  forms->add_option("--n", cf_n)->required();
  forms->add_option("--k", cf_k)->required();

  // gf ----------------------------------------------------------------------
  auto* gf = app.add_subcommand("gf", "coefficients of 1/(1-(x+y+xy)), truncated");
  std::uint32_t gf_nmax = 8;
  gf->add_option("--nmax", gf_nmax, "truncation total degree")->required();

  // orbit ---------------------------------------------------------------
  auto* orbit = app.add_subcommand("orbit", "all paths to (n,k) in transformation order");
  std::uint32_t o_n = 0, o_k = 0;
  orbit->add_option("--n", o_n)->required();
  orbit->add_option("--k", o_k)->required();

  // vershik-step ---------------------------------------------------------
  auto* step = app.add_subcommand("vershik-step", "successor (or predecessor) of a path");
  std::string vs_path;
  bool vs_inverse = false;
  step->add_option("--path", vs_path, "path word over {h,d,v}")->required();
  step->add_flag("--inverse", vs_inverse, "apply the inverse transformation");

  // coding ---------------------------------------------------------------
  auto* coding = app.add_subcommand("coding", "coding symbols e1(T^i x)");
  std::string cd_path;
  std::uint64_t cd_iters = 1;
  coding->add_option("--path", cd_path)->required();
  coding->add_option("--iterations", cd_iters)->required();

  // measure -----------------------------------------------------------------
  auto* measure = app.add_subcommand("measure", "invariant-measure computations");
  measure->require_subcommand(1);
  std::string m_beta = "1/2";
  measure->add_option("--beta", m_beta,
                      "horizontal weight; num/den stays exact, decimals go float");
  auto* m_params = measure->add_subcommand("params", "solved weights (alpha, beta, gamma)");
  auto* m_cyl = measure->add_subcommand("cylinder", "measure of a cylinder set");
  std::string m_path;
  m_cyl->add_option("--path", m_path)->required();
  auto* m_erg = measure->add_subcommand("ergodic-ratio",
                                        "dimension ratios along a sampled path");
  std::uint32_t m_v0n = 0, m_v0k = 0;
  std::uint64_t m_depth = 1000, m_seed = 0;
  m_erg->add_option("--v0n", m_v0n, "base vertex n")->required();
  m_erg->add_option("--v0k", m_v0k, "base vertex k")->required();
  m_erg->add_option("--depth", m_depth);
  m_erg->add_option("--seed", m_seed);

  // collide -------------------------------------------------------------
  auto* collide = app.add_subcommand("collide", "two-walker collision experiment");
  std::string c_beta = "1/2";
  std::uint64_t c_steps = 10000, c_trials = 10, c_seed = 0;
  collide->add_option("--beta", c_beta);
  collide->add_option("--steps", c_steps);
  collide->add_option("--trials", c_trials);
  collide->add_option("--seed", c_seed);

  // congruence -----------------------------------------------------------
  auto* cong = app.add_subcommand("congruence", "mod-p verification sweeps");
  cong->require_subcommand(1);
  std::uint32_t g_p = 3, g_r = 1, g_imax = 8, g_maxr = 3;
  std::uint64_t g_nmax = 100;
  std::string g_path;
  auto* alternating = cong->add_subcommand("alternating", "C(p^r-1, j) = (-1)^j mod p");
  alternating->add_option("--p", g_p)->required();
  alternating->add_option("--r", g_r)->required();
  auto* periodic = cong->add_subcommand("periodic", "C(j+i p^r, p^r-1) is i-periodic mod p");
  periodic->add_option("--p", g_p)->required();
  periodic->add_option("--r", g_r)->required();
  periodic->add_option("--imax", g_imax);
  auto* vanishing = cong->add_subcommand("vanishing", "C(p^r-1+j, p^r-1) = 0 mod p");
  vanishing->add_option("--p", g_p)->required();
  vanishing->add_option("--r", g_r)->required();
  auto* sign = cong->add_subcommand("sign", "D(n, p^r-1) = (-1)^(n mod p^r) mod p");
  sign->add_option("--p", g_p)->required();
  sign->add_option("--r", g_r)->required();
  sign->add_option("--nmax", g_nmax);
  auto* blocking = cong->add_subcommand("blocking", "blocking-set hits along a path");
  blocking->add_option("--path", g_path)->required();
  blocking->add_option("--p", g_p)->required();
  blocking->add_option("--max-r", g_maxr);

  // dimgroup ----------------------------------------------------------------
  auto* dim = app.add_subcommand("dimgroup", "dimension-group calculus");
  dim->require_subcommand(1);
  std::string d_r1, d_s1, d_r2, d_s2;
  std::uint32_t d_n = 0, d_level = 0;
  auto* d_unit = dim->add_subcommand("unit", "the order-unit pair (1, x+1)");
  auto* d_reduce = dim->add_subcommand("reduce", "canonical (smallest-degree) representative");
  d_reduce->add_option("--r", d_r1, "r coefficients, low degree first")->required();
  d_reduce->add_option("--s", d_s1, "s coefficients, low degree first")->required();
  auto* d_add = dim->add_subcommand("add", "sum of two classes");
  d_add->add_option("--r1", d_r1)->required();
  d_add->add_option("--s1", d_s1)->required();
  d_add->add_option("--r2", d_r2)->required();
  d_add->add_option("--s2", d_s2)->required();
  auto* d_equal = dim->add_subcommand("equal", "same class?");
  d_equal->add_option("--r1", d_r1)->required();
  d_equal->add_option("--s1", d_s1)->required();
  d_equal->add_option("--r2", d_r2)->required();
  d_equal->add_option("--s2", d_s2)->required();
  auto* d_poly = dim->add_subcommand("polynomial", "Delannoy polynomial P_n");
  d_poly->add_option("--n", d_n)->required();
  auto* d_levels = dim->add_subcommand("levels", "vertex dimensions of a level");
  d_levels->add_option("--level", d_level)->required();

  // asymptotics ---------------------------------------------------------
  auto* asym = app.add_subcommand("asymptotics", "asymptotic formulas vs exact counts");
  asym->require_subcommand(1);
  auto* a_cmp = asym->add_subcommand("compare", "diagonal approximation error table");
  std::string a_method = "pw";
  std::uint64_t a_nmax = 16;
  a_cmp->add_option("--method", a_method, "pw (saddle point) or eq4 (three-term series)")
      ->check(CLI::IsMember({"pw", "eq4"}));
  a_cmp->add_option("--nmax", a_nmax);
  auto* a_decay = asym->add_subcommand("nicomachus-decay", "per-level maxima of D/(2^n 3^k)");
  std::uint32_t a_lmax = 20;
  a_decay->add_option("--lmax", a_lmax);

  // parent options (--format) may trail the subcommand name
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (auto* s : a->get_subcommands([](const CLI::App*) { return true; })) {
      s->fallthrough();
      enable_fallthrough(s);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << json{{"error", "FlagError"}, {"detail", e.what()}} << "\n";
    return 2;
  }

  try {
    if (*table) {
      const Format f = parse_format(format.empty() ? default_format("text") : format);
      return run_table(t_nmax, t_kmax_opt->count() ? t_kmax : t_nmax, f, false);
    }
    if (*forms) {
      const Format f = parse_format(format.empty() ? default_format("json") : format);
      return run_closed_forms(cf_n, cf_k, f);
    }
    if (*gf) {
      const Format f = parse_format(format.empty() ? default_format("text") : format);
      return run_table(gf_nmax, gf_nmax, f, true);
    }
    if (*orbit) {
      const Format f = parse_format(format.empty() ? default_format("text") : format);
      return run_orbit(o_n, o_k, f);
    }
    if (*step) {
      const Format f = parse_format(format.empty() ? default_format("text") : format);
      return run_vershik_step(vs_path, vs_inverse, f);
    }
    if (*coding) {
      const Format f = parse_format(format.empty() ? default_format("text") : format);
      return run_coding(cd_path, cd_iters, f);
    }
    if (*measure) {
      const Format f = parse_format(format.empty() ? default_format("json") : format);
      if (*m_params) return run_measure_params(m_beta, f);
      if (*m_cyl) return run_measure_cylinder(m_beta, m_path, f);
      return run_measure_ergodic_ratio(m_beta, m_v0n, m_v0k, m_depth, m_seed, f);
    }
    if (*collide) {
      const Format f = parse_format(format.empty() ? default_format("json") : format);
      return run_collide(c_beta, c_steps, c_trials, c_seed, f);
    }
    if (*cong) {
      const Format f = parse_format(format.empty() ? default_format("json") : format);
      dla_check_report rep{};
      if (*alternating) {
        check(dla_check_lemma_alternating(g_p, g_r, &rep));
        return emit_report(report_json("alternating", g_p, g_r, rep), f);
      }
      if (*periodic) {
        check(dla_check_lemma_periodic(g_p, g_r, g_imax, &rep));
        return emit_report(report_json("periodic", g_p, g_r, rep), f);
      }
      if (*vanishing) {
        check(dla_check_lemma_vanish(g_p, g_r, &rep));
        return emit_report(report_json("vanishing", g_p, g_r, rep), f);
      }
      if (*sign) {
        check(dla_check_delannoy_sign(g_p, g_r, g_nmax, &rep));
        return emit_report(report_json("sign", g_p, g_r, rep), f);
      }
      return run_blocking(g_path, g_p, g_maxr, f);
    }
    if (*dim) {
      const Format f = parse_format(format.empty() ? default_format("json") : format);
      if (*d_unit) {
        PairHandle u;
        check(dla_polypair_unit(&u.p));
        return emit_pair(pair_json(u.p), f);
      }
      if (*d_reduce) {
        PairHandle in, out;
        check(dla_polypair_new(d_r1.c_str(), d_s1.c_str(), &in.p));
        check(dla_canonical_form(in.p, &out.p));
        return emit_pair(pair_json(out.p), f);
      }
      if (*d_add) {
        PairHandle a, b, out;
        check(dla_polypair_new(d_r1.c_str(), d_s1.c_str(), &a.p));
        check(dla_polypair_new(d_r2.c_str(), d_s2.c_str(), &b.p));
        check(dla_class_add(a.p, b.p, &out.p));
        return emit_pair(pair_json(out.p), f);
      }
      if (*d_equal) {
        PairHandle a, b;
        check(dla_polypair_new(d_r1.c_str(), d_s1.c_str(), &a.p));
        check(dla_polypair_new(d_r2.c_str(), d_s2.c_str(), &b.p));
        int eq = 0;
        check(dla_class_equal(a.p, b.p, &eq));
        if (f == Format::Text)
          std::cout << (eq ? "equal" : "different") << "\n";
        else if (f == Format::Json)
          emit(json{{"equal", eq == 1}});
        else
          die_unsupported_csv("dimgroup equal");
        return 0;
      }
      if (*d_poly) {
        CStr s;
        check(dla_delannoy_polynomial(d_n, &s.p));
        if (f == Format::Text)
          std::cout << s.str() << "\n";
        else if (f == Format::Json)
          emit(json{{"n", d_n}, {"coefficients", coeff_list(s.str())}});
        else
          die_unsupported_csv("dimgroup polynomial");
        return 0;
      }
      // levels
      CStr s;
      check(dla_level_dimensions(d_level, &s.p));
      if (f == Format::Text)
        std::cout << s.str() << "\n";
      else if (f == Format::Json)
        emit(json{{"level", d_level}, {"entries", coeff_list(s.str())}});
      else
        die_unsupported_csv("dimgroup levels");
      return 0;
    }
    if (*asym) {
      const Format f = parse_format(format.empty() ? default_format("csv") : format);
      if (*a_cmp) return run_asym_compare(a_method, a_nmax, f);
      return run_asym_decay(a_lmax, f);
    }
  } catch (const ApiError& e) {
    std::cerr << json{{"error", dla_status_name(e.code)}, {"detail", dla_last_error()}}
              << "\n";
    return 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << json{{"error", "FlagError"}, {"detail", e.what()}} << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "InternalError"}, {"detail", e.what()}} << "\n";
    return 1;
  }
  return 0;
}

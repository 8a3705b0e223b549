#include "qrm/reports.hpp"

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "qrm/derive_j.hpp"
#include "qrm/elliptic.hpp"
#include "qrm/juddian.hpp"
#include "qrm/symmetry_poly.hpp"

namespace fs = std::filesystem;

namespace qrm {

void validate(const RunConfig& c) {
  auto need = [](bool ok, const std::string& what) {
    if (!ok) throw UsageError(what);
  };
  need(c.census_tol > 0 && c.residual_tol > 0 && c.stability_tol > 0 && c.action_tol > 0, "tolerances must be positive");
  need(c.g_step > 0, "g step must be positive");
  need(c.g_lo >= 0 && c.g_lo <= c.g_hi, "g grid must be ascending and nonnegative");
  need(c.x_lo < c.x_hi && c.x_steps > 0, "x grid must be ascending");
  need(c.n_lo >= 0 && c.n_lo <= c.n_hi, "N range must be ascending");
  need(c.n_max >= 1 && c.ell_max >= 0, "N and l bounds must be nonnegative");
  need(c.t_lo <= c.t_hi, "T range must be ascending");
  need(c.dim_fock >= 4 && c.n_levels >= 1 && 2 * c.n_levels <= c.dim_fock, "need 1 <= n_levels <= dim_fock / 2");
  need(!c.ells.empty() && !c.deltas.empty(), "empty l or Delta list");
  for (int l : c.ells) need(l >= 0 && l <= 12, "l must lie in 0..12");
  for (double d : c.deltas) need(d > 0, "Delta must be positive");
}

std::vector<double> g_grid(const RunConfig& c) {
  std::vector<double> g;
  const long steps = std::lround(std::floor((c.g_hi - c.g_lo) / c.g_step + 1e-9));
  for (long k = 0; k <= steps; ++k) g.push_back(c.g_lo + k * c.g_step);
  return g;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_text(const std::string& path, const std::string& text) {
  std::error_code ec;
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path(), ec);
  if (ec) throw IoError(path + ": " + ec.message());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path + ": cannot open for writing");
  out << text;
  out.close();
  if (!out) throw IoError(path + ": write failed");
}

void write_json(const std::string& path, const Json& j) { write_text(path, j.dump(2) + "\n"); }

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& v) {
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
  write_text(path, os.str());
}

Json config_json(const RunConfig& c) {
  return Json{{"ells", c.ells},
              {"ell_max", c.ell_max},
              {"n_max", c.n_max},
              {"n_lo", c.n_lo},
              {"n_hi", c.n_hi},
              {"deltas", c.deltas},
              {"g_lo", c.g_lo},
              {"g_hi", c.g_hi},
              {"g_step", c.g_step},
              {"dim_fock", c.dim_fock},
              {"n_levels", c.n_levels},
              {"census_tol", c.census_tol},
              {"residual_tol", c.residual_tol},
              {"stability_tol", c.stability_tol},
              {"action_tol", c.action_tol},
              {"seed", c.seed},
              {"fault_injection", !c.p3_override.empty()}};
}

Json operator_json(const Mat2Weyl& m) {
  Json out = Json::array();
  for (int k = 0; k < 4; ++k) {
    Json terms = Json::array();
    for (const auto& [key, c] : m.e[k].terms())
      terms.push_back({{"P", key.e}, {"ad", key.m}, {"a", key.n}, {"coeff", c.str()}});
    out.push_back({{"row", k / 2}, {"col", k % 2}, {"terms", terms}});
  }
  return out;
}

Json sweep_json(const SpectralSweep& s) {
  Json cr = Json::array();
  for (const auto& x : s.crossings)
    cr.push_back({{"g", x.g},
                  {"lambda", x.lambda},
                  {"level", x.level},
                  {"N", x.N},
                  {"type", x.type},
                  {"mu_lo", x.mu_lo},
                  {"mu_hi", x.mu_hi},
                  {"mu_sum", x.mu_sum},
                  {"gap", x.gap}});
  Json av = Json::array();
  for (const auto& a : s.avoided) av.push_back({{"g", a.g}, {"level", a.level}, {"gap", a.gap}});
  Json amb = Json::array();
  for (const auto& a : s.ambiguities) amb.push_back({{"g", a.g}, {"level", a.level}, {"mu", a.mu}});
  double worst = 0;
  for (const auto& sp : s.spectra)
    for (const auto& x : sp.samples) worst = std::max(worst, x.residual);
  return Json{{"ell", s.ell},
              {"delta", s.delta},
              {"n_levels", s.n_levels},
              {"dim_fock", s.dim_fock},
              {"grid_points", s.g_grid.size()},
              {"max_residual", worst},
              {"crossings", cr},
              {"avoided", av},
              {"sign_ambiguities", amb}};
}

namespace {

std::string out_path(const RunConfig& c, const std::string& name) { return (fs::path(c.out_dir) / name).string(); }

std::string tag(int ell, double delta) {
  std::ostringstream os;
  os << "l" << ell << "_d" << delta;
  return os.str();
}

struct CheckList {
  Json items = Json::array();
  std::string first_failure;
  void add(const std::string& name, bool ok, const std::string& detail = "") {
    items.push_back({{"name", name}, {"ok", ok}, {"detail", detail}});
    if (!ok && first_failure.empty()) first_failure = name;
  }
};

CommandResult finish(const RunConfig& c, const std::string& command, Json body, const std::string& first_failure,
                     std::vector<std::string> files) {
  CommandResult r;
  r.exit_code = first_failure.empty() ? 0 : 1;
  r.first_failure = first_failure;
  r.report = Json{{"command", command}, {"config", config_json(c)}};
  for (auto& [k, v] : body.items()) r.report[k] = v;
  r.report["status"] = first_failure.empty() ? "pass" : "fail";
  r.report["first_failure"] = first_failure;
  std::string path = out_path(c, command + ".json");
  write_json(path, r.report);
  files.insert(files.begin(), path);
  r.files = files;
  return r;
}

std::string ell_name(const std::string& what, int ell) { return what + " ℓ=" + std::to_string(ell); }

}  // namespace

CommandResult cmd_verify_all(const RunConfig& c) {
  validate(c);
  CheckList checks;

  // divisibility of the matched constraint polynomials
  std::vector<std::pair<int, int>> jobs;
  for (int ell = 0; ell <= c.ell_max; ++ell)
    for (int N = 1; N <= c.n_max; ++N) jobs.emplace_back(N, ell);
  std::vector<DivisibilityReport> div(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < static_cast<long>(jobs.size()); ++k) div[k] = verify_divisibility(jobs[k].first, jobs[k].second);
  Json divj = Json::array();
  for (const auto& d : div) {
    divj.push_back({{"N", d.N}, {"ell", d.ell}, {"remainder_zero", d.remainder_zero}, {"quotient_matches", d.quotient_matches}});
    checks.add("divisibility N=" + std::to_string(d.N) + " ℓ=" + std::to_string(d.ell), d.ok());
  }

  const int lt = std::min(6, c.ell_max);
  std::vector<MultiPoly> ptab;
  for (int ell = 0; ell <= lt; ++ell) {
    ptab.push_back(ell == 3 && !c.p3_override.empty() ? p_from_text(3, c.p3_override).poly : p_from_table(ell).poly);
    bool same = ptab.back() == p_from_determinant(ell).poly;
    checks.add(ell_name("table_vs_determinant", ell), same);
  }
  for (int ell = 0; ell <= lt; ++ell) {
    VerifyResult com = verify_commutation(ell);
    checks.add(ell_name("commutation", ell), com.ok, com.first_nonzero);
    VerifyResult sq = verify_square_of(build_J(ell), ell, ptab[ell]);
    checks.add(ell_name("square", ell), sq.ok, sq.first_nonzero);
  }
  for (int ell = 0; ell <= lt; ++ell) {
    ConjectureReport cr = check_conjecture_with(ptab[ell], ell, 0, c.n_max, PSource::AppendixTable);
    std::string detail;
    for (int n : cr.mismatch_plus) detail += "+N=" + std::to_string(n) + " ";
    for (int n : cr.mismatch_minus) detail += "-N=" + std::to_string(n) + " ";
    checks.add(ell_name("baseline_conjecture", ell), cr.ok(), detail);
  }
  return finish(c, "verify_all", Json{{"divisibility", divj}, {"checks", checks.items}}, checks.first_failure, {});
}

CommandResult cmd_sweep(const RunConfig& c) {
  validate(c);
  auto grid = g_grid(c);
  Json sweeps = Json::array();
  std::vector<std::string> files;
  std::string fail;
  for (int ell : c.ells)
    for (double d : c.deltas) {
      SpectralSweep s = sweep(ell, d, grid, c.n_levels, c.dim_fock, c.check_convergence);
      std::vector<std::vector<std::string>> rows;
      for (size_t k = 0; k < s.g_grid.size(); ++k)
        for (int i = 0; i < c.n_levels; ++i) {
          const auto& x = s.spectra[k].samples[i];
          rows.push_back({fmt(s.g_grid[k]), std::to_string(i), fmt(x.lambda), fmt(x.mu), fmt(x.p), fmt(x.residual),
                          std::to_string(s.tracked_signs[k][i]), x.converged ? "1" : "0"});
        }
      std::string path = out_path(c, "spectrum_" + tag(ell, d) + ".csv");
      write_csv(path, {"g", "level", "lambda", "mu", "p", "residual", "sign", "converged"}, rows);
      files.push_back(path);
      Json j = sweep_json(s);
      j["csv"] = fs::path(path).filename().string();
      if (j["max_residual"].get<double>() > c.residual_tol && fail.empty()) fail = ell_name("residual", ell);
      sweeps.push_back(j);
    }
  return finish(c, "sweep", Json{{"sweeps", sweeps}}, fail, files);
}

CommandResult cmd_surface(const RunConfig& c) {
  validate(c);
  auto grid = g_grid(c);
  Json surf = Json::array();
  std::vector<std::string> files;
  for (int ell : c.ells)
    for (double d : c.deltas) {
      SpectralSweep s;
      if (c.overlay) s = sweep(ell, d, grid, c.n_levels, c.dim_fock);
      auto pts = surface_samples(ell, d, grid, c.x_lo, c.x_hi, c.x_steps, c.overlay ? &s : nullptr);
      std::vector<std::vector<std::string>> rows;
      std::set<double> ys;
      for (const auto& p : pts) {
        rows.push_back({fmt(p.x), fmt(p.y), fmt(p.g), p.spectral ? "1" : "0"});
        if (!p.spectral) ys.insert(p.y);
      }
      std::string path = out_path(c, "surface_" + tag(ell, d) + ".csv");
      write_csv(path, {"x", "y", "g", "spectral"}, rows);
      files.push_back(path);
      Json j{{"ell", ell}, {"delta", d}, {"points", pts.size()}, {"csv", fs::path(path).filename().string()}};
      // a surface independent of x and g shows up as a few constant-y planes
      if (ys.size() <= 4) j["constant_y_planes"] = std::vector<double>(ys.begin(), ys.end());
      surf.push_back(j);
    }
  return finish(c, "surface", Json{{"surfaces", surf}}, "", files);
}

CommandResult cmd_elliptic(const RunConfig& c) {
  validate(c);
  CheckList checks;
  WeierstrassCurve w = reduce_ell3();
  checks.add("weierstrass_identities", w.consistent);
  Json weier{{"a2", w.a2.str()}, {"a4", w.a4.str()}, {"a6", w.a6.str()}, {"c4", w.c4.str()},
             {"c6", w.c6.str()}, {"disc", w.disc.str()}, {"A", w.A.str()},   {"B", w.B.str()}};

  // nodal fiber
  MultiPoly p3 = p_poly(3).specialize("g", rat(1, 2)).specialize("Delta", rat(1, 4)).drop_unused_vars();
  MultiPoly x = MultiPoly::variable("x", {"x"});
  MultiPoly node = (x + MultiPoly({"x"}, rat(29, 16))) * (x + MultiPoly({"x"}, rat(5, 16))).pow(2);
  bool nodal = p3.embed({"x"}) == node && reduce_ell3(rat(1, 2), rat(1, 4)).disc.is_zero();
  checks.add("nodal_fiber", nodal);

  Json fibers = Json::array();
  for (double d : c.deltas) {
    FiberReport fr = singular_fibers(d);
    Json roots = Json::array();
    bool all_i1 = true;
    for (const auto& f : fr.fibers) {
      roots.push_back({{"re", f.g.real()}, {"im", f.g.imag()}, {"kodaira", f.kodaira}, {"residual", f.residual}});
      all_i1 = all_i1 && f.kodaira == "I1";
    }
    fibers.push_back({{"delta", d}, {"roots", roots}, {"distinct_g", fr.distinct_g}, {"distinct_A", fr.distinct_A}});
    checks.add("singular_fibers Delta=" + fmt(d), all_i1 && fr.fibers.size() <= 12);
  }

  bool disc_ok = true;
  for (long t = c.t_lo; t <= c.t_hi; ++t) {
    if (t == 12 || t == -6 || t == -24) continue;
    ETCurve e = et_curve(BigRational(t));
    disc_ok = disc_ok && e.disc == e.disc_formula;
  }
  checks.add("et_discriminant", disc_ok);

  struct Listed {
    const char* name;
    IntCurve curve;
    long p;
  };
  const Listed listed[] = {{"x^3 - x mod 3", {0, -1, 0}, 3}, {"x^3 + x mod 5", {0, 1, 0}, 5}, {"x^3 - x^2 + 3x mod 5", {-1, 3, 0}, 5}};
  Json red = Json::array();
  for (const auto& l : listed) {
    long n = count_points_mod_p(l.curve, l.p);
    red.push_back({{"curve", l.name}, {"p", l.p}, {"points", n}});
    checks.add(std::string("point_count ") + l.name, n == 4);
  }
  Json tors = Json::array();
  for (const auto& t : torsion_check(c.t_lo, c.t_hi)) {
    Json counts = Json::object();
    for (auto [p, n] : t.counts) counts[std::to_string(p)] = n;
    tors.push_back({{"T", t.T}, {"counts", counts}, {"bad_primes", t.bad_primes}, {"verdict", t.verdict}});
  }
  Json body{{"weierstrass", weier}, {"singular_fibers", fibers}, {"reductions", red}, {"torsion", tors},
            {"checks", checks.items}};
  return finish(c, "elliptic", body, checks.first_failure, {});
}

CommandResult cmd_omega(const RunConfig& c) {
  validate(c);
  auto grid = g_grid(c);
  Json curves = Json::array();
  std::vector<std::string> files;
  for (int ell : c.ells) {
    std::vector<std::vector<std::string>> rows;
    for (int N = std::max(1, c.n_lo); N <= c.n_hi; ++N) {
      auto pts = omega_curve_samples(N, ell, grid);
      std::map<double, int> per_g;
      for (double g : grid) per_g[g] = 0;
      for (const auto& p : pts) {
        rows.push_back({std::to_string(N), fmt(p.g), fmt(p.delta)});
        per_g[p.g]++;
      }
      // how many grid columns meet the locus in k points
      std::map<int, int> hist;
      for (auto [g, k] : per_g) hist[k]++;
      Json counts = Json::object();
      for (auto [k, n] : hist) counts[std::to_string(k)] = n;
      curves.push_back({{"ell", ell}, {"N", N}, {"points", pts.size()}, {"points_per_g_histogram", counts}});
    }
    std::string path = out_path(c, "omega_l" + std::to_string(ell) + ".csv");
    write_csv(path, {"N", "g", "delta"}, rows);
    files.push_back(path);
  }
  return finish(c, "omega", Json{{"curves", curves}}, "", files);
}

CommandResult cmd_derive_j(const RunConfig& c) {
  validate(c);
  Json ops = Json::array();
  std::string fail;
  for (int ell : c.ells) {
    DerivedJ d = derive_J(ell, c.seed);
    Json j{{"ell", ell},
           {"seed", d.seed},
           {"normalization", "beta coefficient of a^l fixed to (-2g)^l"},
           {"sample_points", d.sample_points},
           {"unknowns", d.unknowns},
           {"commutes", d.commutes},
           {"squares", d.squares},
           {"diagnosis", d.diagnosis}};
    if (ell <= 6) {
      auto r = scalar_ratio(d.j, build_J(ell));
      j["ratio_to_table"] = r ? to_string(*r) : "not proportional";
    }
    j["operator"] = operator_json(d.j);
    if ((!d.commutes || !d.squares) && fail.empty()) fail = ell_name("derive_J", ell);
    ops.push_back(j);
  }
  return finish(c, "derive_j", Json{{"operators", ops}}, fail, {});
}

CommandResult cmd_juddian(const RunConfig& c) {
  validate(c);
  Json pts = Json::array();
  std::string fail;
  for (int ell : c.ells) {
    if (ell > 6) throw UsageError("juddian: l <= 6");
    for (double d : c.deltas)
      for (int N = std::max(1, c.n_lo); N <= c.n_hi; ++N)
        for (double g : juddian_g_values(N, ell, from_double(d))) {
          ActionConstants a = action_constants(N, ell, g, d, c.action_tol);
          ParitySolutions ps = parity_solutions(N, ell, g, d);
          bool ok = a.product_rel_error < c.action_tol && a.residual_alpha < c.action_tol && a.residual_beta < c.action_tol;
          pts.push_back({{"ell", ell},
                         {"delta", d},
                         {"N", N},
                         {"g", g},
                         {"lambda", N + ell / 2.0 - g * g},
                         {"alpha", static_cast<double>(a.alpha)},
                         {"beta", static_cast<double>(a.beta)},
                         {"p", static_cast<double>(a.p_value)},
                         {"product_rel_error", static_cast<double>(a.product_rel_error)},
                         {"mu", static_cast<double>(ps.mu)},
                         {"parity_residual_plus", static_cast<double>(ps.residual_plus)},
                         {"parity_residual_minus", static_cast<double>(ps.residual_minus)},
                         {"ok", ok}});
          if (!ok && fail.empty()) fail = ell_name("juddian N=" + std::to_string(N), ell);
        }
  }
  return finish(c, "juddian", Json{{"points", pts}}, fail, {});
}

// schema subset

namespace {
bool type_ok(const Json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "boolean") return v.is_boolean();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "null") return v.is_null();
  return false;
}
}  // namespace

std::vector<std::string> schema_errors(const Json& doc, const Json& schema, const std::string& where) {
  std::vector<std::string> errs;
  if (schema.contains("type")) {
    bool ok = false;
    if (schema["type"].is_array()) {
      for (const auto& t : schema["type"]) ok = ok || type_ok(doc, t.get<std::string>());
    } else {
      ok = type_ok(doc, schema["type"].get<std::string>());
    }
    if (!ok) return {where + ": wrong type"};
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& e : schema["enum"]) ok = ok || e == doc;
    if (!ok) errs.push_back(where + ": not in enum");
  }
  if (doc.is_number()) {
    if (schema.contains("minimum") && doc.get<double>() < schema["minimum"].get<double>()) errs.push_back(where + ": below minimum");
    if (schema.contains("maximum") && doc.get<double>() > schema["maximum"].get<double>()) errs.push_back(where + ": above maximum");
  }
  if (doc.is_object()) {
    if (schema.contains("required"))
      for (const auto& k : schema["required"])
        if (!doc.contains(k.get<std::string>())) errs.push_back(where + ": missing " + k.get<std::string>());
    const Json props = schema.value("properties", Json::object());
    for (auto& [k, v] : doc.items()) {
      if (props.contains(k)) {
        auto sub = schema_errors(v, props[k], where + "." + k);
        errs.insert(errs.end(), sub.begin(), sub.end());
      } else if (schema.contains("additionalProperties")) {
        const Json& ap = schema["additionalProperties"];
        if (ap.is_boolean() && !ap.get<bool>()) {
          errs.push_back(where + ": unexpected " + k);
        } else if (ap.is_object()) {
          auto sub = schema_errors(v, ap, where + "." + k);
          errs.insert(errs.end(), sub.begin(), sub.end());
        }
      }
    }
  }
  if (doc.is_array() && schema.contains("items"))
    for (size_t i = 0; i < doc.size(); ++i) {
      auto sub = schema_errors(doc[i], schema["items"], where + "[" + std::to_string(i) + "]");
      errs.insert(errs.end(), sub.begin(), sub.end());
    }
  return errs;
}

Json load_schema(const std::string& name) {
  std::string path = (fs::path(QRMSYM_SCHEMA_DIR) / (name + ".schema.json")).string();
  std::ifstream in(path);
  if (!in) throw IoError(path + ": cannot open schema");
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw IoError(path + ": " + e.what());
  }
}

}  // namespace qrm

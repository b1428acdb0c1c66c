/*
   Copyright 2026 The sdist authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <json.hpp>

#include "sdist/bounds.hpp"
#include "sdist/config_json.hpp"
#include "sdist/configurations.hpp"
#include "sdist/gegenbauer.hpp"
#include "sdist/numerics.hpp"
#include "sdist/verify.hpp"

namespace {

using nlohmann::json;
using namespace sdist;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

std::string pretty(const Rational& q) {
  if (q.get_den() == 1) return to_string(q);
  return fmt::format("{} ({:.6g})", to_string(q), to_double(q));
}

json json_int(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json json_signs(const std::vector<Sign>& signs) {
  json out = json::array();
  for (Sign s : signs) out.push_back(std::string(1, sign_char(s)));
  return out;
}

json json_rationals(const std::vector<Rational>& values) {
  json out = json::array();
  for (const Rational& v : values) out.push_back(to_string(v));
  return out;
}

json json_integers(const std::vector<Integer>& values) {
  json out = json::array();
  for (const Integer& v : values) out.push_back(json_int(v));
  return out;
}

json json_check(const CheckReport& c) {
  json out;
  out["name"] = c.name;
  out["pass"] = !c.failed();
  out["measured"] = c.measured;
  out["threshold"] = c.threshold;
  if (!c.note.empty()) out["note"] = c.note;
  if (c.status == CheckStatus::not_applicable) out["not_applicable"] = true;
  return out;
}

void emit_json(const std::string& command, json inputs, json results, json checks) {
  json doc;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["results"] = std::move(results);
  doc["checks"] = std::move(checks);
  fmt::print("{}\n", doc.dump(2));
}

void print_check_line(const CheckReport& c) {
  const char* status = c.status == CheckStatus::pass ? "PASS"
                       : c.status == CheckStatus::fail ? "FAIL"
                                                       : "n/a ";
  std::string detail;
  if (c.measured != 0.0 || c.threshold != 0.0)
    detail = fmt::format("  measured {:.6g}, threshold {:.6g}", c.measured, c.threshold);
  if (!c.note.empty()) detail += fmt::format("  [{}]", c.note);
  fmt::print("[{}] {}{}\n", status, c.name, detail);
}

struct SpectrumArgs {
  int dim = 0;
  std::string roots_csv;
  std::string poly_text;
  bool antipodal = false;
  int s = 0;
};

std::vector<Rational> parse_roots_csv(const std::string& csv) {
  std::vector<Rational> roots;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    if (comma == std::string::npos) comma = csv.size();
    std::string item = csv.substr(start, comma - start);
    const auto from = item.find_first_not_of(" \t");
    if (from == std::string::npos) throw std::invalid_argument("empty value in --roots");
    const auto to = item.find_last_not_of(" \t");
    roots.push_back(parse_rational(item.substr(from, to - from + 1)));
    start = comma + 1;
  }
  return roots;
}

SpectrumSpec spec_from_args(const SpectrumArgs& args, json& inputs) {
  inputs["dim"] = args.dim;
  if (args.roots_csv.empty() && args.poly_text.empty())
    throw std::invalid_argument("one of --roots or --poly is required");
  if (!args.roots_csv.empty()) {
    SpectrumSpec spec = SpectrumSpec::from_roots(args.dim, parse_roots_csv(args.roots_csv));
    inputs["roots"] = json_rationals(spec.roots());
    return spec;
  }
  SpectrumSpec spec = SpectrumSpec::from_poly(args.dim, parse_poly(args.poly_text));
  inputs["poly"] = to_string(spec.annihilator());
  return spec;
}

void print_expansion_table(const GegenExpansion& f, const std::vector<Sign>& signs,
                           const std::vector<Integer>& h) {
  fmt::print("{:>3}  {:<28} {:<5} {}\n", "i", "f_i", "sign", "h_i");
  for (std::size_t i = 0; i < f.coeffs.size(); ++i)
    fmt::print("{:>3}  {:<28} {:<5} {}\n", i, pretty(f.coeffs[i]), sign_char(signs[i]),
               h[i].get_str());
}

int cmd_expand(const SpectrumArgs& args, bool as_json) {
  json inputs;
  SpectrumSpec spec = spec_from_args(args, inputs);
  const GegenExpansion f = expand_in_gegenbauer(spec.dim(), spec.annihilator());
  std::vector<Sign> signs;
  std::vector<Integer> h;
  for (int i = 0; i <= f.degree(); ++i) {
    signs.push_back(sign_of_rational(f.coeffs[i]));
    h.push_back(harmonic_dim(spec.dim(), i));
  }
  if (as_json) {
    json results;
    results["dim"] = spec.dim();
    results["s"] = spec.s();
    results["annihilator"] = to_string(spec.annihilator());
    results["f"] = json_rationals(f.coeffs);
    results["signs"] = json_signs(signs);
    results["h"] = json_integers(h);
    emit_json("expand", std::move(inputs), std::move(results), json::array());
    return kExitPass;
  }
  fmt::print("d = {}, s = {}\n", spec.dim(), spec.s());
  fmt::print("F(t) = {}\n", to_string(spec.annihilator()));
  print_expansion_table(f, signs, h);
  return kExitPass;
}

json json_bound_report(const BoundReport& r) {
  json results;
  results["dim"] = r.dim;
  results["s"] = r.s;
  results["antipodal"] = r.spectrum_is_half;
  results["f"] = json_rationals(r.f.coeffs);
  results["signs"] = json_signs(r.signs);
  results["h"] = json_integers(r.h);
  results["fisher"] = json_int(r.fisher);
  if (r.lp) {
    json lp;
    lp["applicable"] = r.lp->applicable();
    if (r.lp->applicable()) lp["value"] = to_string(*r.lp->value);
    else lp["violating_index"] = r.lp->violating_index;
    results["lp"] = std::move(lp);
  } else {
    results["lp"] = nullptr;
  }
  results["harmonic_sum"] = json_int(r.harmonic_sum);
  if (r.antipodal) {
    json anti;
    anti["value"] = json_int(r.antipodal->value);
    anti["parity_holds"] = r.antipodal->parity_holds;
    anti["f"] = json_rationals(r.antipodal->f.coeffs);
    results["antipodal_bound"] = std::move(anti);
  }
  results["best"] = json_int(r.best);
  return results;
}

void print_bound_report(const BoundReport& r, const UniPoly& annihilator) {
  if (r.spectrum_is_half)
    fmt::print("d = {}, s = {} (antipodal; input spectrum is A(Y))\n", r.dim, r.s);
  else
    fmt::print("d = {}, s = {}\n", r.dim, r.s);
  fmt::print("F(t) = {}\n", to_string(annihilator));
  print_expansion_table(r.f, r.signs, r.h);
  fmt::print("fisher:        {}\n", r.fisher.get_str());
  if (!r.lp)
    fmt::print("lp:            not computed (needs the spectrum of X, not A(Y))\n");
  else if (r.lp->applicable())
    fmt::print("lp:            {}\n", pretty(*r.lp->value));
  else
    fmt::print("lp:            inapplicable (f_{} {})\n", r.lp->violating_index,
               r.lp->violating_index == 0 ? "<= 0" : "< 0");
  fmt::print("harmonic_sum:  {}\n", r.harmonic_sum.get_str());
  if (r.antipodal) {
    fmt::print("antipodal:     {} (2 * sum of h_i with f_i > 0); parity {}\n",
               r.antipodal->value.get_str(), r.antipodal->parity_holds ? "holds" : "violated");
  }
  fmt::print("best:          {}\n", r.best.get_str());
}

int cmd_bounds(const SpectrumArgs& args, bool as_json) {
  json inputs;
  SpectrumSpec spec = spec_from_args(args, inputs);
  inputs["antipodal"] = args.antipodal;
  if (args.antipodal) inputs["s"] = args.s;
  BoundReport report =
      args.antipodal ? full_report_antipodal(spec, args.s) : full_report(spec);
  json checks = json::array();
  if (report.antipodal) {
    CheckReport parity;
    parity.name = "parity";
    parity.status = report.antipodal->parity_holds ? CheckStatus::pass : CheckStatus::fail;
    parity.measured = static_cast<double>(report.antipodal->parity_violations.size());
    parity.threshold = 0.0;
    checks.push_back(json_check(parity));
  }
  if (as_json) {
    emit_json("bounds", std::move(inputs), json_bound_report(report), std::move(checks));
    return kExitPass;
  }
  print_bound_report(report, spec.annihilator());
  return kExitPass;
}

json json_spectrum(const Spectrum& spec) {
  json out;
  out["s"] = spec.s();
  if (spec.mode == GramMode::exact) out["values"] = json_rationals(spec.values);
  else out["values"] = spec.values_f64;
  out["counts"] = spec.counts;
  return out;
}

std::string spectrum_summary(const Spectrum& spec) {
  std::string out;
  for (int i = 0; i < spec.s(); ++i) {
    if (i) out += ", ";
    if (spec.mode == GramMode::exact) out += to_string(spec.values[i]);
    else out += fmt::format("{:.9g}", spec.values_f64[i]);
    out += fmt::format(" x{}", spec.counts[i]);
  }
  return out;
}

int cmd_construct(const std::string& name, std::optional<int> dim, const std::string& out_path,
                  bool as_json) {
  PointConfiguration x;
  if (name == "icosahedron") {
    if (dim && *dim != 3) throw std::invalid_argument("the icosahedron lives in d = 3");
    x = icosahedron();
  } else {
    if (!dim) throw std::invalid_argument("--dim is required for " + name);
    if (name == "simplex") x = regular_simplex(*dim);
    else if (name == "midpoints") x = midpoint_simplex(*dim);
    else if (name == "cross") x = cross_polytope(*dim);
    else throw std::invalid_argument("unknown configuration name: " + name);
  }
  save_configuration(x, out_path);
  const Spectrum spec = spectrum_of(x);
  if (as_json) {
    json inputs;
    inputs["name"] = name;
    if (dim) inputs["dim"] = *dim;
    inputs["out"] = out_path;
    json results;
    results["n"] = x.size();
    results["dim"] = x.dim;
    results["mode"] = x.exact() ? "exact" : "float";
    results["label"] = x.label;
    results["spectrum"] = json_spectrum(spec);
    emit_json("construct", std::move(inputs), std::move(results), json::array());
    return kExitPass;
  }
  fmt::print("{}: {} points, d = {}, {} mode\n", x.label, x.size(), x.dim,
             x.exact() ? "exact" : "float");
  fmt::print("spectrum: {}\n", spectrum_summary(spec));
  fmt::print("written to {}\n", out_path);
  return kExitPass;
}

int cmd_spectrum(const std::string& path, double tol, bool as_json) {
  const PointConfiguration x = load_configuration(path);
  const Spectrum spec = spectrum_of(x, tol);
  const AntipodalDecomposition anti = antipodal_decompose(x, tol);
  if (as_json) {
    json inputs;
    inputs["path"] = path;
    inputs["tol"] = tol;
    json results;
    results["n"] = x.size();
    results["dim"] = x.dim;
    results["mode"] = x.exact() ? "exact" : "float";
    results["label"] = x.label;
    results["spectrum"] = json_spectrum(spec);
    results["antipodal"] = anti.antipodal;
    results["antipodal_pairs"] = anti.pairs.size();
    emit_json("spectrum", std::move(inputs), std::move(results), json::array());
    return kExitPass;
  }
  fmt::print("{}: {} points, d = {}, {} mode\n", x.label, x.size(), x.dim,
             x.exact() ? "exact" : "float");
  fmt::print("spectrum (s = {}): {}\n", spec.s(), spectrum_summary(spec));
  if (anti.antipodal) fmt::print("antipodal: yes ({} pairs)\n", anti.pairs.size());
  else fmt::print("antipodal: no\n");
  return kExitPass;
}

int cmd_verify(const std::string& path, double tol, int depth, bool as_json) {
  const PointConfiguration x = load_configuration(path);
  std::vector<CheckReport> checks;
  json results;
  results["n"] = x.size();
  results["dim"] = x.dim;
  results["mode"] = x.exact() ? "exact" : "float";
  results["label"] = x.label;

  const ValidationReport validation = validate_configuration(x, tol);
  for (CheckReport c : validation.checks) {
    c.name = "validate:" + c.name;
    checks.push_back(std::move(c));
  }

  const Spectrum spec = spectrum_of(x, tol);
  results["spectrum"] = json_spectrum(spec);
  const int s = spec.s();

  const AntipodalDecomposition anti = antipodal_decompose(x, tol);
  results["antipodal"] = anti.antipodal;

  // Bound section. Exact configurations go through exact arithmetic; float
  // ones through the clustered approximation (labeled as such).
  Integer best;
  if (x.exact()) {
    const SpectrumSpec fx = spectrum_spec_of(x);
    std::optional<AntipodalInput> anti_input;
    if (anti.antipodal) {
      const SpectrumSpec fy = spectrum_spec_of(sub_configuration(x, anti.half));
      anti_input = AntipodalInput{fy, fy.s() + 1};
    }
    const BoundReport report = full_report(fx, anti_input);
    results["bounds"] = json_bound_report(report);
    best = report.best;
  } else {
    std::vector<double> values = spec.as_f64();
    ApproxBoundReport report = [&] {
      if (anti.antipodal) {
        const Spectrum y_spec = spectrum_of(sub_configuration(x, anti.half), tol);
        return approx_report(x.dim, values, tol, y_spec.as_f64(),
                             y_spec.s() + 1);
      }
      return approx_report(x.dim, values, tol);
    }();
    json b;
    b["approximate"] = true;
    b["f"] = report.f;
    b["signs"] = json_signs(report.signs);
    b["fisher"] = json_int(report.fisher);
    if (report.lp_value) b["lp"] = *report.lp_value;
    else b["lp_violating_index"] = report.lp_violating_index;
    b["harmonic_sum"] = json_int(report.harmonic_sum);
    if (report.antipodal_bound) b["antipodal_bound"] = json_int(*report.antipodal_bound);
    if (report.parity_holds) b["parity_holds"] = *report.parity_holds;
    b["best"] = json_int(report.best);
    results["bounds"] = std::move(b);
    best = report.best;
  }

  if (anti.antipodal) {
    // |Y| against the two reference binomials for tight sets; informational.
    const Integer half = static_cast<long>(anti.half.size());
    json a;
    a["half_size"] = json_int(half);
    a["binomial_d_s2_s1"] = json_int(binomial(x.dim + s - 2, s - 1));
    a["binomial_d_s3_s2"] = json_int(binomial(x.dim + s - 3, s - 2));
    results["antipodal_half"] = std::move(a);
  }

  CheckReport card;
  card.name = "cardinality_bound";
  card.status = Integer(x.size()) <= best ? CheckStatus::pass : CheckStatus::fail;
  card.measured = static_cast<double>(x.size());
  card.threshold = best.get_d();
  card.note = fmt::format("|X| = {} vs best bound {}", x.size(), best.get_str());
  checks.push_back(std::move(card));

  checks.push_back(resolution_identity_check(x, tol));

  const int max_l = depth >= 0 ? depth : std::max(4, s);
  for (int l = 0; l <= max_l; ++l) {
    CheckReport c = psd_rank_check(gegenbauer_gram_matrix(x, l),
                                   harmonic_dim(x.dim, l).get_si(), tol);
    c.name = fmt::format("psd_rank_l{}", l);
    checks.push_back(std::move(c));
  }

  const bool ok = all_passed(checks);
  if (as_json) {
    json inputs;
    inputs["path"] = path;
    inputs["tol"] = tol;
    inputs["depth"] = max_l;
    json check_array = json::array();
    for (const CheckReport& c : checks) check_array.push_back(json_check(c));
    results["all_passed"] = ok;
    emit_json("verify", std::move(inputs), std::move(results), std::move(check_array));
  } else {
    fmt::print("{}: {} points, d = {}, {} mode\n", x.label, x.size(), x.dim,
               x.exact() ? "exact" : "float");
    fmt::print("spectrum (s = {}): {}\n", s, spectrum_summary(spec));
    if (anti.antipodal) {
      fmt::print("antipodal: yes, |Y| = {} (reference binomials C(d+s-2,s-1) = {}, C(d+s-3,s-2) = {})\n",
                 anti.half.size(), binomial(x.dim + s - 2, s - 1).get_str(),
                 binomial(x.dim + s - 3, s - 2).get_str());
    } else {
      fmt::print("antipodal: no\n");
    }
    for (const CheckReport& c : checks) print_check_line(c);
    fmt::print("{}\n", ok ? "all checks passed" : "some checks FAILED");
  }
  return ok ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounds and verification for s-distance sets on the unit sphere"};
  app.require_subcommand(1);

  SpectrumArgs expand_args;
  bool expand_json = false;
  CLI::App* expand = app.add_subcommand("expand", "expand an annihilator polynomial in the G_l basis");
  expand->add_option("--dim", expand_args.dim, "ambient dimension d (sphere S^{d-1})")->required();
  auto* expand_roots = expand->add_option("--roots", expand_args.roots_csv,
                                          "comma-separated rational inner products, e.g. 5/14,-2/7");
  auto* expand_poly = expand->add_option("--poly", expand_args.poly_text,
                                         "monic annihilator polynomial, e.g. \"t^2-1/5\"");
  expand_roots->excludes(expand_poly);
  expand->add_flag("--json", expand_json, "machine-readable report");

  SpectrumArgs bounds_args;
  bool bounds_json = false;
  CLI::App* bounds = app.add_subcommand("bounds", "cardinality bounds for a spectrum");
  bounds->add_option("--dim", bounds_args.dim, "ambient dimension d")->required();
  auto* bounds_roots = bounds->add_option("--roots", bounds_args.roots_csv,
                                          "comma-separated rational inner products");
  auto* bounds_poly = bounds->add_option("--poly", bounds_args.poly_text, "monic annihilator polynomial");
  bounds_roots->excludes(bounds_poly);
  auto* bounds_anti = bounds->add_flag("--antipodal", bounds_args.antipodal,
                                       "interpret the spectrum as A(Y) of an antipodal X = Y u (-Y)");
  auto* bounds_s = bounds->add_option("--s", bounds_args.s, "number of distances of X (antipodal mode)");
  bounds_anti->needs(bounds_s);
  bounds_s->needs(bounds_anti);
  bounds->add_flag("--json", bounds_json, "machine-readable report");

  std::string construct_name;
  int construct_dim = 0;
  std::string construct_out;
  bool construct_json = false;
  CLI::App* construct = app.add_subcommand("construct", "write a bundled configuration to a file");
  construct->add_option("name", construct_name, "simplex | midpoints | cross | icosahedron")
      ->required()
      ->check(CLI::IsMember({"simplex", "midpoints", "cross", "icosahedron"}));
  auto* construct_dim_opt = construct->add_option("--dim", construct_dim, "ambient dimension d");
  construct->add_option("--out", construct_out, "output configuration file")->required();
  construct->add_flag("--json", construct_json, "machine-readable report");

  std::string spectrum_path;
  double spectrum_tol = 1e-9;
  bool spectrum_json = false;
  CLI::App* spectrum = app.add_subcommand("spectrum", "inner-product spectrum of a configuration file");
  spectrum->add_option("path", spectrum_path, "configuration file")->required();
  spectrum->add_option("--tol", spectrum_tol, "clustering/antipode tolerance")
      ->check(CLI::PositiveNumber);
  spectrum->add_flag("--json", spectrum_json, "machine-readable report");

  std::string verify_path;
  double verify_tol = 1e-9;
  int verify_depth = -1;
  bool verify_json = false;
  CLI::App* verify = app.add_subcommand("verify", "structural and proof-machinery checks");
  verify->add_option("path", verify_path, "configuration file")->required();
  verify->add_option("--tol", verify_tol, "numerical tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--depth", verify_depth, "largest Gegenbauer index checked (default max(4, s))");
  verify->add_flag("--json", verify_json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*expand) return cmd_expand(expand_args, expand_json);
    if (*bounds) return cmd_bounds(bounds_args, bounds_json);
    if (*construct)
      return cmd_construct(construct_name,
                           construct_dim_opt->count() ? std::optional<int>(construct_dim)
                                                      : std::nullopt,
                           construct_out, construct_json);
    if (*spectrum) return cmd_spectrum(spectrum_path, spectrum_tol, spectrum_json);
    if (*verify) return cmd_verify(verify_path, verify_tol, verify_depth, verify_json);
  } catch (const std::exception& err) {
    fmt::print(stderr, "error: {}\n", err.what());
    return kExitInputError;
  }
  return kExitInputError;
}

#pragma once

// Command-line front end. Exit codes: 0 success, 1 validation failure,
// 2 parse or usage error, 3 integrality or consistency error.

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mtc/catalog.hpp"
#include "mtc/center.hpp"
#include "mtc/dataio.hpp"
#include "mtc/errors.hpp"
#include "mtc/fusion_ring.hpp"
#include "mtc/indicators.hpp"
#include "mtc/modular_data.hpp"
#include "mtc/parallel.hpp"
#include "mtc/spectra.hpp"

namespace mtc::cli {

enum ExitCode : int { ok = 0, validation_failure = 1, usage_error = 2, integrality_error = 3 };

struct Options {
  std::string input;
  std::string format = "table";
  std::string out;
  unsigned jobs = 1;
  std::string unit;
  std::vector<std::string> objects;
  std::string center_object;
  std::int64_t n = 2, k = 1, l = 0, m = 0;
  bool sigma = false, sigma3 = false, under = false;
};

/// Loads `catalog:<name>` or a .mtc path. Validation is skipped when `check`
/// is false so that the validate command can report every failure itself.
inline ModularData load_input(const std::string& input, const std::string& unit, bool check) {
  const std::string prefix = "catalog:";
  if (input.rfind(prefix, 0) == 0) {
    const auto& md = catalog(input.substr(prefix.size()));
    if (unit.empty()) return md;
    return ModularData::from_parts(md.labels(), md.S(), md.theta(), md.index_of(unit), std::nullopt);
  }
  ModularDataFile f = read_mtc(read_text_file(input));
  if (!unit.empty()) f.unit = unit;
  ModularData md = build_modular_data(f);
  if (check) {
    const auto rep = validate(md);
    if (!rep.ok()) throw ValidationError("modular data fails validation: " + describe_failures(rep));
  }
  return md;
}

namespace detail {

inline std::string cmd_validate(const Options& o, bool& valid) {
  const ModularData md = load_input(o.input, o.unit, false);
  const auto rep = validate(md);
  valid = rep.ok();
  std::optional<DerivedInvariants> inv;
  try {
    inv = derive_invariants(md);
  } catch (const ConsistencyError&) {
  }
  if (o.format == "structured") return to_json(rep, inv).dump(2) + "\n";
  std::string s;
  for (const auto& c : rep.checks)
    s += std::string(c.passed ? "PASS  " : "FAIL  ") + c.name + (c.detail.empty() ? "" : "  [" + c.detail + "]") + "\n";
  if (inv) {
    s += "rank: " + std::to_string(md.rank()) + "\nunit: " + md.label(md.unit()) + "\ndims:\n";
    for (std::size_t a = 0; a < md.rank(); ++a) s += "  " + md.label(a) + ": " + to_string(inv->dims[a]) + "\n";
    s += "global dimension: " + to_string(inv->global_dim);
    s += "\nconductor: " + std::to_string(inv->conductor);
    s += "\ncentral charge: " + to_string(inv->central_charge) + "\n";
  }
  s += rep.ok() ? "valid\n" : "INVALID\n";
  return s;
}

inline std::string cmd_fusion(const Options& o) {
  const ModularData md = load_input(o.input, o.unit, true);
  const FusionRing fr = verlinde(md);
  const auto failures = fr.invariant_failures();
  if (!failures.empty()) throw ConsistencyError("fusion ring axioms fail: " + failures.front());
  if (o.objects.empty()) {
    if (o.format == "structured") return to_json(fr, md.labels()).dump(2) + "\n";
    std::string s;
    for (std::size_t a = 0; a < md.rank(); ++a)
      for (std::size_t b = a; b < md.rank(); ++b)
        s += md.label(a) + " ⊗ " + md.label(b) + " = " + to_string(fr.fuse(a, b), md.labels()) + "\n";
    return s;
  }
  ObjectMultiset result(md.rank(), md.unit());
  std::string lhs;
  if (o.objects.size() == 1) {
    const auto a = md.index_of(o.objects[0]);
    if (o.n < 0) throw DomainError("--n must be non-negative");
    result = power_decompose(fr, a, o.n);
    lhs = md.label(a) + "^" + std::to_string(o.n);
  } else {
    for (const auto& name : o.objects) {
      const auto a = md.index_of(name);
      result = fr.fuse(result, a);
      lhs += (lhs.empty() ? "" : " ⊗ ") + md.label(a);
    }
  }
  if (o.format == "structured") {
    json terms = json::array();
    for (const auto& [c, k] : result.terms()) terms.push_back({{"object", md.label(c)}, {"multiplicity", k}});
    return json{{"schema", "mtc-decomposition/1"}, {"expression", lhs}, {"terms", terms}}.dump(2) + "\n";
  }
  return lhs + " = " + to_string(result, md.labels()) + "\n";
}

struct CenterBundle {
  ModularData md;
  FusionRing fr;
  CenterData cd;
};

inline CenterBundle center_of(const ModularData& md) {
  CenterBundle b{md, verlinde(md), {}};
  b.cd = deligne_square(b.md, b.fr);
  return b;
}

inline std::string cmd_indicators(const Options& o) {
  const ModularData md = load_input(o.input, o.unit, true);
  const auto bundle = center_of(md);
  const auto& cd = bundle.cd;
  IndicatorTable t = gfs_matrix(cd, o.n, o.k);
  std::vector<std::string> cols = md.labels();
  if (!o.objects.empty()) {
    std::vector<std::size_t> pick;
    for (const auto& name : o.objects) pick.push_back(md.index_of(name));
    CycloMatrix sub(t.values.rows(), pick.size());
    cols.clear();
    for (std::size_t j = 0; j < pick.size(); ++j) {
      cols.push_back(md.label(pick[j]));
      for (std::size_t i = 0; i < t.values.rows(); ++i) sub(i, j) = t.values(i, pick[j]);
    }
    t.values = std::move(sub);
  }
  if (o.format == "structured") return to_json(t, cd.md.labels(), cols).dump(2) + "\n";
  std::string s = "# indicator matrix V_{" + std::to_string(o.n) + "," + std::to_string(o.k) +
                  "}: rows are center simples, columns are objects of the category\n";
  s += "object";
  for (const auto& c : cols) s += " | " + c;
  s += "\n";
  for (std::size_t i = 0; i < t.values.rows(); ++i) {
    s += cd.md.label(i);
    for (std::size_t j = 0; j < t.values.cols(); ++j) s += " | " + to_string(t.values(i, j));
    s += "\n";
  }
  return s;
}

inline std::string cmd_rotation(const Options& o) {
  if (o.objects.size() != 1) throw DomainError("rotation needs exactly one --object");
  if (o.n < 1) throw DomainError("--n must be at least 1");
  const ModularData md = load_input(o.input, o.unit, true);
  const auto bundle = center_of(md);
  const auto& cd = bundle.cd;
  const std::size_t a = md.index_of(o.objects[0]);
  const ObjectMultiset a_obj(md.rank(), a);
  IndicatorEngine engine(cd);
  // build the tables up front so the workers only read them
  for (std::int64_t d = 1; d <= o.n; ++d)
    if (o.n % d == 0) engine.table(d, 1);
  std::vector<std::size_t> targets;
  if (!o.center_object.empty()) targets.push_back(cd.md.index_of(o.center_object));
  else
    for (std::size_t b = 0; b < cd.rank(); ++b) targets.push_back(b);
  SpectrumReport rep;
  rep.context = {"rotation", o.input, md.label(a), o.n, 0, 0, "over"};
  rep.rows = parallel_map<SpectrumRow>(targets.size(), o.jobs,
                                       [&](std::size_t i) { return rotation_spectrum(engine, targets[i], a_obj, o.n); });
  return render_report(rep, o.format == "structured" ? Format::structured : Format::table);
}

inline std::string cmd_braid(const Options& o) {
  if (o.objects.size() != 1) throw DomainError("braid needs exactly one --object");
  const ModularData md = load_input(o.input, o.unit, true);
  const std::size_t a = md.index_of(o.objects[0]);
  const ModularData base = o.under ? reverse(md) : md;
  const auto bundle = center_of(base);
  IndicatorEngine engine(bundle.cd);
  auto rep = braid_jm_spectrum(engine, a, o.n, o.l, o.m, o.under ? Crossing::under : Crossing::over);
  rep.context.category = o.input;
  return render_report(rep, o.format == "structured" ? Format::structured : Format::table);
}

inline std::string cmd_report(const Options& o) {
  if (o.objects.size() != 1) throw DomainError("report needs exactly one --object");
  if (o.sigma && o.sigma3) throw DomainError("--braid-sigma and --braid-sigma3 are exclusive");
  const ModularData md = load_input(o.input, o.unit, true);
  const FusionRing fr = verlinde(md);
  const std::size_t a = md.index_of(o.objects[0]);
  auto rep = sigma_spectrum_n2(md, fr, a, o.sigma3 ? SigmaVariant::sigma3 : SigmaVariant::sigma);
  rep.context.category = o.input;
  if (o.format == "structured") return render_report(rep, Format::structured);
  std::string s = render_table(rep);
  s = md.label(a) + " ⊗ " + md.label(a) + " = " + to_string(fr.fuse(a, a), md.labels()) + "\n" + s;
  return s;
}

}  // namespace detail

/// Parses arguments, dispatches, and writes output. Returns the exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact modular data toolkit: fusion rules, indicators and braid spectra"};
  app.require_subcommand(1);
  Options o;
  std::string chosen;

  auto common = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Data file (.mtc) or catalog:<name>")->required();
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "structured"}));
    sub->add_option("--out", o.out, "Write output to this file instead of stdout");
    sub->add_option("--jobs", o.jobs, "Worker threads for data-parallel steps")->check(CLI::PositiveNumber);
    sub->add_option("--unit", o.unit, "Force the unit object (label or 1-based index)");
  };
  auto* validate_cmd = app.add_subcommand("validate", "Check the modular relations and print invariants");
  common(validate_cmd);
  auto* fusion_cmd = app.add_subcommand("fusion", "Fusion rules from the Verlinde formula");
  common(fusion_cmd);
  fusion_cmd->add_option("--object", o.objects, "Objects to multiply (one object with --n gives a power)");
  fusion_cmd->add_option("--n", o.n, "Tensor power");
  auto* ind_cmd = app.add_subcommand("indicators", "Indicator matrix V_{n,k} of the center");
  common(ind_cmd);
  ind_cmd->add_option("--n", o.n, "First index (n)");
  ind_cmd->add_option("--k", o.k, "Second index (k), coprime to n");
  ind_cmd->add_option("--object", o.objects, "Restrict to these columns");
  auto* rot_cmd = app.add_subcommand("rotation", "Rotation eigenvalues on Hom(b, a^n) in the center");
  common(rot_cmd);
  rot_cmd->add_option("--object", o.objects, "The object a")->required();
  rot_cmd->add_option("--n", o.n, "Number of tensor factors");
  rot_cmd->add_option("--center-object", o.center_object, "Restrict to one center simple b, e.g. '(x1,x2)'");
  auto* braid_cmd = app.add_subcommand("braid", "Eigenvalues of the Jucys-Murphy braid A^n_{l,m}");
  common(braid_cmd);
  braid_cmd->add_option("--object", o.objects, "The object a")->required();
  braid_cmd->add_option("--n", o.n, "Number of strands");
  braid_cmd->add_option("--l", o.l, "Strands left of the wrapped block");
  braid_cmd->add_option("--m", o.m, "Strands right of the wrapped block");
  braid_cmd->add_flag("--under,--inverse", o.under, "Use under-crossings (reversed braiding)");
  auto* report_cmd = app.add_subcommand("report", "Braid-generator spectrum table on Hom(b, a⊗a)");
  common(report_cmd);
  report_cmd->add_option("--object", o.objects, "The object a")->required();
  report_cmd->add_flag("--braid-sigma", o.sigma, "Spectrum of a braid generator (default)");
  report_cmd->add_flag("--braid-sigma3", o.sigma3, "Spectrum of s_i s_{i+1} s_i on Hom(b, a^3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }

  try {
    std::string text;
    bool valid = true;
    if (*validate_cmd) text = detail::cmd_validate(o, valid);
    else if (*fusion_cmd) text = detail::cmd_fusion(o);
    else if (*ind_cmd) text = detail::cmd_indicators(o);
    else if (*rot_cmd) text = detail::cmd_rotation(o);
    else if (*braid_cmd) text = detail::cmd_braid(o);
    else if (*report_cmd) text = detail::cmd_report(o);
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!f) throw ParseError("cannot write '" + o.out + "'", 0, 0);
      f << text;
    }
    return valid ? ok : validation_failure;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return validation_failure;
  } catch (const ConstructionError& e) {
    err << "validation error: " << e.what() << "\n";
    return validation_failure;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return usage_error;
  } catch (const DimensionError& e) {
    err << "parse error: " << e.what() << "\n";
    return usage_error;
  } catch (const UnknownFixture& e) {
    err << "usage error: " << e.what() << "\n";
    return usage_error;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return usage_error;
  } catch (const UnsupportedInput& e) {
    err << "usage error: " << e.what() << "\n";
    return usage_error;
  } catch (const Error& e) {
    // integrality, consistency, descent, order cap
    err << "error: " << e.what() << "\n";
    return integrality_error;
  }
}

}  // namespace mtc::cli

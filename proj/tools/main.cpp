#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "apolar/decomp.hpp"
#include "apolar/errors.hpp"
#include "apolar/parse.hpp"
#include "apolar/report.hpp"

namespace {

using apolar::FieldSpec;

FieldSpec parse_field(const std::string& spec) {
  if (spec == "q" || spec == "Q") return FieldSpec::rationals();
  if (spec.rfind("fp:", 0) == 0)
    return FieldSpec::prime_field(std::stoul(spec.substr(3)));
  throw apolar::Error("unknown field '" + spec + "' (use q or fp:<p>)");
}

struct CommonArgs {
  int vars = 1;
  std::string field = "q";
  bool field_given = false;
  bool json_output = false;
  std::string expression;
  std::string input_file;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--vars", args.vars, "number of variables")->required();
  cmd->add_option("--field", args.field, "base field: q or fp:<p>")
      ->each([&args](const std::string&) { args.field_given = true; });
  cmd->add_flag("--json", args.json_output, "canonical JSON output");
  cmd->add_option("--input", args.input_file,
                  "file with one expression per line");
  cmd->add_option("expression", args.expression, "polynomial expression");
}

int run_reports(const CommonArgs& args, const apolar::ReportOptions& opts) {
  std::string field_spec = args.field;
  if (!args.field_given) {
    // APOLAR_FIELD only changes the default; an explicit --field wins
    if (const char* env = std::getenv("APOLAR_FIELD")) field_spec = env;
  }
  FieldSpec field = parse_field(field_spec);
  std::vector<std::string> inputs;
  if (!args.input_file.empty()) {
    std::ifstream in(args.input_file);
    if (!in) throw apolar::Error("cannot open " + args.input_file);
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) inputs.push_back(line);
  }
  if (!args.expression.empty()) inputs.push_back(args.expression);
  if (inputs.empty()) throw apolar::Error("no input expression");

  bool first = true;
  for (const auto& text : inputs) {
    apolar::DpPoly f = apolar::parse_poly(text, args.vars, field);
    nlohmann::json report = apolar::build_report(f, opts);
    if (args.json_output)
      std::cout << report.dump(2) << "\n";
    else {
      if (!first) std::cout << "\n";
      std::cout << apolar::render_text(report);
    }
    first = false;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Macaulay inverse systems calculator"};
  app.require_subcommand(1);

  CommonArgs args;
  int cat_degree = -1;
  int secant_r = -1;
  std::string ray_partial;
  int ray_degree = 2;

  auto* analyze = app.add_subcommand("analyze", "full invariant report");
  add_common(analyze, args);
  analyze->add_option("--cat-degree", cat_degree, "include this catalecticant");
  analyze->add_option("--secant-r", secant_r, "include the secant rank test");
  analyze->add_option("--ray-partial", ray_partial, "ray sum partial (dx syntax)");
  analyze->add_option("--ray-degree", ray_degree, "ray sum degree (default 2)");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function");
  add_common(hilbert, args);
  auto* decomp = app.add_subcommand("decompose", "symmetric decomposition");
  add_common(decomp, args);
  auto* stdform = app.add_subcommand("standard-form", "standard form");
  add_common(stdform, args);
  auto* tangent = app.add_subcommand("tangent", "Hilbert scheme tangent space");
  add_common(tangent, args);
  auto* orbit = app.add_subcommand("orbit", "Gamma-orbit tangent dimensions");
  add_common(orbit, args);
  auto* cat = app.add_subcommand("catalecticant", "catalecticant rank");
  add_common(cat, args);
  cat->add_option("--cat-degree", cat_degree, "contraction degree a")->required();
  cat->add_option("--secant-r", secant_r, "secant rank test");
  auto* ray = app.add_subcommand("raysum", "ray sum invariants");
  add_common(ray, args);
  ray->add_option("--ray-partial", ray_partial, "partial (dx syntax)")->required();
  ray->add_option("--ray-degree", ray_degree, "ray degree d >= 2");
  auto* flat = app.add_subcommand("flatness", "tangent-preserving flatness test");
  add_common(flat, args);
  flat->add_option("--ray-partial", ray_partial, "partial (dx syntax)")->required();
  auto* gm = app.add_subcommand("gm-limit", "initial ideal of the annihilator");
  add_common(gm, args);

  CLI11_PARSE(app, argc, argv);

  apolar::ReportOptions opts;
  if (analyze->parsed()) {
    opts = apolar::ReportOptions::analyze();
    if (cat_degree >= 0) opts.cat_degree = cat_degree;
    if (secant_r >= 0) opts.secant_r = secant_r;
    if (!ray_partial.empty()) {
      opts.ray_partial = ray_partial;
      opts.ray_degree = ray_degree;
      opts.ray = true;
      opts.flatness = true;
    }
  } else if (hilbert->parsed()) {
    opts.hilbert = true;
  } else if (decomp->parsed()) {
    opts.hilbert = opts.decomposition = true;
  } else if (stdform->parsed()) {
    opts.standard_form = true;
  } else if (tangent->parsed()) {
    opts.hs_tangent = true;
  } else if (orbit->parsed()) {
    opts.orbit = true;
  } else if (cat->parsed()) {
    opts.cat_degree = cat_degree;
    if (secant_r >= 0) opts.secant_r = secant_r;
  } else if (ray->parsed()) {
    opts.ray_partial = ray_partial;
    opts.ray_degree = ray_degree;
    opts.ray = true;
  } else if (flat->parsed()) {
    opts.ray_partial = ray_partial;
    opts.flatness = true;
  } else if (gm->parsed()) {
    opts.gm_limit = true;
  }

  try {
    return run_reports(args, opts);
  } catch (const apolar::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const apolar::PrecisionError& e) {
    std::cerr << "precision error: " << e.what() << "\n";
    return 3;
  } catch (const apolar::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

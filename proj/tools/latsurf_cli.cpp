// Command-line driver: verification runs, parameter sweeps and machine
// readable exports for every module. Artifacts embed the schema version and
// the full configuration so runs are reproducible byte for byte.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "latsurf/asymptotics.hpp"
#include "latsurf/config.hpp"
#include "latsurf/farey.hpp"
#include "latsurf/homology.hpp"
#include "latsurf/hyperbolic.hpp"
#include "latsurf/surface.hpp"
#include "latsurf/veech.hpp"
#include "latsurf/verify.hpp"

using json = nlohmann::ordered_json;
using namespace latsurf;

namespace {

struct CliOptions {
  RunConfig cfg;
  std::string word = "DE'";
  std::string theta = "sqrt:2";
  std::string c_str = "1";
  std::string cyl_a = "horiz:1";
  std::string cyl_b = "horiz:1";
  long n_max = 10;
  std::string out;
};

json config_json(const RunConfig& cfg) {
  return json::parse(cfg.json());
}

void emit(const CliOptions& opt, const json& artifact) {
  if (opt.out.empty()) {
    std::cout << artifact.dump(2) << "\n";
  } else {
    std::ofstream f(opt.out);
    f << artifact.dump(2) << "\n";
    std::cerr << "wrote " << opt.out << "\n";
  }
}

void emit_text(const CliOptions& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opt.out);
    f << text;
    std::cerr << "wrote " << opt.out << "\n";
  }
}

json artifact_head(const RunConfig& cfg) {
  json a;
  a["schema"] = kSchemaVersion;
  a["config"] = config_json(cfg);
  return a;
}

surface::Cylinder parse_cylinder(const std::string& spec, const Rat& c) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw CLI::ValidationError("cylinder spec must be family:n");
  std::string fam = spec.substr(0, colon);
  long n = std::stol(spec.substr(colon + 1));
  if (fam == "horiz" || fam == "horizontal")
    return surface::cylinder(c, surface::Family::Horizontal, n);
  if (fam == "slope1" || fam == "slope_one")
    return surface::cylinder(c, surface::Family::SlopeOne, n);
  throw CLI::ValidationError("cylinder family must be horiz or slope1");
}

farey::Theta parse_theta(const std::string& spec, mpfr_prec_t bits) {
  if (spec.rfind("sqrt:", 0) == 0) return farey::Theta::sqrt_of(std::stol(spec.substr(5)), bits);
  if (spec.rfind("quad:", 0) == 0) {
    long v[4];
    std::stringstream ss(spec.substr(5));
    std::string tok;
    for (int i = 0; i < 4; ++i) {
      if (!std::getline(ss, tok, ',')) throw CLI::ValidationError("quad:a,b,d,e needs 4 fields");
      v[i] = std::stol(tok);
    }
    return farey::Theta::surd(v[0], v[1], v[2], v[3], bits);
  }
  if (spec.rfind("dec:", 0) == 0) {
    std::string body = spec.substr(4);
    auto at = body.find('@');
    mpfr_prec_t b = bits;
    if (at != std::string::npos) {
      b = std::stol(body.substr(at + 1));
      body = body.substr(0, at);
    }
    return farey::Theta::decimal(body, b);
  }
  throw CLI::ValidationError("theta must be sqrt:d, quad:a,b,d,e or dec:<digits>[@bits]");
}

json run_json(const asymptotics::AsymptoticRun& run) {
  json j;
  j["word"] = run.word.str();
  j["subject"] = run.subject;
  j["m"] = run.m_list;
  json exact = json::array();
  for (const auto& v : run.exact_values) exact.push_back(rat_str(v));
  j["exact"] = exact;
  j["scaled"] = run.scaled_values;
  if (run.extrapolated_limit) j["extrapolated_limit"] = *run.extrapolated_limit;
  j["target"] = run.target;
  return j;
}

std::string run_csv(const RunConfig& cfg, const asymptotics::AsymptoticRun& run) {
  std::ostringstream os;
  os << "# schema " << kSchemaVersion << "\n# config " << cfg.json() << "\n";
  os << "m,area,scaled,target\n";
  os.precision(17);
  for (size_t i = 0; i < run.m_list.size(); ++i)
    os << run.m_list[i] << ',' << rat_str(run.exact_values[i]) << ',' << run.scaled_values[i]
       << ',' << run.target << "\n";
  return os.str();
}

int cmd_surface(const CliOptions& opt) {
  Rat c = rat_parse(opt.c_str);
  if (opt.cfg.format == "csv") {
    std::ostringstream os;
    os << "# schema " << kSchemaVersion << "\n# config " << opt.cfg.json() << "\n";
    os << surface::csv_header() << "\n";
    for (long n = 1; n <= opt.n_max; ++n) {
      os << surface::csv_row(surface::cylinder(c, surface::Family::Horizontal, n)) << "\n";
      os << surface::csv_row(surface::cylinder(c, surface::Family::SlopeOne, n)) << "\n";
    }
    emit_text(opt, os.str());
    return 0;
  }
  json a = artifact_head(opt.cfg);
  json rows = json::array();
  for (long n = 1; n <= opt.n_max; ++n) {
    for (auto fam : {surface::Family::Horizontal, surface::Family::SlopeOne}) {
      auto cyl = surface::cylinder(c, fam, n);
      json r;
      r["family"] = fam == surface::Family::Horizontal ? "horizontal" : "slope_one";
      r["n"] = n;
      r["c"] = rat_str(c);
      r["circumference"] = cyl.circumference.str();
      r["height"] = cyl.height.str();
      r["modulus"] = rat_str(cyl.modulus);
      r["area"] = rat_str(cyl.area);
      r["hol"] = {rat_str(cyl.core_holonomy.x), rat_str(cyl.core_holonomy.y)};
      rows.push_back(r);
    }
  }
  a["cylinders"] = rows;
  emit(opt, a);
  return 0;
}

int cmd_homology(const CliOptions& opt) {
  Rat c = rat_parse(opt.c_str);
  json a = artifact_head(opt.cfg);
  json table = json::array();
  for (long n = 1; n <= opt.n_max; ++n) {
    Vec2q h = homology::hol(c, homology::HomologyClass::horizontal(n));
    Vec2q s = homology::hol(c, homology::HomologyClass::slope_one(n));
    json r;
    r["n"] = n;
    r["hol_horizontal"] = {rat_str(h.x), rat_str(h.y)};
    r["hol_slope_one"] = {rat_str(s.x), rat_str(s.y)};
    table.push_back(r);
  }
  a["holonomy"] = table;

  GroupWord w = GroupWord::parse(opt.word);
  auto x = homology::HomologyClass::horizontal(1);
  auto wx = homology::act_word(w, x);
  a["act_word_example"] = {{"word", w.str()},
                           {"x", json::parse(x.json())},
                           {"result", json::parse(wx.json())}};
  QuadratureConfig qc;
  qc.tolerance = opt.cfg.quad_tolerance;
  a["reconstruction_error_horizontal_1"] =
      homology::reconstruct_error(x, 8, qc, opt.cfg.serial ? Exec::Serial : Exec::Par);
  emit(opt, a);
  return 0;
}

int cmd_asymptotics(const CliOptions& opt) {
  GroupWord w = GroupWord::parse(opt.word);
  Rat c1(1);
  auto a_cyl = parse_cylinder(opt.cyl_a, c1);
  auto b_cyl = parse_cylinder(opt.cyl_b, c1);
  auto run = asymptotics::intersection_asymptotics(w, a_cyl, b_cyl, opt.cfg.m_list,
                                                   opt.cfg.precision_bits,
                                                   opt.cfg.serial ? Exec::Serial : Exec::Par);
  if (opt.cfg.format == "csv") {
    emit_text(opt, run_csv(opt.cfg, run));
    return 0;
  }
  json a = artifact_head(opt.cfg);
  a["run"] = run_json(run);
  emit(opt, a);
  return 0;
}

int cmd_farey(const CliOptions& opt) {
  auto theta = parse_theta(opt.theta, opt.cfg.precision_bits);
  auto seq = farey::gsequence(theta, opt.cfg.depth);
  json a = artifact_head(opt.cfg);
  a["theta"] = seq.theta_descriptor;
  a["precision_bits"] = static_cast<long>(seq.precision_bits);
  json entries = json::array();
  for (size_t i = 0; i < seq.entries.size(); ++i) {
    const auto& e = seq.entries[i];
    json r;
    r["i"] = i + 1;
    r["fraction"] = e.fraction.str();
    r["parity"] = farey::parity_str(farey::parity_class(e.fraction));
    if (e.k) r["k"] = *e.k;
    r["witness"] = e.witness;
    entries.push_back(r);
  }
  a["gsequence"] = entries;
  auto overlap = farey::cf_overlap(theta, opt.cfg.depth);
  json conv = json::array();
  for (const auto& cr : overlap.convergents) {
    conv.push_back({{"fraction", cr.convergent.str()},
                    {"parity", farey::parity_str(cr.parity)},
                    {"in_gsequence", cr.in_gsequence}});
  }
  a["cf_convergents"] = conv;
  emit(opt, a);
  return 0;
}

int cmd_hyperbolic(const CliOptions& opt) {
  json a = artifact_head(opt.cfg);
  GroupWord w = GroupWord::parse(opt.word);
  Rat c = rat_parse(opt.c_str);
  a["word"] = w.str();
  a["translation_length"] = hyperbolic::translation_length(w, c);
  Exec exec = opt.cfg.serial ? Exec::Serial : Exec::Par;
  auto e = veech::eigen(w, Rat(1), opt.cfg.precision_bits);
  if (e.classification == veech::Classification::Hyperbolic) {
    a["lambda_1"] = e.lambda;
    const int points = 200;
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i)
      grid[i] = veech::eigenvalue_modulus(w, Rat(-1) + rat_of(2 * i, points));
    a["eigenvalue_modulus_grid"] = grid;
    a["grid_max_modulus"] = veech::max_modulus_on_grid(w, points, exec);
    auto kd = veech::kappa(w, opt.cfg.precision_bits);
    a["kappa"] = kd.kappa.d();
    a["dc_2log_lambda"] = kd.derivative.d();
  }
  QuadratureConfig qc;
  qc.tolerance = opt.cfg.quad_tolerance;
  a["distance_agreement_worst_100_pairs"] =
      hyperbolic::distance_agreement_scan(100, opt.cfg.seed, qc, exec);
  hyperbolic::KleinPoint p{0.3, 0.4}, q{-0.2, 0.55};
  a["distance_example"] = {{"cr", hyperbolic::klein_distance_cr(p, q)},
                           {"integral", hyperbolic::klein_distance_integral(p, q, qc)}};
  auto cd = hyperbolic::contraction_derivative_check(0.3, 0.4);
  a["contraction_derivatives_at_0.3_0.4"] = {cd.horizontal, cd.vertical};
  emit(opt, a);
  return 0;
}

int cmd_verify_all(const CliOptions& opt) {
  auto results = verify::run_all(opt.cfg);
  json a = artifact_head(opt.cfg);
  json rows = json::array();
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << "  ("
              << r.seconds << "s)\n";
    if (!r.passed) std::cout << "      " << r.detail << "\n";
    all = all && r.passed;
    rows.push_back({{"id", r.id},
                    {"name", r.name},
                    {"passed", r.passed},
                    {"seconds", r.seconds},
                    {"detail", r.detail}});
  }
  a["criteria"] = rows;
  a["all_passed"] = all;
  if (!opt.out.empty()) emit(opt, a);
  std::cout << (all ? "all criteria passed" : "CRITERIA FAILED") << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification and exploration toolkit for the parabola translation surfaces S_c"};
  app.require_subcommand(1);

  CliOptions opt;
  app.add_option("--precision", opt.cfg.precision_bits, "working precision in bits");
  app.add_option("--quad-tol", opt.cfg.quad_tolerance, "quadrature refinement tolerance");
  app.add_option("--m", opt.cfg.m_list, "iterate counts for asymptotic runs")->delimiter(',');
  app.add_option("--depth", opt.cfg.depth, "G-sequence depth");
  app.add_option("--word", opt.word, "group word, e.g. DE'");
  app.add_option("--theta", opt.theta, "direction: sqrt:d, quad:a,b,d,e or dec:<digits>[@bits]");
  app.add_option("--c", opt.c_str, "surface parameter c as a rational, e.g. 5/4");
  app.add_option("--A", opt.cyl_a, "first cylinder as family:n (horiz:1, slope1:2)");
  app.add_option("--B", opt.cyl_b, "second cylinder as family:n");
  app.add_option("--n", opt.n_max, "table size for cylinder/holonomy sweeps");
  app.add_option("--out", opt.out, "write the artifact to this file instead of stdout");
  app.add_option("--format", opt.cfg.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", opt.cfg.seed, "seed for randomized property suites");
  app.add_flag("--serial", opt.cfg.serial, "run kernels on the serial reference path");

  app.add_subcommand("surface", "cylinder geometry tables")->fallthrough();
  app.add_subcommand("homology", "holonomy tables, actions, reconstruction")->fallthrough();
  app.add_subcommand("asymptotics", "cylinder intersection asymptotics")->fallthrough();
  app.add_subcommand("farey", "G-sequences, witnesses, continued fractions")->fallthrough();
  app.add_subcommand("hyperbolic", "Klein-model distances and eigenvalue scans")->fallthrough();
  app.add_subcommand("verify-all", "run the full acceptance suite")->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("surface")) return cmd_surface(opt);
    if (app.got_subcommand("homology")) return cmd_homology(opt);
    if (app.got_subcommand("asymptotics")) return cmd_asymptotics(opt);
    if (app.got_subcommand("farey")) return cmd_farey(opt);
    if (app.got_subcommand("hyperbolic")) return cmd_hyperbolic(opt);
    if (app.got_subcommand("verify-all")) return cmd_verify_all(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

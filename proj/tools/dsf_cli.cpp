// disk-semiflow: command-line front end.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "dsf/audit.hpp"
#include "dsf/boundary.hpp"
#include "dsf/gallery.hpp"
#include "dsf/json_io.hpp"
#include "dsf/lifting.hpp"
#include "dsf/model_spec.hpp"

using namespace dsf;
using nlohmann::json;
using json_io::to_pair;

namespace {

struct Globals {
  std::uint64_t seed = 42;
  double tol_scale = 1.0;
  bool json_out = false;
  bool csv_out = false;
  std::string out;
};

// "gallery:<id>" is accepted in place of a spec file.
ModelSpec read_spec(const std::string& arg) {
  if (arg.starts_with("gallery:")) return model_spec_from_json(json{{"gallery", arg.substr(8)}});
  return load_model_spec(arg);
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw Error(ErrorKind::Io, g.out + ": cannot open for writing");
  f << text;
  if (!f) throw Error(ErrorKind::Io, g.out + ": write failed");
}

void emit_json(const Globals& g, const json& j) { emit(g, j.dump(2) + "\n"); }

std::string csv_num(double x) { return format_double(x); }

json number(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

std::vector<cplx> read_grid_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::Io, path + ": cannot open grid file");
  std::vector<cplx> pts;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream in(line);
    std::string a, b;
    if (!std::getline(in, a, ',') || !std::getline(in, b)) {
      throw Error(ErrorKind::Parse, path + ":" + std::to_string(lineno) + ": expected re,im");
    }
    try {
      pts.emplace_back(std::stod(a), std::stod(b));
    } catch (const std::exception&) {
      if (lineno == 1) continue;  // header row
      throw Error(ErrorKind::Parse, path + ":" + std::to_string(lineno) + ": expected re,im");
    }
  }
  return pts;
}

std::vector<ApproachPath> parse_paths(const std::string& list) {
  std::vector<ApproachPath> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "radial") {
      out.push_back(ApproachPath::radial());
    } else if (item == "stolz") {
      for (double a : {pi / 8, pi / 4, 3 * pi / 8})
        for (int s : {-1, 1}) out.push_back(ApproachPath::stolz(a, s));
    } else if (item == "tangential") {
      for (int s : {-1, 1}) out.push_back(ApproachPath::tangential(1.5, s));
    } else {
      throw Error(ErrorKind::Parse, "--paths: unknown path kind '" + item + "'");
    }
  }
  if (out.empty()) throw Error(ErrorKind::Parse, "--paths: empty list");
  return out;
}

json path_json(const PathLimit& p) {
  return {{"path", p.path},
          {"converged", p.converged},
          {"diverges", p.diverges},
          {"value", to_pair(p.value)},
          {"samples", p.samples}};
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse:
    case ErrorKind::Io:
    case ErrorKind::Lookup:
    case ErrorKind::Domain:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continuous semigroups of holomorphic self-maps of the unit disk"};
  app.name("disk-semiflow");
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "RNG seed for randomized checks");
  app.add_option("--tol-scale", g.tol_scale, "multiplier for integrator and quadrature tolerances")
      ->check(CLI::PositiveNumber);
  auto* jflag = app.add_flag("--json", g.json_out, "JSON output");
  auto* cflag = app.add_flag("--csv", g.csv_out, "CSV output");
  jflag->excludes(cflag);
  app.add_option("--out", g.out, "write output to this file");

  std::string model_arg, z_arg = "0", grid_file, target = "all", paths_arg = "radial,stolz,tangential";
  double t = 1.0, t_max = 2.0, sigma_angle = 0.0, T = 2.0;
  int steps = 20, grid = 64;

  auto* flow = app.add_subcommand("flow", "evaluate phi_t(z)");
  flow->add_option("--model", model_arg, "model spec file or gallery:<id>")->required();
  flow->add_option("--z", z_arg, "point in the disk, e.g. \"0.5+0.1i\"")->required();
  flow->add_option("--t", t, "time")->required();

  auto* traj = app.add_subcommand("trajectory", "sample t -> phi_t(z) as CSV");
  traj->add_option("--model", model_arg)->required();
  traj->add_option("--z", z_arg)->required();
  traj->add_option("--t-max", t_max, "final time")->check(CLI::PositiveNumber);
  traj->add_option("--steps", steps, "number of equal time steps")->check(CLI::PositiveNumber);

  auto* koen = app.add_subcommand("koenigs", "evaluate the Koenigs function");
  koen->add_option("--model", model_arg)->required();
  koen->add_option("--z", z_arg);
  koen->add_option("--grid", grid_file, "CSV file of re,im points");
  koen->add_option("--t", t, "time used for the functional-equation residual");

  auto* lift = app.add_subcommand("lift", "lifted semigroup on the right half-plane");
  lift->add_option("--model", model_arg)->required();
  lift->add_option("--z", z_arg, "point with Re > 0")->required();
  lift->add_option("--t", t)->required();

  auto* probe = app.add_subcommand("probe", "boundary report at one point of the circle");
  probe->add_option("--model", model_arg)->required();
  probe->add_option("--sigma-angle", sigma_angle, "angle of sigma in radians")->required();
  probe->add_option("--paths", paths_arg, "comma list of radial, stolz, tangential");
  probe->add_option("--T", T, "time for the path limits");

  auto* cls = app.add_subcommand("classify", "classify boundary points around the circle");
  cls->add_option("--model", model_arg)->required();
  cls->add_option("--grid", grid, "number of equally spaced points")->check(CLI::PositiveNumber);

  auto* gal = app.add_subcommand("gallery", "gallery metadata");
  gal->require_subcommand(1);
  auto* gal_list = gal->add_subcommand("list", "list gallery models");
  std::string gal_id;
  auto* gal_desc = gal->add_subcommand("describe", "describe one gallery model");
  gal_desc->add_option("id", gal_id)->required();

  auto* audit = app.add_subcommand("audit", "run the check suite");
  audit->add_option("--model", model_arg, "model spec file or gallery:<id>");
  audit->add_option("target", target, "all or gallery:<id>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*flow) {
      const SemigroupModel m = build_model(read_spec(model_arg), g.tol_scale);
      const cplx z = parse_complex(z_arg);
      const cplx v = m.flow(z, t);
      json res = {{"semigroup", semigroup_residual(m, z, t / 2, t / 2)}};
      if (t > 0.0) res["commutativity"] = commutativity_residual(m, z, t / 3, 2 * t / 3);
      emit_json(g, {{"z", to_pair(z)}, {"t", t}, {"value", to_pair(v)}, {"residuals", res}});
      return 0;
    }
    if (*traj) {
      const SemigroupModel m = build_model(read_spec(model_arg), g.tol_scale);
      const cplx z = parse_complex(z_arg);
      std::vector<double> ts;
      for (int k = 0; k <= steps; ++k) ts.push_back(k == steps ? t_max : t_max * k / steps);
      const auto vals = m.trajectory(z, ts);
      if (g.json_out) {
        json rows = json::array();
        for (std::size_t k = 0; k < ts.size(); ++k)
          rows.push_back({{"t", ts[k]}, {"value", to_pair(vals[k])}});
        emit_json(g, rows);
      } else {
        std::string s = "t,re,im\n";
        for (std::size_t k = 0; k < ts.size(); ++k)
          s += csv_num(ts[k]) + "," + csv_num(vals[k].real()) + "," + csv_num(vals[k].imag()) + "\n";
        emit(g, s);
      }
      return 0;
    }
    if (*koen) {
      const ModelSpec spec = read_spec(model_arg);
      const SemigroupModel m = build_model(spec, g.tol_scale);
      QuadratureConfig q;
      q.abs_tol *= g.tol_scale;
      q.rel_tol *= g.tol_scale;
      const KoenigsFunction h = koenigs_for(m.with_config(m.config()), q);
      const bool interior = h.kind() == KoenigsCase::Interior;
      auto one = [&](cplx z) {
        json j = {{"z", to_pair(z)}, {"h", to_pair(h(z))}, {"case", interior ? "interior" : "boundary"}};
        if (interior) {
          j["lambda"] = to_pair(h.lambda());
          j["residual_schroeder"] = schroeder_residual(h, m, z, t);
        } else {
          j["residual_abel"] = abel_residual(h, m, z, t);
        }
        return j;
      };
      if (grid_file.empty()) {
        emit_json(g, one(parse_complex(z_arg)));
      } else if (g.csv_out) {
        std::string s = interior ? "re,im,h_re,h_im,residual_schroeder\n" : "re,im,h_re,h_im,residual_abel\n";
        for (cplx z : read_grid_csv(grid_file)) {
          const json j = one(z);
          const cplx v = h(z);
          s += csv_num(z.real()) + "," + csv_num(z.imag()) + "," + csv_num(v.real()) + "," +
               csv_num(v.imag()) + "," +
               csv_num(j[interior ? "residual_schroeder" : "residual_abel"].get<double>()) + "\n";
        }
        emit(g, s);
      } else {
        json rows = json::array();
        for (cplx z : read_grid_csv(grid_file)) rows.push_back(one(z));
        emit_json(g, rows);
      }
      return 0;
    }
    if (*lift) {
      const SemigroupModel m = build_model(read_spec(model_arg), g.tol_scale);
      QuadratureConfig q;
      q.abs_tol *= g.tol_scale;
      q.rel_tol *= g.tol_scale;
      const LiftedModel lm(m, q);
      const cplx w = parse_complex(z_arg);
      emit_json(g, {{"z", to_pair(w)},
                    {"t", t},
                    {"lifted_value", to_pair(lm.flow(w, t))},
                    {"conjugation_residual", conjugation_residual(lm, w, t)},
                    {"abel_residual", lifted_abel_residual(lm, w, t)}});
      return 0;
    }
    if (*probe) {
      const SemigroupModel m = build_model(read_spec(model_arg), g.tol_scale);
      const cplx sigma = unit(sigma_angle);
      json j = classify_point(m, sigma).to_json();
      json paths = json::array();
      for (const auto& p : parse_paths(paths_arg))
        paths.push_back(path_json(path_limit([&](cplx z) { return m.flow(z, T); }, sigma, p)));
      j["path_limits"] = {{"t", T}, {"paths", paths}};
      emit_json(g, j);
      return 0;
    }
    if (*cls) {
      const SemigroupModel m = build_model(read_spec(model_arg), g.tol_scale);
      std::string s = "angle,re,im,classification,dilation\n";
      json rows = json::array();
      for (int k = 0; k < grid; ++k) {
        const double a = 2.0 * pi * k / grid;
        const BoundaryPointReport rep = classify_point(m, unit(a));
        const double d = rep.dilations.size() > 1 ? rep.dilations[1]
                                                  : std::numeric_limits<double>::infinity();
        const std::string c(to_string(rep.classification));
        s += csv_num(a) + "," + csv_num(std::cos(a)) + "," + csv_num(std::sin(a)) + "," + c + "," +
             csv_num(d) + "\n";
        rows.push_back({{"angle", a}, {"classification", c}, {"dilation", number(d)}});
      }
      if (g.json_out) emit_json(g, rows);
      else emit(g, s);
      return 0;
    }
    if (*gal_list) {
      json rows = json::array();
      for (const auto& id : gallery_ids()) {
        const auto& e = gallery_model(id);
        rows.push_back({{"id", id}, {"type", std::string(to_string(e.type))}, {"omega", e.omega}});
      }
      emit_json(g, rows);
      return 0;
    }
    if (*gal_desc) {
      emit_json(g, gallery_model(gal_id).describe());
      return 0;
    }
    if (*audit) {
      AuditOptions opts;
      opts.seed = g.seed;
      opts.tol_scale = g.tol_scale;
      const AuditReport rep = model_arg.empty() ? run_audit(target, opts)
                                                : run_audit(read_spec(model_arg), opts);
      if (g.csv_out) emit(g, rep.to_csv());
      else emit_json(g, rep.to_json());
      return rep.passed() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "disk-semiflow: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "disk-semiflow: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

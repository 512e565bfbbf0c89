#include "dsf/audit.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "dsf/json_io.hpp"

namespace dsf {

namespace measure {

double semigroup_law(const SemigroupModel& m, Rng& rng, int n, double r_max, double t_max) {
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const cplx z = rng.disk(r_max);
    const double s = rng.uniform(0.0, t_max), t = rng.uniform(0.0, t_max);
    worst = std::max(worst, semigroup_residual(m, z, s, t));
  }
  return worst;
}

double commutativity(const SemigroupModel& m, Rng& rng, int n) {
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const cplx z = rng.disk(0.95);
    const double s = rng.uniform(0.0, 2.0), t = rng.uniform(0.0, 2.0);
    worst = std::max(worst, commutativity_residual(m, z, s, t));
  }
  return worst;
}

double generator_ratio_deviation(const SemigroupModel& m, Rng& rng, int n) {
  const GeneratorFn& G = m.generator();
  double worst = 0.0;
  int taken = 0;
  for (int attempt = 0; taken < n && attempt < 100 * n; ++attempt) {
    const cplx z = rng.disk(0.9);
    const double h = 1e-6;
    const cplx dG = (G(z + h) - G(z - h)) / (2.0 * h);
    if (std::abs(dG * G(z)) < 0.2) continue;
    ++taken;
    const double r1 = generator_residual(m, z, 1e-2), r2 = generator_residual(m, z, 1e-3),
                 r3 = generator_residual(m, z, 1e-4);
    worst = std::max({worst, std::abs(r1 / r2 - 10.0), std::abs(r2 / r3 - 10.0)});
  }
  if (taken < n) return std::numeric_limits<double>::infinity();
  return worst;
}

std::vector<double> continuity_at_zero(const SemigroupModel& m, const std::vector<double>& deltas) {
  std::vector<double> out;
  for (double d : deltas) {
    double sup = 0.0;
    for (int i = 1; i <= 8; ++i)
      for (int k = 0; k < 16; ++k) {
        const cplx z = std::polar(0.95 * i / 8.0, 2.0 * pi * (k + 0.5) / 16.0);
        sup = std::max(sup, std::abs(m.flow(z, d) - z));
      }
    out.push_back(sup);
  }
  return out;
}

double schwarz_pick_excess(const SemigroupModel& m, Rng& rng, int n) {
  double worst = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < n; ++k) {
    const cplx z = rng.disk(0.95);
    const double t = rng.uniform(0.0, 2.0);
    const double a = std::abs(m.flow(0.0, t)), r = std::abs(z);
    worst = std::max(worst, std::abs(m.flow(z, t)) - (r + a) / (1.0 + a * r));
  }
  return worst;
}

double functional_equation(const KoenigsFunction& h, const SemigroupModel& m, Rng& rng, int n,
                           double r_max, double t_max) {
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const cplx z = rng.disk(r_max);
    const double t = rng.uniform(0.0, t_max);
    const double r = h.kind() == KoenigsCase::Boundary ? abel_residual(h, m, z, t)
                                                       : schroeder_residual(h, m, z, t);
    worst = std::max(worst, r);
  }
  return worst;
}

double injectivity_margin(const std::function<cplx(cplx)>& h, Rng& rng, int pairs,
                          double r_max) {
  double least = std::numeric_limits<double>::infinity();
  for (int k = 0; k < pairs;) {
    const cplx a = rng.disk(r_max), b = rng.disk(r_max);
    if (std::abs(a - b) <= 1e-3) continue;
    ++k;
    least = std::min(least, std::abs(h(a) - h(b)));
  }
  return least;
}

double panel_halving(const KoenigsFunction& h) {
  double worst = 0.0;
  for (double r : {0.2, 0.5, 0.8})
    for (int k = 0; k < 8; ++k) {
      const cplx z = std::polar(r, 2.0 * pi * (k + 0.25) / 8.0);
      worst = std::max(worst, std::abs(h.evaluate_fixed(z, 64) - h.evaluate_fixed(z, 32)));
    }
  return worst;
}

double flow_cross(const SemigroupModel& a, const SemigroupModel& b, Rng& rng, int n) {
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const cplx z = rng.disk(0.95);
    const double t = rng.uniform(0.0, 3.0);
    worst = std::max(worst, std::abs(a.flow(z, t) - b.flow(z, t)));
  }
  return worst;
}

double generator_from_flow(const SemigroupModel& m, Rng& rng, int n, double delta, double r_max) {
  double worst = 0.0;
  for (int k = 0; k < n; ++k) worst = std::max(worst, generator_residual(m, rng.disk(r_max), delta));
  return worst;
}

cplx random_halfplane(Rng& rng) {
  const double x = rng.uniform(0.2, 3.0);
  return {x, rng.uniform(-3.0, 3.0)};
}

double lifting_conjugation(const LiftedModel& lm, Rng& rng, int n) {
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const cplx w = random_halfplane(rng);
    worst = std::max(worst, conjugation_residual(lm, w, rng.uniform(0.0, 2.0)));
  }
  return worst;
}

double lifting_abel(const LiftedModel& lm, Rng& rng, int n) {
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const cplx w = random_halfplane(rng);
    worst = std::max(worst, lifted_abel_residual(lm, w, rng.uniform(0.0, 2.0)));
  }
  return worst;
}

double lifting_uniqueness(const LiftedModel& lm, Rng& rng, int n) {
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const cplx w = random_halfplane(rng);
    const double t = rng.uniform(0.0, 2.0);
    worst = std::max(worst, std::abs(lm.flow(w, t) - lm.projected_flow(w, t)));
  }
  return worst;
}

double lifted_generator_min_re(const BerksonPortaData& bp) {
  double m = std::numeric_limits<double>::infinity();
  for (cplx w : halfplane_grid()) m = std::min(m, lifted_generator(bp, w).real());
  return m;
}

double lifted_koenigs_derivative(const LiftedModel& lm, Rng& rng, int n) {
  double worst = 0.0;
  const double h = 1e-3;
  for (int k = 0; k < n; ++k) {
    const cplx w = random_halfplane(rng);
    const cplx d = (-lm.koenigs(w + 2.0 * h) + 8.0 * lm.koenigs(w + h) - 8.0 * lm.koenigs(w - h) +
                    lm.koenigs(w - 2.0 * h)) /
                   (12.0 * h);
    worst = std::max(worst, std::abs(d * lm.generator(w) - 1.0));
  }
  return worst;
}

AngularSweep angular_uniformity(const SemigroupModel& m, int n_sigma) {
  AngularSweep out;
  for (int k = 0; k < n_sigma; ++k) {
    const cplx sigma = unit(2.0 * pi * k / n_sigma);
    for (int j = 0; j <= 8; ++j) {
      const AngularLimit L = angular_limit(m, sigma, 0.25 * j);
      out.sup_disagreement = std::max(out.sup_disagreement, L.disagreement);
      if (!L.converged) ++out.unconverged;
    }
  }
  return out;
}

std::vector<cplx> closed_disk_grid() {
  std::vector<cplx> g;
  for (int i = 0; i < 30; ++i)
    for (int k = 0; k < 30; ++k)
      g.push_back(std::polar(0.999 * (i + 1) / 30.0, 2.0 * pi * (k + 0.5) / 30.0));
  for (int k = 0; k < 100; ++k) g.push_back(unit(2.0 * pi * k / 100.0));
  return g;
}

std::vector<TimeModulus> time_modulus(const SemigroupModel& m) {
  std::vector<double> ts;
  for (int j = 0; j <= 20; ++j) ts.push_back(0.1 * j);
  return time_equicontinuity(m, closed_disk_grid(), ts, {0.0, 1e-3, 1e-2, 1e-1});
}

double slit_roundtrip(Rng& rng, int n) {
  double worst = 0.0;
  for (int k = 0; k < n;) {
    const cplx w{rng.uniform(-10.0, 10.0), rng.uniform(1e-3, 8.0)};
    if (!in_slit_domain(w)) continue;
    ++k;
    worst = std::max(worst, std::abs(slit_map_forward(slit_map_inverse(w)) - w));
  }
  return worst;
}

namespace {

NevanlinnaData random_nevanlinna(Rng& rng) {
  std::vector<LineAtom> atoms;
  for (int a = 0; a < 3; ++a) atoms.push_back({rng.uniform(-3.0, 3.0), rng.uniform(0.1, 1.0)});
  return NevanlinnaData(rng.uniform(-1.0, 1.0), rng.uniform(0.0, 1.0), atoms,
                        {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
}

}  // namespace

double nevanlinna_fd_error(Rng& rng, int n) {
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const NevanlinnaData d = random_nevanlinna(rng);
    const cplx z{rng.uniform(0.1, 3.0), rng.uniform(-3.0, 3.0)};
    const double h = 1e-5;
    const cplx fd = (eval_H(d, z + h) - eval_H(d, z - h)) / (2.0 * h);
    worst = std::max(worst, std::abs(fd - eval_Hprime(d, z)));
  }
  return worst;
}

std::size_t nevanlinna_bound_violations(Rng& rng, int n) {
  const int per = 100;
  std::size_t v = 0;
  for (int k = 0; k < (n + per - 1) / per; ++k) {
    const cplx z{rng.uniform(1e-3, 5.0), rng.uniform(-5.0, 5.0)};
    std::vector<double> ts;
    for (int j = 0; j < per; ++j) ts.push_back(rng.uniform(-50.0, 50.0));
    v += integrand_bound_check(z, ts).violations;
  }
  return v;
}

}  // namespace measure

// ---------------------------------------------------------------------------

nlohmann::json CheckRecord::to_json() const {
  nlohmann::json j = {{"id", id},
                      {"anchor", anchor},
                      {"model", model},
                      {"parameters", parameters},
                      {"measured", std::isfinite(measured) ? nlohmann::json(measured)
                                                           : nlohmann::json(format_double(measured))},
                      {"threshold", threshold},
                      {"relation", relation},
                      {"pass", pass}};
  if (!error.empty()) j["error"] = error;
  return j;
}

bool AuditReport::passed() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

nlohmann::json AuditReport::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  std::size_t failed = 0;
  for (const auto& r : records) {
    checks.push_back(r.to_json());
    if (!r.pass) ++failed;
  }
  return {{"seed", seed},
          {"target", target},
          {"summary", passed() ? "pass" : "fail"},
          {"total", records.size()},
          {"failed", failed},
          {"checks", checks}};
}

std::string AuditReport::to_csv() const {
  std::ostringstream out;
  out << "id,model,measured,relation,threshold,pass\n";
  for (const auto& r : records)
    out << r.id << ',' << r.model << ',' << format_double(r.measured) << ',' << r.relation << ','
        << format_double(r.threshold) << ',' << (r.pass ? "pass" : "fail") << '\n';
  return out.str();
}

unsigned worker_count(unsigned requested) {
  unsigned n = requested;
  if (n == 0) {
    n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("DISK_SEMIFLOW_THREADS")) {
      const long cap = std::strtol(env, nullptr, 10);
      if (cap > 0) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
  }
  return std::max(1u, n);
}

namespace {

using Body = std::function<void(Rng&, CheckRecord&)>;

struct Check {
  CheckRecord rec;
  Body body;
};

class Suite {
 public:
  void add(std::string model, std::string name, std::string anchor, Body body) {
    CheckRecord r;
    r.id = model + "/" + name;
    r.model = std::move(model);
    r.anchor = std::move(anchor);
    checks_.push_back({std::move(r), std::move(body)});
  }
  // A check whose measured value is a single number against a threshold.
  void add_value(std::string model, std::string name, std::string anchor, double threshold,
                 std::string relation, nlohmann::json params, std::function<double(Rng&)> f) {
    add(std::move(model), std::move(name), std::move(anchor),
        [=](Rng& rng, CheckRecord& r) {
          r.threshold = threshold;
          r.relation = relation;
          r.parameters = params;
          r.measured = f(rng);
        });
  }

  std::vector<CheckRecord> run(std::uint64_t seed, unsigned threads) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < checks_.size(); i = next++) execute(checks_[i], seed);
    };
    const unsigned n = std::min<unsigned>(threads, std::max<std::size_t>(1, checks_.size()));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::vector<CheckRecord> out;
    for (auto& c : checks_) out.push_back(std::move(c.rec));
    std::sort(out.begin(), out.end(),
              [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
    return out;
  }

 private:
  static void execute(Check& c, std::uint64_t seed) {
    Rng rng(seed, c.rec.id);
    try {
      c.body(rng, c.rec);
      const double m = c.rec.measured, t = c.rec.threshold;
      const auto& rel = c.rec.relation;
      bool ok = false;
      if (rel == "<=") ok = m <= t;
      else if (rel == "<") ok = m < t;
      else if (rel == ">=") ok = m >= t;
      else if (rel == ">") ok = m > t;
      c.rec.pass = ok && !std::isnan(m);
    } catch (const Error& e) {
      c.rec.pass = false;
      c.rec.measured = std::numeric_limits<double>::quiet_NaN();
      c.rec.error = std::string(to_string(e.kind())) + ": " + e.what();
    } catch (const std::exception& e) {
      c.rec.pass = false;
      c.rec.measured = std::numeric_limits<double>::quiet_NaN();
      c.rec.error = e.what();
    }
  }

  std::vector<Check> checks_;
};

QuadratureConfig scaled_quadrature(double s) {
  QuadratureConfig q;
  q.abs_tol *= s;
  q.rel_tol *= s;
  return q;
}

// Flow, Koenigs and lifting checks shared by gallery entries and raw generators.
void add_generator_checks(Suite& suite, const std::string& id, const SemigroupModel& model,
                          const BerksonPortaData& bp, const QuadratureConfig& q) {
  suite.add_value(id, "berkson-porta-positivity", "Berkson-Porta positivity of p",
                  -kPositivityTolerance, ">=", {{"grid_points", 10000}}, [bp](Rng&) {
                    return validate_positivity(bp, validation_grid()).min_re_p;
                  });
  suite.add_value(id, "semigroup-law", "semigroup property", 1e-8, "<=",
                  {{"samples", 200}, {"r_max", 0.95}, {"t_max", 2.0}},
                  [model](Rng& rng) { return measure::semigroup_law(model, rng, 200); });
  suite.add_value(id, "commutativity", "commuting flow maps", 1e-8, "<=", {{"samples", 100}},
                  [model](Rng& rng) { return measure::commutativity(model, rng, 100); });
  suite.add_value(id, "generator-consistency", "generator as time derivative of the flow", 3.0,
                  "<=", {{"samples", 50}, {"deltas", {1e-2, 1e-3, 1e-4}}, {"expected_ratio", 10}},
                  [model](Rng& rng) { return measure::generator_ratio_deviation(model, rng, 50); });
  suite.add(id, "continuity-at-zero", "continuity of the flow at t = 0",
            [model](Rng&, CheckRecord& r) {
              const std::vector<double> ds{1e-2, 1e-3, 1e-4, 1e-6};
              const auto sup = measure::continuity_at_zero(model, ds);
              r.parameters = {{"deltas", ds}, {"sup", sup}};
              bool decreasing = true;
              for (std::size_t k = 1; k < sup.size(); ++k) decreasing = decreasing && sup[k] < sup[k - 1];
              r.threshold = 1e-4;
              r.measured = decreasing ? sup.back() : std::numeric_limits<double>::infinity();
            });
  suite.add_value(id, "schwarz-pick", "Schwarz-Pick bound for the flow maps", 1e-12, "<=",
                  {{"samples", 100}},
                  [model](Rng& rng) { return measure::schwarz_pick_excess(model, rng, 100); });
  suite.add(id, "dw-point", "Denjoy-Wolff point equals tau", [model](Rng&, CheckRecord& r) {
    const bool parabolic = is_parabolic(model);
    const cplx tau = dw_point(model);
    const double T = model.config().max_time;
    r.parameters = {{"tau", json_io::to_pair(tau)}, {"T", T}, {"parabolic", parabolic}};
    r.threshold = parabolic ? 0.05 : 1e-6;
    r.measured = std::abs(model.flow(tau == cplx{0.0, 0.0} ? cplx{0.5, 0.0} : cplx{0.0, 0.0}, T) - tau);
  });

  const bool interior = std::abs(bp.tau) < 1.0;
  const KoenigsFunction h = interior ? KoenigsFunction::interior(bp, q)
                                     : KoenigsFunction::boundary(GeneratorFn::from(bp), bp.tau, q);
  suite.add_value(id, "koenigs-equation",
                  interior ? "Schroeder equation for the Koenigs function"
                           : "Abel equation for the Koenigs function",
                  1e-7, "<=", {{"samples", 200}, {"r_max", 0.9}, {"t_max", 2.0}},
                  [h, model](Rng& rng) { return measure::functional_equation(h, model, rng, 200); });
  suite.add(id, "koenigs-normalization", "Koenigs normalization", [h, interior, bp](Rng&, CheckRecord& r) {
    r.threshold = 1e-9;
    if (!interior) {
      r.parameters = {{"condition", "h(0) = 0"}};
      r.measured = std::abs(h(0.0));
      return;
    }
    const cplx tau = bp.tau;
    const double d = 1e-3;
    const cplx dh = (-h(tau + 2.0 * d) + 8.0 * h(tau + d) - 8.0 * h(tau - d) + h(tau - 2.0 * d)) /
                    (12.0 * d);
    r.parameters = {{"condition", "h(tau) = 0, h'(tau) = 1/(1-|tau|^2)"}, {"step", d}};
    r.measured = std::max(std::abs(h(tau)), std::abs(dh * (1.0 - std::norm(tau)) - 1.0));
  });
  suite.add_value(id, "koenigs-injectivity", "univalence of the Koenigs function", 1e-9, ">",
                  {{"pairs", 500}, {"min_separation", 1e-3}},
                  [h](Rng& rng) { return measure::injectivity_margin(h, rng, 500); });
  suite.add_value(id, "koenigs-panel-halving", "quadrature order of the Koenigs integral", 1e-10,
                  "<=", {{"panels", {32, 64}}}, [h](Rng&) { return measure::panel_halving(h); });
  if (!interior) {
    suite.add(id, "halfplane-conjugate", "half-plane conjugate has Re H' >= 0",
              [h, bp](Rng&, CheckRecord& r) {
                const cplx sigma = -bp.tau;
                const HalfPlaneConjugate H(h, sigma);
                const double m = H.min_re_derivative(halfplane_grid());
                const double a = H(1.0).real(), b = H(0.5).real(), c = H(0.1).real();
                r.parameters = {{"sigma", json_io::to_pair(sigma)},
                                {"re_H", {a, b, c}},
                                {"x", {1.0, 0.5, 0.1}}};
                r.threshold = -1e-10;
                r.relation = ">=";
                // Re H' can vanish identically (linear-fractional h), so only
                // require Re H to be nonincreasing as x decreases.
                const double slack = 1e-12 * (1.0 + std::abs(a) + std::abs(c));
                r.measured = (a >= b - slack && b >= c - slack) ? m : -std::numeric_limits<double>::infinity();
              });
  }
  if (bp.tau == cplx{0.0, 0.0}) {
    const LiftedModel lm(model, q);
    suite.add_value(id, "lifting-conjugation", "exp(-lifted flow) = flow(exp(-w))", 1e-8, "<=",
                    {{"samples", 100}},
                    [lm](Rng& rng) { return measure::lifting_conjugation(lm, rng, 100); });
    suite.add_value(id, "lifting-abel", "Abel equation for the lifted Koenigs function", 1e-7,
                    "<=", {{"samples", 100}},
                    [lm](Rng& rng) { return measure::lifting_abel(lm, rng, 100); });
    suite.add_value(id, "lifting-uniqueness", "uniqueness of the lifted semigroup", 1e-8, "<=",
                    {{"samples", 20}},
                    [lm](Rng& rng) { return measure::lifting_uniqueness(lm, rng, 20); });
    suite.add_value(id, "lifted-generator-positivity", "Re of the lifted generator >= 0", -1e-12,
                    ">=", {{"grid_points", halfplane_grid().size()}},
                    [bp](Rng&) { return measure::lifted_generator_min_re(bp); });
    suite.add_value(id, "lifted-koenigs-derivative", "h0' G~ = 1 for the lifted Koenigs function",
                    1e-8, "<=", {{"samples", 20}, {"step", 1e-3}},
                    [lm](Rng& rng) { return measure::lifted_koenigs_derivative(lm, rng, 20); });
  }
}

std::string sigma_label(cplx s) {
  return format_double(s.real()) + (s.imag() < 0 ? "" : "+") + format_double(s.imag()) + "i";
}

void add_gallery_checks(Suite& suite, const GalleryEntry& e, double tol_scale) {
  const FlowConfig cfg = scaled(FlowConfig{}, tol_scale);
  const QuadratureConfig q = scaled_quadrature(tol_scale);
  const SemigroupModel model = e.model(cfg);
  const SemigroupModel ode = e.generator_model(cfg);
  const std::string& id = e.id;
  add_generator_checks(suite, id, model, e.bp, q);

  suite.add_value(id, "semigroup-law-ode", "semigroup property (integrated flow)", 1e-8, "<=",
                  {{"samples", 200}},
                  [ode](Rng& rng) { return measure::semigroup_law(ode, rng, 200); });
  suite.add_value(id, "flow-cross-validation", "integrated flow matches the closed form", 1e-8,
                  "<=", {{"samples", 100}, {"t_max", 3.0}},
                  [model, ode](Rng& rng) { return measure::flow_cross(model, ode, rng, 100); });
  const KoenigsFunction hc = e.koenigs();
  suite.add_value(id, "closed-form-koenigs", "closed-form Koenigs function solves its equation",
                  1e-10, "<=", {{"samples", 100}},
                  [hc, model](Rng& rng) { return measure::functional_equation(hc, model, rng, 100); });
  suite.add_value(id, "closed-form-generator", "closed-form flow has generator G", 1e-4, "<=",
                  {{"samples", 50}, {"delta", 1e-5}, {"r_max", 0.5}},
                  [model](Rng& rng) { return measure::generator_from_flow(model, rng, 50, 1e-5, 0.5); });

  // boundary behaviour
  suite.add(id, "angular-limits", "angular limits exist, uniformly in t",
            [model](Rng&, CheckRecord& r) {
              const auto sweep = measure::angular_uniformity(model, 32);
              r.parameters = {{"sigma_points", 32},
                              {"t", "0:0.25:2"},
                              {"alphas", "pi/8, pi/4, 3pi/8"},
                              {"unconverged", sweep.unconverged}};
              r.threshold = 1e-6;
              r.measured = sweep.unconverged ? std::numeric_limits<double>::infinity()
                                             : sweep.sup_disagreement;
            });
  suite.add(id, "fixed-point-classification", "boundary fixed points do not depend on t",
            [model, &e](Rng&, CheckRecord& r) {
              int mismatches = 0;
              nlohmann::json notes = nlohmann::json::array();
              for (int k = 0; k < 32; ++k) {
                const cplx sigma = unit(2.0 * pi * k / 32);
                const KnownFixedPoint* known = nullptr;
                for (const auto& fp : e.fixed_points)
                  if (std::abs(fp.sigma - sigma) < 1e-9) known = &fp;
                try {
                  const auto rep = classify_point(model, sigma);
                  PointClass expect = PointClass::Generic;
                  bool ok = true;
                  if (known) {
                    expect = known->role == "dw" ? PointClass::BoundaryDw : PointClass::RepellingRegular;
                    ok = rep.classification == expect;
                  } else {
                    ok = !rep.is_fixed;
                  }
                  if (!ok) {
                    ++mismatches;
                    notes.push_back(sigma_label(sigma) + ": " + std::string(to_string(rep.classification)));
                  }
                } catch (const Error& err) {
                  ++mismatches;
                  notes.push_back(sigma_label(sigma) + ": " + err.what());
                }
              }
              r.parameters = {{"sigma_points", 32}, {"t", {0.5, 1.0, 2.0}}, {"mismatches", notes}};
              r.threshold = 0;
              r.measured = mismatches;
            });
  if (!e.fixed_points.empty()) {
    suite.add(id, "unrestricted-limits", "unrestricted limits at boundary fixed points",
              [model, &e](Rng&, CheckRecord& r) {
                int bad = 0;
                nlohmann::json v = nlohmann::json::object();
                for (const auto& fp : e.fixed_points) {
                  const auto res = unrestricted_probe([&](cplx z) { return model.flow(z, 1.0); },
                                                      fp.sigma, mixed_paths(), 1e-6, 40);
                  v[sigma_label(fp.sigma)] = std::string(to_string(res.verdict));
                  if (res.verdict != Verdict::Agrees || std::abs(res.limit - fp.sigma) > 1e-6) ++bad;
                }
                r.parameters = {{"t", 1.0}, {"tol", 1e-6}, {"verdicts", v}};
                r.threshold = 0;
                r.measured = bad;
              });
    suite.add(id, "equicontinuity", "equicontinuity at boundary fixed points on [0, T]",
              [model, &e](Rng&, CheckRecord& r) {
                double worst = 0.0;
                bool monotone = true;
                nlohmann::json tab = nlohmann::json::object();
                for (const auto& fp : e.fixed_points) {
                  const auto m = equicontinuity_modulus(model, fp.sigma, 2.0, {1e-1, 1e-2, 1e-3});
                  for (std::size_t k = 1; k < m.size(); ++k)
                    monotone = monotone && m[k].modulus >= m[k - 1].modulus;
                  worst = std::max(worst, m.front().modulus);
                  tab[sigma_label(fp.sigma)] = {m[0].modulus, m[1].modulus, m[2].modulus};
                }
                r.parameters = {{"T", 2.0}, {"deltas", {1e-3, 1e-2, 1e-1}}, {"modulus", tab}};
                r.threshold = 0.1;
                r.relation = "<";
                r.measured = monotone ? worst : std::numeric_limits<double>::infinity();
              });
  }
  suite.add(id, "time-equicontinuity", "uniform equicontinuity in t on the closed disk",
            [model](Rng&, CheckRecord& r) {
              const auto w = measure::time_modulus(model);
              bool monotone = w.front().modulus == 0.0;
              for (std::size_t k = 1; k < w.size(); ++k) monotone = monotone && w[k].modulus >= w[k - 1].modulus;
              nlohmann::json tab = nlohmann::json::array();
              for (const auto& x : w) tab.push_back({x.width, x.modulus});
              r.parameters = {{"grid_points", 1000}, {"T", 2.0}, {"omega", tab}};
              r.threshold = 1e-2;
              r.relation = "<";
              r.measured = monotone ? w[1].modulus : std::numeric_limits<double>::infinity();
            });
  suite.add(id, "long-time-boundary", "boundary orbits are fixed or tend to the DW point",
            [model, &e](Rng&, CheckRecord& r) {
              std::vector<cplx> pts;
              for (int k = 0; k < 16; ++k) pts.push_back(unit(2.0 * pi * (k + 0.5) / 16));
              for (const auto& fp : e.fixed_points) pts.push_back(fp.sigma);
              int undecided = 0;
              nlohmann::json notes = nlohmann::json::array();
              const double T = model.config().max_time;
              for (cplx s : pts) {
                const auto res = long_time_boundary(model, s, T);
                if (res.verdict == LongTime::Undecided) {
                  ++undecided;
                  notes.push_back(sigma_label(s) + ": distance " + format_double(res.distance));
                }
              }
              r.parameters = {{"points", pts.size()}, {"T", T}, {"undecided", notes}};
              r.threshold = 0;
              r.measured = undecided;
            });
  if (e.type != ModelType::EllipticInterior) {
    const SemigroupModel m_dw = model;
    const ModelType type = e.type;
    suite.add(id, "dilation-at-dw", "hyperbolic iff the dilation at the DW point is < 1",
              [m_dw, type, &e](Rng&, CheckRecord& r) {
                const double d = dilation(m_dw, e.dw, 1.0);
                r.parameters = {{"t", 1.0}, {"type", std::string(to_string(type))}, {"dilation", d}};
                if (type == ModelType::Hyperbolic) {
                  r.threshold = 1.0;
                  r.relation = "<";
                  r.measured = d;
                } else {
                  r.threshold = 1e-3;
                  r.measured = std::abs(d - 1.0);
                }
              });
    const KoenigsFunction hq = KoenigsFunction::boundary(e.generator(), e.dw, q);
    suite.add(id, "koenigs-signature", "boundary signature of the Koenigs function",
              [hq, &e](Rng&, CheckRecord& r) {
                int bad = 0;
                nlohmann::json notes = nlohmann::json::object();
                auto f = [&](cplx z) { return hq(z); };
                auto im = [&](cplx z) { return cplx{hq(z).imag(), 0.0}; };
                for (const auto& fp : e.fixed_points) {
                  if (fp.role == "dw") continue;
                  const auto sig = koenigs_signature(f, fp.sigma);
                  const auto probe = unrestricted_probe(
                      im, fp.sigma,
                      {ApproachPath::radial(), ApproachPath::tangential(2.0, -1),
                       ApproachPath::tangential(2.0, 1)},
                      1e-3, 27);
                  const bool ok = sig.re_to_minus_infinity && probe.verdict == Verdict::Disagrees;
                  notes[sigma_label(fp.sigma)] = {{"re_to_minus_infinity", sig.re_to_minus_infinity},
                                                  {"im_verdict", std::string(to_string(probe.verdict))}};
                  if (!ok) ++bad;
                }
                // a point that is not fixed: finite real part and Im limit
                const cplx s = -I;
                const auto sig = koenigs_signature(f, s);
                const bool ok = !sig.re_to_minus_infinity && sig.im_radial_limit.has_value();
                notes[sigma_label(s)] = {{"re_to_minus_infinity", sig.re_to_minus_infinity},
                                         {"im_radial_limit", sig.im_radial_limit.has_value()}};
                if (!ok) ++bad;
                r.parameters = {{"points", notes}};
                r.threshold = 0;
                r.measured = bad;
              });
  }
  if (e.id == "parabolic" || e.id == "slit-channel") {
    // Omega contains a half-plane: orbits of z_n = h^{-1}(-n + i y) stay put.
    const double height = e.id == "parabolic" ? 1.0 : 2.0 * pi;
    suite.add(id, "not-equicontinuous-all-t", "no equicontinuity for all t at the DW point",
              [model, height, &e](Rng&, CheckRecord& r) {
                double least = std::numeric_limits<double>::infinity();
                std::vector<double> ds;
                for (int n : {5, 10, 20}) {
                  const cplx z = e.h_inverse(cplx(-n, height));
                  ds.push_back(std::abs(model.flow(z, n) - e.dw));
                  least = std::min(least, ds.back());
                }
                const double limit = std::abs(e.h_inverse(cplx(0.0, height)) - e.dw);
                r.parameters = {{"n", {5, 10, 20}}, {"height", height}, {"distances", ds},
                                {"limit", limit}};
                r.threshold = 0.99 * limit;
                r.relation = ">=";
                r.measured = least;
              });
  }
  if (e.id == "slit-channel") {
    suite.add_value(id, "slit-map-roundtrip", "Newton inversion of the slit map", 1e-12, "<=",
                    {{"samples", 1000}},
                    [](Rng& rng) { return measure::slit_roundtrip(rng, 1000); });
    suite.add(id, "slit-side-flags", "two-sided inversion on the slit", [](Rng&, CheckRecord& r) {
      double worst = 0.0;
      bool sides = true;
      for (double x : {-1.5, -3.0, -6.0}) {
        const double lo = -slit_map_inverse({x, pi}, SlitSide::Lower).real();
        const double up = -slit_map_inverse({x, pi}, SlitSide::Upper).real();
        sides = sides && lo < 1.0 && up > 1.0;
        worst = std::max({worst, std::abs(-lo + std::log(lo) - x), std::abs(-up + std::log(up) - x)});
      }
      r.parameters = {{"x", {-1.5, -3.0, -6.0}}};
      r.threshold = 1e-12;
      r.measured = sides ? worst : std::numeric_limits<double>::infinity();
    });
  }
}

void add_global_checks(Suite& suite) {
  const std::string id = "global";
  suite.add_value(id, "nevanlinna-finite-difference", "Nevanlinna formula for H and H'", 1e-6,
                  "<=", {{"samples", 200}, {"step", 1e-5}},
                  [](Rng& rng) { return measure::nevanlinna_fd_error(rng, 200); });
  suite.add_value(id, "nevanlinna-integrand-bound", "bound (1+2|z|^2)/Re z on the Nevanlinna kernel",
                  0, "<=", {{"samples", 10000}}, [](Rng& rng) {
                    return static_cast<double>(measure::nevanlinna_bound_violations(rng, 10000));
                  });
  suite.add_value(id, "herglotz-positivity", "Riesz-Herglotz sums have Re p >= 0",
                  -kPositivityTolerance, ">=", {{"models", 20}, {"grid_points", 10000}}, [](Rng& rng) {
                    double m = std::numeric_limits<double>::infinity();
                    for (int k = 0; k < 20; ++k) {
                      std::vector<DiskAtom> atoms;
                      for (int a = 0; a < 4; ++a)
                        atoms.push_back({unit(rng.uniform(0.0, 2.0 * pi)), rng.uniform(0.0, 2.0)});
                      const BerksonPortaData bp = make_berkson_porta(
                          0.0, PositivePart::herglotz(RieszHerglotzData(rng.uniform(-2.0, 2.0), atoms)));
                      m = std::min(m, validate_positivity(bp, validation_grid()).min_re_p);
                    }
                    return m;
                  });
  suite.add_value(id, "negative-control-positivity", "p = -1 is rejected", 0.0, "<", {{"p", -1}},
                  [](Rng&) {
                    const auto bp =
                        make_berkson_porta(0.0, builtin_positive_part("constant", cplx{-1.0, 0.0}));
                    return validate_positivity(bp, validation_grid()).min_re_p;
                  });
}

}  // namespace

AuditReport run_audit(const std::string& target, const AuditOptions& options) {
  Suite suite;
  if (target == "all") {
    for (const auto& id : gallery_ids()) add_gallery_checks(suite, gallery_model(id), options.tol_scale);
    add_global_checks(suite);
  } else if (target.starts_with("gallery:")) {
    add_gallery_checks(suite, gallery_model(target.substr(8)), options.tol_scale);
  } else {
    throw Error(ErrorKind::Parse, "audit target must be 'all', 'gallery:<id>' or a model spec");
  }
  AuditReport rep;
  rep.seed = options.seed;
  rep.target = target;
  rep.records = suite.run(options.seed, worker_count(options.threads));
  return rep;
}

AuditReport run_audit(const ModelSpec& spec, const AuditOptions& options) {
  if (spec.gallery && spec.closed_form) return run_audit("gallery:" + *spec.gallery, options);
  AuditReport rep;
  rep.seed = options.seed;
  rep.target = spec.id;
  const BerksonPortaData bp = spec.gallery ? gallery_model(*spec.gallery).bp : *spec.generator;
  const PositivityReport pos = validate_positivity(bp, validation_grid());
  if (!pos.valid) {
    CheckRecord r;
    r.id = spec.id + "/berkson-porta-positivity";
    r.anchor = "Berkson-Porta positivity of p";
    r.model = spec.id;
    r.parameters = {{"grid_points", 10000}};
    r.measured = pos.min_re_p;
    r.threshold = -kPositivityTolerance;
    r.relation = ">=";
    r.pass = false;
    rep.records.push_back(r);
    return rep;
  }
  Suite suite;
  const SemigroupModel model =
      SemigroupModel::generator_driven(spec.id, bp, scaled(spec.flow, options.tol_scale));
  add_generator_checks(suite, spec.id, model, bp, scaled_quadrature(options.tol_scale));
  rep.records = suite.run(options.seed, worker_count(options.threads));
  return rep;
}

}  // namespace dsf

#include "dsf/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dsf/json_io.hpp"

namespace dsf {

namespace {

constexpr double kInfinityThreshold = 1e6;
constexpr double kBoundaryTol = 1e-6;

nlohmann::json real_or_inf(double x) {
  if (std::isinf(x)) return "inf";
  return x;
}

}  // namespace

StolzAngle::StolzAngle(cplx s, double a) : sigma(s), alpha(a) {
  if (std::abs(std::abs(s) - 1.0) > 1e-12)
    throw Error(ErrorKind::Domain, "stolz angle: sigma must have modulus 1");
  if (!(a > 0.0 && a < pi / 2))
    throw Error(ErrorKind::Domain, "stolz angle: alpha must lie in (0, pi/2)");
}

bool StolzAngle::contains(cplx z) const {
  const cplx u = 1.0 - std::conj(sigma) * z;
  return std::abs(std::arg(u)) < alpha && std::abs(u) < std::cos(alpha) / 2.0;
}

ApproachPath ApproachPath::radial() { return {}; }

ApproachPath ApproachPath::stolz(double alpha, int side) {
  if (!(alpha > 0.0 && alpha < pi / 2))
    throw Error(ErrorKind::Domain, "stolz path: alpha must lie in (0, pi/2)");
  if (side < -1 || side > 1) throw Error(ErrorKind::Domain, "path side must be -1, 0 or 1");
  ApproachPath p;
  p.kind = PathKind::Stolz;
  p.alpha = alpha;
  p.side = side;
  return p;
}

ApproachPath ApproachPath::tangential(double q, int side) {
  if (!(q > 1.0 && q <= 2.0))
    throw Error(ErrorKind::Domain, "tangential path: exponent q must lie in (1, 2]");
  if (side != -1 && side != 1) throw Error(ErrorKind::Domain, "tangential path: side must be +-1");
  ApproachPath p;
  p.kind = PathKind::Tangential;
  p.q = q;
  p.side = side;
  return p;
}

double ApproachPath::delta0() const {
  switch (kind) {
    case PathKind::Radial: return 0.5;
    case PathKind::Stolz: return std::cos(alpha) / 2.0;
    case PathKind::Tangential: return 0.5;
  }
  return 0.5;
}

cplx ApproachPath::at(cplx sigma, double delta) const {
  double theta = 0.0;
  if (kind == PathKind::Stolz) theta = side * alpha;
  if (kind == PathKind::Tangential) theta = side * (pi / 2 - std::pow(delta, q - 1.0));
  return sigma * (1.0 - delta * unit(theta));
}

std::string ApproachPath::name() const {
  const std::string s = side > 0 ? "+" : side < 0 ? "-" : "0";
  switch (kind) {
    case PathKind::Radial: return "radial";
    case PathKind::Stolz: return "stolz(" + format_double(alpha) + "," + s + ")";
    case PathKind::Tangential: return "tangential(" + format_double(q) + "," + s + ")";
  }
  return "?";
}

std::vector<ApproachPath> stolz_paths() {
  std::vector<ApproachPath> p{ApproachPath::radial()};
  for (double a : {pi / 8, pi / 4, 3 * pi / 8})
    for (int s : {-1, 1}) p.push_back(ApproachPath::stolz(a, s));
  return p;
}

std::vector<ApproachPath> mixed_paths() {
  return {ApproachPath::radial(), ApproachPath::stolz(pi / 4, -1), ApproachPath::stolz(pi / 4, 1),
          ApproachPath::tangential(1.5, -1), ApproachPath::tangential(1.5, 1)};
}

PathLimit path_limit(const std::function<cplx(cplx)>& f, cplx sigma, const ApproachPath& path,
                     const ProbeSettings& settings) {
  PathLimit out;
  out.path = path.name();
  std::vector<cplx> v;
  const double d0 = path.delta0();
  for (int k = 0; k <= settings.max_depth; ++k) {
    const cplx z = path.at(sigma, std::ldexp(d0, -k));
    if (!(std::abs(z) < 1.0)) break;  // rounding reached the circle
    v.push_back(f(z));
    const std::size_t n = v.size();
    if (n < 3) continue;
    const cplx a = v[n - 3], b = v[n - 2], c = v[n - 1];
    const bool big = std::abs(a) > kInfinityThreshold && std::abs(b) > kInfinityThreshold &&
                     std::abs(c) > kInfinityThreshold;
    const bool cauchy = std::abs(a - b) <= settings.tol && std::abs(a - c) <= settings.tol &&
                        std::abs(b - c) <= settings.tol;
    out.converged = cauchy && !big;
    out.diverges = big;
    if (out.converged && k >= settings.min_depth) break;
  }
  out.samples = static_cast<int>(v.size());
  if (!v.empty()) out.value = v.back();
  return out;
}

AngularLimit angular_limit(const SemigroupModel& model, cplx sigma, double t,
                           const ProbeSettings& settings) {
  if (std::abs(std::abs(sigma) - 1.0) > 1e-12)
    throw Error(ErrorKind::Domain, "angular_limit: sigma must have modulus 1");
  if (!(t >= 0.0)) throw Error(ErrorKind::Domain, "angular_limit: t must be >= 0");
  AngularLimit out;
  auto f = [&](cplx z) { return model.flow(z, t); };
  bool all = true;
  for (const auto& path : stolz_paths()) {
    out.paths.push_back(path_limit(f, sigma, path, settings));
    all = all && out.paths.back().converged;
  }
  for (std::size_t i = 0; i < out.paths.size(); ++i)
    for (std::size_t j = i + 1; j < out.paths.size(); ++j)
      out.disagreement =
          std::max(out.disagreement, std::abs(out.paths[i].value - out.paths[j].value));
  out.value = out.paths.front().value;
  out.converged = all && out.disagreement <= 100.0 * settings.tol;
  return out;
}

cplx boundary_value(const SemigroupModel& model, cplx sigma, double t,
                    const ProbeSettings& settings) {
  if (t == 0.0) return sigma;
  return path_limit([&](cplx z) { return model.flow(z, t); }, sigma, ApproachPath::radial(),
                    settings)
      .value;
}

double dilation(const SemigroupModel& model, cplx sigma, double t, int depth) {
  if (!(t > 0.0)) throw Error(ErrorKind::Domain, "dilation: t must be > 0");
  if (depth < 3 || depth > 40) throw Error(ErrorKind::Domain, "dilation: depth must lie in [3, 40]");
  std::vector<double> ratio;
  for (int k = 1; k <= depth; ++k) {
    const double gap = std::ldexp(1.0, -k);
    ratio.push_back((1.0 - std::abs(model.flow((1.0 - gap) * sigma, t))) / gap);
  }
  const double tail = *std::min_element(ratio.end() - 3, ratio.end());
  return tail > kInfinityThreshold ? std::numeric_limits<double>::infinity() : tail;
}

std::string_view to_string(PointClass c) {
  switch (c) {
    case PointClass::InteriorDw: return "interior-DW";
    case PointClass::BoundaryDw: return "boundary-DW";
    case PointClass::RepellingRegular: return "repelling-regular";
    case PointClass::NonRegularFixed: return "non-regular-fixed";
    case PointClass::Contact: return "contact";
    case PointClass::Generic: return "generic";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Agrees: return "agrees";
    case Verdict::Disagrees: return "disagrees";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string_view to_string(LongTime v) {
  switch (v) {
    case LongTime::Fixed: return "fixed";
    case LongTime::ConvergesToDw: return "converges_to_dw";
    case LongTime::Undecided: return "undecided";
  }
  return "?";
}

nlohmann::json BoundaryPointReport::to_json() const {
  nlohmann::json probes = nlohmann::json::array();
  for (std::size_t i = 0; i < times.size(); ++i) {
    const auto& L = limits[i];
    probes.push_back({{"t", times[i]},
                      {"angular_limit", L.converged ? nlohmann::json(json_io::to_pair(L.value))
                                                    : nlohmann::json("divergent")},
                      {"path_disagreement", L.disagreement},
                      {"dilation", real_or_inf(dilations[i])},
                      {"classification", std::string(to_string(per_time[i]))}});
  }
  nlohmann::json j = {{"sigma", json_io::to_pair(sigma)},
                      {"is_contact", is_contact},
                      {"is_fixed", is_fixed},
                      {"classification", std::string(to_string(classification))},
                      {"probes", probes}};
  j["unrestricted_verdict"] =
      unrestricted ? nlohmann::json(std::string(to_string(*unrestricted))) : nlohmann::json();
  return j;
}

BoundaryPointReport classify_point(const SemigroupModel& model, cplx sigma,
                                   const ProbeSettings& settings) {
  BoundaryPointReport rep;
  rep.sigma = sigma;
  if (std::abs(sigma) < 1.0 - 1e-12) {
    if (model.interior_dw() && std::abs(sigma - model.dw()) < 1e-12) {
      rep.classification = PointClass::InteriorDw;
      rep.is_fixed = true;
      return rep;
    }
    throw Error(ErrorKind::Domain, "classify_point: sigma must lie on the circle");
  }
  rep.times = {0.5, 1.0, 2.0};
  const bool at_dw = !model.interior_dw() && std::abs(sigma - model.dw()) < 1e-9;
  bool all_contact = true;
  std::optional<bool> fixed0, regular0;
  for (double t : rep.times) {
    AngularLimit L = angular_limit(model, sigma, t, settings);
    const bool contact = L.converged && std::abs(L.value) >= 1.0 - kBoundaryTol;
    const bool fixed = contact && std::abs(L.value - sigma) <= kBoundaryTol;
    const double d = fixed ? dilation(model, sigma, t) : std::numeric_limits<double>::infinity();
    const bool regular = std::isfinite(d);
    PointClass c = PointClass::Generic;
    if (fixed) {
      if (at_dw) c = PointClass::BoundaryDw;
      else if (!regular) c = PointClass::NonRegularFixed;
      else if (d > 1.0) c = PointClass::RepellingRegular;
      else
        throw Error(ErrorKind::Inconsistency,
                    "classify_point: dilation " + format_double(d) +
                        " <= 1 at a fixed point other than the DW point");
    } else if (contact) {
      c = PointClass::Contact;
    }
    if (fixed0 && (*fixed0 != fixed || *regular0 != regular))
      throw Error(ErrorKind::TheoremD,
                  "classify_point: fixed/regular status changes with t at sigma = " +
                      format_double(sigma.real()) + (sigma.imag() < 0 ? "" : "+") +
                      format_double(sigma.imag()) + "i");
    fixed0 = fixed;
    regular0 = regular;
    all_contact = all_contact && contact;
    rep.limits.push_back(std::move(L));
    rep.dilations.push_back(d);
    rep.per_time.push_back(c);
  }
  rep.is_fixed = *fixed0;
  rep.is_contact = all_contact;
  if (rep.is_fixed) rep.classification = rep.per_time[1];
  else rep.classification = all_contact ? PointClass::Contact : PointClass::Generic;
  rep.unrestricted =
      unrestricted_probe([&](cplx z) { return model.flow(z, 1.0); }, sigma, mixed_paths(),
                         kBoundaryTol, settings.max_depth)
          .verdict;
  return rep;
}

UnrestrictedResult unrestricted_probe(const std::function<cplx(cplx)>& f, cplx sigma,
                                      const std::vector<ApproachPath>& paths, double tol,
                                      int depth) {
  UnrestrictedResult out;
  ProbeSettings s;
  s.max_depth = depth;
  s.min_depth = std::min(12, depth);
  s.tol = tol / 10.0;
  bool all_conv = true, all_div = true;
  for (const auto& p : paths) {
    out.paths.push_back(path_limit(f, sigma, p, s));
    all_conv = all_conv && out.paths.back().converged;
    all_div = all_div && out.paths.back().diverges;
  }
  double spread = 0.0;
  for (std::size_t i = 0; i < out.paths.size(); ++i)
    for (std::size_t j = i + 1; j < out.paths.size(); ++j)
      if (out.paths[i].converged && out.paths[j].converged)
        spread = std::max(spread, std::abs(out.paths[i].value - out.paths[j].value));
  if (!out.paths.empty()) out.limit = out.paths.front().value;
  if (spread > 10.0 * tol) out.verdict = Verdict::Disagrees;
  else if (all_div && !paths.empty()) {
    out.verdict = Verdict::Agrees;
    out.infinite = true;
  } else if (all_conv && spread <= tol) out.verdict = Verdict::Agrees;
  return out;
}

std::vector<double> default_r_grid() {
  std::vector<double> r;
  for (int k = 1; k <= 24; ++k) r.push_back(1.0 - std::ldexp(1.0, -k));
  return r;
}

KoenigsSignature koenigs_signature(const std::function<cplx(cplx)>& h, cplx sigma,
                                   const std::vector<double>& r_grid) {
  if (r_grid.size() < 4) throw Error(ErrorKind::Domain, "koenigs_signature: need >= 4 radii");
  KoenigsSignature sig;
  std::vector<cplx> v;
  for (double r : r_grid) v.push_back(h(r * sigma));
  const std::size_t n = v.size();
  std::vector<double> d;
  for (std::size_t k = 1; k < n; ++k) d.push_back(v[k].real() - v[k - 1].real());
  const std::size_t m = d.size();
  // Increments must be well above roundoff and not shrinking geometrically.
  const double floor = -1e-6 * (1.0 + std::abs(v.back().real()));
  const bool falling = d[m - 1] < floor && d[m - 2] < floor && d[m - 3] < floor;
  sig.re_to_minus_infinity = falling && std::abs(d[m - 1]) >= 0.5 * std::abs(d[m - 3]);
  sig.re_last = v.back().real();
  const double a = v[n - 3].imag(), b = v[n - 2].imag(), c = v[n - 1].imag();
  if (std::abs(a - b) <= 1e-6 && std::abs(a - c) <= 1e-6 && std::abs(b - c) <= 1e-6)
    sig.im_radial_limit = c;

  // Im h along both tangential sides at the depth of the last radius.
  const double delta = 1.0 - r_grid.back();
  double lo = c, hi = c;
  for (int side : {-1, 1}) {
    const cplx z = ApproachPath::tangential(2.0, side).at(sigma, delta);
    const double y = h(z).imag();
    lo = std::min(lo, y);
    hi = std::max(hi, y);
  }
  sig.im_tangential_spread = hi - lo;
  return sig;
}

std::vector<ModulusEntry> equicontinuity_modulus(const SemigroupModel& model, cplx sigma, double T,
                                                 const std::vector<double>& delta_grid) {
  if (!(T >= 0.0)) throw Error(ErrorKind::Domain, "equicontinuity_modulus: T must be >= 0");
  std::vector<double> deltas = delta_grid;
  std::sort(deltas.begin(), deltas.end());
  if (deltas.empty() || !(deltas.front() > 0.0) || !(deltas.back() <= 0.5))
    throw Error(ErrorKind::Domain, "equicontinuity_modulus: deltas must lie in (0, 0.5]");
  std::vector<double> times;
  for (int j = 0; j <= 20; ++j) times.push_back(T * j / 20.0);
  std::vector<cplx> at_sigma;
  for (double t : times) at_sigma.push_back(boundary_value(model, sigma, t));

  std::vector<ModulusEntry> out;
  double running = 0.0;
  for (double delta : deltas) {
    double m = 0.0;
    for (double rho : {delta, delta / 2, delta / 8})
      for (int k = -4; k <= 4; ++k) {
        const cplx z = sigma * (1.0 - rho * unit(k * 0.2 * pi / 2));
        const auto traj = model.trajectory(z, times);
        for (std::size_t j = 0; j < times.size(); ++j)
          m = std::max(m, std::abs(traj[j] - at_sigma[j]));
      }
    const double psi = 2.0 * std::asin(delta / 2.0);
    for (double s : {-1.0, 1.0}) {
      const cplx b = sigma * unit(s * psi);
      for (std::size_t j = 0; j < times.size(); ++j)
        m = std::max(m, std::abs(boundary_value(model, b, times[j]) - at_sigma[j]));
    }
    running = std::max(running, m);
    out.push_back({delta, running});
  }
  return out;
}

std::vector<double> witness_distances(const SemigroupModel& model,
                                      const std::function<cplx(cplx)>& h_inverse,
                                      const std::vector<int>& ns) {
  std::vector<double> d;
  for (int n : ns) {
    const cplx z = h_inverse(cplx(-n, 1.0));
    d.push_back(std::abs(model.flow(z, n) - model.dw()));
  }
  return d;
}

std::vector<TimeModulus> time_equicontinuity(const SemigroupModel& model,
                                             const std::vector<cplx>& z_grid,
                                             const std::vector<double>& t_grid,
                                             const std::vector<double>& widths) {
  if (t_grid.empty()) throw Error(ErrorKind::Domain, "time_equicontinuity: empty t_grid");
  std::vector<double> w = widths;
  std::sort(w.begin(), w.end());
  const double t_max = *std::max_element(t_grid.begin(), t_grid.end());
  // Every time needed, once.
  std::vector<double> times;
  for (double t : t_grid)
    for (double dw : w)
      if (t + dw <= t_max * (1 + 1e-12)) {
        times.push_back(t);
        times.push_back(t + dw);
      }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  auto index = [&times](double t) {
    return std::lower_bound(times.begin(), times.end(), t) - times.begin();
  };

  std::vector<double> m(w.size(), 0.0);
  for (cplx z : z_grid) {
    std::vector<cplx> vals;
    if (std::abs(z) >= 1.0 - 1e-15) {
      const cplx s = z / std::abs(z);
      for (double t : times) vals.push_back(boundary_value(model, s, t));
    } else {
      vals = model.trajectory(z, times);
    }
    for (std::size_t k = 0; k < w.size(); ++k)
      for (double t : t_grid)
        if (t + w[k] <= t_max * (1 + 1e-12))
          m[k] = std::max(m[k], std::abs(vals[index(t + w[k])] - vals[index(t)]));
  }
  std::vector<TimeModulus> out;
  double running = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    running = std::max(running, m[k]);
    out.push_back({w[k], running});
  }
  return out;
}

LongTimeResult long_time_boundary(const BoundaryTrack& track, cplx sigma, cplx dw, double T,
                                  double tol) {
  LongTimeResult out;
  bool fixed = true;
  for (double t : {0.5, 1.0, 2.0}) fixed = fixed && std::abs(track(t) - sigma) <= tol;
  if (fixed) {
    out.verdict = LongTime::Fixed;
    return out;
  }
  std::vector<double> ts;
  for (double t = 0.5; t < T; t *= 2.0) ts.push_back(t);
  ts.push_back(T);
  for (double t : ts) {
    out.time = t;
    out.distance = std::abs(track(t) - dw);
    if (out.distance < 1e-2) {
      out.verdict = LongTime::ConvergesToDw;
      return out;
    }
  }
  return out;
}

LongTimeResult long_time_boundary(const SemigroupModel& model, cplx sigma, double T,
                                  const ProbeSettings& settings) {
  if (!(T > 0.0 && T <= model.config().max_time))
    throw Error(ErrorKind::Domain, "long_time_boundary: T must lie in (0, max_time]");
  return long_time_boundary(
      [&](double t) { return angular_limit(model, sigma, t, settings).value; }, sigma,
      model.dw(), T, kBoundaryTol);
}

}  // namespace dsf

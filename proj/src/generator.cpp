#include "dsf/generator.hpp"

#include <algorithm>
#include <limits>

#include "dsf/json_io.hpp"

namespace dsf {

PositivePart PositivePart::herglotz(RieszHerglotzData data) {
  PositivePart p;
  p.name_ = "herglotz";
  p.spec_ = to_json(data);
  p.herglotz_ = std::move(data);
  return p;
}

PositivePart PositivePart::closed_form(std::string name, ComplexFn value, ComplexFn derivative,
                                       nlohmann::json spec) {
  PositivePart p;
  p.name_ = std::move(name);
  p.value_ = std::move(value);
  p.derivative_ = std::move(derivative);
  p.spec_ = std::move(spec);
  return p;
}

cplx PositivePart::operator()(cplx z) const {
  if (herglotz_) return eval_p_disk(*herglotz_, z);
  return value_(z);
}

cplx PositivePart::derivative(cplx z) const {
  if (herglotz_) return eval_p_disk_derivative(*herglotz_, z);
  return derivative_(z);
}

std::vector<std::string> builtin_positive_part_names() {
  return {"constant", "one", "one-minus-z", "slit-channel"};
}

PositivePart builtin_positive_part(const std::string& name, std::optional<cplx> value) {
  nlohmann::json spec = {{"builtin", name}};
  if (name == "one") {
    return PositivePart::closed_form(
        name, [](cplx) { return cplx{1.0, 0.0}; }, [](cplx) { return cplx{0.0, 0.0}; }, spec);
  }
  if (name == "one-minus-z") {
    return PositivePart::closed_form(
        name, [](cplx z) { return 1.0 - z; }, [](cplx) { return cplx{-1.0, 0.0}; }, spec);
  }
  if (name == "constant") {
    if (!value) throw Error(ErrorKind::Parse, "builtin 'constant' needs a value");
    const cplx v = *value;
    spec["value"] = json_io::to_pair(v);
    return PositivePart::closed_form(
        name, [v](cplx) { return v; }, [](cplx) { return cplx{0.0, 0.0}; }, spec);
  }
  if (name == "slit-channel") {
    // p = -i C/(2(C+1)) with C(z) = i(1+z)/(1-z), written as a rational function;
    // the only pole is z = i on the circle.
    const cplx a{1.0, 1.0}, b{-1.0, 1.0};
    return PositivePart::closed_form(
        name, [a, b](cplx z) { return (1.0 + z) / (2.0 * (a + b * z)); },
        [a, b](cplx z) {
          const cplx d = a + b * z;
          return 1.0 / (d * d);
        },
        spec);
  }
  throw Error(ErrorKind::Lookup, "unknown builtin p '" + name + "'");
}

PositivePart positive_part_from_json(const nlohmann::json& j) {
  using namespace json_io;
  require_object(j, "");
  if (j.contains("builtin")) {
    if (!j["builtin"].is_string()) fail("/builtin", "expected a string");
    const auto name = j["builtin"].get<std::string>();
    std::optional<cplx> value;
    if (j.contains("value")) value = pair(j["value"], "/value");
    try {
      return builtin_positive_part(name, value);
    } catch (const Error& e) {
      fail("/builtin", e.what());
    }
  }
  return PositivePart::herglotz(herglotz_from_json(j));
}

BerksonPortaData make_berkson_porta(cplx tau, PositivePart p) {
  if (!(std::abs(tau) <= 1.0 + 1e-12))
    throw Error(ErrorKind::Domain, "berkson-porta: |tau| must be <= 1");
  bool zero = false;
  if (p.herglotz_data()) {
    zero = p.herglotz_data()->is_zero();
  } else {
    zero = true;
    for (double r : {0.0, 0.3, 0.7})
      for (int k = 0; k < 8 && zero; ++k)
        if (p(r * unit(2.0 * pi * k / 8.0 + 0.1)) != cplx{0.0, 0.0}) zero = false;
  }
  if (zero)
    throw Error(ErrorKind::Domain, "berkson-porta: trivial generator G = 0 is not allowed");
  return {tau, std::move(p)};
}

BerksonPortaData berkson_porta_from_json(const nlohmann::json& j) {
  using namespace json_io;
  require_object(j, "");
  const cplx tau = pair(member(j, "tau", ""), "/tau");
  const auto& pj = member(j, "p", "");
  PositivePart p = [&] {
    try {
      return positive_part_from_json(pj);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Parse) throw;
      const std::string msg = e.what();
      throw Error(ErrorKind::Parse, "/p" + (msg.starts_with("/: ") ? msg.substr(1) : msg));
    }
  }();
  try {
    return make_berkson_porta(tau, std::move(p));
  } catch (const Error& e) {
    fail("/tau", e.what());
  }
}

nlohmann::json to_json(const BerksonPortaData& bp) {
  return {{"tau", json_io::to_pair(bp.tau)}, {"p", bp.p.spec()}};
}

GeneratorFn::GeneratorFn(ComplexFn value, std::function<cplx()> origin_derivative)
    : value_(std::move(value)), origin_derivative_(std::move(origin_derivative)) {}

GeneratorFn GeneratorFn::from(const BerksonPortaData& bp) {
  const cplx tau = bp.tau;
  const PositivePart p = bp.p;
  return GeneratorFn(
      [tau, p](cplx z) { return (tau - z) * (1.0 - std::conj(tau) * z) * p(z); },
      [tau, p]() { return -(1.0 + std::norm(tau)) * p(0.0) + tau * p.derivative(0.0); });
}

cplx GeneratorFn::operator()(cplx z) const {
  require_in_disk(z, "generator");
  return value_(z);
}

cplx eval_G(const BerksonPortaData& bp, cplx z) {
  require_in_disk(z, "eval_G");
  return (bp.tau - z) * (1.0 - std::conj(bp.tau) * z) * bp.p(z);
}

std::vector<cplx> validation_grid() {
  std::vector<cplx> grid;
  grid.reserve(10000);
  constexpr int per_circle = 1000;
  for (double r : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99})
    for (int k = 0; k < per_circle; ++k)
      grid.push_back(r * unit(2.0 * pi * (k + 0.5) / per_circle));
  return grid;
}

Decomposition decompose(const GeneratorFn& G, cplx tau, std::span<const cplx> grid,
                        double tolerance) {
  Decomposition out;
  out.p.reserve(grid.size());
  out.min_re_p = std::numeric_limits<double>::infinity();
  for (cplx z : grid) {
    const cplx factor = (tau - z) * (1.0 - std::conj(tau) * z);
    if (factor == cplx{0.0, 0.0})
      throw Error(ErrorKind::Singular, "decompose: (tau - z)(1 - conj(tau) z) vanishes on the grid");
    const cplx p = G(z) / factor;
    out.p.push_back(p);
    out.min_re_p = std::min(out.min_re_p, p.real());
  }
  out.valid_generator = out.min_re_p >= -tolerance;
  return out;
}

PositivityReport validate_positivity(const BerksonPortaData& bp, std::span<const cplx> grid) {
  PositivityReport report{std::numeric_limits<double>::infinity(), false};
  for (cplx z : grid) report.min_re_p = std::min(report.min_re_p, bp.p(z).real());
  report.valid = report.min_re_p >= -kPositivityTolerance;
  return report;
}

cplx lambda_at_origin(const BerksonPortaData& bp) {
  if (bp.tau != cplx{0.0, 0.0})
    throw Error(ErrorKind::Misuse, "lambda_at_origin: requires tau = 0");
  return -bp.p(0.0);
}

cplx interior_multiplier(const BerksonPortaData& bp) {
  if (!(std::abs(bp.tau) < 1.0))
    throw Error(ErrorKind::Misuse, "interior_multiplier: requires |tau| < 1");
  return -(1.0 - std::norm(bp.tau)) * bp.p(bp.tau);
}

cplx boundary_multiplier(const GeneratorFn& G, cplx tau) {
  constexpr double eps = 1e-8;
  const cplx z = tau * (1.0 - eps);
  return G(z) / (z - tau);
}

}  // namespace dsf

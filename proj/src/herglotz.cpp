#include "dsf/herglotz.hpp"

#include <algorithm>

#include "dsf/json_io.hpp"

namespace dsf {

RieszHerglotzData::RieszHerglotzData(double c, std::vector<DiskAtom> atoms)
    : c_(c), atoms_(std::move(atoms)) {
  if (!std::isfinite(c_)) throw Error(ErrorKind::Domain, "herglotz: c must be finite");
  for (const auto& a : atoms_) {
    if (std::abs(std::abs(a.u) - 1.0) > 1e-12)
      throw Error(ErrorKind::Domain, "herglotz: atom location must be unimodular");
    if (!(a.mass >= 0.0) || !std::isfinite(a.mass))
      throw Error(ErrorKind::Domain, "herglotz: atom mass must be finite and >= 0");
  }
}

bool RieszHerglotzData::is_zero() const {
  return c_ == 0.0 &&
         std::all_of(atoms_.begin(), atoms_.end(), [](const DiskAtom& a) { return a.mass == 0.0; });
}

NevanlinnaData::NevanlinnaData(double alpha, double beta, std::vector<LineAtom> atoms,
                               cplx h_at_one)
    : alpha_(alpha), beta_(beta), atoms_(std::move(atoms)), h1_(h_at_one) {
  if (!(beta_ >= 0.0)) throw Error(ErrorKind::Domain, "nevanlinna: beta must be >= 0");
  for (const auto& a : atoms_) {
    if (!(a.mass > 0.0) || !std::isfinite(a.mass) || !std::isfinite(a.t))
      throw Error(ErrorKind::Domain, "nevanlinna: atoms need finite t and mass > 0");
  }
}

cplx eval_p_disk(const RieszHerglotzData& data, cplx z) {
  require_in_disk(z, "eval_p_disk");
  cplx sum{0.0, data.c()};
  for (const auto& a : data.atoms()) sum += a.mass * (a.u + z) / (a.u - z);
  return sum;
}

cplx eval_p_disk_derivative(const RieszHerglotzData& data, cplx z) {
  require_in_disk(z, "eval_p_disk_derivative");
  cplx sum{0.0, 0.0};
  for (const auto& a : data.atoms()) {
    const cplx d = a.u - z;
    sum += a.mass * 2.0 * a.u / (d * d);
  }
  return sum;
}

cplx eval_Hprime(const NevanlinnaData& data, cplx z) {
  require_right_half_plane(z, "eval_Hprime");
  cplx sum = I * data.alpha() + data.beta() * z;
  for (const auto& a : data.atoms()) sum += a.mass * nevanlinna_kernel(z, a.t);
  return sum;
}

cplx eval_H(const NevanlinnaData& data, cplx z) {
  require_right_half_plane(z, "eval_H");
  const cplx zm1 = z - 1.0;
  cplx sum = data.h_at_one() + I * data.alpha() * zm1 + 0.5 * data.beta() * (z * z - 1.0);
  for (const auto& a : data.atoms()) {
    const cplx it{0.0, a.t};
    const cplx bracket =
        it * zm1 + (1.0 + a.t * a.t) * (std::log(z + it) - std::log(1.0 + it));
    sum += a.mass * bracket;
  }
  return sum;
}

IntegrandBoundReport integrand_bound_check(cplx z, std::span<const double> t_grid) {
  require_right_half_plane(z, "integrand_bound_check");
  IntegrandBoundReport report;
  const double r2 = std::norm(z);
  report.bound = (1.0 + 2.0 * r2) / z.real();
  for (double t : t_grid) {
    const double a = std::abs(nevanlinna_kernel(z, t));
    report.max_abs = std::max(report.max_abs, a);
    if (a > report.bound) ++report.violations;
  }
  return report;
}

RieszHerglotzData herglotz_from_json(const nlohmann::json& j) {
  using namespace json_io;
  require_object(j, "");
  double c = 0.0;
  if (j.contains("c")) c = number(j["c"], "/c");
  std::vector<DiskAtom> atoms;
  if (j.contains("atoms")) {
    const auto& arr = j["atoms"];
    if (!arr.is_array()) fail("/atoms", "expected an array");
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string ptr = child("/atoms", k);
      const double angle = number(member(arr[k], "u_angle", ptr), child(ptr, "u_angle"));
      const double mass = number(member(arr[k], "mass", ptr), child(ptr, "mass"));
      if (mass < 0.0) fail(child(ptr, "mass"), "mass must be >= 0");
      atoms.push_back({unit(angle), mass});
    }
  }
  return RieszHerglotzData(c, std::move(atoms));
}

nlohmann::json to_json(const RieszHerglotzData& data) {
  nlohmann::json atoms = nlohmann::json::array();
  for (const auto& a : data.atoms())
    atoms.push_back({{"u_angle", std::arg(a.u)}, {"mass", a.mass}});
  return {{"c", data.c()}, {"atoms", atoms}};
}

NevanlinnaData nevanlinna_from_json(const nlohmann::json& j) {
  using namespace json_io;
  require_object(j, "");
  const double alpha = j.contains("alpha") ? number(j["alpha"], "/alpha") : 0.0;
  const double beta = j.contains("beta") ? number(j["beta"], "/beta") : 0.0;
  if (beta < 0.0) fail("/beta", "beta must be >= 0");
  const cplx h1 = j.contains("H1") ? pair(j["H1"], "/H1") : cplx{0.0, 0.0};
  std::vector<LineAtom> atoms;
  if (j.contains("atoms")) {
    const auto& arr = j["atoms"];
    if (!arr.is_array()) fail("/atoms", "expected an array");
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string ptr = child("/atoms", k);
      const double t = number(member(arr[k], "t", ptr), child(ptr, "t"));
      const double mass = number(member(arr[k], "mass", ptr), child(ptr, "mass"));
      if (!(mass > 0.0)) fail(child(ptr, "mass"), "mass must be > 0");
      atoms.push_back({t, mass});
    }
  }
  return NevanlinnaData(alpha, beta, std::move(atoms), h1);
}

nlohmann::json to_json(const NevanlinnaData& data) {
  nlohmann::json atoms = nlohmann::json::array();
  for (const auto& a : data.atoms()) atoms.push_back({{"t", a.t}, {"mass", a.mass}});
  return {{"alpha", data.alpha()},
          {"beta", data.beta()},
          {"atoms", atoms},
          {"H1", json_io::to_pair(data.h_at_one())}};
}

}  // namespace dsf

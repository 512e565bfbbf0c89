#pragma once

// Functions with nonnegative real part on the disk (Riesz-Herglotz form)
// and on the right half-plane (Nevanlinna form for H with Re H' >= 0).

#include <span>
#include <vector>

#include "dsf/core.hpp"
#include "json.hpp"

namespace dsf {

struct DiskAtom {
  cplx u;       // |u| = 1
  double mass;  // >= 0
};

/// p(z) = i c + sum_k mass_k (u_k + z) / (u_k - z).
/// Re p >= 0 on the disk for any such data.
class RieszHerglotzData {
 public:
  RieszHerglotzData() = default;
  RieszHerglotzData(double c, std::vector<DiskAtom> atoms);

  double c() const { return c_; }
  const std::vector<DiskAtom>& atoms() const { return atoms_; }
  bool is_zero() const;

 private:
  double c_ = 0.0;
  std::vector<DiskAtom> atoms_;
};

struct LineAtom {
  double t;
  double mass;  // > 0
};

/// alpha, beta, a finite positive measure on the real line, and the anchor H(1).
class NevanlinnaData {
 public:
  NevanlinnaData() = default;
  NevanlinnaData(double alpha, double beta, std::vector<LineAtom> atoms,
                 cplx h_at_one);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  const std::vector<LineAtom>& atoms() const { return atoms_; }
  cplx h_at_one() const { return h1_; }

 private:
  double alpha_ = 0.0;
  double beta_ = 0.0;
  std::vector<LineAtom> atoms_;
  cplx h1_{0.0, 0.0};
};

cplx eval_p_disk(const RieszHerglotzData& data, cplx z);
cplx eval_p_disk_derivative(const RieszHerglotzData& data, cplx z);

/// H'(z) = i alpha + beta z + sum mass (1 + i t z) / (z + i t),  Re z > 0.
cplx eval_Hprime(const NevanlinnaData& data, cplx z);

/// Antiderivative of eval_Hprime with H(1) = data.h_at_one(); the logarithm
/// difference log(z + it) - log(1 + it) uses principal branches, valid because
/// both arguments lie in the right half-plane.
cplx eval_H(const NevanlinnaData& data, cplx z);

/// Integrand of the Nevanlinna integral, (1 + i t z) / (z + i t).
inline cplx nevanlinna_kernel(cplx z, double t) {
  return (1.0 + I * t * z) / (z + I * t);
}

struct IntegrandBoundReport {
  double max_abs = 0.0;   // max over the grid of |(1 + i t z)/(z + i t)|
  double bound = 0.0;     // (1 + 2|z|^2) / Re z
  std::size_t violations = 0;
  bool holds() const { return violations == 0; }
};

IntegrandBoundReport integrand_bound_check(cplx z, std::span<const double> t_grid);

// JSON: {"c": r, "atoms": [{"u_angle": θ, "mass": m}]}
RieszHerglotzData herglotz_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RieszHerglotzData& data);
// JSON: {"alpha": a, "beta": b, "atoms": [{"t": t, "mass": m}], "H1": [re, im]}
NevanlinnaData nevanlinna_from_json(const nlohmann::json& j);
nlohmann::json to_json(const NevanlinnaData& data);

}  // namespace dsf

#include <vector>

#include "doctest.h"
#include "dsf/gallery.hpp"
#include "dsf/ode.hpp"
#include "dsf/semiflow.hpp"
#include "oracles.hpp"

using namespace dsf;

namespace {

SemigroupModel ode_model(const std::string& builtin, cplx tau = 0.0) {
  return SemigroupModel::generator_driven("t", make_berkson_porta(tau, builtin_positive_part(builtin)));
}

SemigroupModel strip_ode() { return gallery_model("strip").generator_model(); }

}  // namespace

TEST_SUITE("semiflow") {

TEST_CASE("integrator on a linear equation") {
  const double ts[] = {0.0, 1.0, 3.0};
  OdeStats stats;
  const auto v = integrate([](cplx w) { return cplx{-1.0, 2.0} * w; }, {0.5, 0.0}, ts, OdeConfig{},
                           [](cplx w) { return std::abs(w) < 1.0; }, &stats);
  for (int k = 0; k < 3; ++k)
    CHECK(std::abs(v[k] - 0.5 * std::exp(cplx{-1.0, 2.0} * ts[k])) < 1e-10);
  CHECK(stats.accepted > 0);
}

TEST_CASE("flow point values") {
  CHECK(std::abs(ode_model("one").flow(0.5, std::log(2.0)) - 0.25) < 1e-10);
  CHECK(std::abs(ode_model("one-minus-z").flow(0.5, std::log(2.0)) - 1.0 / 3.0) < 1e-10);
  CHECK(std::abs(strip_ode().flow(0.0, std::log(3.0) / pi) - 0.5) < 1e-10);
}

TEST_CASE("flow against RK4 and closed forms") {
  const auto m = ode_model("one-minus-z");
  for (cplx z : {cplx{0.3, 0.2}, cplx{-0.8, 0.1}, cplx{0.1, -0.9}}) {
    CHECK(std::abs(m.flow(z, 1.7) - oracle::logistic_flow(z, 1.7)) < 1e-9);
    CHECK(std::abs(m.flow(z, 1.7) -
                   oracle::rk4([](cplx w) { return -w * (1.0 - w); }, z, 1.7)) < 1e-9);
    CHECK(std::abs(strip_ode().flow(z, 0.8) - oracle::strip_flow(z, 0.8)) < 1e-9);
  }
}

TEST_CASE("trajectory") {
  const double ts[] = {0.0, 1.0, 2.0};
  const auto v = ode_model("one").trajectory(0.5, ts);
  CHECK(v[0] == cplx(0.5, 0.0));
  CHECK(std::abs(v[1] - 0.5 * std::exp(-1.0)) < 1e-10);
  CHECK(std::abs(v[2] - 0.5 * std::exp(-2.0)) < 1e-10);
  const double bad[] = {1.0, 0.5};
  CHECK_THROWS_AS(ode_model("one").trajectory(0.5, bad), Error);
}

TEST_CASE("long time limits") {
  CHECK(std::abs(strip_ode().flow(0.0, 40.0) - 1.0) < 1e-10);
  const auto par = gallery_model("parabolic").generator_model();
  CHECK(std::abs(par.flow(0.0, 1e3) - 1.0) < 0.05);
}

TEST_CASE("residuals") {
  const auto m = ode_model("one-minus-z");
  CHECK(semigroup_residual(m, {0.3, 0.2}, 0.0, 1.0) < 1e-10);
  CHECK(semigroup_residual(m, {0.3, 0.2}, 0.7, 1.3) <= 1e-8);
  CHECK(semigroup_residual(strip_ode(), {0.0, 0.9}, 2.0, 2.0) <= 1e-8);
  CHECK(commutativity_residual(m, {0.3, 0.2}, 0.7, 1.3) <= 1e-8);
}

TEST_CASE("generator residual is first order") {
  CHECK(generator_residual(ode_model("one"), 0.5, 1e-4) <= 5e-5);
  const auto m = ode_model("one-minus-z");
  const double r1 = generator_residual(m, 0.3, 1e-3), r2 = generator_residual(m, 0.3, 5e-4),
               r3 = generator_residual(m, 0.3, 2.5e-4);
  CHECK(r1 / r2 == doctest::Approx(2.0).epsilon(0.05));
  CHECK(r2 / r3 == doctest::Approx(2.0).epsilon(0.05));
  // G'(0.5) = 0 kills the first-order term there
  CHECK(generator_residual(m, 0.5, 1e-3) / generator_residual(m, 0.5, 5e-4) ==
        doctest::Approx(4.0).epsilon(0.05));
  const auto s = strip_ode();
  CHECK(generator_residual(s, 0.3, 1e-2) > generator_residual(s, 0.3, 1e-3));
  CHECK(generator_residual(s, 0.3, 1e-3) > generator_residual(s, 0.3, 1e-4));
}

TEST_CASE("Denjoy-Wolff point") {
  CHECK(dw_point(ode_model("one")) == cplx(0, 0));
  CHECK(dw_point(strip_ode()) == cplx(1, 0));
  CHECK(dw_point(gallery_model("slit-channel").model()) == cplx(1, 0));
  CHECK_FALSE(is_parabolic(strip_ode()));
  CHECK(is_parabolic(gallery_model("parabolic").model()));
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(ode_model("one").flow(1.0, 1.0), Error);
  CHECK_THROWS_AS(ode_model("one").flow(0.5, -1.0), Error);
  CHECK_THROWS_AS(SemigroupModel::generator_driven(
                      "neg", make_berkson_porta(0.0, builtin_positive_part("constant", cplx{-1, 0}))),
                  Error);
  FlowConfig c;
  c.boundary_margin = 1e-3;
  CHECK_THROWS_AS(c.validate(), Error);
}

}

#include "doctest.h"
#include "dsf/gallery.hpp"
#include "dsf/rng.hpp"
#include "oracles.hpp"

using namespace dsf;

TEST_SUITE("gallery") {

TEST_CASE("metadata") {
  CHECK(gallery_ids().size() == 6);
  const auto& s = gallery_model("strip");
  CHECK(s.dw == cplx(1, 0));
  CHECK(s.type == ModelType::Hyperbolic);
  REQUIRE(s.fixed_points.size() == 2);
  CHECK(s.fixed_points[0].dilation(1.0) == doctest::Approx(std::exp(-pi)));
  CHECK(s.fixed_points[1].dilation(1.0) == doctest::Approx(std::exp(pi)));
  const auto& ms = gallery_model("mobius-schroeder");
  CHECK(ms.dw == cplx(0, 0));
  CHECK(ms.fixed_points.at(0).role == "repelling");
  CHECK(ms.fixed_points.at(0).dilation(2.0) == doctest::Approx(std::exp(2.0)));
  CHECK(gallery_model("parabolic").fixed_points.at(0).dilation(3.0) == 1.0);
  CHECK(gallery_model("strip").describe()["type"] == "hyperbolic");
  CHECK_THROWS_AS(gallery_model("nope"), Error);
}

TEST_CASE("closed forms agree with independent oracles") {
  Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    const cplx z = rng.disk(0.95);
    const double t = rng.uniform(0, 3);
    CHECK(std::abs(gallery_model("strip").phi(z, t) - oracle::strip_flow(z, t)) < 1e-12);
    CHECK(std::abs(gallery_model("parabolic").phi(z, t) - oracle::parabolic_flow(z, t)) < 1e-12);
    CHECK(std::abs(gallery_model("mobius-schroeder").phi(z, t) - oracle::logistic_flow(z, t)) < 1e-12);
  }
}

TEST_CASE("channel flow against RK4 of its generator") {
  const auto G = gallery_model("slit-channel").generator();
  for (cplx z : {cplx{0.0, 0.0}, cplx{0.3, -0.5}, cplx{-0.6, 0.2}}) {
    const cplx ref = oracle::rk4([&](cplx w) { return G(w); }, z, 2.0, 20000);
    CHECK(std::abs(channel_semigroup(z, 2.0) - ref) < 1e-9);
  }
  CHECK(channel_semigroup({0.2, 0.1}, 0.0) == cplx(0.2, 0.1));
}

TEST_CASE("channel long time") {
  // 1 - phi_t(0) ~ 2/t: the orbit from 0 is still 0.04 away from 1 at t = 50.
  const cplx w = slit_map_forward(oracle::I) + 50.0;
  const cplx ref = cayley_inverse(oracle::slit_inverse_fixed_point(w));
  const cplx v = channel_semigroup(0.0, 50.0);
  CHECK(std::abs(v - ref) < 1e-12);
  CHECK(std::abs(v - 1.0) == doctest::Approx(0.0435).epsilon(0.02));
}

TEST_CASE("slit map forward") {
  CHECK(std::abs(slit_map_forward(oracle::I) - cplx(0, 1 + pi / 2)) < 1e-15);
  CHECK(std::abs(slit_map_forward({1.0, 1e-9}) - 1.0) < 1e-8);
  const double e = std::exp(1.0);
  CHECK(std::abs(slit_map_forward({0.0, e}) - cplx(1.0, e + pi / 2)) < 1e-15);
  CHECK_THROWS_AS(slit_map_forward(1.0), Error);
}

TEST_CASE("slit map inverse") {
  CHECK(std::abs(slit_map_inverse({0.0, 1.0 + pi / 2}) - oracle::I) < 1e-14);
  // large |zeta|: the fixed-point iteration converges
  for (cplx w : {cplx{30.0, 2.0}, cplx{-20.0, 8.0}, cplx{5.0, 6.0}})
    CHECK(std::abs(slit_map_inverse(w) - oracle::slit_inverse_fixed_point(w)) < 1e-12);
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    const cplx w{rng.uniform(-10, 10), rng.uniform(1e-3, 8)};
    CHECK(std::abs(slit_map_forward(slit_map_inverse(w)) - w) <= 1e-12);
  }
}

TEST_CASE("slit sides") {
  const cplx w{-3.0, pi};
  CHECK_THROWS_AS(slit_map_inverse(w), Error);
  const cplx lo = slit_map_inverse(w, SlitSide::Lower), up = slit_map_inverse(w, SlitSide::Upper);
  CHECK(lo.real() == doctest::Approx(-oracle::slit_edge_newton(-3.0, 0.05)).epsilon(1e-13));
  CHECK(up.real() == doctest::Approx(-oracle::slit_edge_newton(-3.0, 4.0)).epsilon(1e-13));
  CHECK(-lo.real() < 1.0);
  CHECK(-up.real() > 1.0);
  CHECK(on_slit(w));
  CHECK_FALSE(in_slit_domain(w));
  CHECK(in_slit_domain({-3.0, pi + 1e-9}));
}

}

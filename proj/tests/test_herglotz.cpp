#include <vector>

#include "doctest.h"
#include "dsf/herglotz.hpp"
#include "dsf/rng.hpp"
#include "oracles.hpp"

using namespace dsf;

TEST_SUITE("herglotz") {

TEST_CASE("riesz-herglotz point values") {
  const RieszHerglotzData one(0.0, {{1.0, 1.0}});
  CHECK(std::abs(eval_p_disk(one, 0.0) - 1.0) < 1e-15);
  CHECK(std::abs(eval_p_disk(one, 0.5) - 3.0) < 1e-14);
  const RieszHerglotzData c2(2.0, {});
  CHECK(std::abs(eval_p_disk(c2, {0.3, 0.1}) - cplx(0.0, 2.0)) < 1e-15);
}

TEST_CASE("riesz-herglotz derivative matches a difference quotient") {
  const RieszHerglotzData d(0.3, {{unit(0.4), 0.7}, {unit(2.5), 1.2}});
  const cplx z{0.2, -0.3};
  const double h = 1e-5;
  const cplx fd = (eval_p_disk(d, z + h) - eval_p_disk(d, z - h)) / (2 * h);
  CHECK(std::abs(fd - eval_p_disk_derivative(d, z)) < 1e-8);
}

TEST_CASE("real part is nonnegative for random data") {
  Rng rng(7);
  for (int k = 0; k < 50; ++k) {
    std::vector<DiskAtom> atoms;
    for (int a = 0; a < 3; ++a) atoms.push_back({unit(rng.uniform(0, 2 * pi)), rng.uniform(0, 2)});
    const RieszHerglotzData d(rng.uniform(-3, 3), atoms);
    CHECK(eval_p_disk(d, rng.disk(0.999)).real() >= -1e-12);
  }
}

TEST_CASE("rejects atoms off the circle or with negative mass") {
  CHECK_THROWS_AS(RieszHerglotzData(0.0, {{0.5, 1.0}}), Error);
  CHECK_THROWS_AS(RieszHerglotzData(0.0, {{1.0, -1.0}}), Error);
  CHECK_THROWS_AS(eval_p_disk(RieszHerglotzData(0.0, {}), 1.0), Error);
}

TEST_CASE("nevanlinna H' point values") {
  CHECK(std::abs(eval_Hprime(NevanlinnaData(2.0, 0.0, {}, 0.0), 1.0) - cplx(0, 2)) < 1e-15);
  CHECK(std::abs(eval_Hprime(NevanlinnaData(0.0, 0.0, {{0.0, 1.0}}, 0.0), 2.0) - 0.5) < 1e-15);
  CHECK(std::abs(eval_Hprime(NevanlinnaData(0.0, 0.0, {{1.0, 1.0}}, 0.0), 1.0) - 1.0) < 1e-15);
}

TEST_CASE("nevanlinna H point values") {
  CHECK(std::abs(eval_H(NevanlinnaData(0.0, 1.0, {}, 0.0), 2.0) - 1.5) < 1e-14);
  CHECK(std::abs(eval_H(NevanlinnaData(0.0, 0.0, {{0.0, 1.0}}, 0.0), std::exp(1.0)) - 1.0) < 1e-14);
}

TEST_CASE("H agrees with a Gauss-Legendre integral of H'") {
  const NevanlinnaData d(0.4, 0.3, {{-1.0, 0.5}, {2.0, 0.8}}, {0.1, -0.2});
  for (cplx z : {cplx{0.2, 1.5}, cplx{3.0, -2.0}, cplx{0.05, 0.0}}) {
    const cplx ref = d.h_at_one() +
                     oracle::segment_integral([&](cplx s) { return eval_Hprime(d, s); }, 1.0, z, 256);
    CHECK(std::abs(eval_H(d, z) - ref) < 1e-10);
  }
}

TEST_CASE("finite differences of H match H'") {
  const NevanlinnaData d(-0.5, 0.2, {{0.5, 1.0}}, 0.0);
  const cplx z{0.7, 0.4};
  const double h = 1e-5;
  CHECK(std::abs((eval_H(d, z + h) - eval_H(d, z - h)) / (2 * h) - eval_Hprime(d, z)) <= 1e-6);
}

TEST_CASE("kernel bound") {
  std::vector<double> ts;
  for (int k = 0; k <= 20000; ++k) ts.push_back(-100.0 + 0.01 * k);
  const auto at1 = integrand_bound_check(1.0, ts);
  CHECK(std::abs(at1.max_abs - 1.0) < 1e-12);
  CHECK(at1.holds());
  CHECK(integrand_bound_check(2.0, ts).bound == doctest::Approx(4.5));
  const auto far = integrand_bound_check({0.1, 5.0}, ts);
  CHECK(far.holds());
  CHECK(far.max_abs <= (1 + 2 * 25.01) / 0.1);
  CHECK_THROWS_AS(integrand_bound_check({0.0, 1.0}, ts), Error);
}

TEST_CASE("json roundtrip") {
  const auto j = nlohmann::json::parse(R"({"c": 0.5, "atoms": [{"u_angle": 1.0, "mass": 2.0}]})");
  const auto d = herglotz_from_json(j);
  CHECK(d.c() == 0.5);
  CHECK(std::abs(d.atoms()[0].u - unit(1.0)) < 1e-15);
  CHECK(herglotz_from_json(to_json(d)).atoms()[0].mass == 2.0);
  const auto n = nevanlinna_from_json(
      nlohmann::json::parse(R"({"alpha": 1, "beta": 0, "atoms": [{"t": 2, "mass": 1}], "H1": [0, 1]})"));
  CHECK(n.h_at_one() == cplx(0, 1));
  CHECK_THROWS_AS(herglotz_from_json(nlohmann::json::parse(R"({"c": "x"})")), Error);
}

}

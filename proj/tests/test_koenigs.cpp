#include "doctest.h"
#include "dsf/gallery.hpp"
#include "dsf/koenigs.hpp"
#include "oracles.hpp"

using namespace dsf;

namespace {

BerksonPortaData bp_of(const std::string& id) { return gallery_model(id).bp; }

}  // namespace

TEST_SUITE("koenigs") {

TEST_CASE("boundary case values") {
  const auto h = koenigs_boundary(GeneratorFn::from(bp_of("strip")), 1.0);
  CHECK(std::abs(h(0.0)) < 1e-14);
  CHECK(std::abs(h(0.5) - std::log(3.0) / pi) < 1e-10);
  const auto hp = koenigs_boundary(GeneratorFn::from(bp_of("parabolic")), 1.0);
  CHECK(std::abs(hp(0.5) - cplx(0.0, 2.0)) < 1e-10);
}

TEST_CASE("interior case values") {
  const auto id = koenigs_interior(bp_of("dilation"));
  CHECK(std::abs(id({0.0, 0.7}) - cplx(0.0, 0.7)) < 1e-12);
  const auto ms = koenigs_interior(bp_of("mobius-schroeder"));
  CHECK(std::abs(ms(0.5) - 1.0) < 1e-9);
  CHECK(std::abs(ms({0.2, -0.6}) - cplx{0.2, -0.6} / (1.0 - cplx{0.2, -0.6})) < 1e-9);
  CHECK(std::abs(koenigs_interior(bp_of("spiral"))(0.5) - 0.5) < 1e-12);
  CHECK(std::abs(ms.lambda() + 1.0) < 1e-15);
}

TEST_CASE("interior case off the origin") {
  // G = -(z - a)(1 - a z) with a real: h(M^{-1}(w)) = w, so h = M.
  const double a = 0.3;
  const auto bp = make_berkson_porta(a, builtin_positive_part("one"));
  const auto h = koenigs_interior(bp);
  for (cplx z : {cplx{0.1, 0.4}, cplx{-0.5, -0.2}})
    CHECK(std::abs(h(z) - (z - a) / (1.0 - a * z)) < 1e-10);
  CHECK(std::abs(h.lambda() + (1.0 - a * a)) < 1e-14);
}

TEST_CASE("functional equations") {
  const auto strip = gallery_model("strip").model();
  const auto h = koenigs_for(strip);
  CHECK(abel_residual(h, strip, 0.3, 1.0) <= 1e-8);
  CHECK(abel_residual(h, strip, 0.3, 0.0) <= 1e-12);
  const auto chan = gallery_model("slit-channel").model();
  CHECK(abel_residual(koenigs_for(chan), chan, {0.0, 0.2}, 2.0) <= 1e-7);
  CHECK_THROWS_AS(schroeder_residual(h, strip, 0.3, 1.0), Error);

  const auto dil = gallery_model("dilation").generator_model();
  CHECK(schroeder_residual(koenigs_for(dil), dil, 0.5, 1.0) <= 1e-8);
  const auto ms = gallery_model("mobius-schroeder").model();
  const auto hm = koenigs_for(ms);
  CHECK(std::abs(hm(1.0 / 3.0) - 0.5) <= 1e-8);
  CHECK(schroeder_residual(hm, ms, 0.5, std::log(2.0)) <= 1e-8);
  const auto sp = gallery_model("spiral").model();
  CHECK(schroeder_residual(koenigs_for(sp), sp, 0.5, 1.0) <= 1e-8);
}

TEST_CASE("derivative from the functional equation") {
  const auto h = koenigs_boundary(GeneratorFn::from(bp_of("strip")), 1.0);
  const cplx z{0.2, 0.3};
  CHECK(std::abs(h.derivative(z) - 2.0 / (pi * (1.0 - z * z))) < 1e-12);
}

TEST_CASE("panel halving") {
  const auto h = koenigs_boundary(GeneratorFn::from(bp_of("strip")), 1.0);
  for (cplx z : {cplx{0.5, 0.0}, cplx{-0.4, 0.6}})
    CHECK(std::abs(h.evaluate_fixed(z, 64) - h.evaluate_fixed(z, 32)) <= 1e-10);
}

TEST_CASE("half-plane conjugate") {
  const auto h = koenigs_boundary(GeneratorFn::from(bp_of("strip")), 1.0);
  const auto H = halfplane_conjugate(h, -1.0);
  CHECK(H.derivative(1.0).real() > 0.0);
  // finite-difference check against the closed form h
  auto Hc = [&](cplx w) { return gallery_model("strip").h(H.preimage(w)); };
  const double d = 1e-5;
  CHECK(std::abs((Hc(1.0 + d) - Hc(1.0 - d)) / (2 * d) - H.derivative(1.0)) < 1e-7);
  CHECK(H(1.0).real() > H(0.5).real());
  CHECK(H(0.5).real() > H(0.1).real());
  const auto hp = koenigs_boundary(GeneratorFn::from(bp_of("parabolic")), 1.0);
  CHECK_NOTHROW(halfplane_conjugate(hp, -1.0));
}

TEST_CASE("misuse") {
  const auto h = koenigs_boundary(GeneratorFn::from(bp_of("strip")), 1.0);
  CHECK_THROWS_AS(h.lambda(), Error);
  CHECK_THROWS_AS(h(1.0), Error);
  CHECK_THROWS_AS(halfplane_conjugate(h, 1.0), Error);
}

}

#include "doctest.h"
#include "dsf/boundary.hpp"
#include "dsf/gallery.hpp"
#include "oracles.hpp"

using namespace dsf;

namespace {

SemigroupModel model(const std::string& id) { return gallery_model(id).model(); }

}  // namespace

TEST_SUITE("boundary") {

TEST_CASE("approach paths") {
  const cplx s = unit(0.7);
  for (const auto& p : stolz_paths()) {
    const cplx z = p.at(s, 1e-3);
    CHECK(std::abs(1.0 - std::conj(s) * z) == doctest::Approx(1e-3));
    CHECK(std::abs(z) < 1.0);
  }
  CHECK(stolz_paths().size() == 7);
  CHECK(StolzAngle(1.0, pi / 4).contains(0.9));
  CHECK_FALSE(StolzAngle(1.0, pi / 4).contains({0.9, 0.3}));
  const auto t = ApproachPath::tangential(2.0, 1);
  const cplx z = t.at(1.0, 1e-2);
  CHECK(1.0 - std::abs(z) < 1e-3);
  CHECK_THROWS_AS(ApproachPath::tangential(0.5, 1), Error);
}

TEST_CASE("angular limits") {
  const auto ms = angular_limit(model("mobius-schroeder"), 1.0, 1.0);
  CHECK(ms.converged);
  CHECK(std::abs(ms.value - 1.0) < 1e-6);
  CHECK(std::abs(angular_limit(model("strip"), -1.0, 1.0).value + 1.0) < 1e-6);
  CHECK(std::abs(angular_limit(model("parabolic"), -1.0, 1.0).value - cplx(0, -1)) < 1e-6);
  const cplx sigma = unit(2.0);
  CHECK(std::abs(boundary_value(model("strip"), sigma, 0.5) - oracle::strip_flow(sigma, 0.5)) < 1e-6);
}

TEST_CASE("dilation coefficients") {
  CHECK(dilation(model("strip"), -1.0, 1.0) == doctest::Approx(std::exp(pi)).epsilon(1e-4));
  CHECK(dilation(model("strip"), 1.0, 1.0) == doctest::Approx(std::exp(-pi)).epsilon(1e-3));
  CHECK(dilation(model("mobius-schroeder"), 1.0, std::log(2.0)) == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("classification") {
  CHECK(classify(model("mobius-schroeder"), 1.0) == PointClass::RepellingRegular);
  CHECK(classify(model("strip"), 1.0) == PointClass::BoundaryDw);
  CHECK(classify(model("strip"), -1.0) == PointClass::RepellingRegular);
  const auto g = classify_point(model("mobius-schroeder"), -1.0);
  CHECK_FALSE(g.is_fixed);
  CHECK(g.classification == PointClass::Generic);
  CHECK(classify(model("parabolic"), 1.0) == PointClass::BoundaryDw);
  CHECK(classify(model("slit-channel"), -1.0) == PointClass::RepellingRegular);
  CHECK(classify_point(model("strip"), -1.0).to_json()["classification"] == "repelling-regular");
}

TEST_CASE("unrestricted limits at repelling points") {
  const auto strip = model("strip");
  const auto r = unrestricted_probe([&](cplx z) { return strip.flow(z, 1.0); }, -1.0, mixed_paths(), 1e-6, 40);
  CHECK(r.verdict == Verdict::Agrees);
  CHECK(std::abs(r.limit + 1.0) < 1e-6);
  const auto& h = gallery_model("strip").h;
  const auto im = unrestricted_probe([&](cplx z) { return cplx{h(z).imag(), 0.0}; }, -1.0,
                                     {ApproachPath::radial(), ApproachPath::tangential(2.0, 1)}, 1e-3);
  CHECK(im.verdict == Verdict::Disagrees);
}

TEST_CASE("Koenigs signatures") {
  const auto& h = gallery_model("strip").h;
  const auto s = koenigs_signature(h, -1.0);
  CHECK(s.re_to_minus_infinity);
  REQUIRE(s.im_radial_limit.has_value());
  CHECK(std::abs(*s.im_radial_limit) < 1e-6);
  CHECK(s.im_tangential_spread > 0.4);
  CHECK(h(-(1.0 - 1e-7)).real() < -5.0);
  const auto i = koenigs_signature(h, oracle::I);
  CHECK_FALSE(i.re_to_minus_infinity);
  CHECK(i.im_radial_limit.has_value());
  const auto& hc = gallery_model("slit-channel").h;
  CHECK(koenigs_signature(hc, -1.0).re_to_minus_infinity);
}

TEST_CASE("equicontinuity moduli") {
  const auto m = equicontinuity_modulus(model("strip"), 1.0, 2.0, {1e-3, 2e-3, 1e-2});
  CHECK(m[0].modulus < 0.1);
  CHECK(m[1].modulus / m[0].modulus == doctest::Approx(2.0).epsilon(0.05));
  const auto ms = equicontinuity_modulus(model("mobius-schroeder"), 1.0, 2.0, {1e-4, 1e-3, 1e-2});
  CHECK(ms[0].modulus < ms[1].modulus);
  CHECK(ms[0].modulus < 1e-2);
  const auto w = witness_distances(model("parabolic"), gallery_model("parabolic").h_inverse, {5, 10, 20});
  for (double d : w) CHECK(d >= 0.99);
}

TEST_CASE("time equicontinuity") {
  std::vector<cplx> grid;
  for (int k = 0; k < 40; ++k) grid.push_back(unit(k * 0.157));
  for (int k = 1; k < 10; ++k) grid.push_back(std::polar(0.1 * k, 0.3 * k));
  std::vector<double> ts;
  for (int j = 0; j <= 20; ++j) ts.push_back(0.1 * j);
  const auto d = time_equicontinuity(model("dilation"), grid, ts, {0.0, 1e-3, 1e-2});
  CHECK(d[0].modulus == 0.0);
  CHECK(d[1].modulus <= 1e-3);
  CHECK(d[2].modulus <= 1e-2);
  const auto s = time_equicontinuity(model("strip"), grid, ts, {0.0, 1e-3, 1e-2});
  CHECK(s[1].modulus < 1e-2);
  CHECK(s[1].modulus <= s[2].modulus);
}

TEST_CASE("long-time boundary behaviour") {
  CHECK(long_time_boundary(model("strip"), -1.0, 10.0).verdict == LongTime::Fixed);
  const auto p = long_time_boundary(model("parabolic"), -1.0, 1e3);
  CHECK(p.verdict == LongTime::ConvergesToDw);
  // phi_t(-1) = (t - i)/(t + i)
  auto track = [](double t) { return cplx(t, -1.0) / cplx(t, 1.0); };
  CHECK(long_time_boundary(track, -1.0, 1.0, 1e3).verdict == LongTime::ConvergesToDw);
}

}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "numrange/bounds.hpp"
#include "numrange/oracle.hpp"
#include "test_support.hpp"

using namespace numrange;
using testsup::C;
using testsup::Mat;

namespace {

const double kRt2 = std::sqrt(2.0);
const double kRt3 = std::sqrt(3.0);

Mat nilpotent2() {
  Mat t(2, 2);
  t << C(0), C(1), C(0), C(0);
  return t;
}

Mat upper_ones() {
  Mat t(2, 2);
  t << C(1), C(1), C(0), C(0);
  return t;
}

}  // namespace

TEST_CASE("bounds of the basic nilpotent") {
  Mat t = nilpotent2();
  CHECK(bound_classical(t) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bound_kittaneh_power(t) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(bound_kittaneh_mean(t) == doctest::Approx(kRt2 / 2).epsilon(1e-12));
  double c = (kRt2 - 1) / 2;
  CHECK(bound_octagon(t) == doctest::Approx(std::sqrt(c * c + 0.25)).epsilon(1e-12));
  // numerical range is the disk of radius 1/2, so the power bound is exact
  CHECK(bound_kittaneh_power(t) <= bound_octagon(t));
  CHECK(bound_octagon(t) <= bound_kittaneh_mean(t));
}

TEST_CASE("bounds of the idempotent example") {
  Mat t = upper_ones();
  CHECK(bound_classical(t) == doctest::Approx(kRt2).epsilon(1e-12));
  CHECK(bound_kittaneh_power(t) ==
        doctest::Approx((kRt2 + std::pow(2.0, 0.25)) / 2).epsilon(1e-12));
  CHECK(bound_kittaneh_mean(t) ==
        doctest::Approx(std::sqrt((2 + kRt2) / 2)).epsilon(1e-12));
  // farthest octagon vertex sits on the right edge
  double want = std::sqrt((4 + kRt2 - std::sqrt(6.0)) / 2);
  CHECK(bound_octagon(t) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("bound_report packages values and ratios") {
  auto report = bound_report(nilpotent2());
  CHECK(report.spectral_norm == report.classical);
  CHECK(report.ratios.kittaneh_power ==
        doctest::Approx(report.kittaneh_power / report.classical).epsilon(1e-15));
  CHECK(report.ratios.kittaneh_mean ==
        doctest::Approx(report.kittaneh_mean / report.classical).epsilon(1e-15));
  CHECK(report.ratios.octagon ==
        doctest::Approx(report.octagon / report.classical).epsilon(1e-15));
  CHECK_THROWS_AS(bound_report(Mat::Zero(3, 3).eval()), ZeroOperatorError);
}

TEST_CASE("all bounds collapse to the norm for Hermitian matrices") {
  Rng rng(91);
  for (int rep = 0; rep < 10; ++rep) {
    Mat h = testsup::random_hermitian(rng, 6);
    double n = bound_classical(h);
    CHECK(bound_kittaneh_power(h) == doctest::Approx(n).epsilon(1e-11));
    CHECK(bound_kittaneh_mean(h) == doctest::Approx(n).epsilon(1e-11));
    CHECK(bound_octagon(h) == doctest::Approx(n).epsilon(1e-11));
  }
}

TEST_CASE("bounds scale with the operator") {
  Rng rng(92);
  Mat t = testsup::random_matrix(rng, 5);
  C c(1.5, -2.0);
  double mag = std::abs(c);
  Mat ct = c * t;
  CHECK(bound_classical(ct) ==
        doctest::Approx(mag * bound_classical(t)).epsilon(1e-11));
  CHECK(bound_kittaneh_power(ct) ==
        doctest::Approx(mag * bound_kittaneh_power(t)).epsilon(1e-11));
  CHECK(bound_kittaneh_mean(ct) ==
        doctest::Approx(mag * bound_kittaneh_mean(t)).epsilon(1e-11));
  // the octagon construction is axis-aligned, so only positive real
  // scaling carries through it
  Mat st = 2.5 * t;
  CHECK(bound_octagon(st) == doctest::Approx(2.5 * bound_octagon(t)).epsilon(1e-11));
}

TEST_CASE("power and mean bounds never exceed the classical bound") {
  Rng rng(93);
  for (int rep = 0; rep < 20; ++rep) {
    int m = 2 + static_cast<int>(rng.uniform(0, 8.999));
    Mat t = testsup::random_matrix(rng, m, 2.0);
    auto report = bound_report(t);
    CHECK(report.kittaneh_power <= report.classical * (1 + 1e-12));
    CHECK(report.kittaneh_mean <= report.classical * (1 + 1e-12));
  }
}

TEST_CASE("every bound dominates the sampled numerical radius") {
  Rng rng(94);
  for (int rep = 0; rep < 25; ++rep) {
    int m = 2 + static_cast<int>(rng.uniform(0, 8.999));
    Mat t = testsup::random_matrix(rng, m, 2.0);
    auto report = bound_report(t);
    double radius = boundary_sweep(cartesian_split(t), 360).oracle_radius;
    double tol = 1e-9 * (1.0 + report.classical);
    CHECK(radius <= report.classical + tol);
    CHECK(radius <= report.kittaneh_power + tol);
    CHECK(radius <= report.kittaneh_mean + tol);
    CHECK(radius <= report.octagon + tol);
  }
}

TEST_CASE("numerical radius can exceed the induced one-norm") {
  // The sampled radius beats the induced one-norm here, so that norm
  // cannot bound the numerical radius on its own.
  Mat t = upper_ones();
  CHECK(norm(t, NormKind::InducedOne) == 1.0);
  double radius = boundary_sweep(cartesian_split(t), 360).oracle_radius;
  CHECK(radius >= (3 + kRt3) / 4 - 1e-9);
  CHECK(radius > 1.0);
}

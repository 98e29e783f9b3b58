#include <cmath>
#include <limits>

#include "doctest.h"
#include "gravdec/constants.hpp"
#include "gravdec/errors.hpp"
#include "gravdec/special_functions.hpp"
#include "reference_values.hpp"

using namespace gravdec;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("cosine integral matches reference values") {
  for (const auto& row : ref::ci) {
    CAPTURE(row.x);
    CHECK(rel(cosine_integral(row.x), row.value) <= 1e-12);
  }
  CHECK(std::abs(cosine_integral(1.0) - 0.3374039229009681) <= 1e-12);
  CHECK(std::abs(cosine_integral(1e-9) - std::log(1e-9) - euler_gamma) <= 1e-15);
  CHECK(std::abs(cosine_integral(1e4)) < 2e-4);
  CHECK_THROWS_AS(cosine_integral(0.0), DomainError);
  CHECK_THROWS_AS(cosine_integral(-1.0), DomainError);
}

TEST_CASE("kernel auxiliaries F3 and F5") {
  for (const auto& row : ref::kernel_aux) {
    CAPTURE(row.n);
    CAPTURE(row.x);
    CHECK(rel(kernel_aux(row.n, row.x), row.value) <= 1e-10);
  }
  CHECK(kernel_aux(3, 0.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(kernel_aux(5, 0.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  for (double x : {1e-5, 0.2, 0.9, 3.0, 17.0}) {
    CHECK(kernel_aux(3, -x) == kernel_aux(3, x));
    CHECK(kernel_aux(5, -x) == kernel_aux(5, x));
  }
  CHECK_THROWS_AS(kernel_aux(4, 1.0), DomainError);
}

TEST_CASE("thermal auxiliaries") {
  for (const auto& row : ref::thermal_aux) {
    CAPTURE(row.n);
    CAPTURE(row.x);
    CHECK(rel(thermal_aux(row.n, row.x), row.value) <= 1e-10);
  }
  CHECK(thermal_aux(1, 1e-8) == doctest::Approx(2.0 / 945.0).epsilon(1e-12));
  CHECK(thermal_aux(2, 1e-8) == doctest::Approx(1.0 / 45.0).epsilon(1e-12));
  CHECK(thermal_aux_even(1, 0.0) == doctest::Approx(2.0 / 945.0));
  CHECK(thermal_aux_even(2, -0.7) == thermal_aux(2, 0.7));
  CHECK(std::abs(thermal_aux(1, 50.0)) < 1e-8);
  for (double x = 1e-300; x < 700.0; x *= 3.7) {
    CHECK(std::isfinite(thermal_aux(1, x)));
    CHECK(std::isfinite(thermal_aux(2, x)));
  }
  CHECK(std::isfinite(thermal_aux(1, 700.0)));
  CHECK_THROWS_AS(thermal_aux(1, 0.0), DomainError);
}

TEST_CASE("series switches are continuous") {
  struct Case {
    SeriesSwitch sw;
    double (*f)(double);
  };
  const Case cases[] = {
      {kernel_aux_switch(3), [](double x) { return kernel_aux(3, x); }},
      {kernel_aux_switch(5), [](double x) { return kernel_aux(5, x); }},
      {thermal_aux_switch(1), [](double x) { return thermal_aux(1, x); }},
      {thermal_aux_switch(2), [](double x) { return thermal_aux(2, x); }},
      {polylog_combination_gt3_switch(), polylog_combination_gt3},
  };
  for (const auto& c : cases) {
    REQUIRE(c.sw.threshold > 0.0);
    const double below = c.f(std::nextafter(c.sw.threshold, 0.0));
    const double above = c.f(c.sw.threshold);
    CAPTURE(c.sw.threshold);
    CHECK(rel(below, above) <= 1e-10);
  }
}

TEST_CASE("thermal G+N polylogarithm combination") {
  CHECK(rel(polylog_combination_gt3(2.0), 0.247412388832144951289270303218) <= 1e-12);
  CHECK(rel(polylog_combination_gt3(10.0), 732.53196236823690448008652234) <= 1e-12);
  CHECK(std::abs(polylog_combination_gt3(1e-6)) < 1e-20);
  CHECK_THROWS_AS(polylog_combination_gt3(0.0), DomainError);
  CHECK(polylog_small(2, 0.5) == doctest::Approx(pi * pi / 12.0 - 0.5 * std::log(2.0) * std::log(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(polylog_small(2, 0.6), DomainError);
}

TEST_CASE("zeta(3)") {
  double s = 0.0;
  for (int n = 200000; n >= 1; --n) s += 1.0 / (double(n) * n * n);
  s += 1.0 / (2.0 * 200000.0 * 200000.0);
  CHECK(zeta3() == doctest::Approx(s).epsilon(1e-13));
  CHECK(zeta3() > 1.0);
  CHECK(zeta3() < pi * pi * pi / 24.0 + 1.0);
}

#include <catch_amalgamated.hpp>

#include <cmath>

#include <l1fourier/errors.hpp>
#include <l1fourier/families.hpp>

using namespace l1f;
using Catch::Approx;

TEST_CASE("monotone_power(1) is 1/n") {
  const auto c = make_family({"monotone_power", {1.0}, std::nullopt});
  for (std::int64_t n = 1; n < 100; ++n) CHECK(c(n).real() == Approx(1.0 / n).epsilon(1e-15));
  CHECK(c(0) == Complex{});
  CHECK(c(-3) == c(3));
  REQUIRE(c.descriptor());
  CHECK(c.descriptor()->family == "monotone_power");
}

TEST_CASE("lacunary_alpha(1.5, 3) places sine coefficients at 2, 16, 512") {
  const auto c = make_family({"lacunary_alpha", {1.5, 3.0}, std::nullopt});
  const std::int64_t ms[] = {2, 16, 512};
  for (int k = 1; k <= 3; ++k) {
    const std::int64_t m = ms[k - 1];
    const double b = std::pow(k, -1.5);
    // f̂(m) = b/(2i), f̂(−m) = −b/(2i)
    CHECK(std::abs(c(m) - b / Complex(0, 2)) < 1e-15);
    CHECK(std::abs(c(-m) + b / Complex(0, 2)) < 1e-15);
    CHECK(2.0 * std::abs(c(m)) == Approx(b));
  }
  std::int64_t nonzero = 0;
  for (std::int64_t m = -600; m <= 600; ++m) nonzero += c(m) != Complex{};
  CHECK(nonzero == 6);
  REQUIRE(c.sparse_support());
  CHECK(*c.sparse_support() == std::vector<std::int64_t>{2, 16, 512});
}

TEST_CASE("gbv_gapped(2) zeros single points at powers of two from 4") {
  const auto c = make_family({"gbv_gapped", {2.0}, std::nullopt});
  for (std::int64_t n = 1; n <= 4096; ++n) {
    const bool gap = n >= 4 && (n & (n - 1)) == 0;
    if (gap) {
      CHECK(c(n) == Complex{});
    } else {
      CHECK(c(n).real() == Approx(1.0 / n));
    }
  }
}

TEST_CASE("gbv_gapped(N) runs have length N-1") {
  const auto c = make_family({"gbv_gapped", {5.0}, std::nullopt});
  for (std::int64_t k = 16; k <= 19; ++k) CHECK(c(k) == Complex{});
  CHECK(c(20) != Complex{});
  CHECK(c(15) != Complex{});
  CHECK(c(8) != Complex{});  // 8 < 2N: no run yet
}

TEST_CASE("quasimonotone_oscillating definition") {
  const auto c = make_family({"quasimonotone_oscillating", {2.0}, std::nullopt});
  CHECK(c(3).real() == Approx((2.0 - 1.0 / 3) / 9));
  CHECK(c(4).real() == Approx((2.0 + 0.25) / 16));
}

TEST_CASE("orvqm_complex is conjugate symmetric") {
  const auto c = make_family({"orvqm_complex", {0.7, 1.0, 1.0, -0.3, 0.5, 0.5}, std::nullopt});
  for (std::int64_t n = 1; n < 40; ++n) {
    const double x = static_cast<double>(n);
    const Complex expect = std::sqrt(x) * (std::polar(1.0, 0.7) / x + std::polar(0.5, -0.3) * std::exp2(-x));
    CHECK(std::abs(c(n) - expect) < 1e-14);
    CHECK(c(-n) == std::conj(c(n)));
  }
}

TEST_CASE("one-sided override zeroes the negative side") {
  const auto c = make_family({"monotone_power", {2.0}, Symmetry::None});
  CHECK(c(3).real() == Approx(1.0 / 9));
  CHECK(c(-3) == Complex{});
}

TEST_CASE("log_decay defaults and table family") {
  const auto c = make_family({"log_decay", {}, std::nullopt});
  CHECK(c(5).real() == Approx(1.0 / std::log(7.0)));
  const auto t = make_family({"table", {1.0, 0.5, 0.25}, std::nullopt});
  CHECK(t(-2).real() == 0.25);
  CHECK(t(3) == Complex{});
}

TEST_CASE("tail bounds dominate the neglected mass") {
  const auto p = make_family({"monotone_power", {2.0}, std::nullopt});
  REQUIRE(p.tail_bound());
  double tail = 0.0;
  for (std::int64_t k = 101; k <= 2000000; ++k) tail += 2.0 / (static_cast<double>(k) * k);
  CHECK((*p.tail_bound())(100) >= tail);
  const auto g = make_family({"rbvs_geometric", {0.5}, std::nullopt});
  CHECK((*g.tail_bound())(10) == Approx(2.0 * std::pow(0.5, 11) / 0.5));
}

TEST_CASE("invalid families and parameters are input errors") {
  CHECK_THROWS_AS(make_family({"nope", {}, std::nullopt}), InputError);
  CHECK_THROWS_AS(make_family({"monotone_power", {-1.0}, std::nullopt}), InputError);
  CHECK_THROWS_AS(make_family({"monotone_power", {}, std::nullopt}), InputError);
  CHECK_THROWS_AS(make_family({"lacunary_alpha", {2.5, 3.0}, std::nullopt}), InputError);
  CHECK_THROWS_AS(make_family({"lacunary_alpha", {1.5, 7.0}, std::nullopt}), InputError);
  CHECK_THROWS_AS(make_family({"lacunary_alpha", {1.5, 2.5}, std::nullopt}), InputError);
  CHECK_THROWS_AS(make_family({"gbv_gapped", {1.0}, std::nullopt}), InputError);
  CHECK_THROWS_AS(make_family({"rbvs_geometric", {1.0}, std::nullopt}), InputError);
  CHECK_THROWS_AS(make_family({"orvqm_complex", {1.6, 1.0}, std::nullopt}), InputError);
}

TEST_CASE("regularly varying weights") {
  CHECK(RegVaryingWeight::constant()(7) == 1.0);
  CHECK(RegVaryingWeight::power(2.0)(3) == Approx(9.0));
  CHECK(RegVaryingWeight::log()(1) == Approx(std::log(3.0)));
  CHECK(RegVaryingWeight::exponential(2.0)(10) == Approx(1024.0));
}

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include <l1fourier/errors.hpp>
#include <l1fourier/families.hpp>
#include <l1fourier/kernels.hpp>
#include <l1fourier/quadrature.hpp>
#include <l1fourier/series.hpp>

using namespace l1f;
using namespace l1f::series;
using Catch::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

CoefficientSequence random_table(std::mt19937_64& rng, std::int64_t len) {
  std::normal_distribution<double> nd;
  std::vector<Complex> pos(static_cast<std::size_t>(len) + 1), neg(static_cast<std::size_t>(len));
  for (auto& z : pos) z = {nd(rng), nd(rng)};
  for (auto& z : neg) z = {nd(rng), nd(rng)};
  return CoefficientSequence::table(pos, neg);
}

// z^{-n} Σ_{j=0}^{2n} c_{j-n} z^j by Horner's rule.
Complex horner(const CoefficientSequence& c, std::int64_t n, double x) {
  const Complex z = std::polar(1.0, x);
  Complex acc{};
  for (std::int64_t j = 2 * n; j >= 0; --j) acc = acc * z + c(j - n);
  return acc * std::polar(1.0, -static_cast<double>(n) * x);
}

Complex direct_partial(const CoefficientSequence& c, std::int64_t n, double x) {
  Complex s{};
  for (std::int64_t k = -n; k <= n; ++k) s += c(k) * std::polar(1.0, static_cast<double>(k) * x);
  return s;
}

// Kernel expansion with a selectable sign in the middle sum.
Complex expansion(const CoefficientSequence& c, std::int64_t n, double lambda, double x, double sign) {
  const std::int64_t p = static_cast<std::int64_t>(std::floor(lambda * n + 1e-9));
  const kernels::KernelContext base(n, n);
  auto E = [&](std::int64_t k, double y) { return kernels::complex_kernel(base.with_degree(k), y); };
  auto D = [&](std::int64_t k, double y) { return kernels::dirichlet(base.with_degree(k), y); };
  const double inv = 1.0 / static_cast<double>(p - n);
  Complex first{}, middle{};
  for (std::int64_t k = n; k <= p; ++k) {
    const Complex dp = c(k) - c(k + 1);
    const Complex dm = c(-k) - c(-k - 1);
    first += static_cast<double>(p - k) * (2.0 * dp * D(k, x) - (dp - dm) * E(k, -x));
  }
  for (std::int64_t k = n; k < p; ++k) middle += c(k + 1) * E(k, x) + sign * c(-k - 1) * E(k, -x);
  return inv * first + inv * middle - (c(n) * E(n, x) + c(-n) * E(n, -x));
}

}  // namespace

TEST_CASE("partial sum matches Horner evaluation") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int t = 0; t < 5; ++t) {
    const auto c = random_table(rng, 30);
    for (int i = 0; i < 50; ++i) {
      const double x = u(rng);
      CHECK(std::abs(partial_sum(c, 16, x) - horner(c, 16, x)) <= 1e-12 * 30);
    }
  }
}

TEST_CASE("partial sum of a cosine series") {
  std::vector<double> a = {2.0};
  for (int k = 1; k <= 10; ++k) a.push_back(1.0 / (k * k));
  const auto c = from_cosine_coefficients(a);
  CHECK(partial_sum(c, 0, 0.3) == Complex(1.0, 0.0));
  CHECK(partial_sum(c, 2, 0.0).real() == Approx(1.0 + 1.0 + 0.25).epsilon(1e-15));
  const double x = 0.7;
  CHECK(partial_sum(c, 2, x).real() == Approx(1.0 + std::cos(x) + 0.25 * std::cos(2 * x)).epsilon(1e-14));
  CHECK(std::abs(partial_sum(c, 10, x).imag()) <= 1e-15);
}

TEST_CASE("conjugate families synthesize real partial sums") {
  const auto c = make_family({"orvqm_complex", {0.7, 1.2, 1.0, -0.4, 0.5, 0.0}, std::nullopt});
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int i = 0; i < 100; ++i) CHECK(std::abs(partial_sum(c, 200, u(rng)).imag()) <= 1e-12);
}

TEST_CASE("delayed weights and top") {
  CHECK(delayed_top(10, 2.0) == 20);
  CHECK(delayed_top(10, 1.1) == 11);
  CHECK_THROWS_AS(delayed_top(10, 1.05), InputError);
  CHECK(delayed_weight(10, 20, 0) == 1.0);
  CHECK(delayed_weight(10, 20, -10) == 1.0);
  CHECK(delayed_weight(10, 20, 15) == 0.5);
  CHECK(delayed_weight(10, 20, -19) == Approx(0.1));
  CHECK(delayed_weight(10, 20, 20) == 0.0);
}

TEST_CASE("delayed mean against the double sum") {
  std::vector<double> a = {0.0};
  for (int k = 1; k <= 200; ++k) a.push_back(1.0 / (double(k) * k));
  const auto c = from_cosine_coefficients(a);
  for (double x : {-2.9, -0.4, 0.0, 0.03, 1.7}) {
    Complex mean{};
    for (std::int64_t k = 32; k <= 63; ++k) mean += direct_partial(c, k, x);
    mean /= 32.0;
    CHECK(std::abs(delayed_mean(c, 32, 2.0, x) - mean) <= 1e-12);
  }
}

TEST_CASE("delayed mean degenerate cases") {
  std::mt19937_64 rng(1);
  const auto c = random_table(rng, 40);
  CHECK(std::abs(delayed_mean(c, 10, 1.1, 0.4) - partial_sum(c, 10, 0.4)) <= 1e-13);
  const auto poly = random_table(rng, 8);
  CHECK(std::abs(delayed_mean(poly, 8, 3.0, 1.1) - partial_sum(poly, 8, 1.1)) <= 1e-13);
  CHECK_THROWS_AS(delayed_mean(c, 10, 1.05, 0.0), InputError);
}

TEST_CASE("abel expansion equals tau minus S_n") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  std::uniform_int_distribution<std::int64_t> nd(2, 24);
  std::uniform_real_distribution<double> ld(1.2, 3.0);
  for (int t = 0; t < 20; ++t) {
    const auto c = random_table(rng, 80);
    const std::int64_t n = nd(rng);
    const double lambda = ld(rng);
    if (delayed_top(n, lambda) <= n) continue;
    const kernels::KernelContext ctx(n, n);
    for (int i = 0; i < 50; ++i) {
      const double x = u(rng);
      const Complex lhs = delayed_mean(c, n, lambda, x) - partial_sum(c, n, x);
      const Complex rhs = abel_rhs(c, n, lambda, x, ctx);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * (1 + std::abs(lhs)));
      CHECK(std::abs(rhs - expansion(c, n, lambda, x, 1.0)) <= 1e-10 * (1 + std::abs(rhs)));
    }
  }
}

TEST_CASE("minus sign in the middle sum breaks the identity") {
  std::mt19937_64 rng(31);
  const auto c = random_table(rng, 40);
  const double x = 0.9;
  const Complex lhs = delayed_mean(c, 6, 2.0, x) - partial_sum(c, 6, x);
  CHECK(std::abs(lhs - expansion(c, 6, 2.0, x, 1.0)) <= 1e-11);
  CHECK(std::abs(lhs - expansion(c, 6, 2.0, x, -1.0)) > 1e-3);
}

TEST_CASE("abel expansion trivial inputs") {
  const kernels::KernelContext ctx(12, 12);
  CHECK(std::abs(abel_rhs(CoefficientSequence(), 12, 2.0, 0.3, ctx)) == 0.0);
  std::mt19937_64 rng(2);
  const auto poly = random_table(rng, 11);
  CHECK(std::abs(abel_rhs(poly, 12, 2.0, 0.3, ctx)) <= 1e-12);
  CHECK_THROWS_AS(abel_rhs(poly, 10, 2.0, 0.3, ctx), InputError);
}

TEST_CASE("cauchy gap examples") {
  const auto g = quad::build_grid(64, 1e-12);
  for (std::int64_t m : {1, 7, 64}) {
    const auto c = CoefficientSequence(
        [m](std::int64_t k) -> Complex { return std::abs(k) == m ? 0.5 : 0.0; }, Symmetry::None);
    CHECK(cauchy_gap(c, m - 1, m, g) == Approx(4.0).epsilon(1e-11));
    if (m > 1) CHECK(cauchy_gap(c, 0, m - 1, g) == 0.0);
  }
  std::mt19937_64 rng(3);
  const auto poly = random_table(rng, 10);
  CHECK(cauchy_gap(poly, 10, 60, g) == 0.0);
  CHECK_THROWS_AS(cauchy_gap(poly, 10, 65, g), ResolutionError);
  CHECK_THROWS_AS(cauchy_gap(poly, 10, 10, g), InputError);
}

TEST_CASE("cauchy gaps of 1/log(k+2) stay away from zero") {
  const auto c = make_family({"log_decay", {0.0, 1.0}, std::nullopt});
  const auto g = quad::build_grid(2048, 1e-10);
  for (std::int64_t n : {64, 128, 256, 512, 1024}) {
    const double gap = cauchy_gap(c, n, 2 * n, g);
    INFO("n = " << n);
    CHECK(gap > 1.0);
  }
}

TEST_CASE("trigonometric polynomial synthesis") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  const auto c = random_table(rng, 300);
  const TrigPolynomial band(c, 5, 250);
  CHECK(band.degree() == 250);
  CHECK_FALSE(band.is_real());
  for (int i = 0; i < 50; ++i) {
    const double x = u(rng);
    const Complex ref = partial_sum(c, 250, x) - partial_sum(c, 4, x);
    CHECK(std::abs(band(x) - ref) <= 1e-11);
  }
  const TrigPolynomial halved(c, 0, 40, [](std::int64_t j) { return Complex(j >= 0 ? 0.5 : 0.0); });
  const double x = 0.77;
  Complex ref{};
  for (std::int64_t k = 0; k <= 40; ++k) ref += 0.5 * c(k) * std::polar(1.0, k * x);
  CHECK(std::abs(halved(x) - ref) <= 1e-12);

  const auto lac = make_family({"lacunary_alpha", {1.5, 4.0}, std::nullopt});
  const TrigPolynomial sparse(lac, 0, 65536);
  CHECK(sparse.degree() == 65536);
  CHECK(sparse.is_real());
  Complex lr{};
  for (std::int64_t k : {2, 16, 512, 65536}) lr += lac(k) * std::polar(1.0, k * x) + lac(-k) * std::polar(1.0, -k * x);
  CHECK(std::abs(sparse(x) - lr) <= 1e-12);

  const TrigPolynomial none(c, 301, 400);
  CHECK(none.is_zero());
  CHECK(none(1.0) == Complex{});
}

TEST_CASE("linearity of partial sums and delayed means") {
  std::mt19937_64 rng(5);
  const auto a = random_table(rng, 50);
  const auto b = random_table(rng, 50);
  const Complex s(0.3, -1.7);
  const CoefficientSequence sum([&](std::int64_t k) { return a(k) + s * b(k); }, Symmetry::None);
  for (double x : {-1.0, 0.2, 2.5}) {
    CHECK(std::abs(partial_sum(sum, 20, x) - partial_sum(a, 20, x) - s * partial_sum(b, 20, x)) <= 1e-12 * 20);
    CHECK(std::abs(delayed_mean(sum, 12, 2.5, x) - delayed_mean(a, 12, 2.5, x) - s * delayed_mean(b, 12, 2.5, x)) <=
          1e-12 * 20);
  }
}

TEST_CASE("conjugate symmetrization") {
  const auto e = make_family({"monotone_power", {1.0}, std::nullopt});
  const auto same = conjugate_symmetrize(e);
  for (std::int64_t k = -5; k <= 5; ++k) CHECK(same(k) == e(k));

  const auto one = CoefficientSequence::table({0.0, Complex(0, 1)});
  const auto sym = conjugate_symmetrize(one);
  CHECK(sym(-1) == Complex(0, -1));
  CHECK(sym.symmetry() == Symmetry::Conjugate);
  const auto twice = conjugate_symmetrize(sym);
  for (std::int64_t k = -3; k <= 3; ++k) CHECK(twice(k) == sym(k));

  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  const auto rs = conjugate_symmetrize(random_table(rng, 40));
  for (int i = 0; i < 100; ++i) CHECK(std::abs(partial_sum(rs, 40, u(rng)).imag()) <= 1e-12);

  const auto lac = make_family({"lacunary_alpha", {1.5, 3.0}, Symmetry::None});
  const auto ls = conjugate_symmetrize(lac);
  REQUIRE(ls.sparse_support() != nullptr);
  CHECK(ls(-16) == std::conj(lac(16)));
}

TEST_CASE("truncation gap against a doubled reference") {
  const auto c = make_family({"rbvs_geometric", {0.5}, std::nullopt});
  const auto g = quad::build_grid(512, 1e-10);
  for (std::int64_t n : {4, 16, 64}) {
    const auto a = truncation_gap(c, {n, 2.0, 4 * n}, g);
    const auto b = truncation_gap(c, {n, 2.0, 8 * n}, g);
    REQUIRE(a.tail_bound);
    CHECK(std::abs(a.value - b.value) <= 2 * kPi * *a.tail_bound + 1e-12);
    // every coefficient of f − S_n bounds its norm from below
    CHECK(a.value >= 2 * kPi * std::pow(0.5, n + 1) * (1 - 1e-9));
  }
  CHECK_THROWS_AS(truncation_gap(c, {16, 2.0, 32}, g), InputError);
  PartialSumSpec bad{4, 1.0, 16};
  CHECK_THROWS_AS(bad.validate(), InputError);
}

TEST_CASE("tau gap of a polynomial vanishes") {
  std::mt19937_64 rng(7);
  const auto poly = random_table(rng, 12);
  const auto g = quad::build_grid(64, 1e-10);
  CHECK(tau_gap(poly, 12, 2.0, g) == 0.0);
  const auto c = make_family({"monotone_power", {1.0}, std::nullopt});
  CHECK(tau_gap(c, 16, 2.0, g) > 0.0);
}

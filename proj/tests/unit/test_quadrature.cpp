#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <l1fourier/errors.hpp>
#include <l1fourier/kernels.hpp>
#include <l1fourier/quadrature.hpp>

using namespace l1f;
using namespace l1f::quad;
using Catch::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

Integrand trig(double freq, std::function<Complex(double)> fn) {
  Integrand g;
  g.fn = std::move(fn);
  g.max_frequency = freq;
  return g;
}

}  // namespace

TEST_CASE("Gauss-Legendre rule integrates polynomials") {
  for (int n : {1, 2, 5, 16, 32}) {
    const auto r = gauss_legendre(n);
    REQUIRE(r.nodes.size() == static_cast<std::size_t>(n));
    for (int p = 0; p <= 2 * n - 1; ++p) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.nodes[i], p);
      const double exact = p % 2 ? 0.0 : 2.0 / (p + 1);
      CHECK(s == Approx(exact).margin(1e-14));
    }
  }
}

TEST_CASE("grid structure") {
  for (double f : {1.0, 10.0, 1000.0, 65536.0}) {
    const auto g = build_grid(f, 1e-10);
    const auto& ps = g.panels();
    REQUIRE_FALSE(ps.empty());
    CHECK(ps.front().a == -kPi);
    CHECK(ps.back().b == kPi);
    for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i].a == ps[i - 1].b);
    for (const auto& p : ps) {
      CHECK(p.width() > 0);
      CHECK(p.width() * g.max_resolved_frequency() <= g.nodes_per_panel() * kPi / 4 * (1 + 1e-9));
    }
    CHECK(g.nodes_per_panel() == kDefaultNodesPerPanel);
  }
  const auto small = build_grid(1, 1e-10);
  CHECK(small.panels().size() <= 40);
  const auto big = build_grid(65536, 1e-10);
  CHECK(big.node_count() > 500000);
  CHECK(big.node_count() < 3000000);
}

TEST_CASE("refined grid halves every panel") {
  const auto g = build_grid(100, 1e-10);
  const auto r = g.refined();
  REQUIRE(r.panels().size() == 2 * g.panels().size());
  for (std::size_t i = 0; i < g.panels().size(); ++i) {
    CHECK(r.panels()[2 * i].a == g.panels()[i].a);
    CHECK(r.panels()[2 * i + 1].b == g.panels()[i].b);
  }
  CHECK(r.node_count() == 2 * g.node_count());
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(build_grid(0.5, 1e-10), InputError);
  CHECK_THROWS_AS(build_grid(10, 1e-16), InputError);
  CHECK_THROWS_AS(build_grid(kMaxDeskFrequency * 2, 1e-10), ResolutionError);
  CHECK_NOTHROW(build_grid(kMaxDeskFrequency, 1e-10));
}

TEST_CASE("l1 norm of elementary functions") {
  const auto g = build_grid(64, 1e-12);
  CHECK(l1_norm(trig(1, [](double x) { return Complex(std::cos(x)); }), g) == Approx(4.0).epsilon(1e-13));
  for (int m : {3, 17, 64}) {
    CHECK(l1_norm(trig(m, [m](double x) { return Complex(std::cos(m * x)); }), g) ==
          Approx(4.0).epsilon(1e-12));
    CHECK(l1_norm(trig(m, [m](double x) { return std::polar(2.0, m * x); }), g) ==
          Approx(4 * kPi).epsilon(1e-13));
  }
  CHECK(l1_norm(trig(1, [](double) { return Complex{}; }), g) == 0.0);
}

TEST_CASE("l1 norm of a complex integrand against adaptive quadrature") {
  const auto g = build_grid(16, 1e-12);
  auto fn = [](double x) { return Complex(std::cos(3 * x) + 0.3, std::sin(5 * x) * 0.4); };
  const double ref = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      [&](double x) { return std::abs(fn(x)); }, -kPi, kPi, 15, 1e-13);
  CHECK(l1_norm(trig(5, fn), g) == Approx(ref).epsilon(1e-9));
}

TEST_CASE("l1 norm of D_10 against the refined grid") {
  const kernels::KernelContext ctx(10, 10);
  const auto g = build_grid(21, 1e-10);
  auto d = trig(10, [&](double x) { return Complex(kernels::dirichlet(ctx, x)); });
  const double coarse = l1_norm(d, g);
  const double fine = l1_norm(d, g.refined().refined());
  CHECK(std::abs(coarse - fine) <= 1e-6 * fine);
  CHECK(self_convergence(d, g) <= 1e-6);
}

TEST_CASE("doubling Gauss order leaves kernel norms unchanged") {
  const kernels::KernelContext ctx(256, 256);
  auto d = trig(256, [&](double x) { return Complex(kernels::dirichlet(ctx, x)); });
  const auto g16 = build_grid(513, 1e-10, 16);
  const auto g32 = build_grid(513, 1e-10, 32);
  const double a = l1_norm(d, g16);
  const double b = l1_norm(d, g32);
  CHECK(std::abs(a - b) <= 1e-10 * b);
}

TEST_CASE("frequency above the grid is rejected") {
  const auto g = build_grid(32, 1e-10);
  CHECK_THROWS_AS(l1_norm(trig(33, [](double x) { return Complex(std::cos(33 * x)); }), g),
                  ResolutionError);
}

TEST_CASE("result does not depend on the thread count") {
  const kernels::KernelContext ctx(300, 150);
  auto e = trig(300, [&](double x) { return kernels::complex_kernel(ctx, x); });
  e.breakpoints = {-1.0 / 150, 1.0 / 150};
  const auto g = build_grid(601, 1e-10);
  const double one = l1_norm(e, g, 1);
  CHECK(l1_norm(e, g, 3) == one);
  CHECK(l1_norm(e, g, 8) == one);
}

TEST_CASE("norm axioms on random trigonometric polynomials") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> nd;
  const auto g = build_grid(24, 1e-12);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Complex> a(12), b(12);
    for (auto& z : a) z = {nd(rng), nd(rng)};
    for (auto& z : b) z = {nd(rng), nd(rng)};
    auto synth = [](const std::vector<Complex>& cs) {
      return [cs](double x) {
        Complex s{};
        for (std::size_t k = 0; k < cs.size(); ++k) s += cs[k] * std::polar(1.0, (double(k) - 5.0) * x);
        return s;
      };
    };
    const auto fa = synth(a);
    const auto fb = synth(b);
    const double na = l1_norm(trig(6, fa), g);
    const double nb = l1_norm(trig(6, fb), g);
    const double nab = l1_norm(trig(6, [&](double x) { return fa(x) + fb(x); }), g);
    CHECK(nab <= na + nb + 1e-10 * (na + nb));
    const Complex s(-2.5, 1.5);
    const double ns = l1_norm(trig(6, [&](double x) { return s * fa(x); }), g);
    CHECK(std::abs(ns - std::abs(s) * na) <= 1e-10 * ns);
    CHECK(na >= 0.0);
  }
}

#include "l1fourier/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "l1fourier/errors.hpp"
#include "l1fourier/parallel.hpp"

namespace l1f::quad {
namespace {

constexpr double kPi = std::numbers::pi;

// Sample offsets at panel ends, so a sample never sits on a breakpoint.
constexpr double kEndNudge = 1e-13;
constexpr double kRealRatio = 1e-12;
constexpr double kNearZero = 0.05;
constexpr int kMaxBisections = 40;

double gauss_sum(const std::function<Complex(double)>& fn, const GaussRule& rule, double a,
                 double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * std::abs(fn(mid + half * rule.nodes[i]));
  }
  return sum * half;
}

// Bisects until a piece agrees with the sum over its halves.
double bisect(const std::function<Complex(double)>& fn, const GaussRule& rule, double a, double b,
              double whole, double tol_per_width, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = gauss_sum(fn, rule, a, mid);
  const double right = gauss_sum(fn, rule, mid, b);
  if (depth == 0 || std::abs(left + right - whole) <= tol_per_width * (b - a)) return left + right;
  return bisect(fn, rule, a, mid, left, tol_per_width, depth - 1) +
         bisect(fn, rule, mid, b, right, tol_per_width, depth - 1);
}

// tol_per_width > 0 selects bisection on every piece.
double integrate_pieces(const std::function<Complex(double)>& fn, const GaussRule& rule, double a,
                        double b, std::vector<double>& cuts, double tol_per_width = 0.0) {
  std::sort(cuts.begin(), cuts.end());
  auto piece = [&](double lo, double hi) {
    const double g = gauss_sum(fn, rule, lo, hi);
    return tol_per_width > 0 ? bisect(fn, rule, lo, hi, g, tol_per_width, kMaxBisections) : g;
  };
  double total = 0.0;
  double left = a;
  for (double cut : cuts) {
    if (cut <= left || cut >= b) continue;
    total += piece(left, cut);
    left = cut;
  }
  return total + piece(left, b);
}

// One breakpoint-free panel.
double integrate_panel(const Integrand& g, const GaussRule& rule, double a, double b,
                       double tolerance) {
  const int samples = static_cast<int>(rule.nodes.size());
  std::vector<double> xs(static_cast<std::size_t>(samples + 1));
  std::vector<Complex> fs(xs.size());
  const double width = b - a;
  for (int i = 0; i <= samples; ++i) {
    double t = static_cast<double>(i) / samples;
    t = std::clamp(t, kEndNudge, 1.0 - kEndNudge);
    xs[static_cast<std::size_t>(i)] = a + width * t;
    fs[static_cast<std::size_t>(i)] = g.fn(xs[static_cast<std::size_t>(i)]);
  }
  double scale = 0.0;
  double imag = 0.0;
  for (const Complex& f : fs) {
    scale = std::max(scale, std::abs(f));
    imag = std::max(imag, std::abs(f.imag()));
  }
  if (scale == 0.0) return gauss_sum(g.fn, rule, a, b);

  std::vector<double> cuts;
  const auto bits = std::max(20, static_cast<int>(-std::log2(tolerance)) + 8);
  if (imag <= kRealRatio * scale) {
    auto re = [&](double x) { return g.fn(x).real(); };
    for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
      const double lo = fs[i].real();
      const double hi = fs[i + 1].real();
      if (lo == 0.0) {
        cuts.push_back(xs[i]);
        continue;
      }
      if ((lo < 0.0) == (hi < 0.0) || hi == 0.0) continue;
      std::uintmax_t iters = 64;
      const auto bracket = boost::math::tools::toms748_solve(
          re, xs[i], xs[i + 1], lo, hi, boost::math::tools::eps_tolerance<double>(std::min(bits, 52)),
          iters);
      cuts.push_back(0.5 * (bracket.first + bracket.second));
    }
  } else {
    // Complex stretch: |f| is smooth except where f nearly vanishes; cut at
    // those local minima and bisect toward them.
    auto mag = [&](double x) { return std::abs(g.fn(x)); };
    for (std::size_t i = 1; i + 1 < fs.size(); ++i) {
      const double m = std::abs(fs[i]);
      if (m < kNearZero * scale && m <= std::abs(fs[i - 1]) && m <= std::abs(fs[i + 1])) {
        std::uintmax_t iters = 64;
        const auto best = boost::math::tools::brent_find_minima(mag, xs[i - 1], xs[i + 1],
                                                                std::min(bits, 26), iters);
        cuts.push_back(best.first);
      }
    }
    return integrate_pieces(g.fn, rule, a, b, cuts, 0.1 * tolerance * scale);
  }
  return integrate_pieces(g.fn, rule, a, b, cuts);
}

}  // namespace

GaussRule gauss_legendre(int n) {
  if (n < 1) throw InputError("Gauss rule needs at least one node");
  // P_n(x) and P_n'(x) by the three-term recurrence
  auto legendre = [n](double x) {
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    const double dp = n == 1 ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
    return std::pair{p1, dp};
  };
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre(x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

QuadratureGrid::QuadratureGrid(std::vector<Panel> panels, int nodes_per_panel,
                               double max_resolved_frequency, double tolerance)
    : panels_(std::move(panels)),
      rule_(gauss_legendre(nodes_per_panel)),
      max_frequency_(max_resolved_frequency),
      tolerance_(tolerance) {}

QuadratureGrid QuadratureGrid::refined() const {
  std::vector<Panel> halves;
  halves.reserve(2 * panels_.size());
  for (const Panel& p : panels_) {
    const double mid = 0.5 * (p.a + p.b);
    halves.push_back({p.a, mid});
    halves.push_back({mid, p.b});
  }
  return QuadratureGrid(std::move(halves), nodes_per_panel(), max_frequency_, tolerance_);
}

QuadratureGrid build_grid(double max_freq, double tolerance, int nodes_per_panel) {
  if (!(max_freq >= 1.0)) throw InputError("build_grid: max_freq must be >= 1");
  if (!(tolerance >= 1e-14)) {
    throw InputError("build_grid: tolerance below the double-precision floor (1e-14)");
  }
  if (nodes_per_panel < 2) throw InputError("build_grid: need at least 2 nodes per panel");
  if (max_freq > kMaxDeskFrequency) {
    throw ResolutionError("build_grid: frequency " + std::to_string(max_freq) +
                          " exceeds the desk-scale budget of " +
                          std::to_string(kMaxDeskFrequency));
  }
  const int levels = static_cast<int>(std::ceil(std::log2(max_freq))) + 4;
  const double max_width = nodes_per_panel * kPi / (4.0 * max_freq);

  std::vector<Panel> positive;
  auto add_split = [&](double a, double b) {
    const auto pieces = static_cast<int>(std::ceil((b - a) / max_width - 1e-12));
    const int count = std::max(1, pieces);
    for (int i = 0; i < count; ++i) {
      const double lo = a + (b - a) * i / count;
      const double hi = i + 1 == count ? b : a + (b - a) * (i + 1) / count;
      positive.push_back({lo, hi});
    }
  };
  add_split(0.0, std::ldexp(kPi, -(levels + 1)));
  for (int j = levels; j >= 0; --j) add_split(std::ldexp(kPi, -(j + 1)), std::ldexp(kPi, -j));
  positive.back().b = kPi;

  std::vector<Panel> panels;
  panels.reserve(2 * positive.size());
  for (auto it = positive.rbegin(); it != positive.rend(); ++it) panels.push_back({-it->b, -it->a});
  panels.front().a = -kPi;
  for (const Panel& p : positive) panels.push_back(p);
  return QuadratureGrid(std::move(panels), nodes_per_panel, max_freq, tolerance);
}

double l1_norm(const Integrand& integrand, const QuadratureGrid& grid, unsigned threads) {
  if (!integrand.fn) throw InputError("l1_norm: integrand is empty");
  if (integrand.max_frequency > grid.max_resolved_frequency() * (1 + 1e-12)) {
    throw ResolutionError("l1_norm: integrand frequency " +
                          std::to_string(integrand.max_frequency) + " exceeds grid resolution " +
                          std::to_string(grid.max_resolved_frequency()));
  }
  const auto& panels = grid.panels();
  std::vector<double> parts(panels.size(), 0.0);
  parallel_for(panels.size(), threads, [&](std::size_t i) {
    const Panel& p = panels[i];
    std::vector<double> inner;
    for (double bp : integrand.breakpoints) {
      if (bp > p.a && bp < p.b) inner.push_back(bp);
    }
    std::sort(inner.begin(), inner.end());
    double left = p.a;
    double sum = 0.0;
    for (double bp : inner) {
      sum += integrate_panel(integrand, grid.rule(), left, bp, grid.tolerance());
      left = bp;
    }
    parts[i] = sum + integrate_panel(integrand, grid.rule(), left, p.b, grid.tolerance());
  });
  double total = 0.0;
  for (double v : parts) total += v;
  return total;
}

double self_convergence(const Integrand& integrand, const QuadratureGrid& grid, unsigned threads) {
  const double coarse = l1_norm(integrand, grid, threads);
  const double fine = l1_norm(integrand, grid.refined(), threads);
  return std::abs(coarse - fine) / std::max(std::abs(fine), 1e-300);
}

}  // namespace l1f::quad

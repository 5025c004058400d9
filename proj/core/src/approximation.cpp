#include "l1fourier/approximation.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "l1fourier/errors.hpp"
#include "l1fourier/series.hpp"

namespace l1f::quad {
namespace {

void require_resolution(const QuadratureGrid& grid, std::int64_t degree, const char* what) {
  if (grid.max_resolved_frequency() < static_cast<double>(degree)) {
    throw ResolutionError(std::string(what) + ": grid resolves " +
                          std::to_string(grid.max_resolved_frequency()) + " < " +
                          std::to_string(degree));
  }
}

}  // namespace

ModulusEstimate modulus_of_continuity(const CoefficientSequence& c, double t,
                                      const QuadratureGrid& grid, std::int64_t reference_degree,
                                      int h_samples, unsigned threads) {
  if (!(t > 0.0) || t > std::numbers::pi) throw InputError("modulus_of_continuity: t must lie in (0, pi]");
  if (h_samples < 1) throw InputError("modulus_of_continuity: need at least one shift sample");
  if (reference_degree < 0) throw InputError("modulus_of_continuity: reference degree must be >= 0");
  require_resolution(grid, reference_degree, "modulus_of_continuity");

  ModulusEstimate out;
  out.samples = h_samples;
  out.reference_degree = reference_degree;
  for (int i = 1; i <= h_samples; ++i) {
    const double h = t * i / h_samples;
    // f(x+h) − f(x) = Σ f̂(j)(e^{ijh} − 1) e^{ijx}
    const series::TrigPolynomial diff(c, 1, reference_degree, [h](std::int64_t j) {
      return std::polar(1.0, static_cast<double>(j) * h) - 1.0;
    });
    const double v = diff.is_zero() ? 0.0 : l1_norm(diff.integrand(), grid, threads);
    if (v > out.value) {
      out.value = v;
      out.argmax_h = h;
    }
  }
  return out;
}

BestApproxEstimate best_approx_upper(const CoefficientSequence& c, std::int64_t n, double lambda,
                                     const QuadratureGrid& grid, std::int64_t reference_degree,
                                     unsigned threads) {
  if (n < 1) throw InputError("best_approx_upper: n must be >= 1");
  if (!(lambda > 1.0)) throw InputError("best_approx_upper: lambda must exceed 1");
  if (reference_degree <= n) {
    throw InputError("best_approx_upper: reference degree must exceed n");
  }
  require_resolution(grid, reference_degree, "best_approx_upper");

  BestApproxEstimate out;
  out.reference_degree = reference_degree;
  out.competitor_start = static_cast<std::int64_t>(std::ceil(static_cast<double>(n) / lambda - 1e-12));
  const std::int64_t m = out.competitor_start;
  const std::int64_t top = n + 1;
  // f − T = Σ_{|j|>m} (1 − w(j)) f̂(j) e^{ijx}
  const series::TrigPolynomial residual(c, m + 1, reference_degree, [&](std::int64_t j) {
    return Complex(1.0 - series::delayed_weight(m, top, j), 0.0);
  });
  out.upper = residual.is_zero() ? 0.0 : l1_norm(residual.integrand(), grid, threads);

  double largest = 0.0;
  for (std::int64_t k = n + 1; k <= reference_degree; ++k) {
    largest = std::max({largest, std::abs(c(k)), std::abs(c(-k))});
  }
  out.lower = 2.0 * std::numbers::pi * largest;
  if (const auto& tail = c.tail_bound()) {
    out.tail_bound = (*tail)(reference_degree);
  }
  return out;
}

}  // namespace l1f::quad

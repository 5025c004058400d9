#include "l1fourier/kernels.hpp"

#include <cmath>
#include <string>

#include "l1fourier/errors.hpp"

namespace l1f::kernels {
namespace {

bool inner_branch(const KernelContext& ctx, double x) {
  const bool inner = std::abs(x) <= 1.0 / static_cast<double>(ctx.n);
  return ctx.swap_branches ? !inner : inner;
}

// The closed forms only break down at x = 0; the expansion band shrinks with
// k so the truncated series stays accurate for large degrees.
bool use_expansion(const KernelContext& ctx, double x) {
  return std::abs(x) * (static_cast<double>(ctx.k) + 1.0) < ctx.expansion_threshold;
}

}  // namespace

KernelContext::KernelContext(std::int64_t degree, std::int64_t outer, double threshold)
    : k(degree), n(outer), expansion_threshold(threshold) {
  validate();
}

void KernelContext::validate() const {
  if (k < 0) throw InputError("kernel degree k must be >= 0");
  if (n < 1) throw InputError("kernel outer index n must be >= 1");
  if (!(expansion_threshold > 0.0) || !(expansion_threshold < 1.0 / static_cast<double>(n))) {
    throw InputError("expansion threshold must lie in (0, 1/n)");
  }
}

KernelContext KernelContext::with_degree(std::int64_t degree) const {
  KernelContext out = *this;
  out.k = degree;
  return out;
}

double dirichlet(const KernelContext& ctx, double x) {
  const double a = static_cast<double>(ctx.k) + 0.5;
  if (use_expansion(ctx, x)) {
    // a (1 − x²(a²/6 − 1/24))
    return a * (1.0 - x * x * (a * a / 6.0 - 1.0 / 24.0));
  }
  return std::sin(a * x) / (2.0 * std::sin(0.5 * x));
}

double dirichlet_mod(const KernelContext& ctx, double x) {
  const double kk = static_cast<double>(ctx.k);
  if (inner_branch(ctx, x)) {
    if (use_expansion(ctx, x)) {
      // sin((k+1)x/2) sin(kx/2) / sin(x/2) ≈ k(k+1)x/4
      return kk * (kk + 1.0) * x / 4.0;
    }
    // cos(x/2) − cos((2k+1)x/2) = 2 sin((k+1)x/2) sin(kx/2), free of cancellation
    return std::sin(0.5 * (kk + 1.0) * x) * std::sin(0.5 * kk * x) / std::sin(0.5 * x);
  }
  if (x == 0.0) return 0.0;  // only reachable with swapped branches
  return -std::cos((kk + 0.5) * x) / (2.0 * std::sin(0.5 * x));
}

Complex complex_kernel(const KernelContext& ctx, double x) {
  return {dirichlet(ctx, x), dirichlet_mod(ctx, x)};
}

Complex phi(const PhiSpec& spec, double x) {
  if (spec.n < 1) throw InputError("phi requires n >= 1");
  const double sign = spec.sign == PhiSpec::Sign::Plus ? 1.0 : -1.0;
  const double nd = static_cast<double>(spec.n);
  // e^{i(k∓n)x} = e^{ikx} e^{∓inx}, e^{−i(k±n)x} = e^{−ikx} e^{∓inx}
  const Complex shift = std::polar(1.0, -sign * nd * x);
  const Complex step = std::polar(1.0, x);
  Complex w = step;
  Complex sum{};
  for (std::int64_t k = 1; k <= spec.n; ++k) {
    if (k % 64 == 0) w = std::polar(1.0, static_cast<double>(k) * x);
    sum += (w * shift - std::conj(w) * shift) / static_cast<double>(k);
    w *= step;
  }
  return sum;
}

double sine_sum(std::int64_t n, double x) {
  if (n < 0) throw InputError("sine_sum requires n >= 0");
  // sin(kx) by the Chebyshev recurrence s_{k+1} = 2cos(x) s_k − s_{k−1}, reseeded periodically
  const double c2 = 2.0 * std::cos(x);
  double prev = 0.0;
  double cur = std::sin(x);
  double sum = 0.0;
  for (std::int64_t k = 1; k <= n; ++k) {
    if (k % 64 == 0) cur = std::sin(static_cast<double>(k) * x), prev = std::sin(static_cast<double>(k - 1) * x);
    sum += cur / static_cast<double>(k);
    const double next = c2 * cur - prev;
    prev = cur;
    cur = next;
  }
  return sum;
}

KernelNorms kernel_l1_norms(const KernelContext& ctx, const quad::QuadratureGrid& grid,
                            unsigned threads) {
  ctx.validate();
  const double freq = 2.0 * static_cast<double>(ctx.k) + 1.0;
  if (grid.max_resolved_frequency() < freq) {
    throw ResolutionError("kernel_l1_norms: grid resolves " +
                          std::to_string(grid.max_resolved_frequency()) + " < 2k+1 = " +
                          std::to_string(freq));
  }
  const double bp = 1.0 / static_cast<double>(ctx.n);
  quad::Integrand d{[&ctx](double x) { return Complex(dirichlet(ctx, x), 0.0); }, freq, {}};
  quad::Integrand e{[&ctx](double x) { return complex_kernel(ctx, x); }, freq, {-bp, bp}};
  return {quad::l1_norm(d, grid, threads), quad::l1_norm(e, grid, threads)};
}

}  // namespace l1f::kernels

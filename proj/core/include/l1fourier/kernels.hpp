#pragma once

#include <complex>
#include <cstdint>

#include "l1fourier/quadrature.hpp"

namespace l1f::kernels {

using Complex = std::complex<double>;

/// Degree k, outer index n (breakpoint 1/n of the modified kernel) and the
/// near-origin expansion threshold.
struct KernelContext {
  std::int64_t k = 0;
  std::int64_t n = 1;
  double expansion_threshold = 1e-6;
  /// Fault injection: evaluate the inner formula outside 1/n and the outer
  /// formula inside. Only the verification battery sets this.
  bool swap_branches = false;

  KernelContext() = default;
  KernelContext(std::int64_t degree, std::int64_t outer, double threshold = 1e-6);

  /// Throws InputError unless n >= 1, k >= 0 and 0 < threshold < 1/n.
  void validate() const;
  KernelContext with_degree(std::int64_t degree) const;
};

/// D_k(x) = sin((2k+1)x/2) / (2 sin(x/2)); D_k(0) = k + 1/2.
double dirichlet(const KernelContext& ctx, double x);

/// Modified kernel: (cos(x/2) − cos((2k+1)x/2)) / (2 sin(x/2)) for |x| <= 1/n
/// (the breakpoint itself takes this inner branch), −cos((2k+1)x/2)/(2 sin(x/2))
/// for 1/n < |x| <= π.
double dirichlet_mod(const KernelContext& ctx, double x);

/// E_k = D_k + i D_k*.
Complex complex_kernel(const KernelContext& ctx, double x);

struct PhiSpec {
  enum class Sign { Plus, Minus };
  std::int64_t n = 1;
  Sign sign = Sign::Plus;
};

/// φ_{±n}(x) = Σ_{k=1}^n (1/k)(e^{i(k∓n)x} − e^{−i(k±n)x}), summed term by term.
Complex phi(const PhiSpec& spec, double x);

/// Σ_{k=1}^n sin(kx)/k.
double sine_sum(std::int64_t n, double x);

/// Lemma-level bounds: |φ_{±n}| <= 6√π and |Σ sin kx/k| <= 3√π.
inline constexpr double kPhiBound = 6.0 * 1.7724538509055160273;
inline constexpr double kSineSumBound = 3.0 * 1.7724538509055160273;

struct KernelNorms {
  double dirichlet = 0.0;  ///< ‖D_k‖₁
  double complex = 0.0;    ///< ‖E_k‖₁
};

/// ‖D_k‖₁ and ‖E_k‖₁ over [−π, π]. The grid must resolve frequency 2k+1.
KernelNorms kernel_l1_norms(const KernelContext& ctx, const quad::QuadratureGrid& grid,
                            unsigned threads = 1);

}  // namespace l1f::kernels

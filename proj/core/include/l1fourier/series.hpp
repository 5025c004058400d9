#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "l1fourier/kernels.hpp"
#include "l1fourier/quadrature.hpp"
#include "l1fourier/sequence.hpp"

namespace l1f::series {

/// Degree n, delay factor λ and the truncation degree standing in for f.
struct PartialSumSpec {
  std::int64_t n = 0;
  double lambda = 2.0;
  std::int64_t reference_degree = 0;

  /// Throws InputError unless n >= 0, λ > 1 and reference_degree >= 4n.
  void validate() const;
};

/// Weight applied to f̂(j) when a polynomial is synthesized from a band.
using Weight = std::function<Complex(std::int64_t)>;

/// Σ_{lo<=|j|<=hi} w(j) f̂(j) e^{ijx} with the coefficients tabulated once.
///
/// Dense bands are summed with a reseeded rotation recurrence; bands with few
/// nonzero terms keep only those terms. Conjugate-symmetric data take a
/// real-valued path.
class TrigPolynomial {
 public:
  TrigPolynomial() = default;
  TrigPolynomial(const CoefficientSequence& c, std::int64_t lo, std::int64_t hi,
                 const Weight& weight = {});

  Complex operator()(double x) const;

  /// Largest |j| with a nonzero term (0 for the zero polynomial).
  std::int64_t degree() const noexcept { return degree_; }
  bool is_zero() const noexcept { return terms_.empty() && pos_.empty(); }
  bool is_real() const noexcept { return real_; }

  quad::Integrand integrand() const;

 private:
  struct Term {
    std::int64_t k;
    Complex pos;
    Complex neg;
  };

  std::int64_t lo_ = 0;
  std::int64_t degree_ = 0;
  bool real_ = false;
  bool sparse_ = false;
  std::vector<Complex> pos_;  ///< dense f̂(lo + i)
  std::vector<Complex> neg_;  ///< dense f̂(−(lo + i))
  std::vector<Term> terms_;   ///< sparse nonzero terms
};

/// Σ_{k=−n}^{n} f̂(k) e^{ikx}, summed directly.
Complex partial_sum(const CoefficientSequence& c, std::int64_t n, double x);

/// [λn] − n must be positive; throws InputError otherwise.
std::int64_t delayed_top(std::int64_t n, double lambda);

/// Coefficient multiplier of the delayed mean at frequency |j|.
double delayed_weight(std::int64_t n, std::int64_t top, std::int64_t j);

/// τ_{λn,n}(f,x) = (1/([λn]−n)) Σ_{k=n}^{[λn]−1} S_k(f,x).
Complex delayed_mean(const CoefficientSequence& c, std::int64_t n, double lambda, double x);

/// Kernel expansion of τ_{λn,n} − S_n:
///   (1/(p−n)) Σ_{k=n}^{p} (p−k)(2Δf̂(k)D_k(x) − (Δf̂(k) − Δf̂(−k))E_k(−x))
/// + (1/(p−n)) Σ_{k=n}^{p−1} (f̂(k+1)E_k(x) + f̂(−k−1)E_k(−x))
/// − (f̂(n)E_n(x) + f̂(−n)E_n(−x)),
/// with p = [λn], Δf̂(k) = f̂(k) − f̂(k+1) and Δf̂(−k) = f̂(−k) − f̂(−k−1).
/// The kernels use ctx's outer index and threshold; ctx.n must equal n.
Complex abel_rhs(const CoefficientSequence& c, std::int64_t n, double lambda, double x,
                 const kernels::KernelContext& ctx);

/// ‖S_m − S_n‖₁. Throws InputError unless m > n >= 0 and ResolutionError
/// when the grid does not resolve frequency m.
double cauchy_gap(const CoefficientSequence& c, std::int64_t n, std::int64_t m,
                  const quad::QuadratureGrid& grid, unsigned threads = 1);

/// ‖τ_{λn,n} − S_n‖₁.
double tau_gap(const CoefficientSequence& c, std::int64_t n, double lambda,
               const quad::QuadratureGrid& grid, unsigned threads = 1);

/// ‖f − S_n‖₁ estimated as ‖S_{N_ref} − S_n‖₁, with Σ_{|k|>N_ref}|f̂(k)| when
/// the sequence knows a tail bound.
struct TruncatedGap {
  double value = 0.0;
  std::int64_t reference_degree = 0;
  std::optional<double> tail_bound;
};

TruncatedGap truncation_gap(const CoefficientSequence& c, const PartialSumSpec& spec,
                            const quad::QuadratureGrid& grid, unsigned threads = 1);

/// f̂(−k) := conj f̂(k) for k >= 1, f̂(0) := Re f̂(0). Sequences that are
/// already conjugate or even real come back unchanged.
CoefficientSequence conjugate_symmetrize(const CoefficientSequence& c);

}  // namespace l1f::series

#pragma once

#include <cstdint>
#include <optional>

#include "l1fourier/quadrature.hpp"
#include "l1fourier/sequence.hpp"

namespace l1f::quad {

inline constexpr int kDefaultShiftSamples = 64;

/// max over h ∈ {t/H, 2t/H, ..., t} of ‖f(·+h) − f‖₁, f replaced by its
/// partial sum of degree reference_degree. A finite sample of the shifts, so
/// the value is a lower estimate of ω(f, t)_L for that partial sum.
struct ModulusEstimate {
  double value = 0.0;
  double argmax_h = 0.0;
  int samples = 0;
  std::int64_t reference_degree = 0;
};

/// Throws InputError unless 0 < t <= π, h_samples >= 1, reference_degree >= 0.
ModulusEstimate modulus_of_continuity(const CoefficientSequence& c, double t,
                                      const QuadratureGrid& grid, std::int64_t reference_degree,
                                      int h_samples = kDefaultShiftSamples, unsigned threads = 1);

/// Bounds on E_n(f)_L = inf over degree-n trigonometric polynomials T of ‖f − T‖₁.
///
/// upper: ‖f − T‖₁ for the delayed mean T of S_m, ..., S_n with m = ⌈n/λ⌉,
/// f again replaced by its partial sum of degree reference_degree; tail_bound
/// adds the neglected Σ_{|k|>N_ref}|f̂(k)| when the sequence knows it.
/// lower: 2π max_{n<|k|<=N_ref} |f̂(k)|, since every coefficient of f − T
/// above degree n is a coefficient of f.
struct BestApproxEstimate {
  double upper = 0.0;
  double lower = 0.0;
  std::int64_t competitor_start = 0;  ///< m
  std::int64_t reference_degree = 0;
  std::optional<double> tail_bound;
};

/// Throws InputError unless n >= 1, λ > 1 and n < reference_degree.
BestApproxEstimate best_approx_upper(const CoefficientSequence& c, std::int64_t n, double lambda,
                                     const QuadratureGrid& grid, std::int64_t reference_degree,
                                     unsigned threads = 1);

}  // namespace l1f::quad

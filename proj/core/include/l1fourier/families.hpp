#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "l1fourier/sequence.hpp"

namespace l1f {

/// Highest lacunary level accepted by make_family; 2^{6²} still fits int64.
inline constexpr int kMaxLacunaryLevel = 6;

/// Builds a coefficient sequence from a named closed-form family.
///
///   monotone_power [p>0]             f̂(k) = k^{−p}, f̂(0) = 0, even real
///   log_decay [p>=0, q>0]            f̂(k) = 1/(k^p log^q(k+2)); defaults p=0, q=1
///   quasimonotone_oscillating [p>=0] f̂(k) = k^{−p}(2 + (−1)^k/k); k^{−2}-quasimonotone
///   orvqm_complex [φ₁, p, w₁=1, φ₂=0, w₂=0, r=0]
///                                    f̂(n) = n^r (w₁e^{iφ₁}n^{−p} + w₂e^{iφ₂}2^{−n}), conjugate
///   rbvs_geometric [0<r<1]           f̂(k) = r^k, even real
///   gbv_gapped [N>=2]                1/n with zero runs [2^j, 2^j+N−2] for 2^j >= 2N
///   lacunary_alpha [1<α<2, K_max]    sine coefficient k^{−α} at 2^{k²}, k <= K_max
///   table [v₀, v₁, ...]              f̂(k) = v_k, even real
///
/// Throws InputError for unknown families or out-of-range parameters.
CoefficientSequence make_family(const FamilyDescriptor& descriptor);

const std::vector<std::string>& family_names();

/// Positive non-decreasing weight R(n) for O-regular variation.
struct RegVaryingWeight {
  enum class Kind { Constant, Power, Log, Exponential };

  Kind kind = Kind::Constant;
  double param = 1.0;  ///< constant value, exponent, log shift, or base

  static RegVaryingWeight constant(double value = 1.0) { return {Kind::Constant, value}; }
  static RegVaryingWeight power(double exponent) { return {Kind::Power, exponent}; }
  static RegVaryingWeight log(double shift = 2.0) { return {Kind::Log, shift}; }
  static RegVaryingWeight exponential(double base) { return {Kind::Exponential, base}; }

  double operator()(std::int64_t n) const;
  std::string name() const;

  bool operator==(const RegVaryingWeight&) const = default;
};

}  // namespace l1f

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "l1fourier/families.hpp"
#include "l1fourier/sequence.hpp"

namespace l1f::seqclass {

inline constexpr std::int64_t kDefaultHorizon = 4096;
inline constexpr double kDefaultMCap = 1e6;
inline constexpr std::int64_t kDefaultMaxN0 = 8;

/// Sector K(θ) = {z : |arg z| <= θ}, θ ∈ [0, π/2).
struct SectorParams {
  double theta = 0.0;

  explicit SectorParams(double theta_rad);
  bool contains(Complex z) const;
};

enum class ClassName { Monotone, Quasimonotone, ORegVarying, ORVQuasimonotone, RBVS, GBV };
enum class Verdict { HoldsUpToHorizon, FailsWithWitness };

std::string to_string(ClassName c);
std::string to_string(Verdict v);

/// Outcome of a finite-horizon class-membership check.
struct ClassReport {
  ClassName class_name = ClassName::GBV;
  Verdict verdict = Verdict::HoldsUpToHorizon;
  std::int64_t horizon = 0;
  /// Smallest constant making the defining inequality hold over the horizon;
  /// +inf when no finite constant works.
  double fitted_M = 0.0;
  /// Same constant restricted to the first half of the horizon. A ratio
  /// fitted_M / fitted_M_half near 2 indicates growth rather than a bound.
  double fitted_M_half = 0.0;
  std::int64_t fitted_N0 = 1;
  std::optional<std::int64_t> witness;
  std::optional<double> parameter;  ///< α, θ or fitted angle where meaningful
  std::int64_t edge_windows = 0;    ///< GBV windows with m < N₀
  double truncation_error = 0.0;    ///< RBVS: last term of the truncated tail
  std::string note;

  bool holds() const { return verdict == Verdict::HoldsUpToHorizon; }
};

/// c_n ∈ K(θ) for 1 <= n <= horizon; zero terms count as inside.
/// fitted_M = max |c_n| / Re c_n over nonzero terms.
ClassReport check_sector(const CoefficientSequence& c, SectorParams s, std::int64_t horizon);

/// Windowed variation condition Σ_{n=m}^{2m}|Δc_n| <= M max_{m<=n<m+N₀}|c_n|
/// for 1 <= m <= horizon, after the sector precondition. Reports the smallest
/// N₀ <= max_N0 whose minimal M is within M_cap.
ClassReport check_gbv(const CoefficientSequence& c, std::int64_t horizon,
                      std::int64_t max_N0 = kDefaultMaxN0, double M_cap = kDefaultMCap);

/// c_n / n^α non-increasing for 1 <= n < horizon. Throws InputError for
/// non-real or negative terms. fitted_M is the smallest M with
/// c_{n+1}/(n+1)^α <= M c_n/n^α, so the class holds iff fitted_M <= 1.
ClassReport check_quasimonotone(const CoefficientSequence& c, double alpha, std::int64_t horizon);

/// Quasimonotone with α = 0, reported as Monotone.
ClassReport check_monotone(const CoefficientSequence& c, std::int64_t horizon);

/// R positive, non-decreasing, and max_{n<=horizon} R(2n)/R(n) <= M_cap.
ClassReport check_oreg_varying(const RegVaryingWeight& R, std::int64_t horizon,
                               double M_cap = kDefaultMCap);

/// Δ(c_n/R(n)) ∈ K(θ) for 1 <= n <= horizon. Throws InputError if Re c_n < 0.
ClassReport check_orvqm(const CoefficientSequence& c, const RegVaryingWeight& R, SectorParams s,
                        std::int64_t horizon);

/// Σ_{n=m}^{tail_cap}|c_n − c_{n+1}| <= M c_m for 1 <= m <= horizon. The
/// infinite tail is truncated at tail_cap (default 8·horizon); the last
/// neglected term is recorded as truncation_error.
ClassReport check_rbvs(const CoefficientSequence& c, std::int64_t horizon,
                       std::optional<std::int64_t> tail_cap = std::nullopt,
                       double M_cap = kDefaultMCap);

/// Result of a lemma-level ratio check.
struct LemmaReport {
  bool holds = true;
  double max_ratio = 0.0;
  std::optional<std::int64_t> witness;  ///< offending j (Lemma 1) or n (Lemma 2)
  std::vector<double> ratios;
  std::string note;
};

/// For j = 0..[n/N₀]−1 the ratio
///   |c_{2n}| / (max_{n+jN₀<=k<n+(j+1)N₀} Re c_k + Re c_{2n+2jN₀}).
/// Holds iff every ratio is finite and <= cap; a zero denominator is a witness.
LemmaReport lemma1_bound_check(const CoefficientSequence& c, std::int64_t n, std::int64_t N0,
                               SectorParams s, double cap = kDefaultMCap);

/// Per n, Σ_{k=n}^{[λn]}|Δc_k| log k over max_{n<=k<=[λn]}|c_k| log k.
LemmaReport lemma2_check(const CoefficientSequence& c, std::span<const std::int64_t> n_grid,
                         double lambda, double cap = kDefaultMCap);

/// Entries Σ_{k=n}^{[λn]} |Δf̂(k) − Δf̂(−k)| log k on a (λ, n) grid.
struct BalanceProfile {
  std::vector<double> lambdas;
  std::vector<std::int64_t> ns;
  std::vector<std::vector<double>> entries;  ///< entries[i][j] for lambdas[i], ns[j]
  double tolerance = 0.0;
  /// Smallest-λ row below tolerance on the upper half of the n grid.
  bool satisfied = false;

  std::vector<double> row_for(double lambda) const;
};

inline const std::vector<double>& default_balance_lambdas() {
  static const std::vector<double> grid = {1.05, 1.1, 1.25, 1.5, 2.0};
  return grid;
}

double balance_entry(const CoefficientSequence& c, double lambda, std::int64_t n);

BalanceProfile balance_profile(const CoefficientSequence& c, std::span<const double> lambda_grid,
                               std::span<const std::int64_t> n_grid, double tolerance = 1e-3);

/// floor(λn), the bracket used throughout.
std::int64_t scaled_index(double lambda, std::int64_t n);

}  // namespace l1f::seqclass

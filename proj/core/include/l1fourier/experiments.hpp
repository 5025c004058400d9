#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "l1fourier/quadrature.hpp"
#include "l1fourier/sequence.hpp"

namespace l1f::experiments {

/// Builds a grid resolving the requested frequency.
using GridFactory = std::function<quad::QuadratureGrid(double max_freq)>;

GridFactory default_grid_factory(double tolerance = 1e-8,
                                 int nodes_per_panel = quad::kDefaultNodesPerPanel);

// ---------------------------------------------------------------- convergence

enum class ConvergenceVerdict { ConsistentWithConvergence, ConsistentWithDivergence, Inconclusive };
enum class Trend { Decays, Persists, Unclear };

std::string to_string(ConvergenceVerdict v);
std::string to_string(Trend t);

/// Verdict thresholds on the per-n columns.
struct Thresholds {
  /// A column decays when its last value is below this fraction of its first
  /// and its last three values are non-increasing.
  double convergence_fraction = 0.05;
  /// A column persists when its minimum is at least this fraction of its
  /// median and its last value at least this fraction of its first.
  double divergence_fraction = 0.5;
  double balance_tolerance = 1e-3;

  bool operator==(const Thresholds&) const = default;
};

Trend column_trend(std::span<const double> column, const Thresholds& t);

struct ConvergenceRow {
  std::int64_t n = 0;
  double gap_Sn = 0.0;    ///< ‖S_{N_ref} − S_n‖₁
  double cauchy = 0.0;    ///< ‖S_{2n} − S_n‖₁
  double coef_log = 0.0;  ///< max(|f̂(n)|, |f̂(−n)|) log n
  double balance = 0.0;   ///< Σ_{k=n}^{[λn]} |Δf̂(k) − Δf̂(−k)| log k
  double tau_gap = 0.0;   ///< ‖τ_{λn,n} − S_n‖₁
  std::int64_t reference_degree = 0;
  std::optional<double> tail_bound;
};

struct Hypotheses {
  bool gbv_positive = false;  ///< {f̂(n)}_{n>=0} passes check_gbv
  bool gbv_negative = false;  ///< {f̂(−n)}_{n>=0} passes check_gbv
  bool sector = false;        ///< {f̂(n)} lies in some K(θ), θ < π/2
  bool balance = false;       ///< balance profile satisfied
  std::int64_t n0_positive = 0;
  std::int64_t n0_negative = 0;
  std::optional<double> sector_angle;

  /// One-sided GBV with the balance condition, or GBV on both sides.
  bool met() const { return gbv_positive && sector && (gbv_negative || balance); }
};

struct StudyOptions {
  double lambda = 2.0;
  std::int64_t reference_factor = 4;  ///< N_ref = reference_factor · n
  Thresholds thresholds;
  std::int64_t horizon = 4096;  ///< hypothesis checks
  unsigned threads = 1;
};

struct ConvergenceReport {
  std::optional<FamilyDescriptor> family;
  StudyOptions options;
  std::vector<ConvergenceRow> rows;
  Hypotheses hypotheses;
  Trend gap_trend = Trend::Unclear;   ///< gap_Sn and cauchy together
  Trend coef_trend = Trend::Unclear;  ///< coef_log
  ConvergenceVerdict verdict = ConvergenceVerdict::Inconclusive;
  /// False when the hypotheses hold but the gap columns and coef_log move in
  /// opposite directions.
  bool theorem_consistent = true;
};

/// Rows are computed independently per n (in parallel when threads > 1).
ConvergenceReport convergence_study(const CoefficientSequence& c,
                                    std::span<const std::int64_t> n_grid,
                                    const GridFactory& grids, const StudyOptions& options = {});

// ----------------------------------------------------------------------- rate

/// ψ_n = (n+1)^{−r} log^s(n+2), or q^n.
struct PsiRule {
  enum class Kind { Power, Geometric };
  Kind kind = Kind::Power;
  double r = 0.0;
  double s = 0.0;
  double q = 0.5;

  double operator()(std::int64_t n) const;
  std::string to_string() const;
  /// "power:r,s", "power:r" or "geometric:q".
  static PsiRule parse(const std::string& text);

  bool operator==(const PsiRule&) const = default;
};

struct DoublingCheck {
  bool ok = false;
  double max_ratio = 0.0;  ///< max ψ_n/ψ_{2n} over 1 <= n <= horizon
  std::optional<std::int64_t> witness;
  std::string note;
};

/// ψ non-increasing and ψ_n = O(ψ_{2n}) over the horizon: the doubling ratio
/// must stay below ratio_cap and must not grow by more than a factor 2
/// between the lower and upper halves of the horizon.
DoublingCheck check_doubling(const PsiRule& psi, std::int64_t horizon, double ratio_cap = 1e3);

struct RateOptions {
  double lambda = 2.0;
  std::int64_t reference_factor = 4;
  double ratio_cap = 1e3;
  double growth_factor = 2.0;
  unsigned threads = 1;
};

struct RateRow {
  std::int64_t n = 0;
  double psi = 0.0;
  double gap_Sn = 0.0;
  double best_upper = 0.0;
  double best_lower = 0.0;
  double coef_log = 0.0;
  double gap_ratio = 0.0;
  double best_ratio = 0.0;
  double coef_ratio = 0.0;
};

struct RateReport {
  std::optional<FamilyDescriptor> family;
  PsiRule psi;
  RateOptions options;
  DoublingCheck doubling;
  std::vector<RateRow> rows;
  double sup_gap = 0.0;
  double sup_best = 0.0;
  double sup_coef = 0.0;
  bool bounded_gap = false;
  bool bounded_best = false;
  bool bounded_coef = false;
  bool bounded() const { return bounded_gap && bounded_best && bounded_coef; }
};

/// Ratios of ‖f−S_n‖₁, the E_n(f)_L upper estimate and coef_log to ψ_n.
/// Throws InputError when ψ fails check_doubling.
RateReport rate_study(const CoefficientSequence& c, const PsiRule& psi,
                      std::span<const std::int64_t> n_grid, const GridFactory& grids,
                      const RateOptions& options = {});

// ------------------------------------------------------------------- lebesgue

struct LebesgueRow {
  std::int64_t n = 0;
  double dirichlet = 0.0;
  double complex = 0.0;
  double lower_bound = 0.0;  ///< (1/π) log n
  double refine_dirichlet = 0.0;  ///< relative change on doubling the nodes
  double refine_complex = 0.0;
};

struct LogFit {
  double a = 0.0;
  double b = 0.0;
  double max_residual_of_range = 0.0;  ///< max |resid| / (max − min)
  double max_residual_relative = 0.0;  ///< max |resid| / value
};

/// value ≈ a + b log n by least squares.
LogFit fit_log(std::span<const std::int64_t> ns, std::span<const double> values);

struct LebesgueReport {
  std::vector<LebesgueRow> rows;
  LogFit dirichlet_fit;
  LogFit complex_fit;
  double residual_tolerance = 0.02;
  double refine_tolerance = 1e-6;
  double ratio_spread = 0.0;  ///< max ratio of consecutive ‖D_n‖₁/log n (either way)
  bool lower_bound_ok = false;
  bool fit_ok = false;
  bool refine_ok = false;
  bool spread_ok = false;  ///< ratio_spread <= 1.2
  bool passed() const { return lower_bound_ok && fit_ok && refine_ok && spread_ok; }
};

/// ‖D_n‖₁ and ‖E_n‖₁ (outer index n) across n_grid, each n >= 2.
LebesgueReport lebesgue_growth(std::span<const std::int64_t> n_grid, const GridFactory& grids,
                               unsigned threads = 1);

// --------------------------------------------------------------------- lemma 3

struct Lemma3Report {
  std::vector<std::int64_t> ns;
  std::int64_t grid_points = 0;
  double max_phi = 0.0;
  double max_sine = 0.0;
  /// Local maxima of the sine sum refined off the grid.
  double sup_sine = 0.0;
  std::int64_t sup_sine_n = 0;
  double gibbs = 0.0;         ///< ∫₀^π sin t / t dt
  double extrapolated = 0.0;  ///< 2 M_N − M_{N/2} for the largest N, informational
  double gibbs_tolerance = 1e-3;
  std::optional<std::string> witness;
  bool bounds_ok = false;
  bool gibbs_ok = false;
  bool passed() const { return bounds_ok && gibbs_ok; }
};

/// |φ_{±n}| <= 6√π and |Σ_{k<=n} sin kx/k| <= 3√π on grid_points equally
/// spaced x ∈ (−π, π]; the sup of the sine sum is compared with Si(π).
Lemma3Report lemma3_sweep(std::span<const std::int64_t> ns, std::int64_t grid_points,
                          unsigned threads = 1);

double sine_integral_pi();

// ------------------------------------------------------------------ batteries

struct BatteryResult {
  std::string name;
  bool passed = true;
  std::int64_t checked = 0;
  std::int64_t failures = 0;
  double worst = 0.0;  ///< largest residual or ratio seen
  std::string witness;
  std::string note;
};

/// Kernel identities E_k(±x) − E_{k−1}(±x) = e^{±ikx} and
/// E_k(x) + E_k(−x) = 2D_k(x) at random (k <= 512, n, x), x kept 1e−9 away
/// from ±1/n. With flip_breakpoint the second half of the samples evaluates
/// E_{k−1} with swapped branches.
BatteryResult identity7_battery(std::uint64_t seed, std::int64_t samples, bool flip_breakpoint);
BatteryResult identity8_battery(std::uint64_t seed, std::int64_t samples);
BatteryResult parity_battery(std::uint64_t seed, std::int64_t samples);

/// τ − S_n against the kernel expansion on random two-sided tables.
BatteryResult abel_battery(std::uint64_t seed, std::int64_t tables, std::int64_t points);

BatteryResult telescoping_battery(std::uint64_t seed, std::int64_t instances, std::int64_t horizon);

/// monotone ⇒ QM(0) ⇒ ORVQM(R≡1, θ=0) ⇒ GBV(N₀=1); QM(2) ⇒ ORVQM(R=n²) ⇒ GBV(N₀=1);
/// complex ORVQM ⇒ GBV(N₀=1). Gapped sequences in the pool must be excluded.
BatteryResult hierarchy_battery(std::uint64_t seed, std::int64_t instances, std::int64_t horizon);
BatteryResult sector_constant_battery(std::uint64_t seed, std::int64_t instances,
                                      std::int64_t horizon);
BatteryResult strictness_battery(std::int64_t horizon);
BatteryResult conjugation_battery(std::uint64_t seed, std::int64_t instances, std::int64_t horizon);
BatteryResult lemma1_battery(std::uint64_t seed, std::int64_t instances, std::int64_t horizon);
BatteryResult lemma2_battery(std::uint64_t seed, std::int64_t instances, std::int64_t horizon);
BatteryResult balance_battery();
BatteryResult lacunary_battery();
BatteryResult lemma3_battery(const Lemma3Report& report);
BatteryResult lebesgue_battery(const LebesgueReport& report);
BatteryResult consistency_battery(std::span<const ConvergenceReport> reports);

/// Families whose convergence studies feed the consistency battery.
const std::vector<FamilyDescriptor>& consistency_families();

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::int64_t instances = 50;
  std::int64_t horizon = 2048;
  std::int64_t identity_samples = 1000;
  std::int64_t abel_tables = 20;
  std::int64_t abel_points = 200;
  std::int64_t lemma3_points = 100000;
  std::vector<std::int64_t> lemma3_ns = {1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};
  std::vector<std::int64_t> lebesgue_ns = {16, 32, 64, 128, 256, 512, 1024, 2048, 4096};
  std::vector<std::int64_t> consistency_ns = {32, 64, 128, 256, 512};
  bool flip_breakpoint = false;
  double tolerance = 1e-8;
  unsigned threads = 1;
};

struct SuiteReport {
  SuiteOptions options;
  std::vector<BatteryResult> batteries;
  Lemma3Report lemma3;
  LebesgueReport lebesgue;
  std::vector<ConvergenceReport> consistency;

  bool passed() const;
};

SuiteReport lemma_suite(const SuiteOptions& options = {});

}  // namespace l1f::experiments

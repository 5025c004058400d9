#include "l1fourier/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>

#include "l1fourier/approximation.hpp"
#include "l1fourier/errors.hpp"
#include "l1fourier/kernels.hpp"
#include "l1fourier/parallel.hpp"
#include "l1fourier/seqclass.hpp"
#include "l1fourier/series.hpp"

namespace l1f::experiments {
namespace {

constexpr double kPi = std::numbers::pi;

void require_grid(std::span<const std::int64_t> ns, std::int64_t min_n, const char* what) {
  if (ns.empty()) throw InputError(std::string(what) + ": n grid is empty");
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < min_n) {
      throw InputError(std::string(what) + ": n values must be >= " + std::to_string(min_n));
    }
    if (i > 0 && ns[i] <= ns[i - 1]) {
      throw InputError(std::string(what) + ": n grid must be strictly increasing");
    }
  }
}

double coef_log(const CoefficientSequence& c, std::int64_t n) {
  return std::max(std::abs(c(n)), std::abs(c(-n))) * std::log(static_cast<double>(n));
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 == 1 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

// A finitely supported family is only represented faithfully when the grid
// budget covers its top frequency.
void require_support_budget(const CoefficientSequence& c, const GridFactory& grids) {
  if (const auto bound = c.support_bound()) grids(static_cast<double>(*bound));
}

Trend combine(Trend a, Trend b) {
  if (a == b) return a;
  return Trend::Unclear;
}

Hypotheses check_hypotheses(const CoefficientSequence& c, std::int64_t horizon, std::span<const std::int64_t> ns,
                            double lambda, double balance_tolerance) {
  Hypotheses h;
  const auto pos = seqclass::check_gbv(c, horizon);
  const auto neg = seqclass::check_gbv(reflected(c), horizon);
  h.gbv_positive = pos.holds();
  h.gbv_negative = neg.holds();
  h.n0_positive = pos.fitted_N0;
  h.n0_negative = neg.fitted_N0;
  h.sector = true;
  double angle = 0.0;
  for (std::int64_t n = 1; n <= horizon; ++n) {
    const Complex z = c(n);
    if (z == Complex{}) continue;
    if (!(z.real() > 0.0)) {
      h.sector = false;
      break;
    }
    angle = std::max(angle, std::abs(std::arg(z)));
  }
  if (h.sector) h.sector_angle = angle;
  std::vector<double> lambdas = seqclass::default_balance_lambdas();
  if (std::find(lambdas.begin(), lambdas.end(), lambda) == lambdas.end()) lambdas.push_back(lambda);
  h.balance = seqclass::balance_profile(c, lambdas, ns, balance_tolerance).satisfied;
  return h;
}

}  // namespace

GridFactory default_grid_factory(double tolerance, int nodes_per_panel) {
  return [tolerance, nodes_per_panel](double max_freq) {
    return quad::build_grid(std::max(1.0, max_freq), tolerance, nodes_per_panel);
  };
}

std::string to_string(ConvergenceVerdict v) {
  switch (v) {
    case ConvergenceVerdict::ConsistentWithConvergence: return "ConsistentWithConvergence";
    case ConvergenceVerdict::ConsistentWithDivergence: return "ConsistentWithDivergence";
    case ConvergenceVerdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::string to_string(Trend t) {
  switch (t) {
    case Trend::Decays: return "decays";
    case Trend::Persists: return "persists";
    case Trend::Unclear: return "unclear";
  }
  return "unclear";
}

Trend column_trend(std::span<const double> column, const Thresholds& t) {
  if (column.empty()) return Trend::Unclear;
  if (std::all_of(column.begin(), column.end(), [](double v) { return v == 0.0; })) {
    return Trend::Decays;
  }
  const std::size_t n = column.size();
  bool tail_monotone = true;
  for (std::size_t i = n >= 3 ? n - 2 : 1; i < n; ++i) {
    if (column[i] > column[i - 1]) tail_monotone = false;
  }
  if (column.back() < t.convergence_fraction * column.front() && tail_monotone) return Trend::Decays;
  const double med = median({column.begin(), column.end()});
  const double lo = *std::min_element(column.begin(), column.end());
  if (med > 0.0 && lo >= t.divergence_fraction * med &&
      column.back() >= t.divergence_fraction * column.front()) {
    return Trend::Persists;
  }
  return Trend::Unclear;
}

ConvergenceReport convergence_study(const CoefficientSequence& c,
                                    std::span<const std::int64_t> n_grid,
                                    const GridFactory& grids, const StudyOptions& options) {
  require_grid(n_grid, 1, "convergence_study");
  if (!(options.lambda > 1.0)) throw InputError("convergence_study: lambda must exceed 1");
  if (options.reference_factor < 4) {
    throw InputError("convergence_study: reference degree must be at least 4n");
  }
  for (std::int64_t n : n_grid) series::delayed_top(n, options.lambda);
  // fail fast on budget before any work
  grids(static_cast<double>(options.reference_factor * n_grid.back()));
  require_support_budget(c, grids);

  ConvergenceReport report;
  report.family = c.descriptor();
  report.options = options;
  report.rows.resize(n_grid.size());
  parallel_for(n_grid.size(), options.threads, [&](std::size_t i) {
    const std::int64_t n = n_grid[i];
    ConvergenceRow& row = report.rows[i];
    row.n = n;
    row.reference_degree = options.reference_factor * n;
    const series::PartialSumSpec spec{n, options.lambda, row.reference_degree};
    const auto truncated =
        series::truncation_gap(c, spec, grids(static_cast<double>(row.reference_degree)));
    row.gap_Sn = truncated.value;
    row.tail_bound = truncated.tail_bound;
    row.cauchy = series::cauchy_gap(c, n, 2 * n, grids(static_cast<double>(2 * n)));
    const std::int64_t top = series::delayed_top(n, options.lambda);
    row.tau_gap = series::tau_gap(c, n, options.lambda,
                                  grids(static_cast<double>(std::max<std::int64_t>(top - 1, 1))));
    row.coef_log = coef_log(c, n);
    row.balance = seqclass::balance_entry(c, options.lambda, n);
  });

  report.hypotheses = check_hypotheses(c, options.horizon, n_grid, options.lambda,
                                       options.thresholds.balance_tolerance);
  std::vector<double> gap, cauchy, coef;
  for (const auto& r : report.rows) {
    gap.push_back(r.gap_Sn);
    cauchy.push_back(r.cauchy);
    coef.push_back(r.coef_log);
  }
  const Trend gap_trend = column_trend(gap, options.thresholds);
  const Trend cauchy_trend = column_trend(cauchy, options.thresholds);
  // divergence is read off the Cauchy gaps alone; the proxy needs no floor
  report.gap_trend = cauchy_trend == Trend::Persists ? Trend::Persists
                                                     : combine(gap_trend, cauchy_trend);
  report.coef_trend = column_trend(coef, options.thresholds);
  if (report.gap_trend == Trend::Decays && report.coef_trend == Trend::Decays) {
    report.verdict = ConvergenceVerdict::ConsistentWithConvergence;
  } else if (report.gap_trend == Trend::Persists && report.coef_trend == Trend::Persists) {
    report.verdict = ConvergenceVerdict::ConsistentWithDivergence;
  }
  const bool opposed = (report.gap_trend == Trend::Decays && report.coef_trend == Trend::Persists) ||
                       (report.gap_trend == Trend::Persists && report.coef_trend == Trend::Decays);
  report.theorem_consistent = !(report.hypotheses.met() && opposed);
  return report;
}

// ----------------------------------------------------------------------- rate

double PsiRule::operator()(std::int64_t n) const {
  const double x = static_cast<double>(n);
  if (kind == Kind::Geometric) return std::pow(q, x);
  return std::pow(x + 1.0, -r) * std::pow(std::log(x + 2.0), s);
}

std::string PsiRule::to_string() const {
  std::ostringstream os;
  os.precision(17);
  if (kind == Kind::Geometric) {
    os << "geometric:" << q;
  } else {
    os << "power:" << r << "," << s;
  }
  return os.str();
}

PsiRule PsiRule::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("psi rule '" + text + "' must be kind:params");
  const std::string kind = text.substr(0, colon);
  std::vector<double> values;
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("psi rule '" + text + "': bad number '" + item + "'");
    }
  }
  PsiRule p;
  if (kind == "power") {
    if (values.empty() || values.size() > 2) throw InputError("psi power takes r[,s]");
    p.kind = Kind::Power;
    p.r = values[0];
    p.s = values.size() > 1 ? values[1] : 0.0;
  } else if (kind == "geometric") {
    if (values.size() != 1) throw InputError("psi geometric takes q");
    p.kind = Kind::Geometric;
    p.q = values[0];
    if (!(p.q > 0.0 && p.q <= 1.0)) throw InputError("psi geometric needs 0 < q <= 1");
  } else {
    throw InputError("unknown psi kind '" + kind + "'");
  }
  return p;
}

DoublingCheck check_doubling(const PsiRule& psi, std::int64_t horizon, double ratio_cap) {
  if (horizon < 2) throw InputError("check_doubling: horizon must be >= 2");
  DoublingCheck out;
  double lower_half = 0.0;
  double upper_half = 0.0;
  for (std::int64_t n = 1; n <= horizon; ++n) {
    const double a = psi(n);
    const double b = psi(2 * n);
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a)) {
      out.witness = n;
      out.note = "psi must be positive and finite";
      return out;
    }
    if (psi(n + 1) > a * (1 + 1e-12)) {
      out.witness = n;
      out.note = "psi must be non-increasing";
      return out;
    }
    const double ratio = a / b;
    out.max_ratio = std::max(out.max_ratio, ratio);
    double& half = n <= horizon / 2 ? lower_half : upper_half;
    half = std::max(half, ratio);
    if (ratio > ratio_cap) {
      out.witness = n;
      out.note = "psi_n / psi_2n exceeds the cap";
      return out;
    }
  }
  if (upper_half > 2.0 * lower_half) {
    out.note = "psi_n / psi_2n keeps growing over the horizon";
    return out;
  }
  out.ok = true;
  return out;
}

RateReport rate_study(const CoefficientSequence& c, const PsiRule& psi,
                      std::span<const std::int64_t> n_grid, const GridFactory& grids,
                      const RateOptions& options) {
  require_grid(n_grid, 1, "rate_study");
  if (!(options.lambda > 1.0)) throw InputError("rate_study: lambda must exceed 1");
  if (options.reference_factor < 4) throw InputError("rate_study: reference degree must be at least 4n");
  RateReport report;
  report.family = c.descriptor();
  report.psi = psi;
  report.options = options;
  report.doubling = check_doubling(psi, std::max<std::int64_t>(2, 2 * n_grid.back()));
  if (!report.doubling.ok) {
    throw InputError("psi rule " + psi.to_string() + " fails the doubling condition: " +
                     report.doubling.note);
  }
  grids(static_cast<double>(options.reference_factor * n_grid.back()));
  require_support_budget(c, grids);

  report.rows.resize(n_grid.size());
  parallel_for(n_grid.size(), options.threads, [&](std::size_t i) {
    RateRow& row = report.rows[i];
    row.n = n_grid[i];
    const std::int64_t ref = options.reference_factor * row.n;
    const auto grid = grids(static_cast<double>(ref));
    row.psi = psi(row.n);
    row.gap_Sn = series::cauchy_gap(c, row.n, ref, grid);
    const auto best = quad::best_approx_upper(c, row.n, options.lambda, grid, ref);
    row.best_upper = best.upper;
    row.best_lower = best.lower;
    row.coef_log = coef_log(c, row.n);
    row.gap_ratio = row.gap_Sn / row.psi;
    row.best_ratio = row.best_upper / row.psi;
    row.coef_ratio = row.coef_log / row.psi;
  });

  auto bounded = [&](auto field, double& sup) {
    double lower = 0.0;
    double upper = 0.0;
    const std::size_t half = report.rows.size() / 2;
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
      const double v = report.rows[i].*field;
      sup = std::max(sup, v);
      double& side = i < half ? lower : upper;
      side = std::max(side, v);
    }
    if (half == 0) lower = upper;
    return std::isfinite(sup) && sup <= options.ratio_cap && upper <= options.growth_factor * lower;
  };
  report.bounded_gap = bounded(&RateRow::gap_ratio, report.sup_gap);
  report.bounded_best = bounded(&RateRow::best_ratio, report.sup_best);
  report.bounded_coef = bounded(&RateRow::coef_ratio, report.sup_coef);
  return report;
}

// ------------------------------------------------------------------- lebesgue

LogFit fit_log(std::span<const std::int64_t> ns, std::span<const double> values) {
  if (ns.size() != values.size() || ns.size() < 2) throw InputError("fit_log needs >= 2 points");
  const double count = static_cast<double>(ns.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double x = std::log(static_cast<double>(ns[i]));
    sx += x;
    sy += values[i];
    sxx += x * x;
    sxy += x * values[i];
  }
  LogFit fit;
  fit.b = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  fit.a = (sy - fit.b * sx) / count;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double range = *hi - *lo;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double resid = std::abs(values[i] - (fit.a + fit.b * std::log(static_cast<double>(ns[i]))));
    if (range > 0.0) fit.max_residual_of_range = std::max(fit.max_residual_of_range, resid / range);
    if (values[i] != 0.0) {
      fit.max_residual_relative = std::max(fit.max_residual_relative, resid / std::abs(values[i]));
    }
  }
  return fit;
}

LebesgueReport lebesgue_growth(std::span<const std::int64_t> n_grid, const GridFactory& grids,
                               unsigned threads) {
  require_grid(n_grid, 2, "lebesgue_growth");
  grids(2.0 * static_cast<double>(n_grid.back()) + 1.0);
  LebesgueReport report;
  report.rows.resize(n_grid.size());
  parallel_for(n_grid.size(), threads, [&](std::size_t i) {
    LebesgueRow& row = report.rows[i];
    row.n = n_grid[i];
    const kernels::KernelContext ctx(row.n, row.n);
    const auto grid = grids(2.0 * static_cast<double>(row.n) + 1.0);
    const auto coarse = kernels::kernel_l1_norms(ctx, grid);
    const auto fine = kernels::kernel_l1_norms(ctx, grid.refined());
    row.dirichlet = fine.dirichlet;
    row.complex = fine.complex;
    row.refine_dirichlet = std::abs(coarse.dirichlet - fine.dirichlet) / fine.dirichlet;
    row.refine_complex = std::abs(coarse.complex - fine.complex) / fine.complex;
    row.lower_bound = std::log(static_cast<double>(row.n)) / kPi;
  });

  std::vector<double> d, e;
  report.lower_bound_ok = true;
  report.refine_ok = true;
  for (const auto& row : report.rows) {
    d.push_back(row.dirichlet);
    e.push_back(row.complex);
    if (row.dirichlet < row.lower_bound) report.lower_bound_ok = false;
    if (row.refine_dirichlet > report.refine_tolerance || row.refine_complex > report.refine_tolerance) {
      report.refine_ok = false;
    }
  }
  if (report.rows.size() >= 2) {
    report.dirichlet_fit = fit_log(n_grid, d);
    report.complex_fit = fit_log(n_grid, e);
  }
  auto within = [&](const LogFit& f) {
    return f.max_residual_of_range <= report.residual_tolerance &&
           f.max_residual_relative <= report.residual_tolerance;
  };
  report.fit_ok = within(report.dirichlet_fit) && within(report.complex_fit);
  report.ratio_spread = 1.0;
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    const double a = d[i - 1] / std::log(static_cast<double>(n_grid[i - 1]));
    const double b = d[i] / std::log(static_cast<double>(n_grid[i]));
    report.ratio_spread = std::max({report.ratio_spread, a / b, b / a});
  }
  report.spread_ok = report.ratio_spread <= 1.2;
  return report;
}

// --------------------------------------------------------------------- lemma 3

double sine_integral_pi() {
  auto sinc = [](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; };
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(sinc, 0.0, kPi, 15, 1e-15);
}

Lemma3Report lemma3_sweep(std::span<const std::int64_t> ns, std::int64_t grid_points,
                          unsigned threads) {
  require_grid(ns, 1, "lemma3_sweep");
  if (grid_points < 16) throw InputError("lemma3_sweep: need at least 16 grid points");
  Lemma3Report report;
  report.ns.assign(ns.begin(), ns.end());
  report.grid_points = grid_points;
  report.gibbs = sine_integral_pi();

  struct PerN {
    double phi = 0.0;
    double sine = 0.0;
    double refined = 0.0;
    std::optional<std::string> witness;
  };
  std::vector<PerN> per(ns.size());
  const double step = 2.0 * kPi / static_cast<double>(grid_points);
  parallel_for(ns.size(), threads, [&](std::size_t i) {
    const std::int64_t n = ns[i];
    PerN& out = per[i];
    double best_x = 0.0;
    double best = -1.0;
    for (std::int64_t j = 1; j <= grid_points; ++j) {
      const double x = -kPi + step * static_cast<double>(j);
      const double plus = std::abs(kernels::phi({n, kernels::PhiSpec::Sign::Plus}, x));
      const double minus = std::abs(kernels::phi({n, kernels::PhiSpec::Sign::Minus}, x));
      const double s = kernels::sine_sum(n, x);
      out.phi = std::max({out.phi, plus, minus});
      out.sine = std::max(out.sine, std::abs(s));
      if (s > best) {
        best = s;
        best_x = x;
      }
      if (!out.witness && (plus > kernels::kPhiBound || minus > kernels::kPhiBound ||
                           std::abs(s) > kernels::kSineSumBound)) {
        std::ostringstream os;
        os.precision(17);
        os << "n=" << n << " x=" << x;
        out.witness = os.str();
      }
    }
    // the sine sum is odd, so its supremum is attained at a positive local max
    const double lo = std::max(best_x - step, 0.0);
    const double hi = std::min(best_x + step, kPi);
    std::uintmax_t iters = 200;
    const auto found = boost::math::tools::brent_find_minima(
        [n](double x) { return -kernels::sine_sum(n, x); }, lo, hi, 52, iters);
    out.refined = std::max(best, -found.second);
  });

  report.bounds_ok = true;
  std::vector<double> refined;
  for (std::size_t i = 0; i < per.size(); ++i) {
    report.max_phi = std::max(report.max_phi, per[i].phi);
    report.max_sine = std::max(report.max_sine, per[i].sine);
    if (per[i].refined > report.sup_sine) {
      report.sup_sine = per[i].refined;
      report.sup_sine_n = ns[i];
    }
    refined.push_back(per[i].refined);
    if (per[i].witness) {
      report.bounds_ok = false;
      if (!report.witness) report.witness = per[i].witness;
    }
  }
  if (ns.size() >= 2 && ns[ns.size() - 1] == 2 * ns[ns.size() - 2]) {
    report.extrapolated = 2.0 * refined.back() - refined[refined.size() - 2];
  } else {
    report.extrapolated = refined.back();
  }
  report.gibbs_ok = std::abs(report.sup_sine - report.gibbs) <= report.gibbs_tolerance;
  return report;
}

}  // namespace l1f::experiments

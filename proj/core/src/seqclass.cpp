#include "l1fourier/seqclass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "l1fourier/errors.hpp"

namespace l1f::seqclass {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kAngleSlack = 1e-12;
constexpr double kRelSlack = 1e-12;

void require_horizon(std::int64_t horizon, std::int64_t minimum) {
  if (horizon < minimum) {
    throw InputError("horizon must be >= " + std::to_string(minimum) + ", got " +
                     std::to_string(horizon));
  }
}

double real_nonnegative(const CoefficientSequence& c, std::int64_t n, const char* who) {
  const Complex z = c(n);
  const double scale = std::abs(z);
  if (std::abs(z.imag()) > 1e-14 * scale + 1e-300) {
    throw InputError(std::string(who) + ": coefficient at n=" + std::to_string(n) +
                     " is not real");
  }
  if (z.real() < 0) {
    throw InputError(std::string(who) + ": coefficient at n=" + std::to_string(n) +
                     " is negative");
  }
  return z.real();
}

ClassReport base_report(ClassName name, std::int64_t horizon) {
  ClassReport r;
  r.class_name = name;
  r.horizon = horizon;
  return r;
}

void fail(ClassReport& r, std::int64_t witness) {
  r.verdict = Verdict::FailsWithWitness;
  r.witness = witness;
}

}  // namespace

SectorParams::SectorParams(double theta_rad) : theta(theta_rad) {
  if (!(theta_rad >= 0.0) || !(theta_rad < std::numbers::pi / 2)) {
    throw InputError("sector angle must lie in [0, pi/2)");
  }
}

bool SectorParams::contains(Complex z) const {
  if (z == Complex{}) return true;
  return std::abs(std::arg(z)) <= theta + kAngleSlack;
}

std::string to_string(ClassName c) {
  switch (c) {
    case ClassName::Monotone: return "Monotone";
    case ClassName::Quasimonotone: return "Quasimonotone";
    case ClassName::ORegVarying: return "ORegVarying";
    case ClassName::ORVQuasimonotone: return "ORVQuasimonotone";
    case ClassName::RBVS: return "RBVS";
    case ClassName::GBV: return "GBV";
  }
  return "GBV";
}

std::string to_string(Verdict v) {
  return v == Verdict::HoldsUpToHorizon ? "HoldsUpToHorizon" : "FailsWithWitness";
}

std::int64_t scaled_index(double lambda, std::int64_t n) {
  // the small offset keeps products like 1.1 * 10 from rounding below an integer
  return static_cast<std::int64_t>(std::floor(lambda * static_cast<double>(n) + 1e-9));
}

ClassReport check_sector(const CoefficientSequence& c, SectorParams s, std::int64_t horizon) {
  require_horizon(horizon, 1);
  ClassReport r = base_report(ClassName::GBV, horizon);
  r.note = "sector K(theta)";
  r.parameter = s.theta;
  double m_all = 1.0;
  double m_half = 1.0;
  for (std::int64_t n = 1; n <= horizon; ++n) {
    const Complex z = c(n);
    if (z == Complex{}) continue;
    if (!s.contains(z)) {
      fail(r, n);
      m_all = kInf;
      if (n <= horizon / 2) m_half = kInf;
      break;
    }
    const double ratio = std::abs(z) / z.real();
    m_all = std::max(m_all, ratio);
    if (n <= horizon / 2) m_half = std::max(m_half, ratio);
  }
  r.fitted_M = m_all;
  r.fitted_M_half = m_half;
  return r;
}

ClassReport check_gbv(const CoefficientSequence& c, std::int64_t horizon, std::int64_t max_N0,
                      double M_cap) {
  require_horizon(horizon, 2);
  if (max_N0 < 1) throw InputError("max_N0 must be >= 1");
  if (!(M_cap > 0)) throw InputError("M_cap must be positive");
  ClassReport r = base_report(ClassName::GBV, horizon);

  const std::int64_t last = std::max(2 * horizon + 1, horizon + max_N0 - 1);
  std::vector<Complex> v(static_cast<std::size_t>(last + 2));
  for (std::int64_t n = 1; n <= last + 1; ++n) v[static_cast<std::size_t>(n)] = c(n);

  // Sector precondition: some θ₁ < π/2 contains every nonzero term.
  double max_angle = 0.0;
  for (std::int64_t n = 1; n <= last + 1; ++n) {
    const Complex z = v[static_cast<std::size_t>(n)];
    if (z == Complex{}) continue;
    if (!(z.real() > 0)) {
      fail(r, n);
      r.fitted_M = kInf;
      r.fitted_M_half = kInf;
      r.note = "sector precondition fails: Re c_n <= 0 at nonzero term";
      return r;
    }
    max_angle = std::max(max_angle, std::abs(std::arg(z)));
  }
  r.parameter = max_angle;

  std::vector<long double> prefix(static_cast<std::size_t>(2 * horizon + 2), 0.0L);
  for (std::int64_t n = 1; n <= 2 * horizon + 1; ++n) {
    const auto i = static_cast<std::size_t>(n);
    prefix[i] = prefix[i - 1] + std::abs(v[i] - v[i + 1]);
  }
  auto variation = [&](std::int64_t m) {
    return static_cast<double>(prefix[static_cast<std::size_t>(2 * m)] -
                               prefix[static_cast<std::size_t>(m - 1)]);
  };

  struct Fit {
    double all = 0.0;
    double half = 0.0;
    std::int64_t worst = 1;
  };
  auto fit_window = [&](std::int64_t window) {
    Fit f;
    double worst_ratio = -1.0;
    for (std::int64_t m = 1; m <= horizon; ++m) {
      double w = 0.0;
      for (std::int64_t n = m; n < m + window; ++n) w = std::max(w, std::abs(v[static_cast<std::size_t>(n)]));
      const double var = variation(m);
      double ratio = 0.0;
      if (w == 0.0) {
        ratio = var > 0.0 ? kInf : 0.0;
      } else {
        ratio = var / w;
      }
      if (ratio > worst_ratio) {
        worst_ratio = ratio;
        f.worst = m;
      }
      f.all = std::max(f.all, ratio);
      if (m <= horizon / 2) f.half = std::max(f.half, ratio);
      if (ratio == kInf) break;  // immediate witness
    }
    return f;
  };

  Fit fit;
  for (std::int64_t window = 1; window <= max_N0; ++window) {
    fit = fit_window(window);
    if (fit.all <= M_cap) {
      r.fitted_N0 = window;
      r.fitted_M = fit.all;
      r.fitted_M_half = fit.half;
      r.edge_windows = std::min<std::int64_t>(window - 1, horizon);
      if (r.edge_windows > 0) {
        r.note = "windows with m < N0 extend past 2m (printed definition kept)";
      }
      return r;
    }
  }
  fail(r, fit.worst);
  r.fitted_N0 = max_N0;
  r.fitted_M = fit.all;
  r.fitted_M_half = fit.half;
  r.note = fit.all == kInf ? "window maximum vanishes while the variation is positive"
                           : "minimal M exceeds M_cap for every N0 <= max_N0";
  return r;
}

ClassReport check_quasimonotone(const CoefficientSequence& c, double alpha, std::int64_t horizon) {
  require_horizon(horizon, 2);
  if (!(alpha >= 0)) throw InputError("alpha must be >= 0");
  ClassReport r = base_report(ClassName::Quasimonotone, horizon);
  r.parameter = alpha;
  auto scaled = [&](std::int64_t n) {
    return real_nonnegative(c, n, "check_quasimonotone") / std::pow(static_cast<double>(n), alpha);
  };
  double m_all = 0.0;
  double m_half = 0.0;
  double prev = scaled(1);
  for (std::int64_t n = 1; n < horizon; ++n) {
    const double next = scaled(n + 1);
    double ratio = 0.0;
    if (prev == 0.0) {
      ratio = next > 0.0 ? kInf : 0.0;
    } else {
      ratio = next / prev;
    }
    m_all = std::max(m_all, ratio);
    if (n <= horizon / 2) m_half = std::max(m_half, ratio);
    if (ratio > 1.0 + kRelSlack && !r.witness) fail(r, n);
    prev = next;
  }
  r.fitted_M = m_all;
  r.fitted_M_half = m_half;
  return r;
}

ClassReport check_monotone(const CoefficientSequence& c, std::int64_t horizon) {
  ClassReport r = check_quasimonotone(c, 0.0, horizon);
  r.class_name = ClassName::Monotone;
  return r;
}

ClassReport check_oreg_varying(const RegVaryingWeight& R, std::int64_t horizon, double M_cap) {
  require_horizon(horizon, 2);
  ClassReport r = base_report(ClassName::ORegVarying, horizon);
  r.note = R.name();
  auto value = [&](std::int64_t n) {
    const double x = R(n);
    if (!(x > 0)) throw InputError("weight " + R.name() + " is not positive at n=" + std::to_string(n));
    return x;
  };
  for (std::int64_t n = 1; n <= 2 * horizon; ++n) value(n);

  double m_all = 0.0;
  double m_half = 0.0;
  for (std::int64_t n = 1; n <= horizon; ++n) {
    const double rn = value(n);
    if (value(n + 1) < rn * (1 - kRelSlack)) {
      fail(r, n);
      r.note += "; not non-decreasing";
      break;
    }
    const double ratio = value(2 * n) / rn;
    m_all = std::max(m_all, std::isnan(ratio) ? kInf : ratio);
    if (n <= horizon / 2) m_half = m_all;
    if (!(ratio <= M_cap)) {
      fail(r, n);
      break;
    }
  }
  r.fitted_M = m_all;
  r.fitted_M_half = m_half;
  return r;
}

ClassReport check_orvqm(const CoefficientSequence& c, const RegVaryingWeight& R, SectorParams s,
                        std::int64_t horizon) {
  require_horizon(horizon, 1);
  ClassReport r = base_report(ClassName::ORVQuasimonotone, horizon);
  r.parameter = s.theta;
  auto scaled = [&](std::int64_t n) {
    const Complex z = c(n);
    if (z.real() < -1e-15 * std::abs(z)) {
      throw InputError("check_orvqm: Re c_n < 0 at n=" + std::to_string(n));
    }
    const double w = R(n);
    if (!(w > 0)) throw InputError("weight " + R.name() + " is not positive at n=" + std::to_string(n));
    return z / w;
  };
  double m_all = 1.0;
  double m_half = 1.0;
  double max_angle = 0.0;
  Complex prev = scaled(1);
  for (std::int64_t n = 1; n <= horizon; ++n) {
    const Complex next = scaled(n + 1);
    const Complex d = prev - next;
    const double noise = 4 * std::numeric_limits<double>::epsilon() *
                         std::max(std::abs(prev), std::abs(next));
    if (std::abs(d) > noise) {
      if (!s.contains(d)) {
        fail(r, n);
        m_all = kInf;
        if (n <= horizon / 2) m_half = kInf;
        break;
      }
      const double ratio = std::abs(d) / d.real();
      max_angle = std::max(max_angle, std::abs(std::arg(d)));
      m_all = std::max(m_all, ratio);
      if (n <= horizon / 2) m_half = std::max(m_half, ratio);
    }
    prev = next;
  }
  r.fitted_M = m_all;
  r.fitted_M_half = m_half;
  std::ostringstream note;
  note << "R = " << R.name() << "; max |arg| of differences " << max_angle;
  r.note = note.str();
  return r;
}

ClassReport check_rbvs(const CoefficientSequence& c, std::int64_t horizon,
                       std::optional<std::int64_t> tail_cap, double M_cap) {
  require_horizon(horizon, 1);
  const std::int64_t cap = tail_cap.value_or(8 * horizon);
  if (cap < horizon) throw InputError("tail_cap must be >= horizon");
  ClassReport r = base_report(ClassName::RBVS, horizon);

  std::vector<double> v(static_cast<std::size_t>(cap + 2));
  for (std::int64_t n = 1; n <= cap + 1; ++n) {
    v[static_cast<std::size_t>(n)] = real_nonnegative(c, n, "check_rbvs");
  }
  std::vector<long double> tail(static_cast<std::size_t>(cap + 2), 0.0L);
  for (std::int64_t n = cap; n >= 1; --n) {
    const auto i = static_cast<std::size_t>(n);
    tail[i] = tail[i + 1] + std::abs(v[i] - v[i + 1]);
  }
  double m_all = 0.0;
  double m_half = 0.0;
  for (std::int64_t m = 1; m <= horizon; ++m) {
    const auto i = static_cast<std::size_t>(m);
    const double t = static_cast<double>(tail[i]);
    double ratio = 0.0;
    if (v[i] == 0.0) {
      ratio = t > 0.0 ? kInf : 0.0;
    } else {
      ratio = t / v[i];
    }
    m_all = std::max(m_all, ratio);
    if (m <= horizon / 2) m_half = std::max(m_half, ratio);
    if (!(ratio <= M_cap) && !r.witness) fail(r, m);
  }
  r.fitted_M = m_all;
  r.fitted_M_half = m_half;
  r.truncation_error = v[static_cast<std::size_t>(cap + 1)];
  r.note = "tail truncated at n=" + std::to_string(cap);
  return r;
}

LemmaReport lemma1_bound_check(const CoefficientSequence& c, std::int64_t n, std::int64_t N0,
                               SectorParams s, double cap) {
  if (N0 < 1 || n < N0) throw InputError("lemma1_bound_check requires n >= N0 >= 1");
  LemmaReport rep;
  const double numerator = std::abs(c(2 * n));
  bool outside_sector = false;
  const std::int64_t blocks = n / N0;
  rep.ratios.reserve(static_cast<std::size_t>(blocks));
  for (std::int64_t j = 0; j < blocks; ++j) {
    double window = -std::numeric_limits<double>::infinity();
    for (std::int64_t k = n + j * N0; k < n + (j + 1) * N0; ++k) {
      const Complex z = c(k);
      outside_sector |= !s.contains(z);
      window = std::max(window, z.real());
    }
    const Complex tail = c(2 * n + 2 * j * N0);
    outside_sector |= !s.contains(tail);
    const double denom = window + tail.real();
    double ratio = 0.0;
    if (denom <= 0.0) {
      ratio = numerator > 0.0 ? kInf : 0.0;
    } else {
      ratio = numerator / denom;
    }
    rep.ratios.push_back(ratio);
    rep.max_ratio = std::max(rep.max_ratio, ratio);
    if (!(ratio <= cap) && !rep.witness) {
      rep.holds = false;
      rep.witness = j;
    }
  }
  if (outside_sector) rep.note = "some terms lie outside the given sector";
  return rep;
}

LemmaReport lemma2_check(const CoefficientSequence& c, std::span<const std::int64_t> n_grid,
                         double lambda, double cap) {
  if (!(lambda > 1)) throw InputError("lemma2_check requires lambda > 1");
  LemmaReport rep;
  for (std::int64_t n : n_grid) {
    if (n < 1) throw InputError("lemma2_check requires n >= 1");
    const std::int64_t top = scaled_index(lambda, n);
    double lhs = 0.0;
    double rhs = 0.0;
    for (std::int64_t k = n; k <= top; ++k) {
      const double lk = std::log(static_cast<double>(k));
      lhs += std::abs(delta(c, k)) * lk;
      rhs = std::max(rhs, std::abs(c(k)) * lk);
    }
    double ratio = 0.0;
    if (rhs == 0.0) {
      ratio = lhs > 0.0 ? kInf : 0.0;
    } else {
      ratio = lhs / rhs;
    }
    rep.ratios.push_back(ratio);
    rep.max_ratio = std::max(rep.max_ratio, ratio);
    if (!(ratio <= cap) && !rep.witness) {
      rep.holds = false;
      rep.witness = n;
    }
  }
  return rep;
}

double balance_entry(const CoefficientSequence& c, double lambda, std::int64_t n) {
  const std::int64_t top = scaled_index(lambda, n);
  double sum = 0.0;
  for (std::int64_t k = n; k <= top; ++k) {
    const Complex forward = c(k) - c(k + 1);
    const Complex backward = c(-k) - c(-k - 1);
    sum += std::abs(forward - backward) * std::log(static_cast<double>(k));
  }
  return sum;
}

BalanceProfile balance_profile(const CoefficientSequence& c, std::span<const double> lambda_grid,
                               std::span<const std::int64_t> n_grid, double tolerance) {
  if (lambda_grid.empty() || n_grid.empty()) throw InputError("balance_profile needs non-empty grids");
  for (double l : lambda_grid) {
    if (!(l > 1)) throw InputError("balance_profile requires lambda > 1");
  }
  for (std::int64_t n : n_grid) {
    if (n < 2) throw InputError("balance_profile requires n >= 2");
  }
  BalanceProfile p;
  p.lambdas.assign(lambda_grid.begin(), lambda_grid.end());
  p.ns.assign(n_grid.begin(), n_grid.end());
  p.tolerance = tolerance;
  for (double l : p.lambdas) {
    std::vector<double> row;
    row.reserve(p.ns.size());
    for (std::int64_t n : p.ns) row.push_back(balance_entry(c, l, n));
    p.entries.push_back(std::move(row));
  }
  const auto smallest = static_cast<std::size_t>(
      std::min_element(p.lambdas.begin(), p.lambdas.end()) - p.lambdas.begin());
  std::vector<std::size_t> order(p.ns.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return p.ns[a] < p.ns[b]; });
  double worst = 0.0;
  for (std::size_t j = order.size() / 2; j < order.size(); ++j) {
    worst = std::max(worst, p.entries[smallest][order[j]]);
  }
  p.satisfied = worst <= tolerance;
  return p;
}

std::vector<double> BalanceProfile::row_for(double lambda) const {
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (lambdas[i] == lambda) return entries[i];
  }
  throw InputError("lambda not in balance grid");
}

}  // namespace l1f::seqclass

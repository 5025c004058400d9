#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "l1fourier/errors.hpp"
#include "l1fourier/experiments.hpp"
#include "l1fourier/families.hpp"
#include "l1fourier/kernels.hpp"
#include "l1fourier/seqclass.hpp"
#include "l1fourier/series.hpp"

namespace l1f::experiments {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kIdentityTol = 1e-12;

using Rng = std::mt19937_64;

double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

std::int64_t uniform_int(Rng& rng, std::int64_t a, std::int64_t b) {
  return std::uniform_int_distribution<std::int64_t>(a, b)(rng);
}

// Decorrelates the batteries sharing one user seed.
Rng make_rng(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt)};
  return Rng(seq);
}

std::string describe(const FamilyDescriptor& d) {
  std::ostringstream os;
  os.precision(17);
  os << d.family << "(";
  for (std::size_t i = 0; i < d.params.size(); ++i) os << (i ? "," : "") << d.params[i];
  os << ")";
  return os.str();
}

void record(BatteryResult& r, bool ok, double value, const std::string& witness) {
  ++r.checked;
  r.worst = std::max(r.worst, value);
  if (!ok) {
    ++r.failures;
    r.passed = false;
    if (r.witness.empty()) r.witness = witness;
  }
}

std::string at(std::int64_t k, std::int64_t n, double x) {
  std::ostringstream os;
  os.precision(17);
  os << "k=" << k << " n=" << n << " x=" << x;
  return os.str();
}

struct KernelSample {
  std::int64_t k;
  std::int64_t n;
  double x;
};

KernelSample draw_kernel_sample(Rng& rng) {
  KernelSample s{uniform_int(rng, 1, 512), uniform_int(rng, 1, 512), 0.0};
  const double bp = 1.0 / static_cast<double>(s.n);
  do {
    s.x = uniform(rng, -kPi, kPi);
  } while (std::abs(std::abs(s.x) - bp) < 1e-9 || s.x == -kPi);
  return s;
}

// Monotone non-increasing members: power, log-power and geometric decay.
FamilyDescriptor random_monotone(Rng& rng) {
  switch (uniform_int(rng, 0, 2)) {
    case 0: return {"monotone_power", {uniform(rng, 0.25, 3.0)}, std::nullopt};
    case 1: return {"log_decay", {uniform(rng, 0.0, 2.0), uniform(rng, 0.5, 3.0)}, std::nullopt};
    default: return {"rbvs_geometric", {uniform(rng, 0.05, 0.98)}, std::nullopt};
  }
}

FamilyDescriptor random_oscillating(Rng& rng) {
  return {"quasimonotone_oscillating", {uniform(rng, 0.5, 3.0)}, std::nullopt};
}

FamilyDescriptor random_complex(Rng& rng) {
  return {"orvqm_complex",
          {uniform(rng, -1.3, 1.3), uniform(rng, 0.25, 3.0), uniform(rng, 0.2, 2.0),
           uniform(rng, -1.3, 1.3), uniform(rng, 0.0, 2.0), uniform(rng, 0.0, 1.0)},
          std::nullopt};
}

FamilyDescriptor random_gapped(Rng& rng) {
  return {"gbv_gapped", {static_cast<double>(uniform_int(rng, 2, 8))}, std::nullopt};
}

// Weight and sector under which an orvqm_complex instance is ORVQM by construction.
std::pair<RegVaryingWeight, double> complex_frame(const FamilyDescriptor& d) {
  const double theta = std::max(std::abs(d.params[0]), d.params[4] > 0 ? std::abs(d.params[3]) : 0.0);
  return {RegVaryingWeight::power(d.params[5]), std::min(theta + 1e-9, kPi / 2 - 1e-9)};
}

}  // namespace

BatteryResult identity7_battery(std::uint64_t seed, std::int64_t samples, bool flip_breakpoint) {
  BatteryResult r{"identity7", true, 0, 0, 0.0, "", "E_k(+-x) - E_{k-1}(+-x) = e^{+-ikx}"};
  Rng rng = make_rng(seed, 7);
  for (std::int64_t i = 0; i < samples; ++i) {
    const KernelSample s = draw_kernel_sample(rng);
    const kernels::KernelContext ctx(s.k, s.n);
    kernels::KernelContext prev = ctx.with_degree(s.k - 1);
    if (flip_breakpoint && i >= samples / 2) prev.swap_branches = true;
    for (double sign : {1.0, -1.0}) {
      const double x = sign * s.x;
      const Complex lhs = kernels::complex_kernel(ctx, x) - kernels::complex_kernel(prev, x);
      const double resid = std::abs(lhs - std::polar(1.0, static_cast<double>(s.k) * x));
      record(r, resid <= kIdentityTol, resid, at(s.k, s.n, x));
    }
  }
  if (flip_breakpoint) r.note += " (breakpoint convention flipped for the second half)";
  return r;
}

BatteryResult identity8_battery(std::uint64_t seed, std::int64_t samples) {
  BatteryResult r{"identity8", true, 0, 0, 0.0, "", "E_k(x) + E_k(-x) = 2 D_k(x)"};
  Rng rng = make_rng(seed, 8);
  for (std::int64_t i = 0; i < samples; ++i) {
    const KernelSample s = draw_kernel_sample(rng);
    const kernels::KernelContext ctx(s.k, s.n);
    const Complex lhs = kernels::complex_kernel(ctx, s.x) + kernels::complex_kernel(ctx, -s.x);
    const double resid = std::abs(lhs - 2.0 * kernels::dirichlet(ctx, s.x));
    record(r, resid <= kIdentityTol, resid, at(s.k, s.n, s.x));
  }
  return r;
}

BatteryResult parity_battery(std::uint64_t seed, std::int64_t samples) {
  BatteryResult r{"parity", true, 0, 0, 0.0, "", "D_k even, D_k* odd"};
  Rng rng = make_rng(seed, 9);
  for (std::int64_t i = 0; i < samples; ++i) {
    const KernelSample s = draw_kernel_sample(rng);
    const kernels::KernelContext ctx(s.k, s.n);
    const double even = std::abs(kernels::dirichlet(ctx, s.x) - kernels::dirichlet(ctx, -s.x));
    const double odd = std::abs(kernels::dirichlet_mod(ctx, s.x) + kernels::dirichlet_mod(ctx, -s.x));
    const double resid = std::max(even, odd);
    record(r, resid <= kIdentityTol, resid, at(s.k, s.n, s.x));
  }
  return r;
}

BatteryResult abel_battery(std::uint64_t seed, std::int64_t tables, std::int64_t points) {
  BatteryResult r{"abel", true, 0, 0, 0.0, "", "tau - S_n against its kernel expansion, scaled residual"};
  Rng rng = make_rng(seed, 10);
  for (std::int64_t t = 0; t < tables; ++t) {
    const std::int64_t len = uniform_int(rng, 8, 96);
    std::vector<Complex> pos(static_cast<std::size_t>(len) + 1), neg(static_cast<std::size_t>(len));
    for (auto& v : pos) v = {uniform(rng, -1, 1), uniform(rng, -1, 1)};
    for (auto& v : neg) v = {uniform(rng, -1, 1), uniform(rng, -1, 1)};
    const auto c = CoefficientSequence::table(pos, neg, Symmetry::None);
    const std::int64_t n = uniform_int(rng, 1, len);
    double lambda = uniform(rng, 1.05, 3.0);
    if (seqclass::scaled_index(lambda, n) <= n) lambda = static_cast<double>(n + 1) / n + 1e-9;
    const kernels::KernelContext ctx(0, n, std::min(1e-6, 0.5 / static_cast<double>(n)));
    for (std::int64_t i = 0; i < points; ++i) {
      double x = uniform(rng, -kPi, kPi);
      if (x == -kPi) x = kPi;
      const Complex tau = series::delayed_mean(c, n, lambda, x);
      const Complex sn = series::partial_sum(c, n, x);
      const Complex rhs = series::abel_rhs(c, n, lambda, x, ctx);
      const double scaled = std::abs(rhs - (tau - sn)) / (1.0 + std::abs(tau) + std::abs(sn));
      record(r, scaled <= 1e-10, scaled, "table " + std::to_string(t) + " " + at(0, n, x));
    }
  }
  return r;
}

BatteryResult telescoping_battery(std::uint64_t seed, std::int64_t instances, std::int64_t horizon) {
  BatteryResult r{"telescoping", true, 0, 0, 0.0, "", "sum of differences over [m, M] = c_m - c_{M+1}"};
  Rng rng = make_rng(seed, 11);
  for (std::int64_t i = 0; i < instances; ++i) {
    FamilyDescriptor d;
    switch (uniform_int(rng, 0, 3)) {
      case 0: d = random_monotone(rng); break;
      case 1: d = random_oscillating(rng); break;
      case 2: d = random_complex(rng); break;
      default: d = random_gapped(rng); break;
    }
    const auto c = make_family(d);
    const std::int64_t m = uniform_int(rng, 1, horizon);
    const std::int64_t M = uniform_int(rng, m, horizon);
    Complex sum{};
    double scale = 0.0;
    for (std::int64_t k = m; k <= M; ++k) {
      sum += delta(c, k);
      scale = std::max(scale, std::abs(c(k)));
    }
    const Complex exact = c(m) - c(M + 1);
    scale = std::max({scale, std::abs(c(M + 1)), 1e-300});
    const double rel = std::abs(sum - exact) / scale;
    record(r, rel <= 1e-12, rel, describe(d) + " m=" + std::to_string(m) + " M=" + std::to_string(M));
  }
  return r;
}

BatteryResult hierarchy_battery(std::uint64_t seed, std::int64_t instances, std::int64_t horizon) {
  BatteryResult r{"hierarchy", true, 0, 0, 0.0, "", ""};
  Rng rng = make_rng(seed, 12);
  const seqclass::SectorParams real_axis(0.0);
  std::int64_t excluded = 0;
  std::int64_t gapped = 0;
  auto chain_gbv = [&](const CoefficientSequence& c, const std::string& who) {
    const auto g = seqclass::check_gbv(c, horizon, 1);
    record(r, g.holds() && g.fitted_N0 == 1, g.fitted_M, who + ": ORVQM but not GBV(N0=1)");
  };
  for (std::int64_t i = 0; i < instances; ++i) {
    // monotone => QM(0) => ORVQM(1, 0) => GBV(1)
    const auto dm = random_monotone(rng);
    const auto cm = make_family(dm);
    const auto mono = seqclass::check_monotone(cm, horizon);
    const auto qm0 = seqclass::check_quasimonotone(cm, 0.0, horizon);
    record(r, mono.holds() && qm0.holds(), qm0.fitted_M, describe(dm) + ": monotone but not QM(0)");
    if (qm0.holds()) {
      const auto o = seqclass::check_orvqm(cm, RegVaryingWeight::constant(), real_axis, horizon);
      record(r, o.holds(), 0.0, describe(dm) + ": QM(0) but not ORVQM(R=1)");
      if (o.holds()) chain_gbv(cm, describe(dm));
    }

    // QM(2) => ORVQM(n^2, 0) => GBV(1)
    const auto dq = random_oscillating(rng);
    const auto cq = make_family(dq);
    const auto qm2 = seqclass::check_quasimonotone(cq, 2.0, horizon);
    record(r, qm2.holds(), qm2.fitted_M, describe(dq) + ": not QM(2)");
    if (qm2.holds()) {
      const auto o = seqclass::check_orvqm(cq, RegVaryingWeight::power(2.0), real_axis, horizon);
      record(r, o.holds(), 0.0, describe(dq) + ": QM(2) but not ORVQM(R=n^2)");
      if (o.holds()) chain_gbv(cq, describe(dq));
    }

    // complex ORVQM => GBV(1)
    const auto dc = random_complex(rng);
    const auto cc = make_family(dc);
    const auto [weight, theta] = complex_frame(dc);
    const auto o = seqclass::check_orvqm(cc, weight, seqclass::SectorParams(theta), horizon);
    record(r, o.holds(), 0.0, describe(dc) + ": not ORVQM in its construction frame");
    if (o.holds()) chain_gbv(cc, describe(dc));

    // gapped sequences must be filtered out before the chain applies
    const auto dg = random_gapped(rng);
    const auto cg = make_family(dg);
    ++gapped;
    if (!seqclass::check_orvqm(cg, RegVaryingWeight::constant(), real_axis, horizon).holds()) {
      ++excluded;
    }
  }
  record(r, excluded == gapped, 0.0, "a gapped sequence passed the ORVQM filter");
  r.note = "monotone, QM(2) and complex ORVQM chains; " + std::to_string(excluded) + "/" +
           std::to_string(gapped) + " gapped instances excluded";
  return r;
}

BatteryResult sector_constant_battery(std::uint64_t seed, std::int64_t instances,
                                      std::int64_t horizon) {
  BatteryResult r{"sector_constant", true, 0, 0, 0.0, "", "|c_n| <= M Re c_n with finite M on ORVQM instances"};
  Rng rng = make_rng(seed, 13);
  for (std::int64_t i = 0; i < instances; ++i) {
    const auto d = random_complex(rng);
    const auto c = make_family(d);
    const auto [weight, theta] = complex_frame(d);
    const seqclass::SectorParams s(theta);
    if (!seqclass::check_orvqm(c, weight, s, horizon).holds()) continue;
    const auto sec = seqclass::check_sector(c, s, horizon);
    bool ok = sec.holds() && std::isfinite(sec.fitted_M);
    std::int64_t bad = 0;
    for (std::int64_t n = 1; ok && n <= horizon; ++n) {
      const Complex z = c(n);
      if (std::abs(z) > sec.fitted_M * z.real() * (1 + 1e-12)) {
        ok = false;
        bad = n;
      }
    }
    record(r, ok, sec.fitted_M, describe(d) + " n=" + std::to_string(bad));
  }
  return r;
}

BatteryResult strictness_battery(std::int64_t horizon) {
  BatteryResult r{"strictness", true, 0, 0, 0.0, "", "gbv_gapped(2): GBV with N0=2, never ORVQM"};
  const auto c = make_family({"gbv_gapped", {2.0}, std::nullopt});
  const auto g1 = seqclass::check_gbv(c, horizon, 1);
  const auto g2 = seqclass::check_gbv(c, horizon, 2);
  record(r, !g1.holds(), 0.0, "GBV holds already with N0=1");
  record(r, g2.holds() && g2.fitted_N0 == 2, g2.fitted_M, "GBV fails with N0=2");
  const std::vector<RegVaryingWeight> weights = {
      RegVaryingWeight::constant(), RegVaryingWeight::power(0.5), RegVaryingWeight::power(1.0),
      RegVaryingWeight::power(2.0), RegVaryingWeight::log(2.0)};
  for (const auto& w : weights) {
    const auto o = seqclass::check_orvqm(c, w, seqclass::SectorParams(0.0), horizon);
    record(r, !o.holds(), 0.0, "ORVQM holds for R = " + w.name());
  }
  return r;
}

BatteryResult conjugation_battery(std::uint64_t seed, std::int64_t instances, std::int64_t horizon) {
  BatteryResult r{"conjugation", true, 0, 0, 0.0, "", "GBV verdict invariant under conjugation"};
  Rng rng = make_rng(seed, 14);
  for (std::int64_t i = 0; i < instances; ++i) {
    const auto d = i % 2 == 0 ? random_complex(rng) : random_gapped(rng);
    const auto c = make_family(d);
    const auto a = seqclass::check_gbv(c, horizon);
    const auto b = seqclass::check_gbv(conjugated(c), horizon);
    const bool same = a.verdict == b.verdict && a.fitted_N0 == b.fitted_N0 &&
                      (a.fitted_M == b.fitted_M || std::abs(a.fitted_M - b.fitted_M) <= 1e-12 * a.fitted_M);
    record(r, same, std::abs(a.fitted_M - b.fitted_M), describe(d));
  }
  return r;
}

BatteryResult lemma1_battery(std::uint64_t seed, std::int64_t instances, std::int64_t horizon) {
  BatteryResult r{"lemma1", true, 0, 0, 0.0, "", "windowed bound on |c_2n| over GBV instances"};
  Rng rng = make_rng(seed, 15);
  for (std::int64_t i = 0; i < instances; ++i) {
    FamilyDescriptor d;
    switch (i % 3) {
      case 0: d = random_monotone(rng); break;
      case 1: d = random_complex(rng); break;
      default: d = random_gapped(rng); break;
    }
    const auto c = make_family(d);
    const auto g = seqclass::check_gbv(c, horizon);
    if (!g.holds()) continue;
    const double theta = std::min(g.parameter.value_or(0.0) + 1e-9, kPi / 2 - 1e-9);
    for (std::int64_t n : {std::int64_t{4} * g.fitted_N0, std::int64_t{64}, horizon / 4}) {
      if (n < g.fitted_N0 || 4 * n > horizon * 2) continue;
      const auto rep = seqclass::lemma1_bound_check(c, n, g.fitted_N0, seqclass::SectorParams(theta));
      record(r, rep.holds, rep.max_ratio, describe(d) + " n=" + std::to_string(n));
    }
  }
  return r;
}

BatteryResult lemma2_battery(std::uint64_t seed, std::int64_t instances, std::int64_t horizon) {
  BatteryResult r{"lemma2", true, 0, 0, 0.0, "", "log-weighted variation over [n, lambda n]"};
  Rng rng = make_rng(seed, 16);
  std::vector<std::int64_t> ns;
  for (std::int64_t n = 16; 2 * n <= horizon; n *= 4) ns.push_back(n);
  for (std::int64_t i = 0; i < instances; ++i) {
    FamilyDescriptor d;
    switch (i % 3) {
      case 0: d = random_monotone(rng); break;
      case 1: d = random_complex(rng); break;
      default: d = random_gapped(rng); break;
    }
    const auto c = make_family(d);
    if (!seqclass::check_gbv(c, horizon).holds()) continue;
    for (double lambda : {1.5, 2.0}) {
      const auto rep = seqclass::lemma2_check(c, ns, lambda);
      record(r, rep.holds, rep.max_ratio, describe(d) + " lambda=" + std::to_string(lambda));
    }
  }
  return r;
}

BatteryResult balance_battery() {
  BatteryResult r{"balance", true, 0, 0, 0.0, "", "zero for conjugate-symmetric input, decreasing one-sided profile"};
  const std::vector<std::int64_t> ns = {4, 8, 16, 32, 64, 128, 256};
  const auto& lambdas = seqclass::default_balance_lambdas();
  const std::vector<FamilyDescriptor> symmetric = {
      {"monotone_power", {1.0}, std::nullopt}, {"log_decay", {0.0, 1.0}, std::nullopt},
      {"rbvs_geometric", {0.5}, std::nullopt}, {"orvqm_complex", {0.5, 1.0}, std::nullopt},
      {"lacunary_alpha", {1.5, 3.0}, Symmetry::Conjugate}};
  for (const auto& d : symmetric) {
    const auto c = make_family(d);
    if (c.symmetry() == Symmetry::Conjugate) {
      // conjugate pairs balance only when the coefficients are real
      bool real = true;
      for (std::int64_t k = 0; k <= 600; ++k) real = real && c(k).imag() == 0.0;
      if (!real) continue;
    }
    const auto p = seqclass::balance_profile(c, lambdas, ns);
    double worst = 0.0;
    for (const auto& row : p.entries) for (double v : row) worst = std::max(worst, std::abs(v));
    record(r, worst == 0.0, worst, describe(d));
  }
  const auto one_sided = make_family({"monotone_power", {2.0}, Symmetry::None});
  const auto p = seqclass::balance_profile(one_sided, lambdas, ns);
  for (std::size_t i = 0; i < p.lambdas.size(); ++i) {
    for (std::size_t j = 1; j < p.ns.size(); ++j) {
      const bool ok = p.entries[i][j] < p.entries[i][j - 1];
      record(r, ok, p.entries[i][j], "one-sided 1/k^2 lambda=" + std::to_string(p.lambdas[i]) +
                                         " n=" + std::to_string(p.ns[j]));
    }
  }
  return r;
}

BatteryResult lacunary_battery() {
  BatteryResult r{"lacunary", true, 0, 0, 0.0, "", "b_n log n at n = 2^{k^2} equals k^{2-alpha} log 2 and grows"};
  const double alpha = 1.5;
  const auto c = make_family({"lacunary_alpha", {alpha, 4.0}, std::nullopt});
  double previous = 0.0;
  for (int k = 1; k <= 4; ++k) {
    const std::int64_t n = std::int64_t{1} << (k * k);
    const double b = 2.0 * std::abs(c(n));
    const double value = b * std::log(static_cast<double>(n));
    const double expected = std::pow(k, -alpha) * k * k * std::log(2.0);
    const double err = std::abs(value - expected) / expected;
    record(r, err <= 1e-12 && value > previous, err, "k=" + std::to_string(k));
    previous = value;
  }
  return r;
}

BatteryResult lemma3_battery(const Lemma3Report& rep) {
  BatteryResult r{"lemma3", true, 0, 0, 0.0, "", ""};
  record(r, rep.bounds_ok, rep.max_phi, rep.witness.value_or(""));
  std::ostringstream os;
  os.precision(10);
  os << "max|phi|=" << rep.max_phi << " max|sine|=" << rep.max_sine << " sup sine=" << rep.sup_sine
     << " (n=" << rep.sup_sine_n << ") Si(pi)=" << rep.gibbs << " extrapolated=" << rep.extrapolated;
  r.note = os.str();
  return r;
}

BatteryResult lebesgue_battery(const LebesgueReport& rep) {
  BatteryResult r{"lebesgue", true, 0, 0, 0.0, "", ""};
  for (const auto& row : rep.rows) {
    record(r, row.dirichlet >= row.lower_bound, row.refine_dirichlet,
           "||D_n|| below log(n)/pi at n=" + std::to_string(row.n));
  }
  record(r, rep.fit_ok, rep.dirichlet_fit.max_residual_of_range, "log fit residual above tolerance");
  record(r, rep.refine_ok, 0.0, "node doubling changed a norm by more than the tolerance");
  record(r, rep.spread_ok, rep.ratio_spread, "||D_n||/log n ratio spread above 1.2");
  std::ostringstream os;
  os.precision(10);
  os << "D fit a=" << rep.dirichlet_fit.a << " b=" << rep.dirichlet_fit.b
     << " resid=" << rep.dirichlet_fit.max_residual_of_range << "; E fit a=" << rep.complex_fit.a
     << " b=" << rep.complex_fit.b << " resid=" << rep.complex_fit.max_residual_of_range;
  r.note = os.str();
  return r;
}

BatteryResult consistency_battery(std::span<const ConvergenceReport> reports) {
  BatteryResult r{"theorem1_consistency", true, 0, 0, 0.0, "", "gap trends agree with coef_log under the hypotheses"};
  for (const auto& rep : reports) {
    record(r, rep.theorem_consistent, 0.0, rep.family ? describe(*rep.family) : "unnamed");
  }
  return r;
}

const std::vector<FamilyDescriptor>& consistency_families() {
  static const std::vector<FamilyDescriptor> families = {
      {"log_decay", {1.0, 2.0}, std::nullopt},
      {"log_decay", {0.0, 1.0}, std::nullopt},
      {"monotone_power", {2.0}, std::nullopt},
      {"monotone_power", {0.5}, std::nullopt},
      {"monotone_power", {2.0}, Symmetry::None},
      {"quasimonotone_oscillating", {2.0}, std::nullopt},
      {"orvqm_complex", {0.5, 1.5}, std::nullopt},
      {"rbvs_geometric", {0.5}, std::nullopt},
      {"gbv_gapped", {2.0}, std::nullopt},
      {"lacunary_alpha", {1.5, 3.0}, std::nullopt},
  };
  return families;
}

bool SuiteReport::passed() const {
  return std::all_of(batteries.begin(), batteries.end(), [](const BatteryResult& b) { return b.passed; });
}

SuiteReport lemma_suite(const SuiteOptions& o) {
  if (o.instances < 1) throw InputError("lemma_suite: instances must be >= 1");
  if (o.horizon < 64) throw InputError("lemma_suite: horizon must be >= 64");
  SuiteReport rep;
  rep.options = o;
  auto& b = rep.batteries;
  b.push_back(telescoping_battery(o.seed, o.instances, o.horizon));
  b.push_back(hierarchy_battery(o.seed, o.instances, o.horizon));
  b.push_back(sector_constant_battery(o.seed, o.instances, o.horizon));
  b.push_back(strictness_battery(o.horizon));
  b.push_back(conjugation_battery(o.seed, o.instances, o.horizon));
  b.push_back(lemma1_battery(o.seed, o.instances, o.horizon));
  b.push_back(lemma2_battery(o.seed, o.instances, o.horizon));
  b.push_back(balance_battery());
  b.push_back(lacunary_battery());
  b.push_back(identity7_battery(o.seed, o.identity_samples, o.flip_breakpoint));
  b.push_back(identity8_battery(o.seed, o.identity_samples));
  b.push_back(parity_battery(o.seed, o.identity_samples));
  b.push_back(abel_battery(o.seed, o.abel_tables, o.abel_points));

  rep.lemma3 = lemma3_sweep(o.lemma3_ns, o.lemma3_points, o.threads);
  b.push_back(lemma3_battery(rep.lemma3));
  const auto grids = default_grid_factory(o.tolerance);
  rep.lebesgue = lebesgue_growth(o.lebesgue_ns, grids, o.threads);
  b.push_back(lebesgue_battery(rep.lebesgue));

  StudyOptions study;
  study.threads = o.threads;
  study.horizon = o.horizon;
  for (const auto& d : consistency_families()) {
    rep.consistency.push_back(convergence_study(make_family(d), o.consistency_ns, grids, study));
  }
  b.push_back(consistency_battery(rep.consistency));
  return rep;
}

}  // namespace l1f::experiments

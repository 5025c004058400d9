#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include <l1fourier/errors.hpp>
#include <l1fourier/experiments.hpp>
#include <l1fourier/families.hpp>
#include <l1fourier/kernels.hpp>

using namespace l1f;
using namespace l1f::experiments;
using Catch::Approx;

namespace {

const Thresholds kDefault{};

Trend trend(std::vector<double> v) { return column_trend(v, kDefault); }

bool same_rows(const ConvergenceReport& a, const ConvergenceReport& b) {
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const auto& x = a.rows[i];
    const auto& y = b.rows[i];
    if (x.n != y.n || x.gap_Sn != y.gap_Sn || x.cauchy != y.cauchy || x.coef_log != y.coef_log ||
        x.balance != y.balance || x.tau_gap != y.tau_gap) {
      return false;
    }
  }
  return a.verdict == b.verdict;
}

}  // namespace

TEST_CASE("column trends") {
  CHECK(trend({1.0, 0.5, 0.1, 0.04, 0.01}) == Trend::Decays);
  CHECK(trend({0.0, 0.0, 0.0}) == Trend::Decays);
  CHECK(trend({1.0, 0.9, 1.1, 1.0}) == Trend::Persists);
  CHECK(trend({1.0, 0.5, 0.3}) == Trend::Unclear);
  // below the fraction but rising at the end
  CHECK(trend({1.0, 0.001, 0.002, 0.04}) == Trend::Unclear);
  // slowly shrinking columns neither decay nor persist
  CHECK(trend({1.0, 0.8, 0.6, 0.45, 0.35}) == Trend::Unclear);
  CHECK(to_string(Trend::Decays) == "decays");
  CHECK(to_string(ConvergenceVerdict::ConsistentWithDivergence) == "ConsistentWithDivergence");
}

TEST_CASE("trigonometric polynomial gives zero gaps") {
  const auto c = make_family({"table", {0.0, 1.0, 0.5, 0.25, 0.125}, std::nullopt});
  const std::vector<std::int64_t> ns = {8, 16, 32};
  const auto r = convergence_study(c, ns, default_grid_factory());
  REQUIRE(r.rows.size() == 3);
  for (const auto& row : r.rows) {
    CHECK(row.gap_Sn == 0.0);
    CHECK(row.cauchy == 0.0);
    CHECK(row.tau_gap == 0.0);
    CHECK(row.coef_log == 0.0);
    CHECK(row.reference_degree == 4 * row.n);
  }
  CHECK(r.gap_trend == Trend::Decays);
  CHECK(r.verdict == ConvergenceVerdict::ConsistentWithConvergence);
  CHECK(r.theorem_consistent);
}

TEST_CASE("hypotheses for standard families") {
  const std::vector<std::int64_t> ns = {16, 32};
  StudyOptions o;
  o.horizon = 512;
  const auto mono = convergence_study(make_family({"monotone_power", {2.0}, std::nullopt}), ns,
                                      default_grid_factory(), o);
  CHECK(mono.hypotheses.gbv_positive);
  CHECK(mono.hypotheses.gbv_negative);
  CHECK(mono.hypotheses.sector);
  CHECK(mono.hypotheses.met());
  CHECK(mono.hypotheses.n0_positive == 1);

  const auto one = convergence_study(make_family({"monotone_power", {2.0}, Symmetry::None}), ns,
                                     default_grid_factory(), o);
  CHECK(one.hypotheses.gbv_positive);
  for (const auto& row : one.rows) CHECK(row.balance > 0.0);
}

TEST_CASE("coefficient column uses both sides") {
  const auto c = make_family({"log_decay", {0.0, 1.0}, std::nullopt});
  const std::vector<std::int64_t> ns = {32, 64};
  const auto r = convergence_study(c, ns, default_grid_factory());
  for (const auto& row : r.rows) {
    CHECK(row.coef_log == Approx(std::log(row.n) / std::log(row.n + 2.0)).epsilon(1e-14));
  }
}

TEST_CASE("convergence study is independent of thread count") {
  const auto c = make_family({"orvqm_complex", {0.5, 1.5, 1.0, 0.0, 0.0, 0.0}, std::nullopt});
  const std::vector<std::int64_t> ns = {16, 32, 64, 128};
  StudyOptions serial;
  serial.horizon = 512;
  StudyOptions parallel = serial;
  parallel.threads = 4;
  const auto a = convergence_study(c, ns, default_grid_factory(), serial);
  const auto b = convergence_study(c, ns, default_grid_factory(), parallel);
  CHECK(same_rows(a, b));
}

TEST_CASE("psi rules") {
  const auto p = PsiRule::parse("power:1,1");
  CHECK(p.kind == PsiRule::Kind::Power);
  CHECK(p(3) == Approx(std::log(5.0) / 4.0));
  CHECK(PsiRule::parse(p.to_string()) == p);
  CHECK(PsiRule::parse("power:2").s == 0.0);
  const auto g = PsiRule::parse("geometric:0.5");
  CHECK(g(4) == 0.0625);
  CHECK(PsiRule::parse(g.to_string()) == g);
  CHECK_THROWS_AS(PsiRule::parse("cubic:1"), InputError);
  CHECK_THROWS_AS(PsiRule::parse("power:x"), InputError);
  CHECK_THROWS_AS(PsiRule::parse("geometric:1.5"), InputError);
}

TEST_CASE("doubling condition") {
  CHECK(check_doubling(PsiRule::parse("power:0,0"), 1024).ok);
  const auto p = check_doubling(PsiRule::parse("power:2,0"), 1024);
  CHECK(p.ok);
  CHECK(p.max_ratio <= 4.0);
  CHECK(check_doubling(PsiRule::parse("power:1,1"), 1024).ok);
  const auto g = check_doubling(PsiRule::parse("geometric:0.5"), 1024);
  CHECK_FALSE(g.ok);
  REQUIRE(g.witness);
  // growing rules are not rates
  CHECK_FALSE(check_doubling(PsiRule::parse("power:0,1"), 1024).ok);
}

TEST_CASE("rate study examples") {
  const std::vector<std::int64_t> ns = {16, 32, 64, 128};
  const auto conv = make_family({"monotone_power", {2.0}, std::nullopt});
  const auto flat = rate_study(conv, PsiRule::parse("power:0,0"), ns, default_grid_factory());
  CHECK(flat.doubling.ok);
  CHECK(flat.bounded());
  REQUIRE(flat.rows.size() == ns.size());
  for (const auto& row : flat.rows) {
    CHECK(row.best_upper >= row.best_lower);
    CHECK(row.gap_Sn >= row.best_lower);
  }
  const auto psi = PsiRule::parse("power:1,1");
  const auto rate = rate_study(conv, psi, ns, default_grid_factory());
  CHECK(rate.bounded_coef);
  for (const auto& row : rate.rows) {
    CHECK(row.coef_ratio == Approx(std::log(double(row.n)) / (double(row.n) * row.n) / psi(row.n)));
  }
  CHECK(rate.bounded());
  const auto geo = make_family({"rbvs_geometric", {0.5}, std::nullopt});
  CHECK(rate_study(geo, PsiRule::parse("power:2,0"), ns, default_grid_factory()).bounded());
  CHECK_THROWS_AS(rate_study(geo, PsiRule::parse("geometric:0.7"), ns, default_grid_factory()),
                  InputError);
}

TEST_CASE("rate study flags an unbounded ratio") {
  const std::vector<std::int64_t> ns = {16, 32, 64, 128, 256};
  const auto slow = make_family({"monotone_power", {1.0}, std::nullopt});
  const auto r = rate_study(slow, PsiRule::parse("power:2,0"), ns, default_grid_factory());
  CHECK_FALSE(r.bounded_coef);
  CHECK_FALSE(r.bounded());
}

TEST_CASE("log fit recovers exact data") {
  const std::vector<std::int64_t> ns = {16, 64, 256, 1024};
  std::vector<double> v;
  for (auto n : ns) v.push_back(1.5 + 0.4 * std::log(n));
  const auto f = fit_log(ns, v);
  CHECK(f.a == Approx(1.5).epsilon(1e-12));
  CHECK(f.b == Approx(0.4).epsilon(1e-12));
  CHECK(f.max_residual_of_range <= 1e-12);
}

TEST_CASE("lebesgue growth on a short grid") {
  const std::vector<std::int64_t> ns = {16, 64, 256, 1024};
  const auto r = lebesgue_growth(ns, default_grid_factory(1e-10));
  REQUIRE(r.rows.size() == ns.size());
  CHECK(r.lower_bound_ok);
  CHECK(r.refine_ok);
  CHECK(r.dirichlet_fit.b == Approx(4 / std::numbers::pi).epsilon(0.05));
  for (const auto& row : r.rows) CHECK(row.dirichlet >= row.lower_bound);
  const std::vector<std::int64_t> bad = {1};
  CHECK_THROWS_AS(lebesgue_growth(bad, default_grid_factory()), InputError);
}

TEST_CASE("lemma 3 sweep on small n") {
  const std::vector<std::int64_t> ns = {1, 2, 4, 8};
  const auto r = lemma3_sweep(ns, 4000);
  CHECK(r.bounds_ok);
  CHECK(r.max_phi < kernels::kPhiBound);
  CHECK(r.max_sine <= r.sup_sine + 1e-15);
  CHECK(r.gibbs == Approx(sine_integral_pi()));
}

TEST_CASE("identity batteries and fault injection") {
  const auto ok = identity7_battery(3, 200, false);
  CHECK(ok.passed);
  CHECK(ok.worst <= 1e-12);
  const auto bad = identity7_battery(3, 200, true);
  CHECK_FALSE(bad.passed);
  CHECK(bad.failures > 0);
  CHECK_FALSE(bad.witness.empty());
  CHECK(identity8_battery(3, 200).passed);
  CHECK(parity_battery(3, 200).passed);
}

TEST_CASE("class batteries on reduced sizes") {
  CHECK(hierarchy_battery(2, 8, 256).passed);
  CHECK(sector_constant_battery(2, 8, 256).passed);
  CHECK(strictness_battery(512).passed);
  CHECK(telescoping_battery(2, 8, 256).passed);
  CHECK(lemma1_battery(2, 8, 256).passed);
  CHECK(lemma2_battery(2, 8, 256).passed);
  CHECK(conjugation_battery(2, 8, 256).passed);
  CHECK(balance_battery().passed);
  CHECK(lacunary_battery().passed);
  CHECK(abel_battery(2, 3, 20).passed);
}

TEST_CASE("batteries are seed-deterministic") {
  const auto a = hierarchy_battery(9, 6, 128);
  const auto b = hierarchy_battery(9, 6, 128);
  CHECK(a.checked == b.checked);
  CHECK(a.worst == b.worst);
  CHECK(a.witness == b.witness);
}

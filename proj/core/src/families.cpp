#include "l1fourier/families.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "l1fourier/errors.hpp"

namespace l1f {
namespace {

double param_or(const std::vector<double>& p, std::size_t i, double fallback) {
  return i < p.size() ? p[i] : fallback;
}

void require(bool ok, const std::string& family, const std::string& what) {
  if (!ok) throw InputError(family + ": " + what);
}

void require_count(const FamilyDescriptor& d, std::size_t lo, std::size_t hi) {
  require(d.params.size() >= lo && d.params.size() <= hi, d.family,
          "expected " + std::to_string(lo) + ".." + std::to_string(hi) + " parameters, got " +
              std::to_string(d.params.size()));
}

bool is_integer(double v) { return std::isfinite(v) && v == std::floor(v); }

CoefficientSequence finish(CoefficientSequence c, const FamilyDescriptor& d) {
  c.set_descriptor(d);
  return c;
}

Symmetry pick(const FamilyDescriptor& d, Symmetry fallback) { return d.symmetry.value_or(fallback); }

// With an explicit one-sided override the generator's positive side is kept
// and the negative side is zero.
CoefficientSequence::Rule sided(CoefficientSequence::Rule positive, Symmetry s) {
  if (s != Symmetry::None) return positive;
  return [positive = std::move(positive)](std::int64_t k) {
    return k >= 0 ? positive(k) : Complex{};
  };
}

CoefficientSequence monotone_power(const FamilyDescriptor& d) {
  require_count(d, 1, 1);
  const double p = d.params[0];
  require(p > 0 && std::isfinite(p), d.family, "exponent p must be > 0");
  const Symmetry s = pick(d, Symmetry::EvenReal);
  CoefficientSequence c(sided([p](std::int64_t k) -> Complex {
                          return k == 0 ? 0.0 : std::pow(static_cast<double>(k), -p);
                        }, s),
                        s);
  if (p > 1) {
    const double sides = s == Symmetry::None ? 1.0 : 2.0;
    c.set_tail_bound([p, sides](std::int64_t n) {
      return sides * std::pow(static_cast<double>(std::max<std::int64_t>(n, 1)), 1 - p) / (p - 1);
    });
  }
  return finish(std::move(c), d);
}

CoefficientSequence log_decay(const FamilyDescriptor& d) {
  require_count(d, 0, 2);
  const double p = param_or(d.params, 0, 0.0);
  const double q = param_or(d.params, 1, 1.0);
  require(p >= 0 && std::isfinite(p), d.family, "power p must be >= 0");
  require(q > 0 && std::isfinite(q), d.family, "log exponent q must be > 0");
  const Symmetry s = pick(d, Symmetry::EvenReal);
  CoefficientSequence c(sided([p, q](std::int64_t k) -> Complex {
                          const double kk = static_cast<double>(k);
                          if (k == 0) return p == 0 ? std::pow(std::log(2.0), -q) : 0.0;
                          return 1.0 / (std::pow(kk, p) * std::pow(std::log(kk + 2.0), q));
                        }, s),
                        s);
  return finish(std::move(c), d);
}

CoefficientSequence quasimonotone_oscillating(const FamilyDescriptor& d) {
  require_count(d, 1, 1);
  const double p = d.params[0];
  require(p >= 0 && std::isfinite(p), d.family, "exponent p must be >= 0");
  const Symmetry s = pick(d, Symmetry::EvenReal);
  CoefficientSequence c(sided([p](std::int64_t k) -> Complex {
                          if (k == 0) return 0.0;
                          const double kk = static_cast<double>(k);
                          const double sign = (k % 2 == 0) ? 1.0 : -1.0;
                          return std::pow(kk, -p) * (2.0 + sign / kk);
                        }, s),
                        s);
  return finish(std::move(c), d);
}

CoefficientSequence orvqm_complex(const FamilyDescriptor& d) {
  require_count(d, 2, 6);
  const double phi1 = d.params[0];
  const double p = d.params[1];
  const double w1 = param_or(d.params, 2, 1.0);
  const double phi2 = param_or(d.params, 3, 0.0);
  const double w2 = param_or(d.params, 4, 0.0);
  const double r = param_or(d.params, 5, 0.0);
  const double half_pi = std::numbers::pi / 2;
  require(std::abs(phi1) < half_pi && std::abs(phi2) < half_pi, d.family,
          "phases must satisfy |phi| < pi/2");
  require(p >= 0 && w1 >= 0 && w2 >= 0 && r >= 0, d.family, "p, weights and r must be >= 0");
  require(w1 + w2 > 0, d.family, "at least one weight must be positive");
  const Symmetry s = pick(d, Symmetry::Conjugate);
  const Complex u1 = std::polar(w1, phi1);
  const Complex u2 = std::polar(w2, phi2);
  CoefficientSequence c(sided([=](std::int64_t k) -> Complex {
                          if (k == 0) return 0.0;
                          const double n = static_cast<double>(k);
                          return std::pow(n, r) * (u1 * std::pow(n, -p) + u2 * std::exp2(-n));
                        }, s),
                        s);
  return finish(std::move(c), d);
}

CoefficientSequence rbvs_geometric(const FamilyDescriptor& d) {
  require_count(d, 1, 1);
  const double r = d.params[0];
  require(r > 0 && r < 1, d.family, "ratio r must lie in (0, 1)");
  const Symmetry s = pick(d, Symmetry::EvenReal);
  CoefficientSequence c(sided([r](std::int64_t k) -> Complex {
                          return std::pow(r, static_cast<double>(k));
                        }, s),
                        s);
  const double sides = s == Symmetry::None ? 1.0 : 2.0;
  c.set_tail_bound([r, sides](std::int64_t n) {
    return sides * std::pow(r, static_cast<double>(n + 1)) / (1 - r);
  });
  return finish(std::move(c), d);
}

CoefficientSequence gbv_gapped(const FamilyDescriptor& d) {
  require_count(d, 1, 1);
  const double nd = d.params[0];
  require(is_integer(nd) && nd >= 2 && nd <= 64, d.family, "window N must be an integer in [2, 64]");
  const auto window = static_cast<std::int64_t>(nd);
  const Symmetry s = pick(d, Symmetry::EvenReal);
  CoefficientSequence c(sided([window](std::int64_t k) -> Complex {
                          if (k <= 0) return 0.0;
                          // zero run [2^j, 2^j + N - 2] for the largest 2^j <= k
                          std::int64_t block = 1;
                          while (block <= k / 2) block *= 2;
                          if (block >= 2 * window && k - block <= window - 2) return 0.0;
                          return 1.0 / static_cast<double>(k);
                        }, s),
                        s);
  return finish(std::move(c), d);
}

CoefficientSequence lacunary_alpha(const FamilyDescriptor& d) {
  require_count(d, 2, 2);
  const double alpha = d.params[0];
  const double kmax_d = d.params[1];
  require(alpha > 1 && alpha < 2, d.family, "alpha must lie in (1, 2)");
  require(is_integer(kmax_d) && kmax_d >= 1 && kmax_d <= kMaxLacunaryLevel, d.family,
          "K_max must be an integer in [1, " + std::to_string(kMaxLacunaryLevel) + "]");
  const auto kmax = static_cast<int>(kmax_d);
  std::vector<std::int64_t> support;
  for (int level = 1; level <= kmax; ++level) support.push_back(std::int64_t{1} << (level * level));
  const Symmetry s = pick(d, Symmetry::Conjugate);
  // b sin(mx) = (b/2i) e^{imx} − (b/2i) e^{−imx}
  CoefficientSequence c(sided([alpha, kmax](std::int64_t m) -> Complex {
                          if (m <= 0) return 0.0;
                          for (int level = 1; level <= kmax; ++level) {
                            if (m == (std::int64_t{1} << (level * level))) {
                              const double b = std::pow(static_cast<double>(level), -alpha);
                              return Complex(0.0, -b / 2.0);
                            }
                          }
                          return 0.0;
                        }, s),
                        s, support.back());
  c.set_sparse_support(std::move(support));
  return finish(std::move(c), d);
}

CoefficientSequence table_family(const FamilyDescriptor& d) {
  require(!d.params.empty(), d.family, "needs at least one coefficient");
  for (double v : d.params) require(std::isfinite(v), d.family, "coefficients must be finite");
  std::vector<Complex> values(d.params.begin(), d.params.end());
  const Symmetry s = pick(d, Symmetry::EvenReal);
  return finish(CoefficientSequence::table(std::move(values), {}, s), d);
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "monotone_power", "log_decay",      "quasimonotone_oscillating", "orvqm_complex",
      "rbvs_geometric", "gbv_gapped",     "lacunary_alpha",            "table"};
  return names;
}

CoefficientSequence make_family(const FamilyDescriptor& d) {
  if (d.family == "monotone_power") return monotone_power(d);
  if (d.family == "log_decay") return log_decay(d);
  if (d.family == "quasimonotone_oscillating") return quasimonotone_oscillating(d);
  if (d.family == "orvqm_complex") return orvqm_complex(d);
  if (d.family == "rbvs_geometric") return rbvs_geometric(d);
  if (d.family == "gbv_gapped") return gbv_gapped(d);
  if (d.family == "lacunary_alpha") return lacunary_alpha(d);
  if (d.family == "table") return table_family(d);
  throw InputError("unknown family '" + d.family + "'");
}

double RegVaryingWeight::operator()(std::int64_t n) const {
  const double x = static_cast<double>(n);
  switch (kind) {
    case Kind::Constant: return param;
    case Kind::Power: return std::pow(x, param);
    case Kind::Log: return std::log(x + param);
    case Kind::Exponential: return std::pow(param, x);
  }
  return param;
}

std::string RegVaryingWeight::name() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Constant: os << "constant(" << param << ")"; break;
    case Kind::Power: os << "power(" << param << ")"; break;
    case Kind::Log: os << "log(n+" << param << ")"; break;
    case Kind::Exponential: os << "exponential(" << param << ")"; break;
  }
  return os.str();
}

}  // namespace l1f

#include "l1fourier/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "l1fourier/errors.hpp"
#include "l1fourier/seqclass.hpp"

namespace l1f::series {
namespace {

constexpr std::int64_t kReseed = 64;

Complex unit(double k, double x) { return std::polar(1.0, k * x); }

}  // namespace

void PartialSumSpec::validate() const {
  if (n < 0) throw InputError("partial sum degree must be >= 0");
  if (!(lambda > 1.0)) throw InputError("lambda must exceed 1");
  if (reference_degree < 4 * n) {
    throw InputError("reference degree " + std::to_string(reference_degree) + " is below 4n = " +
                     std::to_string(4 * n));
  }
}

TrigPolynomial::TrigPolynomial(const CoefficientSequence& c, std::int64_t lo, std::int64_t hi,
                               const Weight& weight)
    : lo_(std::max<std::int64_t>(lo, 0)) {
  if (hi < lo_) return;
  auto value = [&](std::int64_t j) { return weight ? weight(j) * c(j) : c(j); };

  std::vector<Term> nonzero;
  std::int64_t span = hi - lo_ + 1;
  auto visit = [&](std::int64_t k) {
    const Complex p = value(k);
    const Complex q = k == 0 ? Complex{} : value(-k);
    if (p != Complex{} || q != Complex{}) nonzero.push_back({k, p, q});
  };
  if (const auto* support = c.sparse_support()) {
    for (std::int64_t k : *support) {
      if (k >= lo_ && k <= hi) visit(k);
    }
  } else {
    for (std::int64_t k = lo_; k <= hi; ++k) visit(k);
  }
  if (nonzero.empty()) return;
  degree_ = nonzero.back().k;
  real_ = std::all_of(nonzero.begin(), nonzero.end(), [](const Term& t) {
    return t.k == 0 ? t.pos.imag() == 0.0 : t.neg == std::conj(t.pos);
  });

  span = degree_ - lo_ + 1;
  if (static_cast<std::int64_t>(nonzero.size()) * 8 < span) {
    sparse_ = true;
    terms_ = std::move(nonzero);
    return;
  }
  pos_.assign(static_cast<std::size_t>(span), Complex{});
  neg_.assign(static_cast<std::size_t>(span), Complex{});
  for (const Term& t : nonzero) {
    pos_[static_cast<std::size_t>(t.k - lo_)] = t.pos;
    neg_[static_cast<std::size_t>(t.k - lo_)] = t.neg;
  }
}

Complex TrigPolynomial::operator()(double x) const {
  if (sparse_) {
    Complex sum{};
    for (const Term& t : terms_) {
      const Complex w = unit(static_cast<double>(t.k), x);
      if (real_) {
        sum += t.k == 0 ? t.pos : 2.0 * (t.pos * w).real();
      } else {
        sum += t.pos * w + (t.k == 0 ? Complex{} : t.neg * std::conj(w));
      }
    }
    return sum;
  }
  const Complex step = unit(1.0, x);
  Complex w = unit(static_cast<double>(lo_), x);
  if (real_) {
    double sum = 0.0;
    for (std::size_t i = 0; i < pos_.size(); ++i) {
      const std::int64_t k = lo_ + static_cast<std::int64_t>(i);
      if (i > 0 && k % kReseed == 0) w = unit(static_cast<double>(k), x);
      const double re = pos_[i].real() * w.real() - pos_[i].imag() * w.imag();
      sum += k == 0 ? re : 2.0 * re;
      w *= step;
    }
    return {sum, 0.0};
  }
  Complex sum{};
  for (std::size_t i = 0; i < pos_.size(); ++i) {
    const std::int64_t k = lo_ + static_cast<std::int64_t>(i);
    if (i > 0 && k % kReseed == 0) w = unit(static_cast<double>(k), x);
    sum += pos_[i] * w;
    if (k != 0) sum += neg_[i] * std::conj(w);
    w *= step;
  }
  return sum;
}

quad::Integrand TrigPolynomial::integrand() const {
  return {[this](double x) { return (*this)(x); }, static_cast<double>(std::max<std::int64_t>(degree_, 1)),
          {}};
}

Complex partial_sum(const CoefficientSequence& c, std::int64_t n, double x) {
  if (n < 0) throw InputError("partial_sum: n must be >= 0");
  Complex sum = c(0);
  for (std::int64_t k = 1; k <= n; ++k) {
    const Complex w = unit(static_cast<double>(k), x);
    sum += c(k) * w + c(-k) * std::conj(w);
  }
  return sum;
}

std::int64_t delayed_top(std::int64_t n, double lambda) {
  if (n < 0) throw InputError("delayed mean: n must be >= 0");
  if (!(lambda > 1.0)) throw InputError("delayed mean: lambda must exceed 1");
  const std::int64_t top = seqclass::scaled_index(lambda, n);
  if (top <= n) {
    throw InputError("delayed mean is empty: [lambda n] = " + std::to_string(top) + " <= n = " +
                     std::to_string(n));
  }
  return top;
}

double delayed_weight(std::int64_t n, std::int64_t top, std::int64_t j) {
  const std::int64_t a = j < 0 ? -j : j;
  if (a <= n) return 1.0;
  if (a >= top) return 0.0;
  return static_cast<double>(top - a) / static_cast<double>(top - n);
}

Complex delayed_mean(const CoefficientSequence& c, std::int64_t n, double lambda, double x) {
  const std::int64_t top = delayed_top(n, lambda);
  Complex sum = c(0);
  for (std::int64_t k = 1; k < top; ++k) {
    const Complex w = unit(static_cast<double>(k), x);
    sum += delayed_weight(n, top, k) * (c(k) * w + c(-k) * std::conj(w));
  }
  return sum;
}

Complex abel_rhs(const CoefficientSequence& c, std::int64_t n, double lambda, double x,
                 const kernels::KernelContext& ctx) {
  const std::int64_t p = delayed_top(n, lambda);
  if (ctx.n != n) throw InputError("abel_rhs: kernel context outer index must equal n");
  ctx.validate();
  const double scale = 1.0 / static_cast<double>(p - n);

  Complex first{};
  for (std::int64_t k = n; k <= p; ++k) {
    const auto kc = ctx.with_degree(k);
    const Complex dpos = c(k) - c(k + 1);
    const Complex dneg = c(-k) - c(-k - 1);
    first += static_cast<double>(p - k) *
             (2.0 * dpos * kernels::dirichlet(kc, x) - (dpos - dneg) * kernels::complex_kernel(kc, -x));
  }
  Complex middle{};
  for (std::int64_t k = n; k <= p - 1; ++k) {
    const auto kc = ctx.with_degree(k);
    middle += c(k + 1) * kernels::complex_kernel(kc, x) + c(-k - 1) * kernels::complex_kernel(kc, -x);
  }
  const auto nc = ctx.with_degree(n);
  const Complex last = c(n) * kernels::complex_kernel(nc, x) + c(-n) * kernels::complex_kernel(nc, -x);
  return scale * first + scale * middle - last;
}

double cauchy_gap(const CoefficientSequence& c, std::int64_t n, std::int64_t m,
                  const quad::QuadratureGrid& grid, unsigned threads) {
  if (n < 0 || m <= n) throw InputError("cauchy_gap requires m > n >= 0");
  if (grid.max_resolved_frequency() < static_cast<double>(m)) {
    throw ResolutionError("cauchy_gap: grid resolves " +
                          std::to_string(grid.max_resolved_frequency()) + " < m = " +
                          std::to_string(m));
  }
  const TrigPolynomial t(c, n + 1, m);
  if (t.is_zero()) return 0.0;
  return quad::l1_norm(t.integrand(), grid, threads);
}

double tau_gap(const CoefficientSequence& c, std::int64_t n, double lambda,
               const quad::QuadratureGrid& grid, unsigned threads) {
  const std::int64_t top = delayed_top(n, lambda);
  if (top - 1 <= n) return 0.0;
  if (grid.max_resolved_frequency() < static_cast<double>(top - 1)) {
    throw ResolutionError("tau_gap: grid resolves " + std::to_string(grid.max_resolved_frequency()) +
                          " < [lambda n] - 1 = " + std::to_string(top - 1));
  }
  const TrigPolynomial t(c, n + 1, top - 1,
                         [&](std::int64_t j) { return Complex(delayed_weight(n, top, j), 0.0); });
  if (t.is_zero()) return 0.0;
  return quad::l1_norm(t.integrand(), grid, threads);
}

TruncatedGap truncation_gap(const CoefficientSequence& c, const PartialSumSpec& spec,
                            const quad::QuadratureGrid& grid, unsigned threads) {
  spec.validate();
  TruncatedGap out;
  out.reference_degree = spec.reference_degree;
  out.value = spec.reference_degree > spec.n
                  ? cauchy_gap(c, spec.n, spec.reference_degree, grid, threads)
                  : 0.0;
  if (const auto& tail = c.tail_bound()) out.tail_bound = (*tail)(spec.reference_degree);
  return out;
}

CoefficientSequence conjugate_symmetrize(const CoefficientSequence& c) {
  if (c.symmetry() != Symmetry::None) return c;
  CoefficientSequence out([c](std::int64_t k) { return c(k); }, Symmetry::Conjugate,
                          c.support_bound());
  if (const auto* support = c.sparse_support()) out.set_sparse_support(*support);
  return out;
}

}  // namespace l1f::series

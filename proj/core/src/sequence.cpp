#include "l1fourier/sequence.hpp"

#include <algorithm>
#include <cstdlib>

#include "l1fourier/errors.hpp"

namespace l1f {

std::string to_string(Symmetry s) {
  switch (s) {
    case Symmetry::None: return "none";
    case Symmetry::Conjugate: return "conjugate";
    case Symmetry::EvenReal: return "even_real";
  }
  return "none";
}

Symmetry symmetry_from_string(const std::string& name) {
  if (name == "none" || name == "one_sided") return Symmetry::None;
  if (name == "conjugate") return Symmetry::Conjugate;
  if (name == "even_real") return Symmetry::EvenReal;
  throw InputError("unknown symmetry '" + name + "'");
}

CoefficientSequence::CoefficientSequence()
    : rule_([](std::int64_t) { return Complex{}; }), support_bound_(0) {}

CoefficientSequence::CoefficientSequence(Rule rule, Symmetry symmetry,
                                         std::optional<std::int64_t> support_bound)
    : rule_(std::move(rule)), symmetry_(symmetry), support_bound_(support_bound) {
  if (!rule_) throw InputError("coefficient rule must be callable");
  if (support_bound_ && *support_bound_ < 0) throw InputError("support bound must be >= 0");
}

CoefficientSequence CoefficientSequence::table(std::vector<Complex> nonnegative,
                                               std::vector<Complex> negative,
                                               Symmetry symmetry) {
  if (symmetry != Symmetry::None) negative.clear();
  const auto bound = static_cast<std::int64_t>(
      std::max(nonnegative.empty() ? 0 : nonnegative.size() - 1, negative.size()));
  auto pos = std::make_shared<const std::vector<Complex>>(std::move(nonnegative));
  auto neg = std::make_shared<const std::vector<Complex>>(std::move(negative));
  Rule rule = [pos, neg](std::int64_t k) -> Complex {
    if (k >= 0) {
      const auto i = static_cast<std::size_t>(k);
      return i < pos->size() ? (*pos)[i] : Complex{};
    }
    const auto i = static_cast<std::size_t>(-k - 1);
    return i < neg->size() ? (*neg)[i] : Complex{};
  };
  return CoefficientSequence(std::move(rule), symmetry, bound);
}

Complex CoefficientSequence::operator()(std::int64_t k) const {
  const std::int64_t mag = k < 0 ? -k : k;
  if (support_bound_ && mag > *support_bound_) return {};
  switch (symmetry_) {
    case Symmetry::None:
      return rule_(k);
    case Symmetry::Conjugate: {
      const Complex v = rule_(mag);
      if (k == 0) return {v.real(), 0.0};
      return k > 0 ? v : std::conj(v);
    }
    case Symmetry::EvenReal:
      return {rule_(mag).real(), 0.0};
  }
  return {};
}

CoefficientSequence& CoefficientSequence::set_descriptor(FamilyDescriptor d) {
  descriptor_ = std::move(d);
  return *this;
}

CoefficientSequence& CoefficientSequence::set_tail_bound(TailBound bound) {
  tail_bound_ = std::move(bound);
  return *this;
}

CoefficientSequence& CoefficientSequence::set_sparse_support(std::vector<std::int64_t> magnitudes) {
  std::sort(magnitudes.begin(), magnitudes.end());
  magnitudes.erase(std::unique(magnitudes.begin(), magnitudes.end()), magnitudes.end());
  sparse_ = std::make_shared<const std::vector<std::int64_t>>(std::move(magnitudes));
  return *this;
}

Complex delta(const CoefficientSequence& c, std::int64_t k) { return c(k) - c(k + 1); }

CoefficientSequence reflected(const CoefficientSequence& c) {
  CoefficientSequence out([c](std::int64_t k) { return c(-k); }, Symmetry::None, c.support_bound());
  if (const auto* sparse = c.sparse_support()) out.set_sparse_support(*sparse);
  if (c.tail_bound()) out.set_tail_bound(*c.tail_bound());
  return out;
}

CoefficientSequence conjugated(const CoefficientSequence& c) {
  CoefficientSequence out([c](std::int64_t k) { return std::conj(c(k)); }, Symmetry::None,
                          c.support_bound());
  if (const auto* sparse = c.sparse_support()) out.set_sparse_support(*sparse);
  if (c.tail_bound()) out.set_tail_bound(*c.tail_bound());
  return out;
}

CoefficientSequence from_cosine_coefficients(std::vector<double> a) {
  std::vector<Complex> half(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) half[k] = a[k] / 2.0;
  return CoefficientSequence::table(std::move(half), {}, Symmetry::EvenReal);
}

}  // namespace l1f

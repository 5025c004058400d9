#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace l1f {

using Complex = std::complex<double>;

/// How the negative-index coefficients relate to the non-negative ones.
enum class Symmetry {
  None,       ///< independent sides; family generators leave f̂(−k) = 0
  Conjugate,  ///< f̂(−k) = conj f̂(k): the synthesized function is real
  EvenReal,   ///< f̂(−k) = f̂(k) real: a cosine series
};

std::string to_string(Symmetry s);
Symmetry symmetry_from_string(const std::string& name);

/// Closed-form family name plus its real parameters.
struct FamilyDescriptor {
  std::string family;
  std::vector<double> params;
  std::optional<Symmetry> symmetry;  ///< overrides the family's default

  bool operator==(const FamilyDescriptor&) const = default;
};

/// Two-sided complex coefficient source f̂(k), k ∈ ℤ.
///
/// For Symmetry::None the rule is consulted for every k; otherwise only for
/// k ≥ 0 and the negative side is derived, so the symmetry invariant holds by
/// construction. Indices beyond the support bound evaluate to zero.
class CoefficientSequence {
 public:
  using Rule = std::function<Complex(std::int64_t)>;
  /// Upper bound on Σ_{|k|>N} |f̂(k)| as a function of N.
  using TailBound = std::function<double(std::int64_t)>;

  /// The zero sequence.
  CoefficientSequence();
  CoefficientSequence(Rule rule, Symmetry symmetry,
                      std::optional<std::int64_t> support_bound = std::nullopt);

  /// Explicit table: nonnegative[k] = f̂(k) for k ≥ 0, negative[k−1] = f̂(−k).
  /// With a symmetry other than None the negative table is ignored.
  static CoefficientSequence table(std::vector<Complex> nonnegative,
                                   std::vector<Complex> negative = {},
                                   Symmetry symmetry = Symmetry::None);

  Complex operator()(std::int64_t k) const;

  Symmetry symmetry() const noexcept { return symmetry_; }
  std::optional<std::int64_t> support_bound() const noexcept { return support_bound_; }
  const std::optional<FamilyDescriptor>& descriptor() const noexcept { return descriptor_; }
  const std::optional<TailBound>& tail_bound() const noexcept { return tail_bound_; }

  /// Sorted magnitudes |k| outside of which every coefficient is zero, when
  /// the rule is known to be sparse. Synthesis skips everything else.
  const std::vector<std::int64_t>* sparse_support() const noexcept { return sparse_.get(); }

  CoefficientSequence& set_descriptor(FamilyDescriptor d);
  CoefficientSequence& set_tail_bound(TailBound bound);
  CoefficientSequence& set_sparse_support(std::vector<std::int64_t> magnitudes);

 private:
  Rule rule_;
  Symmetry symmetry_ = Symmetry::None;
  std::optional<std::int64_t> support_bound_;
  std::optional<FamilyDescriptor> descriptor_;
  std::optional<TailBound> tail_bound_;
  std::shared_ptr<const std::vector<std::int64_t>> sparse_;
};

/// Δc_k = c_k − c_{k+1}.
Complex delta(const CoefficientSequence& c, std::int64_t k);

/// The sequence k ↦ c(−k); used to run one-sided checks on {f̂(−n)}.
CoefficientSequence reflected(const CoefficientSequence& c);

/// The sequence k ↦ conj c(k).
CoefficientSequence conjugated(const CoefficientSequence& c);

/// Cosine series a₀/2 + Σ a_k cos kx, i.e. f̂(0) = a₀/2 and f̂(±k) = a_k/2.
CoefficientSequence from_cosine_coefficients(std::vector<double> a);

}  // namespace l1f

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bandbraid/braid_word.hpp"
#include "bandbraid/canonical_factor.hpp"

namespace bandbraid {

/// Left-canonical form δ^u A_1 ... A_k.
///
/// Invariants: no A_i is e or δ, and R(A_i) ∩ S(A_{i+1}) = ∅ for every
/// adjacent pair. Equality is component-wise, so two braids are equal exactly
/// when their normal forms compare equal.
class NormalForm {
 public:
  explicit NormalForm(int strands, int power = 0);

  /// Wraps an already left-canonical sequence without re-normalizing. Throws
  /// ErrorCode::invalid_argument if any invariant fails.
  static NormalForm from_canonical(int strands, int power, std::vector<CanonicalFactor> factors);

  int strands() const noexcept { return strands_; }
  int power() const noexcept { return power_; }
  const std::vector<CanonicalFactor>& factors() const noexcept { return factors_; }

  int inf() const noexcept { return power_; }
  int sup() const noexcept { return power_ + static_cast<int>(factors_.size()); }
  int canonical_length() const noexcept { return static_cast<int>(factors_.size()); }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

  std::size_t hash() const noexcept;

 private:
  friend class Normalizer;
  friend NormalForm tau_normal_form(const NormalForm& nf, int k);
  friend NormalForm invert_normal_form(const NormalForm& nf);
  NormalForm(int strands, int power, std::vector<CanonicalFactor> factors)
      : strands_(strands), power_(power), factors_(std::move(factors)) {}

  int strands_;
  int power_;
  std::vector<CanonicalFactor> factors_;
};

/// Incremental left-canonical normalization: factors are appended on the right
/// and the prefix is re-weighted backwards, stopping as soon as a pair is
/// already left-weighted.
class Normalizer {
 public:
  explicit Normalizer(int strands, int power = 0);
  /// Starts from a form that is already left-canonical.
  explicit Normalizer(NormalForm start);

  void push(const CanonicalFactor& factor);
  /// Right-multiplies by δ^k, shifting the accumulated factors by τ^k.
  void push_delta_power(int k);

  NormalForm finish() &&;

 private:
  void absorb_ends();

  int strands_;
  int power_;
  std::vector<CanonicalFactor> factors_;
};

struct DeltaPositive {
  int power;
  std::vector<CanonicalFactor> factors;  // each of length 1 or n-2
};

/// w = δ^power · factors, all factors positive. Negative letters use
/// a_{ts}^{-1} = δ^{-1}(n,...,t+1,t,s-1,...,1)(t-1,...,s).
DeltaPositive delta_positive_factors(const BraidWord& w);

/// Word form of delta_positive_factors: (p, Q) with w = δ^p Q and Q positive.
std::pair<int, BraidWord> to_delta_positive(const BraidWord& w);

/// The canonical factor that replaces a_{ts}^{-1} after pulling out δ^{-1}.
CanonicalFactor inverse_letter_factor(int n, int t, int s);

/// Converts AB to A'B' with A' ⌈ B' and A'B' = AB.
std::pair<CanonicalFactor, CanonicalFactor> left_weight_pair(const CanonicalFactor& a,
                                                              const CanonicalFactor& b);

/// A ⌈ B, tested as R(A) ∩ S(B) = ∅.
bool is_left_weighted(const CanonicalFactor& a, const CanonicalFactor& b);

NormalForm left_canonical_form(const BraidWord& w);
NormalForm normalize(int strands, int power, const std::vector<CanonicalFactor>& factors);

bool equal(const BraidWord& v, const BraidWord& w);

NormalForm multiply(const NormalForm& a, const NormalForm& b);
/// δ^{-(u+k)} τ^{-(u+k)}(Ā_k) ... τ^{-(u+1)}(Ā_1), already left-canonical.
NormalForm invert_normal_form(const NormalForm& nf);
/// τ^k applied to every factor: the conjugate δ^{-k} W δ^k.
NormalForm tau_normal_form(const NormalForm& nf, int k);

BraidWord to_word(const NormalForm& nf);

/// `D^u . (…)(…) . (…)`; the identity is `D^0 .`.
std::string render(const NormalForm& nf);
/// Inverse of render(NormalForm). Input need not be left-canonical; it is
/// normalized after parsing.
NormalForm parse_normal_form(std::string_view text, int n);

}  // namespace bandbraid

template <>
struct std::hash<bandbraid::NormalForm> {
  std::size_t operator()(const bandbraid::NormalForm& nf) const noexcept { return nf.hash(); }
};

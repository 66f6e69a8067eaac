#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bandbraid/braid_word.hpp"

namespace bandbraid {

/// Strictly decreasing strand indices (t_j, ..., t_1), length >= 2. Its braid
/// is a_{t_j t_{j-1}} ... a_{t_2 t_1}; as a permutation it sends each t_i to
/// t_{i+1} and t_j to t_1.
class DescendingCycle {
 public:
  explicit DescendingCycle(std::vector<int> indices);

  std::span<const int> indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  int largest() const noexcept { return indices_.front(); }
  int smallest() const noexcept { return indices_.back(); }

  friend bool operator==(const DescendingCycle&, const DescendingCycle&) = default;
  friend auto operator<=>(const DescendingCycle&, const DescendingCycle&) = default;

 private:
  std::vector<int> indices_;
};

struct GeneratorPair {
  int t;
  int s;
  friend bool operator==(const GeneratorPair&, const GeneratorPair&) = default;
  friend auto operator<=>(const GeneratorPair&, const GeneratorPair&) = default;
};

using GeneratorSet = std::set<GeneratorPair>;

/// An element of [0,1] = {A : e <= A <= δ}, stored as its permutation table.
///
/// The table is a product of pairwise non-crossing descending cycles: every
/// orbit {u_1 < ... < u_r} satisfies u_i -> u_{i+1} and u_r -> u_1.
class CanonicalFactor {
 public:
  static CanonicalFactor identity(int n);
  static CanonicalFactor delta(int n);
  static CanonicalFactor from_cycles(int n, std::span<const DescendingCycle> cycles);
  /// `images[i]` is the 1-based image of strand i+1. Throws
  /// ErrorCode::not_canonical_factor naming the offending orbit or crossing.
  static CanonicalFactor from_permutation(int n, std::span<const int> images);

  int strands() const noexcept { return static_cast<int>(table_.size()); }
  /// 1-based image of 1-based strand i.
  int image(int i) const { return table_[i - 1] + 1; }
  /// Images as 1-based values, entry i-1 for strand i.
  std::vector<int> images() const;

  /// Band-word length: n minus the number of orbits.
  int length() const noexcept;
  bool is_identity() const noexcept { return length() == 0; }
  bool is_delta() const noexcept { return length() == strands() - 1; }

  /// Cycles sorted by largest index, descending.
  std::vector<DescendingCycle> cycles() const;

  friend bool operator==(const CanonicalFactor&, const CanonicalFactor&) = default;
  friend auto operator<=>(const CanonicalFactor&, const CanonicalFactor&) = default;

  std::size_t hash() const noexcept;

  /// Raw 0-based table; for code that composes tables directly.
  std::span<const int> table() const noexcept { return table_; }
  static CanonicalFactor from_table_unchecked(std::vector<int> table);

 private:
  explicit CanonicalFactor(std::vector<int> table) : table_(std::move(table)) {}
  std::vector<int> table_;
};

void require_same_strands(const CanonicalFactor& a, const CanonicalFactor& b);

/// Cycle notation `(5,4,1)(3,2)`; identity is `()`.
std::string render(const CanonicalFactor& a);
CanonicalFactor parse_factor(std::string_view text, int n);

/// a_{t_j t_{j-1}} ... a_{t_2 t_1} for each cycle, cycles by largest index
/// descending.
BraidWord to_band_word(const CanonicalFactor& a);

struct ObstructingPair {
  std::size_t first;   // position of a
  std::size_t second;  // position of b, second > first
  int pattern;         // 1..6
  friend bool operator==(const ObstructingPair&, const ObstructingPair&) = default;
};

/// First obstructing pair in (first ascending, second ascending) scan order.
/// A positive word names a canonical factor exactly when none exists.
std::optional<ObstructingPair> obstructing_pair(const BraidWord& w);
/// The pattern number (1..6) if (a, b) is an obstructing pair in that order.
std::optional<int> obstructing_pattern(const BandLetter& a, const BandLetter& b);

/// Lattice meet A ∧ B via the cycle-intersection triples, grouped by a
/// two-pass bucket sort over keys in 1..n.
CanonicalFactor meet(const CanonicalFactor& a, const CanonicalFactor& b);
/// Same result, grouping the triples with std::sort. Kept as the fallback and
/// as a cross-check for the bucket path.
CanonicalFactor meet_by_comparison_sort(const CanonicalFactor& a, const CanonicalFactor& b);

/// Ā with A·Ā = δ.
CanonicalFactor right_complement(const CanonicalFactor& a);
/// The factor L with L·A = δ; equals τ^{-1}(Ā).
CanonicalFactor left_complement(const CanonicalFactor& a);

/// Conjugate δ^{-k} A δ^k, i.e. every index shifted up by k mod n.
CanonicalFactor tau_factor(const CanonicalFactor& a, int k);

GeneratorSet starting_set(const CanonicalFactor& a);
/// Equal to the starting set for canonical factors.
GeneratorSet finishing_set(const CanonicalFactor& a);
/// R(A) = S(Ā).
GeneratorSet complement_set(const CanonicalFactor& a);
/// L(A) = {a : aA <= δ} = F(left_complement(A)).
GeneratorSet left_complement_set(const CanonicalFactor& a);
GeneratorSet tau_shift(const GeneratorSet& set, int n, int k);

/// Product A·B when it is again a canonical factor; nullopt otherwise.
std::optional<CanonicalFactor> try_multiply(const CanonicalFactor& a, const CanonicalFactor& b);

inline constexpr int kDefaultEnumerationCap = 10;

/// Every canonical factor of B_n (Catalan many), via non-crossing partitions.
/// Throws ErrorCode::cap_exceeded when n > cap.
std::vector<CanonicalFactor> enumerate_factors(int n, int cap = kDefaultEnumerationCap);

/// (2n)! / (n! (n+1)!).
unsigned long long catalan_number(int n);

}  // namespace bandbraid

template <>
struct std::hash<bandbraid::CanonicalFactor> {
  std::size_t operator()(const bandbraid::CanonicalFactor& a) const noexcept { return a.hash(); }
};

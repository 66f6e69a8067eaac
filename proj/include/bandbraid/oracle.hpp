#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "bandbraid/braid_word.hpp"

// Brute-force ground truth for the fast algorithms. Nothing here calls into
// canonical_factor or normal_form: positive equivalence is decided by closing
// words under the defining relations, so agreement with the normal form is
// independent evidence.

namespace bandbraid::oracle {

inline constexpr std::size_t kDefaultNodeCap = 1'000'000;
inline constexpr std::size_t kUnboundedRadius = std::numeric_limits<std::size_t>::max();

enum class Verdict { equivalent, not_equivalent, undecided };

const char* to_string(Verdict v) noexcept;

/// Every positive word reachable from `p` by one application of
/// a_{ts}a_{rq} = a_{rq}a_{ts} ((t-r)(t-q)(s-r)(s-q) > 0) or
/// a_{ts}a_{sr} = a_{tr}a_{ts} = a_{sr}a_{tr} at one adjacent pair.
/// Sorted, without duplicates, never containing `p` itself.
std::vector<BraidWord> relation_neighbors(const BraidWord& p);

/// Positive words reachable from the representative within `radius` relation
/// applications. `complete()` means the full class was enumerated.
class EquivalenceClass {
 public:
  const BraidWord& representative() const noexcept { return representative_; }
  const std::vector<BraidWord>& members() const noexcept { return members_; }
  std::size_t radius() const noexcept { return radius_; }
  bool complete() const noexcept { return complete_; }
  bool contains(const BraidWord& w) const;

  friend EquivalenceClass positive_class(const BraidWord& p, std::size_t cap, std::size_t radius);

 private:
  explicit EquivalenceClass(BraidWord rep) : representative_(std::move(rep)) {}

  BraidWord representative_;
  std::vector<BraidWord> members_;  // sorted by letters
  std::size_t radius_ = 0;
  bool complete_ = false;
};

/// Throws ErrorCode::cap_exceeded if the class has more than `cap` members and
/// the radius is unbounded.
EquivalenceClass positive_class(const BraidWord& p, std::size_t cap = kDefaultNodeCap,
                                std::size_t radius = kUnboundedRadius);

/// Bidirectional breadth-first search under the defining relations.
Verdict positively_equivalent(const BraidWord& p, const BraidWord& q,
                              std::size_t cap = kDefaultNodeCap);

struct DeltaForm {
  int power;
  BraidWord positive;
};

/// w = δ^power · positive, built letter by letter: each a_{ts}^{-1} becomes
/// δ^{-1} times the prefix of a δ-rewriting ending in a_{ts}, and every δ^{-1}
/// is pulled left with x δ^{-1} = δ^{-1} τ^{-1}(x).
DeltaForm delta_form(const BraidWord& w);

/// Positive words for δ that begin (resp. end) with a_{ts}.
BraidWord delta_starting_with(int n, int t, int s);
BraidWord delta_ending_with(int n, int t, int s);

/// Group equality decided through delta_form and positive equivalence.
Verdict equal_via_oracle(const BraidWord& v, const BraidWord& w, std::size_t cap = kDefaultNodeCap);

struct CancellationCounterexample {
  BandLetter generator;
  BraidWord x;
  BraidWord y;
  bool left;  // a·X ≐ a·Y (true) or X·a ≐ Y·a (false)
};

struct CancellationReport {
  int strands = 0;
  std::size_t bound = 0;
  std::size_t words_examined = 0;
  std::size_t pairs_checked = 0;
  std::vector<CancellationCounterexample> counterexamples;
};

/// For every generator a and positive X, Y with |X| = |Y| <= bound, checks that
/// a·X ≐ a·Y and X·a ≐ Y·a each imply X ≐ Y.
CancellationReport cancellation_check(int n, std::size_t bound, std::size_t cap = kDefaultNodeCap);

/// All positive words of the given length, generators in (t,s) lexicographic
/// order.
std::vector<BraidWord> all_positive_words(int n, std::size_t length);

}  // namespace bandbraid::oracle

#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "bandbraid/braid_word.hpp"
#include "bandbraid/oracle.hpp"

// Agreement between the normal form and the brute-force oracle.

namespace bandbraid {

struct CrossCheckReport {
  int strands = 0;
  std::size_t max_length = 0;
  std::size_t words = 0;
  std::size_t pairs = 0;  // unordered pairs of equal length, including (w, w)
  std::size_t classes = 0;
  std::size_t undecided = 0;
  std::vector<std::pair<BraidWord, BraidWord>> disagreements;
};

/// Compares the partition of all positive words of each length <= max_length
/// into oracle classes against the partition by normal form. Equivalent to
/// checking every pair, without enumerating pairs.
CrossCheckReport cross_check_positive(int n, std::size_t max_length,
                                      std::size_t cap = oracle::kDefaultNodeCap);

/// Relation applications on adjacent positive letters plus free insertions of
/// g g^{-1} or g^{-1} g; the result is always equal to `w` in the group.
BraidWord mutate_word(const BraidWord& w, RandomSource& rng, int steps);

/// Seeded signed-word pairs: a third unrelated, a third mutated copies, and a
/// third paired with the word of their own normal form.
CrossCheckReport cross_check_random(int n, std::size_t trials, std::size_t max_length,
                                    std::uint64_t seed, std::size_t cap = oracle::kDefaultNodeCap);

}  // namespace bandbraid

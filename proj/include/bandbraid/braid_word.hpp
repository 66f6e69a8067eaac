#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bandbraid/error.hpp"

namespace bandbraid {

/// One signed band generator a_{ts}^{sign} with t > s >= 1.
///
/// The Artin generator s_i is the letter a_{(i+1)i}. A letter with t < s is
/// rejected rather than swapped.
class BandLetter {
 public:
  BandLetter(int t, int s, int sign = +1);

  int top() const noexcept { return t_; }
  int bottom() const noexcept { return s_; }
  int sign() const noexcept { return sign_; }
  bool positive() const noexcept { return sign_ > 0; }

  BandLetter inverse() const noexcept { return BandLetter(t_, s_, -sign_, Unchecked{}); }

  /// Same generator, sign ignored.
  bool same_generator(const BandLetter& other) const noexcept {
    return t_ == other.t_ && s_ == other.s_;
  }

  friend bool operator==(const BandLetter&, const BandLetter&) = default;
  friend auto operator<=>(const BandLetter&, const BandLetter&) = default;

 private:
  struct Unchecked {};
  BandLetter(int t, int s, int sign, Unchecked) noexcept : t_(t), s_(s), sign_(sign) {}

  int t_;
  int s_;
  int sign_;
};

/// A finite sequence of band letters in B_n. The empty word is the identity e.
///
/// Words never mix strand counts: every binary operation on two words of
/// different n throws ErrorCode::mismatched_strands.
class BraidWord {
 public:
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<BandLetter> letters);

  int strands() const noexcept { return strands_; }
  std::span<const BandLetter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const BandLetter& operator[](std::size_t i) const { return letters_[i]; }

  bool is_positive() const noexcept;

  /// Appends a letter after range-checking it against this word's n.
  void push_back(const BandLetter& letter);
  void append(const BraidWord& other);

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<BandLetter> letters_;
};

void require_same_strands(const BraidWord& a, const BraidWord& b);
void require_valid_strands(int n);

/// Parses the token grammar `a(t,s)`, `s<i>`, `D`, each optionally followed by
/// `^<integer>`. No reduction is performed.
BraidWord parse_word(std::string_view text, int n);

/// One token per letter, `^-1` for inverse letters; parse_word(render(w)) == w.
std::string render(const BraidWord& w);

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord free_reduce(const BraidWord& w);
BraidWord invert_word(const BraidWord& w);
BraidWord band_to_artin(const BraidWord& w);
BraidWord tau_shift(const BraidWord& w, int k);
BandLetter tau_shift(const BandLetter& letter, int n, int k);

/// δ = a_{n(n-1)} ... a_{21}.
BraidWord delta_word(int n);
/// δ^k for any integer k (inverse letters when k < 0).
BraidWord delta_power_word(int n, int k);

/// Image in the symmetric group. Letters act left to right: the first letter is
/// applied first. Entry i-1 holds the image of strand i (1-based values).
std::vector<int> permutation_image(const BraidWord& w);

/// Deterministic source of random words. Draws come from mt19937_64 with
/// rejection sampling, so output is byte-identical on every platform for a
/// given seed.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform integer in [lo, hi].
  int between(int lo, int hi);

  /// Uniform over the n(n-1) signed band generators, ordered (t,s)
  /// lexicographically (t ascending, then s ascending), positive before
  /// negative.
  BandLetter letter(int n);
  BandLetter positive_letter(int n);
  BraidWord word(int n, std::size_t length);
  BraidWord positive_word(int n, std::size_t length);

 private:
  std::mt19937_64 engine_;
};

BraidWord random_word(int n, std::size_t length, std::uint64_t seed);

}  // namespace bandbraid

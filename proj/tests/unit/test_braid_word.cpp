#include <doctest.h>

#include "bandbraid/braid_word.hpp"
#include "support.hpp"

using namespace bandbraid;
using testing_support::perm_of;

namespace {

BraidWord word(int n, std::initializer_list<std::pair<int, int>> signed_letters) {
  BraidWord w(n);
  for (auto [ts, sign] : signed_letters) w.push_back(BandLetter(ts / 10, ts % 10, sign));
  return w;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST_CASE("letters validate their indices") {
  CHECK(code_of([] { BandLetter(2, 2); }) == ErrorCode::degenerate_letter);
  CHECK(code_of([] { BandLetter(1, 3); }) == ErrorCode::misordered_letter);
  CHECK(code_of([] { BandLetter(2, 0); }) == ErrorCode::index_out_of_range);
  CHECK(code_of([] { BandLetter(2, 1, 2); }) == ErrorCode::invalid_argument);
  BraidWord w(3);
  CHECK(code_of([&] { w.push_back(BandLetter(4, 1)); }) == ErrorCode::index_out_of_range);
  CHECK(code_of([] { BraidWord(0); }) == ErrorCode::invalid_strand_count);
}

TEST_CASE("parse artin generators and delta") {
  CHECK(parse_word("s1 s2 s1", 3) == word(3, {{21, 1}, {32, 1}, {21, 1}}));
  CHECK(parse_word("", 5).empty());
  CHECK(parse_word("D", 3) == word(3, {{32, 1}, {21, 1}}));
  CHECK(parse_word("a(3,1)^-2", 3) == word(3, {{31, -1}, {31, -1}}));
  CHECK(parse_word("  a( 4 , 2 )^2   s3^-1 ", 4) == word(4, {{42, 1}, {42, 1}, {43, -1}}));
  CHECK(parse_word("D^-1", 3) == word(3, {{21, -1}, {32, -1}}));
  CHECK(parse_word("s1^0", 3).empty());
  CHECK(parse_word("", 1).empty());
}

TEST_CASE("parse errors carry positions") {
  auto position = [](std::string_view text, int n) -> std::optional<std::size_t> {
    try {
      parse_word(text, n);
    } catch (const Error& e) {
      return e.position();
    }
    return std::nullopt;
  };
  CHECK(position("s1 x", 3) == 3u);
  CHECK(position("a(4,1)", 3) == 0u);
  CHECK(position("s1 a(2,2)", 3) == 3u);
  CHECK(position("s1s2", 3).has_value());
  CHECK(code_of([] { parse_word("a(1,2)", 3); }) == ErrorCode::misordered_letter);
  CHECK(code_of([] { parse_word("a(2,2)", 3); }) == ErrorCode::degenerate_letter);
  CHECK(code_of([] { parse_word("s3", 3); }) == ErrorCode::index_out_of_range);
  CHECK(code_of([] { parse_word("a(3,1", 3); }) == ErrorCode::syntax);
  CHECK(code_of([] { parse_word("s1^", 3); }) == ErrorCode::syntax);
  CHECK(code_of([] { parse_word("s1", 1); }) == ErrorCode::index_out_of_range);
}

TEST_CASE("render round trips") {
  RandomSource rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.between(2, 7);
    const BraidWord w = rng.word(n, rng.below(20));
    CHECK(parse_word(render(w), n) == w);
  }
  CHECK(render(word(3, {{31, 1}, {21, -1}})) == "a(3,1) a(2,1)^-1");
}

TEST_CASE("free reduction") {
  CHECK(free_reduce(word(3, {{31, 1}, {31, -1}})).empty());
  CHECK(free_reduce(BraidWord(3)).empty());
  CHECK(free_reduce(word(3, {{21, 1}, {32, 1}, {32, -1}, {21, 1}})) == word(3, {{21, 1}, {21, 1}}));
  CHECK(free_reduce(word(3, {{21, 1}, {32, 1}, {32, -1}, {21, -1}})).empty());
  RandomSource rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const BraidWord w = rng.word(4, rng.below(16));
    const BraidWord r = free_reduce(w);
    CHECK(r.size() <= w.size());
    CHECK((w.size() - r.size()) % 2 == 0);
    CHECK(perm_of(r) == perm_of(w));
  }
}

TEST_CASE("band to artin") {
  CHECK(band_to_artin(word(3, {{31, 1}})) == word(3, {{32, 1}, {21, 1}, {32, -1}}));
  CHECK(band_to_artin(word(3, {{21, 1}})) == word(3, {{21, 1}}));
  const BraidWord inv41 = band_to_artin(word(4, {{41, -1}}));
  CHECK(inv41 == word(4, {{43, 1}, {32, 1}, {21, -1}, {32, -1}, {43, -1}}));
  CHECK(perm_of(inv41) == perm_of(word(4, {{41, -1}})));
  RandomSource rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.between(2, 6);
    const BraidWord w = rng.word(n, rng.below(10));
    const BraidWord a = band_to_artin(w);
    std::size_t expected = 0;
    for (const auto& l : w.letters()) expected += 2 * (l.top() - l.bottom()) - 1;
    CHECK(a.size() == expected);
    CHECK(perm_of(a) == perm_of(w));
    for (const auto& l : a.letters()) CHECK(l.top() == l.bottom() + 1);
  }
}

TEST_CASE("inversion") {
  CHECK(invert_word(word(3, {{21, 1}, {32, -1}})) == word(3, {{32, 1}, {21, -1}}));
  CHECK(invert_word(BraidWord(3)).empty());
  RandomSource rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const BraidWord w = rng.word(5, rng.below(12));
    CHECK(invert_word(invert_word(w)) == w);
    CHECK(free_reduce(concat(w, invert_word(w))).empty());
  }
}

TEST_CASE("tau shift") {
  CHECK(tau_shift(word(3, {{21, 1}}), 1) == word(3, {{32, 1}}));
  CHECK(tau_shift(word(3, {{32, 1}}), 1) == word(3, {{31, 1}}));
  CHECK(tau_shift(word(3, {{32, -1}}), 0) == word(3, {{32, -1}}));
  // τ(x) = δ^{-1} x δ, so δ τ(x) δ^{-1} and x have the same permutation.
  RandomSource rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.between(2, 7);
    const BraidWord w = rng.word(n, rng.below(10));
    const int a = rng.between(-10, 10), b = rng.between(-10, 10);
    CHECK(tau_shift(tau_shift(w, a), b) == tau_shift(w, a + b));
    CHECK(tau_shift(w, n) == w);
    BraidWord conj = delta_word(n);
    conj.append(tau_shift(w, 1));
    conj.append(invert_word(delta_word(n)));
    CHECK(perm_of(conj) == perm_of(w));
  }
}

TEST_CASE("delta acts as i -> i+1") {
  for (int n = 1; n <= 8; ++n) CHECK(perm_of(delta_word(n)) == testing_support::delta_perm(n));
  CHECK(delta_power_word(3, 2).size() == 4);
  CHECK(delta_power_word(3, -1) == invert_word(delta_word(3)));
  CHECK(delta_word(1).empty());
}

TEST_CASE("permutation image matches reference evaluation") {
  RandomSource rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.between(2, 7);
    const BraidWord w = rng.word(n, rng.below(12));
    const auto image = permutation_image(w);
    const auto ref = perm_of(w);
    REQUIRE(image.size() == static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) CHECK(image[i - 1] == ref[i]);
  }
}

TEST_CASE("random words are reproducible and in range") {
  CHECK(random_word(5, 30, 42) == random_word(5, 30, 42));
  CHECK(random_word(5, 0, 42).empty());
  CHECK_FALSE(random_word(5, 30, 42) == random_word(5, 30, 43));
  for (const auto& l : random_word(4, 200, 1).letters()) {
    CHECK(l.top() <= 4);
    CHECK(l.bottom() >= 1);
    CHECK(l.top() > l.bottom());
  }
  CHECK(random_word(1, 0, 1).empty());
  CHECK(code_of([] { random_word(1, 3, 1); }) == ErrorCode::invalid_argument);
}

TEST_CASE("mixing strand counts is an error") {
  CHECK(code_of([] { concat(BraidWord(3), BraidWord(4)); }) == ErrorCode::mismatched_strands);
}

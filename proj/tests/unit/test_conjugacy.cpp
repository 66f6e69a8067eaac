#include <doctest.h>

#include <algorithm>

#include "bandbraid/conjugacy.hpp"
#include "support.hpp"

using namespace bandbraid;

namespace {

constexpr const char* kFirst =
    "a(4,3)^-2 a(3,2) a(4,3)^-1 a(3,2) a(2,1)^3 a(3,2)^-1 a(2,1) a(3,2)^-1";
constexpr const char* kSecond =
    "a(4,3)^2 a(3,2)^-1 a(2,1)^3 a(3,2) a(4,3)^-1 a(2,1)^-1 a(3,2)^-2";

// z^{-1} x z
NormalForm conjugated(const NormalForm& x, const NormalForm& z) {
  return multiply(multiply(invert_normal_form(z), x), z);
}

bool is_conjugation(const NormalForm& input, const Conjugation& c) {
  return conjugated(input, c.conjugator) == c.result;
}

}  // namespace

TEST_CASE("cycling and decycling carry their conjugators") {
  RandomSource rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.between(2, 6);
    const NormalForm nf = left_canonical_form(rng.word(n, rng.below(14)));
    const auto c = cycle_with_conjugator(nf);
    const auto d = decycle_with_conjugator(nf);
    CHECK(is_conjugation(nf, c));
    CHECK(is_conjugation(nf, d));
    CHECK(c.result == cycle_once(nf));
    CHECK(d.result == decycle_once(nf));
    // Cycling never lowers inf, decycling never raises sup.
    CHECK(c.result.inf() >= nf.inf());
    CHECK(c.result.sup() <= nf.sup());
    CHECK(d.result.inf() >= nf.inf());
    CHECK(d.result.sup() <= nf.sup());
  }
  const NormalForm d3 = left_canonical_form(delta_word(3));
  CHECK(cycle_once(d3) == d3);
  CHECK(decycle_once(d3) == d3);
}

TEST_CASE("conjugation by a factor") {
  RandomSource rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.between(2, 5);
    const NormalForm nf = left_canonical_form(rng.word(n, rng.below(10)));
    const auto all = enumerate_factors(n);
    const auto& x = all[rng.below(all.size())];
    CHECK(conjugate_by_factor(nf, x) == conjugated(nf, normalize(n, 0, {x})));
  }
}

TEST_CASE("summit inf and sup are class invariants") {
  RandomSource rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.between(2, 5);
    const BraidWord w = rng.word(n, rng.below(12));
    const BraidWord z = rng.word(n, rng.below(6));
    const NormalForm nf = left_canonical_form(w);
    const NormalForm other = left_canonical_form(concat(concat(invert_word(z), w), z));
    const auto a = summit_representative(nf);
    const auto b = summit_representative(other);
    CHECK(is_conjugation(nf, a));
    CHECK(a.result.inf() == b.result.inf());
    CHECK(a.result.sup() == b.result.sup());
    CHECK(a.result.inf() >= nf.inf());
    CHECK(a.result.sup() <= nf.sup());
  }
}

TEST_CASE("super summit set invariants") {
  RandomSource rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.between(2, 4);
    const BraidWord w = rng.word(n, rng.below(10));
    const NormalForm nf = left_canonical_form(w);
    const SuperSummitSet sss = super_summit_set(nf);
    REQUIRE(sss.size() >= 1);
    CHECK(is_conjugation(nf, Conjugation{sss.elements()[0], sss.root_conjugator()}));
    const auto all = enumerate_factors(n);
    for (std::size_t i = 0; i < sss.size(); ++i) {
      const NormalForm& x = sss.elements()[i];
      CHECK(x.inf() == sss.inf());
      CHECK(x.sup() == sss.sup());
      CHECK(sss.index_of(x) == i);
      CHECK(sss.contains(tau_normal_form(x, 1)));
      CHECK(sss.contains(cycle_once(x)));
      CHECK(sss.contains(decycle_once(x)));
      CHECK(conjugated(sss.elements()[0], sss.path_from_root(i)) == x);
      // Closed: a factor conjugate with the same inf and sup stays inside.
      for (const auto& f : all) {
        const NormalForm y = conjugate_by_factor(x, f);
        if (y.inf() == sss.inf() && y.sup() == sss.sup()) CHECK(sss.contains(y));
        CHECK((y.inf() <= sss.inf() && y.sup() >= sss.sup()));
      }
    }
    // Rebuilt from any member and from any conjugate, the set is the same.
    const NormalForm& last = sss.elements().back();
    const SuperSummitSet again = super_summit_set(last);
    CHECK(again.size() == sss.size());
    for (const auto& x : sss.elements()) CHECK(again.contains(x));
    const BraidWord z = rng.word(n, rng.below(5));
    const SuperSummitSet moved = super_summit_set(left_canonical_form(concat(concat(invert_word(z), w), z)));
    CHECK(moved.size() == sss.size());
    for (const auto& x : sss.elements()) CHECK(moved.contains(x));
  }
}

TEST_CASE("central elements have singleton super summit sets") {
  for (int n = 2; n <= 6; ++n) {
    const SuperSummitSet sss = super_summit_set(left_canonical_form(delta_power_word(n, n)));
    CHECK(sss.size() == 1);
    CHECK(sss.inf() == n);
    CHECK(sss.sup() == n);
  }
}

TEST_CASE("the two four-strand braids are not conjugate") {
  const NormalForm first = left_canonical_form(parse_word(kFirst, 4));
  const NormalForm second = left_canonical_form(parse_word(kSecond, 4));
  const SuperSummitSet a = super_summit_set(first);
  const SuperSummitSet b = super_summit_set(second);
  CHECK(a.inf() == b.inf());
  CHECK(a.sup() == b.sup());
  CHECK(a.size() == b.size());
  CHECK(orbit_statistics(a) == orbit_statistics(b));
  for (const auto& x : a.elements()) CHECK_FALSE(b.contains(x));
  const auto result = are_conjugate(parse_word(kFirst, 4), parse_word(kSecond, 4));
  CHECK(result.verdict == ConjugacyVerdict::not_conjugate);
  CHECK_FALSE(result.certificate.has_value());
}

TEST_CASE("orbit statistics partition the set") {
  RandomSource rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.between(2, 4);
    const SuperSummitSet sss = super_summit_set(left_canonical_form(rng.word(n, rng.below(10))));
    const auto stats = orbit_statistics(sss);
    auto total = [](const std::vector<std::size_t>& v) {
      std::size_t s = 0;
      for (auto x : v) s += x;
      return s;
    };
    CHECK(total(stats.cycling_orbits) == sss.size());
    CHECK(total(stats.decycling_orbits) == sss.size());
    CHECK(total(stats.combined_orbits) == sss.size());
    CHECK(stats.combined_orbits.size() <= stats.cycling_orbits.size());
    CHECK(stats.cycling_periods.size() == stats.cycling_orbits.size());
    CHECK(std::is_sorted(stats.cycling_orbits.begin(), stats.cycling_orbits.end()));
  }
}

TEST_CASE("certificates conjugate the first braid into the second") {
  RandomSource rng(6);
  int conjugate = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.between(2, 4);
    const BraidWord w = rng.word(n, rng.below(9));
    const BraidWord v = rng.word(n, rng.below(7));
    const BraidWord target = concat(concat(invert_word(v), w), v);
    const auto result = are_conjugate(w, target);
    REQUIRE(result.verdict == ConjugacyVerdict::conjugate);
    REQUIRE(result.certificate.has_value());
    const BraidWord& z = *result.certificate;
    CHECK(equal(concat(concat(invert_word(z), w), z), target));
    ++conjugate;
  }
  CHECK(conjugate == 100);

  const BraidWord w = parse_word("a(3,1) a(2,1)^-1", 3);
  const auto self = are_conjugate(w, w);
  CHECK(self.verdict == ConjugacyVerdict::conjugate);
  REQUIRE(self.certificate.has_value());
  CHECK(equal(*self.certificate, BraidWord(3)));
}

TEST_CASE("different permutation cycle types are not conjugate") {
  const auto result = are_conjugate(parse_word("a(2,1)", 3), parse_word("a(2,1) a(3,2)", 3));
  CHECK(result.verdict == ConjugacyVerdict::not_conjugate);
  CHECK(are_conjugate(parse_word("a(2,1)", 3), parse_word("a(3,2)", 3)).verdict ==
        ConjugacyVerdict::conjugate);
}

TEST_CASE("a tiny cap gives an undecided verdict") {
  ConjugacyCaps caps;
  caps.sss_elements = 2;
  const auto result = are_conjugate(parse_word(kFirst, 4), parse_word(kSecond, 4), caps);
  CHECK(result.verdict == ConjugacyVerdict::undecided);
  CHECK_THROWS_AS(super_summit_set(left_canonical_form(parse_word(kFirst, 4)), caps), Error);
  CHECK_THROWS_AS(are_conjugate(parse_word("a(2,1)", 3), parse_word("a(2,1)", 4)), Error);
}

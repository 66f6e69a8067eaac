#include <doctest.h>

#include "bandbraid/cross_check.hpp"
#include "bandbraid/normal_form.hpp"
#include "bandbraid/oracle.hpp"
#include "support.hpp"

using namespace bandbraid;
namespace ts = testing_support;

namespace {

CanonicalFactor factor(std::string_view text, int n) { return parse_factor(text, n); }

ts::Perm perm_of(const CanonicalFactor& a) {
  ts::Perm p(a.strands() + 1, 0);
  for (int i = 1; i <= a.strands(); ++i) p[i] = a.image(i);
  return p;
}

ts::Perm perm_of(const NormalForm& nf) { return ts::perm_of(to_word(nf)); }

bool oracle_equivalent(const BraidWord& p, const BraidWord& q) {
  return oracle::positively_equivalent(p, q) == oracle::Verdict::equivalent;
}

}  // namespace

TEST_CASE("delta-positive rewriting of inverse letters") {
  const auto [p1, q1] = to_delta_positive(parse_word("a(2,1)^-1", 3));
  CHECK(p1 == -1);
  CHECK(q1 == parse_word("a(3,2)", 3));
  // δ a21^{-1} = a32, i.e. δ ≐ a32 a21.
  CHECK(oracle_equivalent(delta_word(3), parse_word("a(3,2) a(2,1)", 3)));

  const auto [p2, q2] = to_delta_positive(parse_word("a(3,1)^-1", 4));
  CHECK(p2 == -1);
  CHECK(q2 == parse_word("a(4,3) a(2,1)", 4));
  CHECK(oracle_equivalent(delta_word(4), parse_word("a(4,3) a(2,1) a(3,1)", 4)));
  CHECK_FALSE(oracle_equivalent(delta_word(4), parse_word("a(4,3) a(3,1) a(3,1)", 4)));

  const BraidWord positive = parse_word("a(3,1) a(2,1) a(4,2)", 4);
  const auto [p3, q3] = to_delta_positive(positive);
  CHECK(p3 == 0);
  CHECK(q3 == positive);

  // Every inverse letter: δ^{-1} Q a_ts = e, checked on permutations and
  // as positive equivalence δ ≐ Q a_ts.
  for (int n = 2; n <= 5; ++n)
    for (int t = 2; t <= n; ++t)
      for (int s = 1; s < t; ++s) {
        BraidWord q = to_band_word(inverse_letter_factor(n, t, s));
        q.push_back(BandLetter(t, s));
        CHECK(ts::perm_of(q) == ts::delta_perm(n));
        if (n <= 4) CHECK(oracle_equivalent(delta_word(n), q));
      }
}

TEST_CASE("delta-positive form preserves the element") {
  RandomSource rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.between(2, 6);
    const BraidWord w = rng.word(n, rng.below(12));
    const auto [p, q] = to_delta_positive(w);
    CHECK(q.is_positive());
    BraidWord back = delta_power_word(n, p);
    back.append(q);
    CHECK(ts::perm_of(back) == ts::perm_of(w));
    if (n <= 4 && w.size() <= 6) CHECK(oracle::equal_via_oracle(back, w) == oracle::Verdict::equivalent);
  }
}

TEST_CASE("left_weight_pair") {
  const auto [a1, b1] = left_weight_pair(factor("(2,1)", 3), factor("(3,1)", 3));
  CHECK(a1.is_delta());
  CHECK(b1.is_identity());
  CHECK(ts::compose(perm_of(factor("(2,1)", 3)), perm_of(factor("(3,1)", 3))) == ts::delta_perm(3));

  const auto [a2, b2] = left_weight_pair(factor("(4,3)", 4), factor("(2,1)", 4));
  CHECK(a2 == factor("(4,3)(2,1)", 4));
  CHECK(b2.is_identity());

  for (int n = 1; n <= 5; ++n) {
    const auto all = enumerate_factors(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        const auto [a2_, b2_] = left_weight_pair(a, b);
        CHECK(ts::compose(perm_of(a2_), perm_of(b2_)) == ts::compose(perm_of(a), perm_of(b)));
        CHECK(a2_.length() + b2_.length() == a.length() + b.length());
        CHECK(is_left_weighted(a2_, b2_));
        if (is_left_weighted(a, b)) {
          CHECK(a2_ == a);
          CHECK(b2_ == b);
        }
        if (a.is_identity()) {
          CHECK(a2_ == b);
          CHECK(b2_.is_identity());
        }
      }
  }
}

TEST_CASE("left-weightedness two ways") {
  // R(A) ∩ S(B) = ∅ iff appending any b ∈ S(B) to A leaves [0,1].
  for (int n = 1; n <= 5; ++n) {
    const auto all = enumerate_factors(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        bool every_start_leaves = true;
        for (const auto& g : starting_set(b)) {
          ts::Perm letter = ts::identity_perm(n);
          std::swap(letter[g.t], letter[g.s]);
          const auto p = ts::compose(perm_of(a), letter);
          if (ts::is_canonical_perm(p) && ts::factor_length(p) == a.length() + 1) every_start_leaves = false;
        }
        CHECK(is_left_weighted(a, b) == every_start_leaves);
      }
  }
}

TEST_CASE("AB, BC canonical: A weights C iff AB does") {
  for (int n = 1; n <= 4; ++n) {
    const auto all = enumerate_factors(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        const auto ab = try_multiply(a, b);
        if (!ab) continue;
        for (const auto& c : all) {
          if (!try_multiply(b, c)) continue;
          CHECK(is_left_weighted(a, c) == is_left_weighted(*ab, c));
        }
      }
  }
}

TEST_CASE("the head of a left-weighted pair is maximal") {
  // If A ⌈ B and a canonical factor X is a prefix of AB, then X is a prefix of A.
  for (int n = 2; n <= 4; ++n) {
    const auto all = enumerate_factors(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        if (!is_left_weighted(a, b)) continue;
        const NormalForm ab = normalize(n, 0, {a, b});
        for (const auto& x : all) {
          const NormalForm rest = multiply(invert_normal_form(normalize(n, 0, {x})), ab);
          if (rest.inf() < 0) continue;  // x is not a prefix of AB
          CHECK(ts::is_prefix(perm_of(x), perm_of(a)));
        }
      }
  }
}

TEST_CASE("normal form examples") {
  const NormalForm garside = left_canonical_form(parse_word("s1 s2 s1", 3));
  CHECK(garside.power() == 1);
  REQUIRE(garside.factors().size() == 1);
  CHECK(garside.factors()[0] == factor("(3,2)", 3));
  CHECK(garside.inf() == 1);
  CHECK(garside.sup() == 2);
  BraidWord lifted = delta_word(3);
  lifted.push_back(BandLetter(3, 2));
  CHECK(oracle_equivalent(lifted, parse_word("s1 s2 s1", 3)));

  const NormalForm e = left_canonical_form(BraidWord(4));
  CHECK(e.power() == 0);
  CHECK(e.factors().empty());
  CHECK(e.inf() == 0);
  CHECK(e.sup() == 0);

  for (int n = 2; n <= 7; ++n) {
    const NormalForm central = left_canonical_form(delta_power_word(n, n));
    CHECK(central.power() == n);
    CHECK(central.factors().empty());
  }
  const NormalForm d = left_canonical_form(delta_word(4));
  CHECK(d.inf() == 1);
  CHECK(d.sup() == 1);
  CHECK(render(garside) == "D^1 . (3,2)");
  CHECK(render(e) == "D^0 .");
}

TEST_CASE("equality decisions") {
  CHECK(equal(parse_word("s1 s2 s1", 3), parse_word("s2 s1 s2", 3)));
  CHECK_FALSE(equal(parse_word("a(2,1)", 3), parse_word("a(3,2)", 3)));
  RandomSource rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.between(2, 6);
    const BraidWord w = rng.word(n, rng.below(14));
    BraidWord padded = w;
    padded.append(parse_word("a(2,1) a(2,1)^-1", n));
    CHECK(equal(w, padded));
    CHECK(equal(w, w));
  }
  CHECK_THROWS_AS(equal(BraidWord(3), BraidWord(4)), Error);
}

TEST_CASE("normal forms satisfy their invariants") {
  RandomSource rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.between(2, 8);
    const BraidWord w = rng.word(n, rng.below(30));
    const NormalForm nf = left_canonical_form(w);
    CHECK_NOTHROW(NormalForm::from_canonical(n, nf.power(), nf.factors()));
    CHECK(perm_of(nf) == ts::perm_of(w));
    for (std::size_t i = 0; i + 1 < nf.factors().size(); ++i) {
      const auto r = complement_set(nf.factors()[i]);
      for (const auto& g : starting_set(nf.factors()[i + 1])) CHECK_FALSE(r.contains(g));
    }
  }
  CHECK_THROWS_AS(NormalForm::from_canonical(3, 0, {CanonicalFactor::delta(3)}), Error);
  CHECK_THROWS_AS(NormalForm::from_canonical(3, 0, {factor("(2,1)", 3), factor("(3,1)", 3)}), Error);
}

TEST_CASE("normal form is invariant under rewriting") {
  RandomSource rng(123);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.between(2, 6);
    const BraidWord w = rng.word(n, rng.below(17));
    const BraidWord m = mutate_word(w, rng, rng.between(1, 10));
    CHECK(left_canonical_form(w) == left_canonical_form(m));
  }
}

TEST_CASE("agrees with positive equivalence on short positive words in B4") {
  const auto report = cross_check_positive(4, 3);
  CHECK(report.disagreements.empty());
  CHECK(report.words == 1 + 6 + 36 + 216);
}

TEST_CASE("inversion") {
  const NormalForm d = invert_normal_form(left_canonical_form(delta_word(4)));
  CHECK(d.power() == -1);
  CHECK(d.factors().empty());

  const auto a = factor("(4,2,1)", 4);
  const NormalForm single = invert_normal_form(normalize(4, 0, {a}));
  CHECK(single.power() == -1);
  REQUIRE(single.factors().size() == 1);
  CHECK(single.factors()[0] == tau_factor(right_complement(a), -1));

  RandomSource rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const BraidWord w = rng.word(4, rng.below(13));
    const NormalForm nf = left_canonical_form(w);
    const NormalForm inv = invert_normal_form(nf);
    CHECK(invert_normal_form(inv) == nf);
    CHECK(inv == left_canonical_form(invert_word(w)));
    CHECK_NOTHROW(NormalForm::from_canonical(4, inv.power(), inv.factors()));
    const NormalForm one = multiply(nf, inv);
    CHECK(one.power() == 0);
    CHECK(one.factors().empty());
  }
}

TEST_CASE("multiplication bounds inf and sup") {
  RandomSource rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.between(2, 6);
    const BraidWord v = rng.word(n, rng.below(12));
    const BraidWord w = rng.word(n, rng.below(12));
    const NormalForm a = left_canonical_form(v), b = left_canonical_form(w);
    const NormalForm ab = multiply(a, b);
    CHECK(ab == left_canonical_form(concat(v, w)));
    CHECK(ab.inf() >= a.inf() + b.inf());
    CHECK(ab.sup() <= a.sup() + b.sup());
  }
}

TEST_CASE("tau on normal forms") {
  RandomSource rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.between(2, 6);
    const BraidWord w = rng.word(n, rng.below(12));
    CHECK(tau_normal_form(left_canonical_form(w), 1) == left_canonical_form(tau_shift(w, 1)));
  }
}

TEST_CASE("normalizer matches batch normalization") {
  RandomSource rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.between(2, 6);
    const BraidWord w = rng.word(n, rng.below(12));
    const auto dp = delta_positive_factors(w);
    Normalizer sweep(n, dp.power);
    for (const auto& f : dp.factors) sweep.push(f);
    CHECK(std::move(sweep).finish() == left_canonical_form(w));
  }
}

TEST_CASE("parse_normal_form round trips") {
  RandomSource rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.between(2, 7);
    const NormalForm nf = left_canonical_form(rng.word(n, rng.below(16)));
    CHECK(parse_normal_form(render(nf), n) == nf);
  }
  // Input need not be canonical; it is re-normalized.
  CHECK(parse_normal_form("D^0 . (2,1) . (3,1)", 3) == left_canonical_form(delta_word(3)));
  CHECK(parse_normal_form("  D^-2 .  ", 3).power() == -2);
  auto position = [](std::string_view text) -> std::optional<std::size_t> {
    try {
      parse_normal_form(text, 3);
    } catch (const Error& e) {
      return e.position();
    }
    return std::nullopt;
  };
  CHECK(position("X^1 .") == 0u);
  CHECK(position("D^x .") == 2u);
  CHECK(position("D^1 (3,2)") == 4u);
  CHECK(position("D^1 . (3,2) .") == 12u);
  CHECK(position("D^1 . (2,3)").has_value());
}

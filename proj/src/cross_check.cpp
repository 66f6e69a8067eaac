#include "bandbraid/cross_check.hpp"

#include <optional>
#include <unordered_map>

#include "bandbraid/normal_form.hpp"

namespace bandbraid {

namespace {

std::string key_of(const BraidWord& w) {
  std::string k;
  k.reserve(2 * w.size());
  for (const auto& l : w.letters()) {
    k.push_back(static_cast<char>(l.top()));
    k.push_back(static_cast<char>(l.bottom()));
  }
  return k;
}

}  // namespace

CrossCheckReport cross_check_positive(int n, std::size_t max_length, std::size_t cap) {
  CrossCheckReport report;
  report.strands = n;
  report.max_length = max_length;
  for (std::size_t length = 0; length <= max_length; ++length) {
    const auto words = oracle::all_positive_words(n, length);
    report.words += words.size();
    report.pairs += words.size() * (words.size() + 1) / 2;

    std::unordered_map<std::string, std::size_t> oracle_label;
    std::vector<std::size_t> labels(words.size());
    std::vector<std::size_t> first_of_class;
    for (std::size_t i = 0; i < words.size(); ++i) {
      auto it = oracle_label.find(key_of(words[i]));
      if (it == oracle_label.end()) {
        const auto cls = oracle::positive_class(words[i], cap);
        for (const auto& m : cls.members()) oracle_label.emplace(key_of(m), first_of_class.size());
        first_of_class.push_back(i);
        it = oracle_label.find(key_of(words[i]));
      }
      labels[i] = it->second;
    }
    report.classes += first_of_class.size();

    // Each oracle class must map to one normal form, and no two classes to the same one.
    std::vector<std::optional<NormalForm>> class_form(first_of_class.size());
    std::unordered_map<NormalForm, std::size_t> form_owner;
    for (std::size_t i = 0; i < words.size(); ++i) {
      NormalForm nf = left_canonical_form(words[i]);
      auto& slot = class_form[labels[i]];
      if (!slot) {
        slot = nf;
        auto [owner, fresh] = form_owner.emplace(nf, labels[i]);
        if (!fresh) report.disagreements.emplace_back(words[first_of_class[owner->second]], words[i]);
      } else if (!(*slot == nf)) {
        report.disagreements.emplace_back(words[first_of_class[labels[i]]], words[i]);
      }
    }
  }
  return report;
}

BraidWord mutate_word(const BraidWord& w, RandomSource& rng, int steps) {
  const int n = w.strands();
  std::vector<BandLetter> letters(w.letters().begin(), w.letters().end());
  for (int step = 0; step < steps; ++step) {
    if (n < 2) break;
    if (letters.size() < 2 || rng.below(2) == 0) {
      const BandLetter g = rng.letter(n);
      const auto at = static_cast<std::ptrdiff_t>(rng.below(letters.size() + 1));
      letters.insert(letters.begin() + at, {g, g.inverse()});
      continue;
    }
    const std::size_t at = rng.below(letters.size() - 1);
    if (!letters[at].positive() || !letters[at + 1].positive()) continue;
    const auto options = oracle::relation_neighbors(BraidWord(n, {letters[at], letters[at + 1]}));
    if (options.empty()) continue;
    const BraidWord& pick = options[rng.below(options.size())];
    letters[at] = pick[0];
    letters[at + 1] = pick[1];
  }
  return BraidWord(n, std::move(letters));
}

CrossCheckReport cross_check_random(int n, std::size_t trials, std::size_t max_length,
                                    std::uint64_t seed, std::size_t cap) {
  CrossCheckReport report;
  report.strands = n;
  report.max_length = max_length;
  RandomSource rng(seed);
  const int top = static_cast<int>(max_length);
  for (std::size_t i = 0; i < trials; ++i) {
    const BraidWord v = rng.word(n, static_cast<std::size_t>(rng.between(0, top)));
    BraidWord w(n);
    switch (i % 3) {
      case 0: w = rng.word(n, static_cast<std::size_t>(rng.between(0, top))); break;
      case 1: w = mutate_word(v, rng, rng.between(1, 4)); break;
      default: w = to_word(left_canonical_form(v)); break;
    }
    report.words += 2;
    ++report.pairs;
    const auto verdict = oracle::equal_via_oracle(v, w, cap);
    if (verdict == oracle::Verdict::undecided) {
      ++report.undecided;
      continue;
    }
    if ((verdict == oracle::Verdict::equivalent) != equal(v, w)) report.disagreements.emplace_back(v, w);
  }
  return report;
}

}  // namespace bandbraid

#include "bandbraid/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace bandbraid::oracle {

namespace {

using Encoded = std::string;

/// Positive generators of B_n as single-byte codes, with the relation table
/// for every ordered pair of adjacent codes.
class Alphabet {
 public:
  explicit Alphabet(int n) : n_(n) {
    require_valid_strands(n);
    if (n > 22) throw Error(ErrorCode::invalid_argument, "oracle supports n <= 22");
    code_of_.assign((n + 1) * (n + 1), -1);
    for (int t = 2; t <= n; ++t)
      for (int s = 1; s < t; ++s) {
        code_of_[t * (n + 1) + s] = static_cast<int>(pairs_.size());
        pairs_.push_back({t, s});
      }
    const std::size_t g = pairs_.size();
    rewrites_.resize(g * g);
    for (std::size_t x = 0; x < g; ++x)
      for (std::size_t y = 0; y < g; ++y) build_rewrites(x, y);
  }

  int strands() const { return n_; }
  std::size_t size() const { return pairs_.size(); }
  char code(int t, int s) const { return static_cast<char>(code_of_[t * (n_ + 1) + s]); }
  std::pair<int, int> pair(char c) const { return pairs_[static_cast<unsigned char>(c)]; }

  const std::vector<std::pair<char, char>>& rewrites(char x, char y) const {
    return rewrites_[static_cast<unsigned char>(x) * pairs_.size() + static_cast<unsigned char>(y)];
  }

  Encoded encode(const BraidWord& w) const {
    if (w.strands() != n_) throw Error(ErrorCode::mismatched_strands, "word on the wrong strand count");
    Encoded out;
    out.reserve(w.size());
    for (const auto& l : w.letters()) {
      if (!l.positive()) throw Error(ErrorCode::not_positive, "oracle words must be positive");
      out.push_back(code(l.top(), l.bottom()));
    }
    return out;
  }

  BraidWord decode(const Encoded& e) const {
    BraidWord w(n_);
    for (char c : e) {
      auto [t, s] = pair(c);
      w.push_back(BandLetter(t, s));
    }
    return w;
  }

  std::vector<int> permutation(const Encoded& e) const {
    std::vector<int> at(n_ + 1);  // at[p]: strand currently at position p
    std::iota(at.begin(), at.end(), 0);
    for (char c : e) {
      auto [t, s] = pair(c);
      std::swap(at[t], at[s]);
    }
    return at;
  }

 private:
  void build_rewrites(std::size_t x, std::size_t y) {
    auto [t1, s1] = pairs_[x];
    auto [t2, s2] = pairs_[y];
    auto& out = rewrites_[x * pairs_.size() + y];
    if (static_cast<long>(t1 - t2) * (t1 - s2) * (s1 - t2) * (s1 - s2) > 0) {
      out.push_back({static_cast<char>(y), static_cast<char>(x)});
      return;
    }
    // The three spellings of one relation: a_ts a_sr, a_tr a_ts, a_sr a_tr.
    int t = 0, s = 0, r = 0;
    if (s1 == t2) {
      t = t1, s = s1, r = s2;
    } else if (t1 == t2 && s1 < s2) {
      t = t1, s = s2, r = s1;
    } else if (s1 == s2 && t1 < t2) {
      t = t2, s = t1, r = s1;
    } else {
      return;
    }
    const std::pair<char, char> forms[3] = {{code(t, s), code(s, r)},
                                            {code(t, r), code(t, s)},
                                            {code(s, r), code(t, r)}};
    for (const auto& f : forms)
      if (f.first != static_cast<char>(x) || f.second != static_cast<char>(y)) out.push_back(f);
  }

  int n_;
  std::vector<int> code_of_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::vector<std::pair<char, char>>> rewrites_;
};

const Alphabet& alphabet_for(int n) {
  thread_local std::map<int, Alphabet> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, Alphabet(n)).first;
  return it->second;
}

template <class Visit>
void for_each_neighbor(const Alphabet& alpha, const Encoded& w, Visit&& visit) {
  Encoded next = w;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    for (const auto& [a, b] : alpha.rewrites(w[i], w[i + 1])) {
      next[i] = a;
      next[i + 1] = b;
      visit(next);
    }
    next[i] = w[i];
    next[i + 1] = w[i + 1];
  }
}

BandLetter shifted(const BandLetter& l, int n, int k) {
  auto wrap = [&](int i) { return static_cast<int>(((i - 1 + k) % n + n) % n) + 1; };
  const int a = wrap(l.top());
  const int b = wrap(l.bottom());
  return a > b ? BandLetter(a, b, l.sign()) : BandLetter(b, a, l.sign());
}

BraidWord delta_letters(int n, int power) {
  BraidWord out(n);
  for (int k = 0; k < power; ++k)
    for (int t = n; t >= 2; --t) out.push_back(BandLetter(t, t - 1));
  return out;
}

}  // namespace

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::equivalent: return "equivalent";
    case Verdict::not_equivalent: return "not_equivalent";
    case Verdict::undecided: return "undecided";
  }
  return "unknown";
}

std::vector<BraidWord> relation_neighbors(const BraidWord& p) {
  if (!p.is_positive()) throw Error(ErrorCode::not_positive, "relation_neighbors needs a positive word");
  const Alphabet& alpha = alphabet_for(p.strands());
  const Encoded w = alpha.encode(p);
  std::vector<Encoded> found;
  for_each_neighbor(alpha, w, [&](const Encoded& e) {
    if (e != w) found.push_back(e);
  });
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<BraidWord> out;
  out.reserve(found.size());
  for (const auto& e : found) out.push_back(alpha.decode(e));
  return out;
}

bool EquivalenceClass::contains(const BraidWord& w) const {
  return std::binary_search(members_.begin(), members_.end(), w,
                            [](const BraidWord& a, const BraidWord& b) {
                              return std::lexicographical_compare(a.letters().begin(), a.letters().end(),
                                                                  b.letters().begin(), b.letters().end());
                            });
}

EquivalenceClass positive_class(const BraidWord& p, std::size_t cap, std::size_t radius) {
  if (!p.is_positive()) throw Error(ErrorCode::not_positive, "positive_class needs a positive word");
  const Alphabet& alpha = alphabet_for(p.strands());
  const Encoded start = alpha.encode(p);
  std::unordered_set<Encoded> seen{start};
  std::vector<Encoded> frontier{start};
  std::size_t depth = 0;
  bool complete = false;
  while (true) {
    if (frontier.empty()) {
      complete = true;
      break;
    }
    if (depth == radius) break;
    std::vector<Encoded> next;
    for (const auto& w : frontier) {
      for_each_neighbor(alpha, w, [&](const Encoded& e) {
        if (seen.insert(e).second) next.push_back(e);
      });
      if (seen.size() > cap) {
        std::ostringstream msg;
        msg << "equivalence class exceeded " << cap << " words";
        throw Error(ErrorCode::cap_exceeded, msg.str());
      }
    }
    frontier.swap(next);
    if (!frontier.empty()) ++depth;
  }

  std::vector<Encoded> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end(), [&](const Encoded& a, const Encoded& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [&](char x, char y) { return alpha.pair(x) < alpha.pair(y); });
  });
  EquivalenceClass out(p);
  out.members_.reserve(sorted.size());
  for (const auto& e : sorted) out.members_.push_back(alpha.decode(e));
  out.radius_ = complete ? kUnboundedRadius : depth;
  out.complete_ = complete;
  return out;
}

Verdict positively_equivalent(const BraidWord& p, const BraidWord& q, std::size_t cap) {
  require_same_strands(p, q);
  const Alphabet& alpha = alphabet_for(p.strands());
  Encoded a = alpha.encode(p);
  Encoded b = alpha.encode(q);
  if (a.size() != b.size()) return Verdict::not_equivalent;
  if (a == b) return Verdict::equivalent;
  // The monoid is cancellative on both sides, so shared prefixes and suffixes
  // can be dropped before searching.
  const auto head = std::mismatch(a.begin(), a.end(), b.begin()).first - a.begin();
  const auto tail = std::mismatch(a.rbegin(), a.rend() - head, b.rbegin()).first - a.rbegin();
  a = a.substr(head, a.size() - head - tail);
  b = b.substr(head, b.size() - head - tail);
  // Relations preserve the permutation image.
  if (alpha.permutation(a) != alpha.permutation(b)) return Verdict::not_equivalent;

  struct Side {
    std::unordered_set<Encoded> seen;
    std::vector<Encoded> frontier;
  };
  Side sides[2] = {{{a}, {a}}, {{b}, {b}}};
  while (true) {
    const int grow = sides[0].frontier.size() <= sides[1].frontier.size() ? 0 : 1;
    Side& mine = sides[grow];
    const Side& other = sides[1 - grow];
    std::vector<Encoded> next;
    bool met = false;
    for (const auto& w : mine.frontier) {
      for_each_neighbor(alpha, w, [&](const Encoded& e) {
        if (met) return;
        if (other.seen.contains(e)) {
          met = true;
          return;
        }
        if (mine.seen.insert(e).second) next.push_back(e);
      });
      if (met) return Verdict::equivalent;
      if (sides[0].seen.size() + sides[1].seen.size() > cap) return Verdict::undecided;
    }
    if (next.empty()) return Verdict::not_equivalent;  // this side's class is closed
    mine.frontier.swap(next);
  }
}

BraidWord delta_starting_with(int n, int t, int s) {
  BraidWord out(n);
  out.push_back(BandLetter(t, s));
  for (int i = n; i >= t + 2; --i) out.push_back(BandLetter(i, i - 1));
  if (t < n) out.push_back(BandLetter(t + 1, s));
  for (int i = s; i >= 2; --i) out.push_back(BandLetter(i, i - 1));
  for (int i = t; i >= s + 2; --i) out.push_back(BandLetter(i, i - 1));
  return out;
}

BraidWord delta_ending_with(int n, int t, int s) {
  BraidWord out(n);
  for (int i = n; i >= t + 1; --i) out.push_back(BandLetter(i, i - 1));
  if (s > 1) out.push_back(BandLetter(t, s - 1));
  for (int i = s - 1; i >= 2; --i) out.push_back(BandLetter(i, i - 1));
  for (int i = t - 1; i >= s + 1; --i) out.push_back(BandLetter(i, i - 1));
  out.push_back(BandLetter(t, s));
  return out;
}

DeltaForm delta_form(const BraidWord& w) {
  const int n = w.strands();
  const auto letters = w.letters();
  // A literal run a21^-1 a32^-1 ... a_{n(n-1)}^-1 is δ^{-1} itself and
  // contributes no positive letters.
  auto inverse_delta_at = [&](std::size_t i) {
    if (n < 2 || i + static_cast<std::size_t>(n - 1) > letters.size()) return false;
    for (int k = 0; k < n - 1; ++k)
      if (letters[i + k] != BandLetter(k + 2, k + 1, -1)) return false;
    return true;
  };
  // Each token is one δ^{-1} (whole run or single inverse letter) or one positive letter.
  struct Token {
    std::size_t at;
    bool whole_delta;
  };
  std::vector<Token> tokens;
  int remaining = 0;
  for (std::size_t i = 0; i < letters.size();) {
    if (inverse_delta_at(i)) {
      tokens.push_back({i, true});
      ++remaining;
      i += static_cast<std::size_t>(n - 1);
      continue;
    }
    if (!letters[i].positive()) ++remaining;
    tokens.push_back({i, false});
    ++i;
  }

  DeltaForm out{-remaining, BraidWord(n)};
  for (const auto& tok : tokens) {
    const BandLetter& l = letters[tok.at];
    if (!tok.whole_delta && l.positive()) {
      out.positive.push_back(shifted(l, n, -remaining));
      continue;
    }
    --remaining;
    if (tok.whole_delta) continue;
    const BraidWord rewrite = delta_ending_with(n, l.top(), l.bottom());
    for (std::size_t i = 0; i + 1 < rewrite.size(); ++i)
      out.positive.push_back(shifted(rewrite[i], n, -remaining));
  }
  return out;
}

namespace {

std::pair<BraidWord, BraidWord> lifted_pair(const BraidWord& v, const BraidWord& w) {
  DeltaForm dv = delta_form(v);
  DeltaForm dw = delta_form(w);
  if (dv.power > dw.power) std::swap(dv, dw);
  BraidWord lifted = delta_letters(v.strands(), dw.power - dv.power);
  lifted.append(dw.positive);
  return {std::move(dv.positive), std::move(lifted)};
}

}  // namespace

Verdict equal_via_oracle(const BraidWord& v, const BraidWord& w, std::size_t cap) {
  require_same_strands(v, w);
  const BraidWord rv = free_reduce(v);
  const BraidWord rw = free_reduce(w);
  // v = w iff v^{-1} = w^{-1}; search whichever pair lifts to shorter words.
  auto direct = lifted_pair(rv, rw);
  auto inverted = lifted_pair(invert_word(rv), invert_word(rw));
  auto& best = inverted.first.size() + inverted.second.size() < direct.first.size() + direct.second.size()
                   ? inverted
                   : direct;
  return positively_equivalent(best.first, best.second, cap);
}

std::vector<BraidWord> all_positive_words(int n, std::size_t length) {
  const Alphabet& alpha = alphabet_for(n);
  const std::size_t g = alpha.size();
  std::vector<BraidWord> out;
  if (g == 0) {
    if (length == 0) out.emplace_back(n);
    return out;
  }
  std::vector<std::size_t> digits(length, 0);
  while (true) {
    Encoded e(length, 0);
    for (std::size_t i = 0; i < length; ++i) e[i] = static_cast<char>(digits[i]);
    out.push_back(alpha.decode(e));
    std::size_t i = length;
    while (i > 0 && ++digits[i - 1] == g) digits[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

CancellationReport cancellation_check(int n, std::size_t bound, std::size_t cap) {
  const Alphabet& alpha = alphabet_for(n);
  CancellationReport report;
  report.strands = n;
  report.bound = bound;

  // Class label for every positive word of a given length.
  auto label_all = [&](std::size_t length) {
    std::unordered_map<Encoded, int> label;
    int next_label = 0;
    for (const auto& word : all_positive_words(n, length)) {
      const Encoded start = alpha.encode(word);
      if (label.contains(start)) continue;
      std::vector<Encoded> stack{start};
      label.emplace(start, next_label);
      while (!stack.empty()) {
        const Encoded w = std::move(stack.back());
        stack.pop_back();
        for_each_neighbor(alpha, w, [&](const Encoded& e) {
          if (label.emplace(e, next_label).second) stack.push_back(e);
        });
        if (label.size() > cap) throw Error(ErrorCode::cap_exceeded, "cancellation check exceeded the node cap");
      }
      ++next_label;
    }
    return label;
  };

  const std::size_t g = alpha.size();
  auto shorter = label_all(0);
  for (std::size_t length = 0; length <= bound; ++length) {
    auto longer = label_all(length + 1);
    const auto words = all_positive_words(n, length);
    report.words_examined += words.size();
    report.pairs_checked += 2 * g * words.size() * words.size();
    for (std::size_t c = 0; c < g; ++c) {
      const char a = static_cast<char>(c);
      for (const bool left : {true, false}) {
        // For each class of the extended word, the first X that reached it.
        std::unordered_map<int, Encoded> first_seen;
        for (const auto& word : words) {
          const Encoded x = alpha.encode(word);
          const Encoded ext = left ? Encoded(1, a) + x : x + Encoded(1, a);
          const int cls = longer.at(ext);
          auto [it, fresh] = first_seen.emplace(cls, x);
          if (!fresh && shorter.at(it->second) != shorter.at(x)) {
            auto [t, s] = alpha.pair(a);
            report.counterexamples.push_back(
                {BandLetter(t, s), alpha.decode(it->second), alpha.decode(x), left});
          }
        }
      }
    }
    shorter = std::move(longer);
  }
  return report;
}

}  // namespace bandbraid::oracle

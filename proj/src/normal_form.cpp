#include "bandbraid/normal_form.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace bandbraid {

namespace {

CanonicalFactor letter_factor(int n, int t, int s) {
  std::vector<int> table(n);
  std::iota(table.begin(), table.end(), 0);
  std::swap(table[t - 1], table[s - 1]);
  return CanonicalFactor::from_table_unchecked(std::move(table));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

NormalForm::NormalForm(int strands, int power) : strands_(strands), power_(power) {
  require_valid_strands(strands);
}

NormalForm NormalForm::from_canonical(int strands, int power,
                                      std::vector<CanonicalFactor> factors) {
  require_valid_strands(strands);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].strands() != strands)
      throw Error(ErrorCode::mismatched_strands, "factor strand count differs from the form");
    if (factors[i].is_identity() || factors[i].is_delta())
      throw Error(ErrorCode::invalid_argument, "left-canonical factors must lie strictly between e and δ");
    if (i && !is_left_weighted(factors[i - 1], factors[i]))
      throw Error(ErrorCode::invalid_argument, "adjacent factors are not left-weighted");
  }
  return NormalForm(strands, power, std::move(factors));
}

std::size_t NormalForm::hash() const noexcept {
  std::size_t h = std::hash<int>{}(power_) ^ (static_cast<std::size_t>(strands_) << 32);
  for (const auto& f : factors_) h = h * 1000003ULL ^ f.hash();
  return h;
}

Normalizer::Normalizer(int strands, int power) : strands_(strands), power_(power) {
  require_valid_strands(strands);
}

Normalizer::Normalizer(NormalForm start)
    : strands_(start.strands_), power_(start.power_), factors_(std::move(start.factors_)) {}

void Normalizer::push(const CanonicalFactor& factor) {
  if (factor.strands() != strands_)
    throw Error(ErrorCode::mismatched_strands, "factor strand count differs from the form");
  if (factor.is_identity()) return;
  factors_.push_back(factor);
  // The prefix was left-weighted; re-weighting pairs right to left keeps the
  // pairs to the right left-weighted, so the sweep never looks forward again.
  for (std::size_t i = factors_.size() - 1; i > 0; --i) {
    auto [head, tail] = left_weight_pair(factors_[i - 1], factors_[i]);
    if (head == factors_[i - 1]) break;
    factors_[i - 1] = std::move(head);
    factors_[i] = std::move(tail);
  }
  absorb_ends();
}

void Normalizer::push_delta_power(int k) {
  if (k == 0) return;
  for (auto& f : factors_) f = tau_factor(f, k);
  power_ += k;
}

void Normalizer::absorb_ends() {
  // δ can only surface at the front and e only at the back of a left-weighted
  // sequence.
  std::size_t leading = 0;
  while (leading < factors_.size() && factors_[leading].is_delta()) ++leading;
  if (leading) {
    factors_.erase(factors_.begin(), factors_.begin() + static_cast<std::ptrdiff_t>(leading));
    power_ += static_cast<int>(leading);
  }
  while (!factors_.empty() && factors_.back().is_identity()) factors_.pop_back();
}

NormalForm Normalizer::finish() && {
  return NormalForm(strands_, power_, std::move(factors_));
}

CanonicalFactor inverse_letter_factor(int n, int t, int s) {
  std::vector<DescendingCycle> cycles;
  std::vector<int> outer;
  for (int i = n; i >= t; --i) outer.push_back(i);
  for (int i = s - 1; i >= 1; --i) outer.push_back(i);
  std::vector<int> inner;
  for (int i = t - 1; i >= s; --i) inner.push_back(i);
  if (outer.size() >= 2) cycles.emplace_back(std::move(outer));
  if (inner.size() >= 2) cycles.emplace_back(std::move(inner));
  return CanonicalFactor::from_cycles(n, cycles);
}

DeltaPositive delta_positive_factors(const BraidWord& w) {
  const int n = w.strands();
  DeltaPositive out{0, {}};
  out.factors.reserve(w.size());
  int negatives_after = 0;
  for (const auto& l : w.letters())
    if (!l.positive()) ++negatives_after;
  out.power = -negatives_after;
  for (const auto& l : w.letters()) {
    if (l.positive()) {
      out.factors.push_back(tau_factor(letter_factor(n, l.top(), l.bottom()), -negatives_after));
    } else {
      --negatives_after;
      out.factors.push_back(
          tau_factor(inverse_letter_factor(n, l.top(), l.bottom()), -negatives_after));
    }
  }
  return out;
}

std::pair<int, BraidWord> to_delta_positive(const BraidWord& w) {
  const auto dp = delta_positive_factors(w);
  BraidWord q(w.strands());
  for (const auto& f : dp.factors) q.append(to_band_word(f));
  return {dp.power, std::move(q)};
}

std::pair<CanonicalFactor, CanonicalFactor> left_weight_pair(const CanonicalFactor& a,
                                                              const CanonicalFactor& b) {
  require_same_strands(a, b);
  const CanonicalFactor c = meet(right_complement(a), b);
  if (c.is_identity()) return {a, b};
  const int n = a.strands();
  const auto ta = a.table(), tb = b.table(), tc = c.table();
  std::vector<int> head(n), c_inv(n), tail(n);
  for (int i = 0; i < n; ++i) head[i] = tc[ta[i]];
  for (int i = 0; i < n; ++i) c_inv[tc[i]] = i;
  for (int j = 0; j < n; ++j) tail[j] = tb[c_inv[j]];
  return {CanonicalFactor::from_table_unchecked(std::move(head)),
          CanonicalFactor::from_table_unchecked(std::move(tail))};
}

bool is_left_weighted(const CanonicalFactor& a, const CanonicalFactor& b) {
  require_same_strands(a, b);
  const auto r = complement_set(a);
  const auto s = starting_set(b);
  return std::none_of(s.begin(), s.end(), [&](const GeneratorPair& p) { return r.contains(p); });
}

NormalForm normalize(int strands, int power, const std::vector<CanonicalFactor>& factors) {
  Normalizer sweep(strands, power);
  for (const auto& f : factors) sweep.push(f);
  return std::move(sweep).finish();
}

NormalForm left_canonical_form(const BraidWord& w) {
  const auto dp = delta_positive_factors(w);
  return normalize(w.strands(), dp.power, dp.factors);
}

bool equal(const BraidWord& v, const BraidWord& w) {
  require_same_strands(v, w);
  return left_canonical_form(v) == left_canonical_form(w);
}

NormalForm tau_normal_form(const NormalForm& nf, int k) {
  std::vector<CanonicalFactor> shifted;
  shifted.reserve(nf.factors().size());
  for (const auto& f : nf.factors()) shifted.push_back(tau_factor(f, k));
  return NormalForm(nf.strands(), nf.power(), std::move(shifted));
}

NormalForm multiply(const NormalForm& a, const NormalForm& b) {
  if (a.strands() != b.strands())
    throw Error(ErrorCode::mismatched_strands, "normal forms on different strand counts");
  Normalizer sweep(a);
  sweep.push_delta_power(b.power());
  for (const auto& f : b.factors()) sweep.push(f);
  return std::move(sweep).finish();
}

NormalForm invert_normal_form(const NormalForm& nf) {
  const int u = nf.power();
  const int k = nf.canonical_length();
  std::vector<CanonicalFactor> out;
  out.reserve(k);
  for (int j = k; j >= 1; --j)
    out.push_back(tau_factor(right_complement(nf.factors()[j - 1]), -(u + j)));
  return NormalForm(nf.strands(), -(u + k), std::move(out));
}

BraidWord to_word(const NormalForm& nf) {
  BraidWord out = delta_power_word(nf.strands(), nf.power());
  for (const auto& f : nf.factors()) out.append(to_band_word(f));
  return out;
}

std::string render(const NormalForm& nf) {
  std::string out = "D^" + std::to_string(nf.power()) + " .";
  for (std::size_t i = 0; i < nf.factors().size(); ++i) {
    out += i ? " . " : " ";
    out += render(nf.factors()[i]);
  }
  return out;
}

NormalForm parse_normal_form(std::string_view text, int n) {
  require_valid_strands(n);
  const std::string_view body = trim(text);
  const std::size_t base = static_cast<std::size_t>(body.data() - text.data());
  if (body.size() < 2 || body[0] != 'D' || body[1] != '^')
    throw Error(ErrorCode::syntax, "normal form must start with D^<integer>", base);
  std::size_t pos = 2;
  int power = 0;
  const char* first = body.data() + pos;
  if (pos < body.size() && body[pos] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, body.data() + body.size(), power);
  if (ec != std::errc())
    throw Error(ErrorCode::syntax, "expected integer exponent after D^", base + pos);
  pos = static_cast<std::size_t>(ptr - body.data());
  while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
  if (pos >= body.size() || body[pos] != '.')
    throw Error(ErrorCode::syntax, "expected '.' after the δ power", base + pos);
  ++pos;

  std::vector<CanonicalFactor> factors;
  while (pos < body.size()) {
    const std::size_t dot = body.find('.', pos);
    const std::size_t end = dot == std::string_view::npos ? body.size() : dot;
    const std::string_view piece = trim(body.substr(pos, end - pos));
    if (piece.empty())
      throw Error(ErrorCode::syntax, "empty factor in normal form", base + pos);
    try {
      factors.push_back(parse_factor(piece, n));
    } catch (const Error& e) {
      const std::size_t offset = base + static_cast<std::size_t>(piece.data() - body.data());
      throw Error(e.code(), e.what(), offset + e.position().value_or(0));
    }
    pos = dot == std::string_view::npos ? body.size() : dot + 1;
    if (dot != std::string_view::npos && trim(body.substr(pos)).empty())
      throw Error(ErrorCode::syntax, "trailing '.' in normal form", base + dot);
  }
  return normalize(n, power, factors);
}

}  // namespace bandbraid

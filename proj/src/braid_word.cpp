#include "bandbraid/braid_word.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

namespace bandbraid {

namespace {

constexpr long kMaxExponent = 1L << 20;

int wrap_index(int index, int n, int shift) {
  long v = (static_cast<long>(index) - 1 + shift) % n;
  if (v < 0) v += n;
  return static_cast<int>(v) + 1;
}

class WordParser {
 public:
  WordParser(std::string_view text, int n) : text_(text), word_(n) {}

  BraidWord run() {
    while (true) {
      skip_space();
      if (at_end()) break;
      parse_token();
    }
    return std::move(word_);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    std::ostringstream msg;
    msg << what << " at position " << at;
    throw Error(ErrorCode::syntax, msg.str(), at);
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  long read_integer(bool allow_sign) {
    std::size_t start = pos_;
    if (allow_sign && (peek() == '-' || peek() == '+')) ++pos_;
    std::size_t digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected integer", start);
    long value = 0;
    const char* first = text_.data() + start + (text_[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) fail("integer out of range", start);
    return value;
  }

  void check_letter(long t, long s, std::size_t at) const {
    const int n = word_.strands();
    std::ostringstream msg;
    if (t == s) {
      msg << "degenerate letter a(" << t << "," << s << ") at position " << at;
      throw Error(ErrorCode::degenerate_letter, msg.str(), at);
    }
    if (t < s) {
      msg << "letter a(" << t << "," << s << ") must have t > s at position " << at;
      throw Error(ErrorCode::misordered_letter, msg.str(), at);
    }
    if (t > n || s < 1) {
      msg << "letter a(" << t << "," << s << ") out of range for n=" << n << " at position "
          << at;
      throw Error(ErrorCode::index_out_of_range, msg.str(), at);
    }
  }

  void parse_token() {
    const std::size_t start = pos_;
    BraidWord base(word_.strands());
    const char head = peek();
    if (head == 'a') {
      ++pos_;
      expect('(');
      skip_space();
      long t = read_integer(true);
      expect(',');
      skip_space();
      long s = read_integer(true);
      expect(')');
      check_letter(t, s, start);
      base.push_back(BandLetter(static_cast<int>(t), static_cast<int>(s)));
    } else if (head == 's') {
      ++pos_;
      long i = read_integer(false);
      if (i < 1 || i + 1 > word_.strands()) {
        std::ostringstream msg;
        msg << "Artin generator s" << i << " out of range for n=" << word_.strands()
            << " at position " << start;
        throw Error(ErrorCode::index_out_of_range, msg.str(), start);
      }
      base.push_back(BandLetter(static_cast<int>(i) + 1, static_cast<int>(i)));
    } else if (head == 'D') {
      ++pos_;
      base = delta_word(word_.strands());
    } else {
      fail(std::string("unexpected character '") + head + "'", start);
    }

    long exponent = 1;
    if (peek() == '^') {
      ++pos_;
      const std::size_t at = pos_;
      exponent = read_integer(true);
      if (exponent > kMaxExponent || exponent < -kMaxExponent)
        fail("exponent too large", at);
    }
    if (!at_end() && !std::isspace(static_cast<unsigned char>(peek())))
      fail("expected whitespace between tokens", pos_);

    const BraidWord unit = exponent < 0 ? invert_word(base) : base;
    for (long k = 0; k < std::labs(exponent); ++k) word_.append(unit);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  BraidWord word_;
};

}  // namespace

BandLetter::BandLetter(int t, int s, int sign) : t_(t), s_(s), sign_(sign) {
  if (t == s) throw Error(ErrorCode::degenerate_letter, "band letter with t == s");
  if (t < s) throw Error(ErrorCode::misordered_letter, "band letter requires t > s");
  if (s < 1) throw Error(ErrorCode::index_out_of_range, "band letter requires s >= 1");
  if (sign != 1 && sign != -1) throw Error(ErrorCode::invalid_argument, "sign must be +1 or -1");
}

void require_valid_strands(int n) {
  if (n < 1) throw Error(ErrorCode::invalid_strand_count, "strand count must be at least 1");
}

void require_same_strands(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    std::ostringstream msg;
    msg << "words on " << a.strands() << " and " << b.strands() << " strands cannot be mixed";
    throw Error(ErrorCode::mismatched_strands, msg.str());
  }
}

BraidWord::BraidWord(int strands) : strands_(strands) { require_valid_strands(strands); }

BraidWord::BraidWord(int strands, std::vector<BandLetter> letters) : BraidWord(strands) {
  letters_.reserve(letters.size());
  for (const auto& l : letters) push_back(l);
}

bool BraidWord::is_positive() const noexcept {
  for (const auto& l : letters_)
    if (!l.positive()) return false;
  return true;
}

void BraidWord::push_back(const BandLetter& letter) {
  if (letter.top() > strands_) {
    std::ostringstream msg;
    msg << "letter a(" << letter.top() << "," << letter.bottom() << ") out of range for n="
        << strands_;
    throw Error(ErrorCode::index_out_of_range, msg.str());
  }
  letters_.push_back(letter);
}

void BraidWord::append(const BraidWord& other) {
  require_same_strands(*this, other);
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

BraidWord parse_word(std::string_view text, int n) {
  require_valid_strands(n);
  return WordParser(text, n).run();
}

std::string render(const BraidWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    const auto& l = w[i];
    out += "a(" + std::to_string(l.top()) + "," + std::to_string(l.bottom()) + ")";
    if (!l.positive()) out += "^-1";
  }
  return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  BraidWord out = a;
  out.append(b);
  return out;
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<BandLetter> stack;
  stack.reserve(w.size());
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back().same_generator(l) && stack.back().sign() == -l.sign())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return BraidWord(w.strands(), std::move(stack));
}

BraidWord invert_word(const BraidWord& w) {
  BraidWord out(w.strands());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return out;
}

BraidWord band_to_artin(const BraidWord& w) {
  BraidWord out(w.strands());
  for (const auto& l : w.letters()) {
    const int t = l.top();
    const int s = l.bottom();
    for (int i = t - 1; i > s; --i) out.push_back(BandLetter(i + 1, i, +1));
    out.push_back(BandLetter(s + 1, s, l.sign()));
    for (int i = s + 1; i < t; ++i) out.push_back(BandLetter(i + 1, i, -1));
  }
  return out;
}

BandLetter tau_shift(const BandLetter& letter, int n, int k) {
  const int a = wrap_index(letter.top(), n, k);
  const int b = wrap_index(letter.bottom(), n, k);
  return a > b ? BandLetter(a, b, letter.sign()) : BandLetter(b, a, letter.sign());
}

BraidWord tau_shift(const BraidWord& w, int k) {
  BraidWord out(w.strands());
  for (const auto& l : w.letters()) out.push_back(tau_shift(l, w.strands(), k));
  return out;
}

BraidWord delta_word(int n) {
  BraidWord out(n);
  for (int t = n; t >= 2; --t) out.push_back(BandLetter(t, t - 1));
  return out;
}

BraidWord delta_power_word(int n, int k) {
  const BraidWord unit = k < 0 ? invert_word(delta_word(n)) : delta_word(n);
  BraidWord out(n);
  for (int i = 0; i < std::abs(k); ++i) out.append(unit);
  return out;
}

std::vector<int> permutation_image(const BraidWord& w) {
  const int n = w.strands();
  // image[i] is where strand i+1 currently sits; holder[p] is the strand at p.
  std::vector<int> image(n), holder(n + 1);
  std::iota(image.begin(), image.end(), 1);
  for (int p = 1; p <= n; ++p) holder[p] = p - 1;
  for (const auto& l : w.letters()) {
    const int a = holder[l.top()];
    const int b = holder[l.bottom()];
    image[a] = l.bottom();
    image[b] = l.top();
    holder[l.top()] = b;
    holder[l.bottom()] = a;
  }
  return image;
}

std::uint64_t RandomSource::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::invalid_argument, "empty sampling range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

int RandomSource::between(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

BandLetter RandomSource::positive_letter(int n) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "B_1 has no generators");
  std::uint64_t k = below(static_cast<std::uint64_t>(n) * (n - 1) / 2);
  for (int t = 2; t <= n; ++t) {
    if (k < static_cast<std::uint64_t>(t - 1)) return BandLetter(t, static_cast<int>(k) + 1);
    k -= t - 1;
  }
  throw Error(ErrorCode::invalid_argument, "unreachable generator index");
}

BandLetter RandomSource::letter(int n) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "B_1 has no generators");
  std::uint64_t k = below(static_cast<std::uint64_t>(n) * (n - 1));
  for (int t = 2; t <= n; ++t) {
    for (int s = 1; s < t; ++s) {
      if (k == 0) return BandLetter(t, s, +1);
      if (k == 1) return BandLetter(t, s, -1);
      k -= 2;
    }
  }
  throw Error(ErrorCode::invalid_argument, "unreachable generator index");
}

BraidWord RandomSource::word(int n, std::size_t length) {
  BraidWord out(n);
  for (std::size_t i = 0; i < length; ++i) out.push_back(letter(n));
  return out;
}

BraidWord RandomSource::positive_word(int n, std::size_t length) {
  BraidWord out(n);
  for (std::size_t i = 0; i < length; ++i) out.push_back(positive_letter(n));
  return out;
}

BraidWord random_word(int n, std::size_t length, std::uint64_t seed) {
  require_valid_strands(n);
  if (length == 0) return BraidWord(n);
  return RandomSource(seed).word(n, length);
}

}  // namespace bandbraid

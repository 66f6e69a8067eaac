#include "bandbraid/canonical_factor.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace bandbraid {

namespace {

std::string render_orbit(const std::vector<int>& descending) {
  std::string out = "(";
  for (std::size_t i = 0; i < descending.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(descending[i]);
  }
  return out + ")";
}

/// Orbits of a 0-based permutation table, each as 1-based indices sorted
/// descending, ordered by smallest element. Fixed points are skipped.
std::vector<std::vector<int>> orbits_of(std::span<const int> table) {
  const int n = static_cast<int>(table.size());
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (seen[start] || table[start] == start) continue;
    std::vector<int> orbit;
    for (int x = start; !seen[x]; x = table[x]) {
      seen[x] = 1;
      orbit.push_back(x + 1);
    }
    std::sort(orbit.begin(), orbit.end(), std::greater<>());
    out.push_back(std::move(orbit));
  }
  return out;
}

struct TableDefect {
  ErrorCode code;
  std::string message;
};

/// Checks the canonical-factor invariants on a 0-based permutation table.
std::optional<TableDefect> find_defect(std::span<const int> table) {
  const int n = static_cast<int>(table.size());
  std::vector<char> hit(n, 0);
  for (int v : table) {
    if (v < 0 || v >= n || hit[v])
      return TableDefect{ErrorCode::invalid_argument, "table is not a permutation"};
    hit[v] = 1;
  }

  std::vector<int> block(n + 1, 0);  // orbit label per 1-based index, 0 = fixed
  std::vector<int> block_last(n + 1, 0);
  const auto orbits = orbits_of(table);
  for (std::size_t b = 0; b < orbits.size(); ++b) {
    const auto& orbit = orbits[b];  // descending
    const std::size_t r = orbit.size();
    for (std::size_t k = 0; k < r; ++k) {
      const int x = orbit[k];
      const int expected = (k == 0) ? orbit[r - 1] : orbit[k - 1];
      if (table[x - 1] + 1 != expected) {
        std::ostringstream msg;
        msg << "orbit " << render_orbit(orbit) << " is not a descending cycle: " << x
            << " maps to " << table[x - 1] + 1 << " instead of " << expected;
        return TableDefect{ErrorCode::not_canonical_factor, msg.str()};
      }
      block[x] = static_cast<int>(b) + 1;
    }
    block_last[b + 1] = orbit.front();
  }

  // Non-crossing scan: a block may only continue when it is on top of the
  // stack of open blocks.
  std::vector<int> open;
  std::vector<char> started(orbits.size() + 1, 0);
  for (int x = 1; x <= n; ++x) {
    const int b = block[x];
    if (!b) continue;
    if (!started[b]) {
      started[b] = 1;
      open.push_back(b);
      continue;
    }
    if (open.back() != b) {
      std::ostringstream msg;
      msg << "orbits " << render_orbit(orbits[b - 1]) << " and "
          << render_orbit(orbits[open.back() - 1]) << " cross";
      return TableDefect{ErrorCode::crossing_cycles, msg.str()};
    }
    if (x == block_last[b]) open.pop_back();
  }
  return std::nullopt;
}

std::vector<int> inverse_table(std::span<const int> table) {
  std::vector<int> inv(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) inv[table[i]] = static_cast<int>(i);
  return inv;
}

/// Label of each 0-based index: smallest 1-based element of its orbit, or 0 for
/// fixed points.
std::vector<int> cycle_labels(std::span<const int> table) {
  const int n = static_cast<int>(table.size());
  std::vector<int> label(n, 0);
  for (int start = 0; start < n; ++start) {
    if (label[start] || table[start] == start) continue;
    int smallest = start;
    for (int x = table[start]; x != start; x = table[x]) smallest = std::min(smallest, x);
    label[start] = smallest + 1;
    for (int x = table[start]; x != start; x = table[x]) label[x] = smallest + 1;
  }
  return label;
}

struct Triple {
  int a_cycle;
  int b_cycle;
  int strand;  // 1-based
};

/// Builds the meet from triples already grouped by (a_cycle, b_cycle) with
/// strands descending inside each group.
CanonicalFactor assemble_meet(int n, const std::vector<Triple>& sorted) {
  std::vector<int> table(n);
  std::iota(table.begin(), table.end(), 0);
  std::size_t begin = 0;
  while (begin < sorted.size()) {
    std::size_t end = begin + 1;
    while (end < sorted.size() && sorted[end].a_cycle == sorted[begin].a_cycle &&
           sorted[end].b_cycle == sorted[begin].b_cycle)
      ++end;
    if (end - begin >= 2) {
      for (std::size_t k = begin + 1; k < end; ++k)
        table[sorted[k].strand - 1] = sorted[k - 1].strand - 1;
      table[sorted[begin].strand - 1] = sorted[end - 1].strand - 1;
    }
    begin = end;
  }
  return CanonicalFactor::from_table_unchecked(std::move(table));
}

std::vector<Triple> meet_triples(const CanonicalFactor& a, const CanonicalFactor& b) {
  const int n = a.strands();
  const auto la = cycle_labels(a.table());
  const auto lb = cycle_labels(b.table());
  std::vector<Triple> triples;
  triples.reserve(n);
  for (int m = n; m >= 1; --m) {
    if (la[m - 1] && lb[m - 1]) triples.push_back({la[m - 1], lb[m - 1], m});
  }
  return triples;
}

void counting_sort(std::vector<Triple>& items, int key_range, int Triple::*key) {
  std::vector<std::size_t> count(key_range + 2, 0);
  for (const auto& t : items) ++count[t.*key + 1];
  for (int k = 1; k <= key_range + 1; ++k) count[k] += count[k - 1];
  std::vector<Triple> out(items.size());
  for (const auto& t : items) out[count[t.*key]++] = t;
  items.swap(out);
}

}  // namespace

DescendingCycle::DescendingCycle(std::vector<int> indices) : indices_(std::move(indices)) {
  if (indices_.size() < 2)
    throw Error(ErrorCode::invalid_argument, "a descending cycle needs at least two indices");
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 1) throw Error(ErrorCode::index_out_of_range, "cycle index below 1");
    if (i && indices_[i] >= indices_[i - 1])
      throw Error(ErrorCode::invalid_argument, "cycle indices must be strictly decreasing");
  }
}

CanonicalFactor CanonicalFactor::identity(int n) {
  require_valid_strands(n);
  std::vector<int> table(n);
  std::iota(table.begin(), table.end(), 0);
  return CanonicalFactor(std::move(table));
}

CanonicalFactor CanonicalFactor::delta(int n) {
  require_valid_strands(n);
  std::vector<int> table(n);
  for (int i = 0; i < n; ++i) table[i] = (i + 1) % n;
  return CanonicalFactor(std::move(table));
}

CanonicalFactor CanonicalFactor::from_table_unchecked(std::vector<int> table) {
  return CanonicalFactor(std::move(table));
}

CanonicalFactor CanonicalFactor::from_cycles(int n, std::span<const DescendingCycle> cycles) {
  require_valid_strands(n);
  std::vector<int> table(n);
  std::iota(table.begin(), table.end(), 0);
  std::vector<char> used(n + 1, 0);
  for (const auto& c : cycles) {
    const auto idx = c.indices();
    if (c.largest() > n) {
      std::ostringstream msg;
      msg << "cycle index " << c.largest() << " exceeds n=" << n;
      throw Error(ErrorCode::index_out_of_range, msg.str());
    }
    for (int x : idx) {
      if (used[x]) {
        std::ostringstream msg;
        msg << "index " << x << " appears in more than one cycle";
        throw Error(ErrorCode::overlapping_cycles, msg.str());
      }
      used[x] = 1;
    }
    const std::size_t r = idx.size();
    for (std::size_t k = 1; k < r; ++k) table[idx[k] - 1] = idx[k - 1] - 1;
    table[idx[0] - 1] = idx[r - 1] - 1;
  }
  if (auto defect = find_defect(table)) throw Error(defect->code, defect->message);
  return CanonicalFactor(std::move(table));
}

CanonicalFactor CanonicalFactor::from_permutation(int n, std::span<const int> images) {
  require_valid_strands(n);
  if (static_cast<int>(images.size()) != n)
    throw Error(ErrorCode::invalid_argument, "permutation table has the wrong size");
  std::vector<int> table(n);
  for (int i = 0; i < n; ++i) table[i] = images[i] - 1;
  if (auto defect = find_defect(table)) {
    const ErrorCode code = defect->code == ErrorCode::invalid_argument
                               ? ErrorCode::invalid_argument
                               : ErrorCode::not_canonical_factor;
    throw Error(code, defect->message);
  }
  return CanonicalFactor(std::move(table));
}

std::vector<int> CanonicalFactor::images() const {
  std::vector<int> out(table_.size());
  for (std::size_t i = 0; i < table_.size(); ++i) out[i] = table_[i] + 1;
  return out;
}

int CanonicalFactor::length() const noexcept {
  const int n = strands();
  std::vector<char> seen(n, 0);
  int orbits = 0;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++orbits;
    for (int x = start; !seen[x]; x = table_[x]) seen[x] = 1;
  }
  return n - orbits;
}

std::vector<DescendingCycle> CanonicalFactor::cycles() const {
  auto orbits = orbits_of(table_);
  std::sort(orbits.begin(), orbits.end(),
            [](const auto& x, const auto& y) { return x.front() > y.front(); });
  std::vector<DescendingCycle> out;
  out.reserve(orbits.size());
  for (auto& o : orbits) out.emplace_back(std::move(o));
  return out;
}

std::size_t CanonicalFactor::hash() const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int v : table_) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return h;
}

void require_same_strands(const CanonicalFactor& a, const CanonicalFactor& b) {
  if (a.strands() != b.strands()) {
    std::ostringstream msg;
    msg << "factors on " << a.strands() << " and " << b.strands() << " strands cannot be mixed";
    throw Error(ErrorCode::mismatched_strands, msg.str());
  }
}

std::string render(const CanonicalFactor& a) {
  const auto cycles = a.cycles();
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& c : cycles)
    out += render_orbit(std::vector<int>(c.indices().begin(), c.indices().end()));
  return out;
}

CanonicalFactor parse_factor(std::string_view text, int n) {
  require_valid_strands(n);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) {
    std::ostringstream msg;
    msg << what << " at position " << pos;
    throw Error(ErrorCode::syntax, msg.str(), pos);
  };
  std::vector<DescendingCycle> cycles;
  skip();
  if (pos == text.size()) fail("expected '('");
  while (true) {
    skip();
    if (pos == text.size()) break;
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<int> indices;
    skip();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      continue;
    }
    while (true) {
      skip();
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc()) fail("expected integer");
      pos = static_cast<std::size_t>(ptr - text.data());
      if (value < 1 || value > n) {
        std::ostringstream msg;
        msg << "cycle index " << value << " out of range for n=" << n << " at position " << pos;
        throw Error(ErrorCode::index_out_of_range, msg.str(), pos);
      }
      indices.push_back(value);
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      fail("expected ',' or ')'");
    }
    if (indices.size() >= 2) {
      if (!std::is_sorted(indices.begin(), indices.end(), std::greater_equal<>()) ||
          std::adjacent_find(indices.begin(), indices.end()) != indices.end())
        fail("cycle indices must be strictly decreasing");
      cycles.emplace_back(std::move(indices));
    }
  }
  return CanonicalFactor::from_cycles(n, cycles);
}

BraidWord to_band_word(const CanonicalFactor& a) {
  BraidWord out(a.strands());
  for (const auto& c : a.cycles()) {
    const auto idx = c.indices();
    for (std::size_t k = 1; k < idx.size(); ++k) out.push_back(BandLetter(idx[k - 1], idx[k]));
  }
  return out;
}

std::optional<int> obstructing_pattern(const BandLetter& a, const BandLetter& b) {
  const int at = a.top(), as = a.bottom(), bt = b.top(), bs = b.bottom();
  // (1) a = a_tr, b = a_sq   with t > s > r > q
  if (at > bt && bt > as && as > bs) return 1;
  // (2) a = a_sq, b = a_tr
  if (bt > at && at > bs && bs > as) return 2;
  // (3) a = a_sr, b = a_ts
  if (bs == at) return 3;
  // (4) a = a_ts, b = a_tr
  if (at == bt && as > bs) return 4;
  // (5) a = a_tr, b = a_sr
  if (as == bs && at > bt) return 5;
  // (6) a = b
  if (at == bt && as == bs) return 6;
  return std::nullopt;
}

std::optional<ObstructingPair> obstructing_pair(const BraidWord& w) {
  if (!w.is_positive())
    throw Error(ErrorCode::not_positive, "obstructing pairs are defined for positive words");
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (auto p = obstructing_pattern(w[i], w[j])) return ObstructingPair{i, j, *p};
  return std::nullopt;
}

CanonicalFactor meet(const CanonicalFactor& a, const CanonicalFactor& b) {
  require_same_strands(a, b);
  const int n = a.strands();
  auto triples = meet_triples(a, b);  // strand descending
  // LSD radix: second key, then first key; both passes stable.
  counting_sort(triples, n, &Triple::b_cycle);
  counting_sort(triples, n, &Triple::a_cycle);
  return assemble_meet(n, triples);
}

CanonicalFactor meet_by_comparison_sort(const CanonicalFactor& a, const CanonicalFactor& b) {
  require_same_strands(a, b);
  auto triples = meet_triples(a, b);
  std::sort(triples.begin(), triples.end(), [](const Triple& x, const Triple& y) {
    if (x.a_cycle != y.a_cycle) return x.a_cycle < y.a_cycle;
    if (x.b_cycle != y.b_cycle) return x.b_cycle < y.b_cycle;
    return x.strand > y.strand;
  });
  return assemble_meet(a.strands(), triples);
}

CanonicalFactor right_complement(const CanonicalFactor& a) {
  const int n = a.strands();
  const auto inv = inverse_table(a.table());
  std::vector<int> table(n);
  for (int j = 0; j < n; ++j) table[j] = (inv[j] + 1) % n;
  return CanonicalFactor::from_table_unchecked(std::move(table));
}

CanonicalFactor left_complement(const CanonicalFactor& a) {
  return tau_factor(right_complement(a), -1);
}

CanonicalFactor tau_factor(const CanonicalFactor& a, int k) {
  const int n = a.strands();
  const int shift = ((k % n) + n) % n;
  if (shift == 0) return a;
  std::vector<int> table(n);
  const auto src = a.table();
  for (int i = 0; i < n; ++i) table[(i + shift) % n] = (src[i] + shift) % n;
  return CanonicalFactor::from_table_unchecked(std::move(table));
}

GeneratorSet starting_set(const CanonicalFactor& a) {
  GeneratorSet out;
  for (const auto& c : a.cycles()) {
    const auto idx = c.indices();
    for (std::size_t j = 0; j < idx.size(); ++j)
      for (std::size_t i = j + 1; i < idx.size(); ++i) out.insert({idx[j], idx[i]});
  }
  return out;
}

GeneratorSet finishing_set(const CanonicalFactor& a) { return starting_set(a); }

GeneratorSet complement_set(const CanonicalFactor& a) {
  return starting_set(right_complement(a));
}

GeneratorSet left_complement_set(const CanonicalFactor& a) {
  return finishing_set(left_complement(a));
}

GeneratorSet tau_shift(const GeneratorSet& set, int n, int k) {
  GeneratorSet out;
  for (const auto& p : set) {
    const BandLetter l = tau_shift(BandLetter(p.t, p.s), n, k);
    out.insert({l.top(), l.bottom()});
  }
  return out;
}

std::optional<CanonicalFactor> try_multiply(const CanonicalFactor& a, const CanonicalFactor& b) {
  require_same_strands(a, b);
  const int n = a.strands();
  std::vector<int> table(n);
  for (int i = 0; i < n; ++i) table[i] = b.table()[a.table()[i]];
  if (find_defect(table)) return std::nullopt;
  auto product = CanonicalFactor::from_table_unchecked(std::move(table));
  // a21 a21 has a canonical permutation but leaves [0,1]; lengths must add.
  if (product.length() != a.length() + b.length()) return std::nullopt;
  return product;
}

namespace {

void enumerate_blocks(int n, int next, std::vector<std::vector<int>>& blocks,
                      std::vector<int>& open, std::vector<CanonicalFactor>& out) {
  if (next > n) {
    std::vector<int> table(n);
    std::iota(table.begin(), table.end(), 0);
    for (const auto& blk : blocks) {  // ascending
      const std::size_t r = blk.size();
      for (std::size_t k = 0; k + 1 < r; ++k) table[blk[k] - 1] = blk[k + 1] - 1;
      table[blk[r - 1] - 1] = blk[0] - 1;
    }
    out.push_back(CanonicalFactor::from_table_unchecked(std::move(table)));
    return;
  }
  // Start a new block.
  blocks.push_back({next});
  open.push_back(static_cast<int>(blocks.size()) - 1);
  enumerate_blocks(n, next + 1, blocks, open, out);
  open.pop_back();
  blocks.pop_back();

  // Join an open block; every block opened after it is closed for good.
  for (std::size_t p = open.size(); p-- > 0;) {
    const int b = open[p];
    std::vector<int> saved(open.begin() + static_cast<std::ptrdiff_t>(p) + 1, open.end());
    open.resize(p + 1);
    blocks[b].push_back(next);
    enumerate_blocks(n, next + 1, blocks, open, out);
    blocks[b].pop_back();
    open.insert(open.end(), saved.begin(), saved.end());
  }
}

}  // namespace

std::vector<CanonicalFactor> enumerate_factors(int n, int cap) {
  require_valid_strands(n);
  if (n > cap) {
    std::ostringstream msg;
    msg << "enumeration of B_" << n << " factors exceeds the cap n <= " << cap;
    throw Error(ErrorCode::cap_exceeded, msg.str());
  }
  std::vector<std::vector<int>> blocks;
  std::vector<int> open;
  std::vector<CanonicalFactor> out;
  out.reserve(static_cast<std::size_t>(catalan_number(n)));
  enumerate_blocks(n, 1, blocks, open, out);
  std::sort(out.begin(), out.end(), [](const CanonicalFactor& x, const CanonicalFactor& y) {
    const int lx = x.length(), ly = y.length();
    if (lx != ly) return lx < ly;
    return x.cycles() > y.cycles();
  });
  return out;
}

unsigned long long catalan_number(int n) {
  unsigned long long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace bandbraid

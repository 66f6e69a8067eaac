#include "bandbraid/conjugacy.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace bandbraid {

namespace {

NormalForm factor_form(const CanonicalFactor& f) { return normalize(f.strands(), 0, {f}); }

NormalForm inverse_factor_form(const CanonicalFactor& f) {
  return invert_normal_form(factor_form(f));
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

  std::vector<std::size_t> component_sizes() {
    std::unordered_map<std::size_t, std::size_t> count;
    for (std::size_t i = 0; i < parent_.size(); ++i) ++count[find(i)];
    std::vector<std::size_t> sizes;
    for (const auto& [root, c] : count) sizes.push_back(c);
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  }

 private:
  std::vector<std::size_t> parent_;
};

void count_step(std::size_t& iterations, const ConjugacyCaps& caps) {
  if (++iterations > caps.cycling_iterations) {
    std::ostringstream msg;
    msg << "cycling/decycling exceeded " << caps.cycling_iterations << " iterations";
    throw Error(ErrorCode::cap_exceeded, msg.str());
  }
}

}  // namespace

Conjugation cycle_with_conjugator(const NormalForm& nf) {
  const int n = nf.strands();
  if (nf.factors().empty()) return {nf, NormalForm(n)};
  const int u = nf.power();
  const CanonicalFactor moved = tau_factor(nf.factors().front(), -u);
  Normalizer sweep(n, u);
  for (std::size_t i = 1; i < nf.factors().size(); ++i) sweep.push(nf.factors()[i]);
  sweep.push(moved);
  return {std::move(sweep).finish(), factor_form(moved)};
}

Conjugation decycle_with_conjugator(const NormalForm& nf) {
  const int n = nf.strands();
  if (nf.factors().empty()) return {nf, NormalForm(n)};
  const int u = nf.power();
  const CanonicalFactor& last = nf.factors().back();
  Normalizer sweep(n, u);
  sweep.push(tau_factor(last, u));
  for (std::size_t i = 0; i + 1 < nf.factors().size(); ++i) sweep.push(nf.factors()[i]);
  return {std::move(sweep).finish(), inverse_factor_form(last)};
}

NormalForm cycle_once(const NormalForm& nf) { return cycle_with_conjugator(nf).result; }
NormalForm decycle_once(const NormalForm& nf) { return decycle_with_conjugator(nf).result; }

NormalForm conjugate_by_factor(const NormalForm& nf, const CanonicalFactor& x) {
  if (x.strands() != nf.strands())
    throw Error(ErrorCode::mismatched_strands, "conjugator strand count differs from the form");
  // x^{-1} = x̄ δ^{-1} = δ^{-1} τ^{-1}(x̄), then move δ^{-1} past δ^u.
  const int u = nf.power();
  Normalizer sweep(nf.strands(), u - 1);
  sweep.push(tau_factor(right_complement(x), u - 1));
  for (const auto& f : nf.factors()) sweep.push(f);
  sweep.push(x);
  return std::move(sweep).finish();
}

Conjugation summit_representative(const NormalForm& nf, const ConjugacyCaps& caps) {
  Conjugation cur{nf, NormalForm(nf.strands())};
  std::size_t iterations = 0;

  // Raise inf: cycle until a form repeats without inf having grown.
  for (bool raised = true; raised;) {
    raised = false;
    const int start = cur.result.inf();
    std::unordered_set<NormalForm> seen{cur.result};
    while (true) {
      count_step(iterations, caps);
      auto step = cycle_with_conjugator(cur.result);
      cur.conjugator = multiply(cur.conjugator, step.conjugator);
      cur.result = std::move(step.result);
      if (cur.result.inf() > start) {
        raised = true;
        break;
      }
      if (!seen.insert(cur.result).second) break;
    }
  }

  // Lower sup the same way with decycling; inf cannot drop.
  for (bool lowered = true; lowered;) {
    lowered = false;
    const int start = cur.result.sup();
    std::unordered_set<NormalForm> seen{cur.result};
    while (true) {
      count_step(iterations, caps);
      auto step = decycle_with_conjugator(cur.result);
      cur.conjugator = multiply(cur.conjugator, step.conjugator);
      cur.result = std::move(step.result);
      if (cur.result.sup() < start) {
        lowered = true;
        break;
      }
      if (!seen.insert(cur.result).second) break;
    }
  }
  return cur;
}

std::optional<std::size_t> SuperSummitSet::index_of(const NormalForm& nf) const {
  auto it = index_.find(nf);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NormalForm SuperSummitSet::path_from_root(std::size_t i) const {
  if (i >= elements_.size()) throw Error(ErrorCode::invalid_argument, "element index out of range");
  std::vector<CanonicalFactor> path;
  for (std::size_t at = i; edges_[at].factor; at = edges_[at].parent) path.push_back(*edges_[at].factor);
  std::reverse(path.begin(), path.end());
  return normalize(strands_, 0, path);
}

SuperSummitSet super_summit_set(const NormalForm& nf, const ConjugacyCaps& caps) {
  auto summit = summit_representative(nf, caps);
  SuperSummitSet sss;
  sss.strands_ = nf.strands();
  sss.inf_ = summit.result.inf();
  sss.sup_ = summit.result.sup();
  sss.root_conjugator_ = std::move(summit.conjugator);
  sss.elements_.push_back(summit.result);
  sss.edges_.push_back({0, std::nullopt});
  sss.index_.emplace(summit.result, 0);

  auto factors = enumerate_factors(nf.strands(), std::max(kDefaultEnumerationCap, nf.strands()));
  std::erase_if(factors, [](const CanonicalFactor& f) { return f.is_identity(); });

  for (std::size_t i = 0; i < sss.elements_.size(); ++i) {
    for (const auto& f : factors) {
      NormalForm y = conjugate_by_factor(sss.elements_[i], f);
      if (y.inf() != sss.inf_ || y.sup() != sss.sup_ || sss.index_.contains(y)) continue;
      if (sss.elements_.size() >= caps.sss_elements) {
        std::ostringstream msg;
        msg << "super summit set exceeded " << caps.sss_elements << " elements (partial size "
            << sss.elements_.size() << ")";
        throw Error(ErrorCode::cap_exceeded, msg.str());
      }
      sss.index_.emplace(y, sss.elements_.size());
      sss.elements_.push_back(std::move(y));
      sss.edges_.push_back({i, f});
    }
  }
  return sss;
}

OrbitStatistics orbit_statistics(const SuperSummitSet& sss) {
  const std::size_t size = sss.size();
  std::vector<std::size_t> cyc(size), dec(size);
  for (std::size_t i = 0; i < size; ++i) {
    auto c = sss.index_of(cycle_once(sss.elements()[i]));
    auto d = sss.index_of(decycle_once(sss.elements()[i]));
    if (!c || !d)
      throw Error(ErrorCode::invalid_argument, "super summit set is not closed under cycling");
    cyc[i] = *c;
    dec[i] = *d;
  }

  OrbitStatistics stats;
  DisjointSets by_cycling(size), by_decycling(size), by_both(size);
  for (std::size_t i = 0; i < size; ++i) {
    by_cycling.unite(i, cyc[i]);
    by_decycling.unite(i, dec[i]);
    by_both.unite(i, cyc[i]);
    by_both.unite(i, dec[i]);
  }
  stats.cycling_orbits = by_cycling.component_sizes();
  stats.decycling_orbits = by_decycling.component_sizes();
  stats.combined_orbits = by_both.component_sizes();

  // Periodic cycles of the cycling map.
  std::vector<int> state(size, 0);  // 0 new, 1 on current path, 2 done
  for (std::size_t start = 0; start < size; ++start) {
    std::vector<std::size_t> path;
    std::size_t x = start;
    while (state[x] == 0) {
      state[x] = 1;
      path.push_back(x);
      x = cyc[x];
    }
    if (state[x] == 1) {
      const auto loop_start = std::find(path.begin(), path.end(), x);
      stats.cycling_periods.push_back(static_cast<std::size_t>(path.end() - loop_start));
    }
    for (auto p : path) state[p] = 2;
  }
  std::sort(stats.cycling_periods.begin(), stats.cycling_periods.end());
  return stats;
}

ConjugacyResult are_conjugate(const BraidWord& first, const BraidWord& second,
                              const ConjugacyCaps& caps) {
  require_same_strands(first, second);
  ConjugacyResult out;
  const NormalForm nf_first = left_canonical_form(first);
  const NormalForm nf_second = left_canonical_form(second);
  try {
    const auto summit_first = summit_representative(nf_first, caps);
    const auto summit_second = summit_representative(nf_second, caps);
    out.inf_first = summit_first.result.inf();
    out.sup_first = summit_first.result.sup();
    out.inf_second = summit_second.result.inf();
    out.sup_second = summit_second.result.sup();
    if (out.inf_first != out.inf_second || out.sup_first != out.sup_second) {
      out.verdict = ConjugacyVerdict::not_conjugate;
      return out;
    }
    const auto sss = super_summit_set(nf_first, caps);
    out.sss_size = sss.size();
    const auto idx = sss.index_of(summit_second.result);
    if (!idx) {
      out.verdict = ConjugacyVerdict::not_conjugate;
      return out;
    }
    // second = zw · r · zw^{-1} and r = (z0 p)^{-1} first (z0 p).
    const NormalForm z = multiply(multiply(sss.root_conjugator(), sss.path_from_root(*idx)),
                                  invert_normal_form(summit_second.conjugator));
    out.verdict = ConjugacyVerdict::conjugate;
    out.certificate = to_word(z);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::cap_exceeded) throw;
    out.verdict = ConjugacyVerdict::undecided;
  }
  return out;
}

}  // namespace bandbraid

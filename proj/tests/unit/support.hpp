#pragma once

// Independent reference computations for the unit tests. Nothing here calls
// the library's factor or normal-form code.

#include <algorithm>
#include <numeric>
#include <vector>

#include "bandbraid/braid_word.hpp"

namespace testing_support {

using Perm = std::vector<int>;  // 1-based: p[i] is the image of i, p[0] unused

inline Perm identity_perm(int n) {
  Perm p(n + 1);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Left to right: the first letter acts first, so (xy)(i) = y(x(i)).
inline Perm perm_of(const bandbraid::BraidWord& w) {
  Perm p = identity_perm(w.strands());
  for (const auto& l : w.letters()) {
    for (int i = 1; i <= w.strands(); ++i) {
      if (p[i] == l.top())
        p[i] = l.bottom();
      else if (p[i] == l.bottom())
        p[i] = l.top();
    }
  }
  return p;
}

inline Perm compose(const Perm& first, const Perm& then) {
  Perm out(first.size());
  for (std::size_t i = 1; i < first.size(); ++i) out[i] = then[first[i]];
  return out;
}

inline Perm inverse(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 1; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
  return out;
}

// Definition check: every orbit, listed increasingly, is walked upward and
// wraps from its top to its bottom; distinct orbits never interleave.
inline bool is_canonical_perm(const Perm& p) {
  const int n = static_cast<int>(p.size()) - 1;
  std::vector<std::vector<int>> orbits;
  std::vector<bool> seen(n + 1, false);
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      orbit.push_back(j);
    }
    std::vector<int> sorted = orbit;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k)
      if (p[sorted[k]] != sorted[(k + 1) % sorted.size()]) return false;
    orbits.push_back(sorted);
  }
  for (const auto& a : orbits)
    for (const auto& b : orbits) {
      if (&a == &b) continue;
      for (int x : a)
        for (int y : a)
          for (int z : b)
            for (int w : b)
              if (x < z && z < y && y < w) return false;
    }
  return true;
}

// Length of a canonical factor: n minus the number of orbits.
inline int factor_length(const Perm& p) {
  const int n = static_cast<int>(p.size()) - 1;
  std::vector<bool> seen(n + 1, false);
  int orbits = 0;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    ++orbits;
    for (int j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return n - orbits;
}

// All canonical factors by filtering every permutation of 1..n.
inline std::vector<Perm> brute_force_factors(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Perm> out;
  do {
    Perm p(n + 1, 0);
    for (int i = 0; i < n; ++i) p[i + 1] = images[i];
    if (is_canonical_perm(p)) out.push_back(p);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// c <= a in the prefix order on [0,1]: a = c d with d a canonical factor and
// lengths adding up.
inline bool is_prefix(const Perm& c, const Perm& a) {
  const Perm d = compose(inverse(c), a);
  return is_canonical_perm(d) && factor_length(c) + factor_length(d) == factor_length(a);
}

inline Perm delta_perm(int n) {
  Perm p(n + 1);
  for (int i = 1; i <= n; ++i) p[i] = i % n + 1;
  return p;
}

}  // namespace testing_support

#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "bandbraid/braid_word.hpp"
#include "bandbraid/normal_form.hpp"

namespace bandbraid {

struct ConjugacyCaps {
  std::size_t sss_elements = 1'000'000;
  std::size_t cycling_iterations = 1'000'000;
};

/// `result` is conjugator^{-1} · input · conjugator.
struct Conjugation {
  NormalForm result;
  NormalForm conjugator;
};

/// c(W) = δ^u A_2 ... A_k τ^{-u}(A_1); conjugator τ^{-u}(A_1).
Conjugation cycle_with_conjugator(const NormalForm& nf);
/// d(W) = δ^u τ^u(A_k) A_1 ... A_{k-1}; conjugator A_k^{-1}.
Conjugation decycle_with_conjugator(const NormalForm& nf);

NormalForm cycle_once(const NormalForm& nf);
NormalForm decycle_once(const NormalForm& nf);

/// x^{-1} · nf · x for a canonical factor x.
NormalForm conjugate_by_factor(const NormalForm& nf, const CanonicalFactor& x);

/// Iterated cycling then decycling until both stabilize. The result has the
/// maximal inf and minimal sup of the conjugacy class. Throws
/// ErrorCode::cap_exceeded after caps.cycling_iterations steps.
Conjugation summit_representative(const NormalForm& nf, const ConjugacyCaps& caps = {});

/// Super summit set, built by closing the summit representative under
/// conjugation by every canonical factor and keeping results with the same
/// inf and sup. Element 0 is the summit representative.
class SuperSummitSet {
 public:
  int strands() const noexcept { return strands_; }
  int inf() const noexcept { return inf_; }
  int sup() const noexcept { return sup_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<NormalForm>& elements() const noexcept { return elements_; }

  bool contains(const NormalForm& nf) const { return index_.contains(nf); }
  std::optional<std::size_t> index_of(const NormalForm& nf) const;

  /// Product of closure-edge factors p with element(i) = p^{-1} element(0) p.
  NormalForm path_from_root(std::size_t i) const;
  /// z with element(0) = z^{-1} · input · z.
  const NormalForm& root_conjugator() const noexcept { return root_conjugator_; }

  friend SuperSummitSet super_summit_set(const NormalForm& nf, const ConjugacyCaps& caps);

 private:
  struct Edge {
    std::size_t parent;
    std::optional<CanonicalFactor> factor;  // nullopt for the root
  };

  int strands_ = 1;
  int inf_ = 0;
  int sup_ = 0;
  NormalForm root_conjugator_{1};
  std::vector<NormalForm> elements_;
  std::vector<Edge> edges_;
  std::unordered_map<NormalForm, std::size_t> index_;
};

/// Throws ErrorCode::cap_exceeded, naming the partial size, when the set grows
/// past caps.sss_elements.
SuperSummitSet super_summit_set(const NormalForm& nf, const ConjugacyCaps& caps = {});

/// Orbits of cycling and decycling inside a super summit set. Cycling maps the
/// set into itself, so its orbits are the connected components of the graph
/// x -- c(x); likewise for decycling and for both edges together.
struct OrbitStatistics {
  std::vector<std::size_t> cycling_orbits;    // component sizes, sorted
  std::vector<std::size_t> decycling_orbits;  // component sizes, sorted
  std::vector<std::size_t> combined_orbits;   // components under both, sorted
  std::vector<std::size_t> cycling_periods;   // lengths of the periodic cycles, sorted

  friend bool operator==(const OrbitStatistics&, const OrbitStatistics&) = default;
};

OrbitStatistics orbit_statistics(const SuperSummitSet& sss);

enum class ConjugacyVerdict { conjugate, not_conjugate, undecided };

struct ConjugacyResult {
  ConjugacyVerdict verdict = ConjugacyVerdict::undecided;
  int inf_first = 0;
  int sup_first = 0;
  int inf_second = 0;
  int sup_second = 0;
  std::size_t sss_size = 0;
  /// z with z^{-1} · first · z = second, present when conjugate.
  std::optional<BraidWord> certificate;
};

/// Cap exhaustion yields ConjugacyVerdict::undecided rather than an exception.
ConjugacyResult are_conjugate(const BraidWord& first, const BraidWord& second,
                              const ConjugacyCaps& caps = {});

}  // namespace bandbraid

#include "bandbraid.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "bandbraid/conjugacy.hpp"
#include "bandbraid/cross_check.hpp"
#include "bandbraid/normal_form.hpp"
#include "bandbraid/oracle.hpp"

struct bandbraid_word {
  bandbraid::BraidWord value;
};
struct bandbraid_nf {
  bandbraid::NormalForm value;
};
struct bandbraid_factor_list {
  std::vector<bandbraid::CanonicalFactor> value;
};
struct bandbraid_sss {
  bandbraid::SuperSummitSet value;
};

namespace {

using namespace bandbraid;

thread_local std::string last_message;
thread_local long last_position = -1;

bandbraid_status fail(bandbraid_status status, const char* message, long position = -1) {
  last_message = message;
  last_position = position;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
bandbraid_status guarded(Body&& body) {
  try {
    body();
    return BANDBRAID_OK;
  } catch (const Error& e) {
    const long pos = e.position() ? static_cast<long>(*e.position()) : -1;
    return fail(static_cast<bandbraid_status>(e.code()), e.what(), pos);
  } catch (const std::bad_alloc&) {
    return fail(BANDBRAID_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(BANDBRAID_INTERNAL, e.what());
  } catch (...) {
    return fail(BANDBRAID_INTERNAL, "unknown failure");
  }
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::invalid_argument, std::string(what) + " must not be null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ConjugacyCaps to_caps(const bandbraid_caps* caps) {
  const bandbraid_caps c = caps ? *caps : bandbraid_default_caps();
  if (c.sss_elements == 0 || c.cycling_iterations == 0 || c.bfs_nodes == 0)
    throw Error(ErrorCode::invalid_argument, "caps must be positive");
  return {c.sss_elements, c.cycling_iterations};
}

template <class T, class Handle>
bandbraid_status emit(Handle** out, T value) {
  *out = new Handle{std::move(value)};
  return BANDBRAID_OK;
}

template <class T>
bandbraid_status fill_buffer(const std::vector<T>& values, T* buffer, std::size_t capacity,
                             std::size_t* needed) {
  require(needed, "needed");
  *needed = values.size();
  if (capacity < values.size()) throw Error(ErrorCode::invalid_argument, "buffer too small");
  if (!values.empty()) require(buffer, "buffer");
  std::copy(values.begin(), values.end(), buffer);
  return BANDBRAID_OK;
}

void fill_report(const CrossCheckReport& r, bandbraid_check_report* report, char** details) {
  report->words = r.words;
  report->pairs = r.pairs;
  report->classes = r.classes;
  report->undecided = r.undecided;
  report->disagreements = r.disagreements.size();
  if (!details) return;
  *details = nullptr;
  if (r.disagreements.empty()) return;
  std::ostringstream os;
  for (const auto& [a, b] : r.disagreements) os << render(a) << " | " << render(b) << '\n';
  *details = copy_string(os.str());
}

}  // namespace

extern "C" {

bandbraid_caps bandbraid_default_caps(void) { return {1'000'000, 1'000'000, oracle::kDefaultNodeCap}; }

const char* bandbraid_status_name(bandbraid_status status) {
  switch (status) {
    case BANDBRAID_OK: return "ok";
    case BANDBRAID_SYNTAX: return "syntax";
    case BANDBRAID_INDEX_OUT_OF_RANGE: return "index_out_of_range";
    case BANDBRAID_DEGENERATE_LETTER: return "degenerate_letter";
    case BANDBRAID_MISORDERED_LETTER: return "misordered_letter";
    case BANDBRAID_INVALID_STRAND_COUNT: return "invalid_strand_count";
    case BANDBRAID_MISMATCHED_STRANDS: return "mismatched_strands";
    case BANDBRAID_NOT_CANONICAL_FACTOR: return "not_canonical_factor";
    case BANDBRAID_CROSSING_CYCLES: return "crossing_cycles";
    case BANDBRAID_OVERLAPPING_CYCLES: return "overlapping_cycles";
    case BANDBRAID_NOT_POSITIVE: return "not_positive";
    case BANDBRAID_CAP_EXCEEDED: return "cap_exceeded";
    case BANDBRAID_INVALID_ARGUMENT: return "invalid_argument";
    case BANDBRAID_OUT_OF_MEMORY: return "out_of_memory";
    case BANDBRAID_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* bandbraid_last_error(void) { return last_message.c_str(); }
long bandbraid_last_error_position(void) { return last_position; }
void bandbraid_string_free(char* s) { std::free(s); }

bandbraid_status bandbraid_word_parse(const char* text, int n, bandbraid_word** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    emit(out, parse_word(text, n));
  });
}

bandbraid_status bandbraid_word_random(int n, size_t length, uint64_t seed, bandbraid_word** out) {
  return guarded([&] {
    require(out, "out");
    emit(out, random_word(n, length, seed));
  });
}

void bandbraid_word_free(bandbraid_word* w) { delete w; }
int bandbraid_word_strands(const bandbraid_word* w) { return w ? w->value.strands() : 0; }
size_t bandbraid_word_length(const bandbraid_word* w) { return w ? w->value.size() : 0; }

bandbraid_status bandbraid_word_render(const bandbraid_word* w, char** out) {
  return guarded([&] {
    require(w, "word");
    require(out, "out");
    *out = copy_string(render(w->value));
  });
}

bandbraid_status bandbraid_word_concat(const bandbraid_word* a, const bandbraid_word* b,
                                       bandbraid_word** out) {
  return guarded([&] {
    require(a, "first word");
    require(b, "second word");
    require(out, "out");
    emit(out, concat(a->value, b->value));
  });
}

#define BANDBRAID_WORD_MAP(name, expr)                                      \
  bandbraid_status name(const bandbraid_word* w, bandbraid_word** out) {  \
    return guarded([&] {                                                  \
      require(w, "word");                                                 \
      require(out, "out");                                                \
      emit(out, expr(w->value));                                          \
    });                                                                   \
  }

BANDBRAID_WORD_MAP(bandbraid_word_free_reduce, free_reduce)
BANDBRAID_WORD_MAP(bandbraid_word_invert, invert_word)
BANDBRAID_WORD_MAP(bandbraid_word_to_artin, band_to_artin)

#undef BANDBRAID_WORD_MAP

bandbraid_status bandbraid_word_tau(const bandbraid_word* w, int k, bandbraid_word** out) {
  return guarded([&] {
    require(w, "word");
    require(out, "out");
    emit(out, tau_shift(w->value, k));
  });
}

bandbraid_status bandbraid_normalize(const bandbraid_word* w, bandbraid_nf** out) {
  return guarded([&] {
    require(w, "word");
    require(out, "out");
    emit(out, left_canonical_form(w->value));
  });
}

bandbraid_status bandbraid_nf_parse(const char* text, int n, bandbraid_nf** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    emit(out, parse_normal_form(text, n));
  });
}

void bandbraid_nf_free(bandbraid_nf* nf) { delete nf; }
int bandbraid_nf_strands(const bandbraid_nf* nf) { return nf ? nf->value.strands() : 0; }
int bandbraid_nf_power(const bandbraid_nf* nf) { return nf ? nf->value.power() : 0; }
int bandbraid_nf_inf(const bandbraid_nf* nf) { return nf ? nf->value.inf() : 0; }
int bandbraid_nf_sup(const bandbraid_nf* nf) { return nf ? nf->value.sup() : 0; }
size_t bandbraid_nf_length(const bandbraid_nf* nf) { return nf ? nf->value.factors().size() : 0; }

bandbraid_status bandbraid_nf_render(const bandbraid_nf* nf, char** out) {
  return guarded([&] {
    require(nf, "normal form");
    require(out, "out");
    *out = copy_string(render(nf->value));
  });
}

bandbraid_status bandbraid_nf_factors(const bandbraid_nf* nf, bandbraid_factor_list** out) {
  return guarded([&] {
    require(nf, "normal form");
    require(out, "out");
    emit(out, nf->value.factors());
  });
}

bandbraid_status bandbraid_nf_to_word(const bandbraid_nf* nf, bandbraid_word** out) {
  return guarded([&] {
    require(nf, "normal form");
    require(out, "out");
    emit(out, to_word(nf->value));
  });
}

bandbraid_status bandbraid_nf_invert(const bandbraid_nf* nf, bandbraid_nf** out) {
  return guarded([&] {
    require(nf, "normal form");
    require(out, "out");
    emit(out, invert_normal_form(nf->value));
  });
}

bandbraid_status bandbraid_nf_multiply(const bandbraid_nf* a, const bandbraid_nf* b, bandbraid_nf** out) {
  return guarded([&] {
    require(a, "first normal form");
    require(b, "second normal form");
    require(out, "out");
    emit(out, multiply(a->value, b->value));
  });
}

bandbraid_status bandbraid_nf_equal(const bandbraid_nf* a, const bandbraid_nf* b, int* result) {
  return guarded([&] {
    require(a, "first normal form");
    require(b, "second normal form");
    require(result, "result");
    if (a->value.strands() != b->value.strands())
      throw Error(ErrorCode::mismatched_strands, "normal forms on different strand counts");
    *result = a->value == b->value;
  });
}

bandbraid_status bandbraid_equal(const bandbraid_word* v, const bandbraid_word* w, int* result) {
  return guarded([&] {
    require(v, "first word");
    require(w, "second word");
    require(result, "result");
    *result = equal(v->value, w->value);
  });
}

bandbraid_status bandbraid_factors_enumerate(int n, bandbraid_factor_list** out) {
  return guarded([&] {
    require(out, "out");
    emit(out, enumerate_factors(n));
  });
}

void bandbraid_factor_list_free(bandbraid_factor_list* list) { delete list; }
size_t bandbraid_factor_list_size(const bandbraid_factor_list* list) { return list ? list->value.size() : 0; }

bandbraid_status bandbraid_factor_render(const bandbraid_factor_list* list, size_t i, char** out) {
  return guarded([&] {
    require(list, "factor list");
    require(out, "out");
    if (i >= list->value.size()) throw Error(ErrorCode::invalid_argument, "factor index out of range");
    *out = copy_string(render(list->value[i]));
  });
}

bandbraid_status bandbraid_factor_cycles(const bandbraid_factor_list* list, size_t i, int* buffer,
                                         size_t capacity, size_t* needed) {
  return guarded([&] {
    require(list, "factor list");
    if (i >= list->value.size()) throw Error(ErrorCode::invalid_argument, "factor index out of range");
    std::vector<int> flat;
    for (const auto& c : list->value[i].cycles()) {
      flat.insert(flat.end(), c.indices().begin(), c.indices().end());
      flat.push_back(0);
    }
    fill_buffer(flat, buffer, capacity, needed);
  });
}

bandbraid_status bandbraid_are_conjugate(const bandbraid_word* first, const bandbraid_word* second,
                                         const bandbraid_caps* caps, bandbraid_conjugacy_info* info,
                                         bandbraid_word** conjugator) {
  if (conjugator) *conjugator = nullptr;
  return guarded([&] {
    require(first, "first word");
    require(second, "second word");
    require(info, "info");
    const auto r = are_conjugate(first->value, second->value, to_caps(caps));
    switch (r.verdict) {
      case ConjugacyVerdict::conjugate: info->verdict = BANDBRAID_TRUE; break;
      case ConjugacyVerdict::not_conjugate: info->verdict = BANDBRAID_FALSE; break;
      case ConjugacyVerdict::undecided: info->verdict = BANDBRAID_UNDECIDED; break;
    }
    info->inf_first = r.inf_first;
    info->sup_first = r.sup_first;
    info->inf_second = r.inf_second;
    info->sup_second = r.sup_second;
    info->sss_size = r.sss_size;
    if (conjugator && r.certificate) emit(conjugator, *r.certificate);
  });
}

bandbraid_status bandbraid_summit(const bandbraid_nf* nf, const bandbraid_caps* caps,
                                  bandbraid_nf** representative, bandbraid_nf** conjugator) {
  return guarded([&] {
    require(nf, "normal form");
    require(representative, "representative");
    auto s = summit_representative(nf->value, to_caps(caps));
    emit(representative, std::move(s.result));
    if (conjugator) emit(conjugator, std::move(s.conjugator));
  });
}

bandbraid_status bandbraid_sss_compute(const bandbraid_nf* nf, const bandbraid_caps* caps,
                                       bandbraid_sss** out) {
  return guarded([&] {
    require(nf, "normal form");
    require(out, "out");
    emit(out, super_summit_set(nf->value, to_caps(caps)));
  });
}

void bandbraid_sss_free(bandbraid_sss* sss) { delete sss; }
int bandbraid_sss_inf(const bandbraid_sss* sss) { return sss ? sss->value.inf() : 0; }
int bandbraid_sss_sup(const bandbraid_sss* sss) { return sss ? sss->value.sup() : 0; }
size_t bandbraid_sss_size(const bandbraid_sss* sss) { return sss ? sss->value.size() : 0; }

bandbraid_status bandbraid_sss_element(const bandbraid_sss* sss, size_t i, bandbraid_nf** out) {
  return guarded([&] {
    require(sss, "super summit set");
    require(out, "out");
    if (i >= sss->value.size()) throw Error(ErrorCode::invalid_argument, "element index out of range");
    emit(out, sss->value.elements()[i]);
  });
}

bandbraid_status bandbraid_sss_contains(const bandbraid_sss* sss, const bandbraid_nf* nf, int* result) {
  return guarded([&] {
    require(sss, "super summit set");
    require(nf, "normal form");
    require(result, "result");
    *result = sss->value.contains(nf->value);
  });
}

bandbraid_status bandbraid_sss_orbits(const bandbraid_sss* sss, bandbraid_orbit_info* info) {
  return guarded([&] {
    require(sss, "super summit set");
    require(info, "info");
    const auto stats = orbit_statistics(sss->value);
    info->cycling_orbits = stats.cycling_orbits.size();
    info->decycling_orbits = stats.decycling_orbits.size();
    info->combined_orbits = stats.combined_orbits.size();
    info->cycling_periods = stats.cycling_periods.size();
  });
}

bandbraid_status bandbraid_sss_cycling_periods(const bandbraid_sss* sss, size_t* buffer, size_t capacity,
                                               size_t* needed) {
  return guarded([&] {
    require(sss, "super summit set");
    const auto stats = orbit_statistics(sss->value);
    fill_buffer(stats.cycling_periods, buffer, capacity, needed);
  });
}

bandbraid_status bandbraid_oracle_equal(const bandbraid_word* v, const bandbraid_word* w, size_t node_cap,
                                        bandbraid_oracle_verdict* verdict) {
  return guarded([&] {
    require(v, "first word");
    require(w, "second word");
    require(verdict, "verdict");
    switch (oracle::equal_via_oracle(v->value, w->value, node_cap)) {
      case oracle::Verdict::equivalent: *verdict = BANDBRAID_EQUIVALENT; break;
      case oracle::Verdict::not_equivalent: *verdict = BANDBRAID_NOT_EQUIVALENT; break;
      case oracle::Verdict::undecided: *verdict = BANDBRAID_ORACLE_UNDECIDED; break;
    }
  });
}

bandbraid_status bandbraid_verify_cancellation(int n, size_t bound, size_t node_cap,
                                               bandbraid_check_report* report, char** details) {
  if (details) *details = nullptr;
  return guarded([&] {
    require(report, "report");
    const auto r = oracle::cancellation_check(n, bound, node_cap);
    *report = {r.words_examined, r.pairs_checked, 0, 0, r.counterexamples.size()};
    if (!details || r.counterexamples.empty()) return;
    std::ostringstream os;
    for (const auto& c : r.counterexamples)
      os << (c.left ? "left " : "right ") << render(BraidWord(n, {c.generator})) << " : " << render(c.x)
         << " | " << render(c.y) << '\n';
    *details = copy_string(os.str());
  });
}

bandbraid_status bandbraid_verify_positive(int n, size_t max_length, size_t node_cap,
                                           bandbraid_check_report* report, char** details) {
  if (details) *details = nullptr;
  return guarded([&] {
    require(report, "report");
    fill_report(cross_check_positive(n, max_length, node_cap), report, details);
  });
}

bandbraid_status bandbraid_verify_random(int n, size_t trials, size_t max_length, uint64_t seed,
                                         size_t node_cap, bandbraid_check_report* report, char** details) {
  if (details) *details = nullptr;
  return guarded([&] {
    require(report, "report");
    fill_report(cross_check_random(n, trials, max_length, seed, node_cap), report, details);
  });
}

}  // extern "C"

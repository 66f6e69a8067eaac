// Command-line front end. Talks to the library only through bandbraid.h.
//
// Exit codes: 0 true/success, 1 false, 2 error, 3 undecided (a cap was hit).

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bandbraid.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;
constexpr int kUndecided = 3;

struct RunConfig {
  int n = 4;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::size_t cap_sss = 1'000'000;
  std::size_t cap_bfs = 1'000'000;
  std::size_t cap_cycling = 1'000'000;

  bool structured() const { return format == "json-lines"; }
  bandbraid_caps caps() const { return {cap_sss, cap_cycling, cap_bfs}; }
};

struct Failure {
  bandbraid_status status;
  std::string message;
};

void check(bandbraid_status status) {
  if (status != BANDBRAID_OK) throw Failure{status, bandbraid_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Word = std::unique_ptr<bandbraid_word, Deleter<bandbraid_word, bandbraid_word_free>>;
using Form = std::unique_ptr<bandbraid_nf, Deleter<bandbraid_nf, bandbraid_nf_free>>;
using Factors = std::unique_ptr<bandbraid_factor_list, Deleter<bandbraid_factor_list, bandbraid_factor_list_free>>;
using Summit = std::unique_ptr<bandbraid_sss, Deleter<bandbraid_sss, bandbraid_sss_free>>;

std::string take(char* s) {
  std::string out = s ? s : "";
  bandbraid_string_free(s);
  return out;
}

Word parse(const std::string& text, int n) {
  bandbraid_word* w = nullptr;
  check(bandbraid_word_parse(text.c_str(), n, &w));
  return Word(w);
}

Form normalize(const bandbraid_word* w) {
  bandbraid_nf* nf = nullptr;
  check(bandbraid_normalize(w, &nf));
  return Form(nf);
}

std::string render(const bandbraid_word* w) {
  char* s = nullptr;
  check(bandbraid_word_render(w, &s));
  return take(s);
}

std::string render(const bandbraid_nf* nf) {
  char* s = nullptr;
  check(bandbraid_nf_render(nf, &s));
  return take(s);
}

json factor_cycles(const bandbraid_factor_list* list, std::size_t i) {
  std::size_t needed = 0;
  bandbraid_factor_cycles(list, i, nullptr, 0, &needed);
  std::vector<int> flat(needed);
  check(bandbraid_factor_cycles(list, i, flat.data(), flat.size(), &needed));
  json cycles = json::array();
  json current = json::array();
  for (int v : flat) {
    if (v == 0) {
      cycles.push_back(current);
      current = json::array();
    } else {
      current.push_back(v);
    }
  }
  return cycles;
}

json form_record(const bandbraid_nf* nf) {
  bandbraid_factor_list* raw = nullptr;
  check(bandbraid_nf_factors(nf, &raw));
  Factors list(raw);
  json factors = json::array();
  for (std::size_t i = 0; i < bandbraid_factor_list_size(list.get()); ++i)
    factors.push_back(factor_cycles(list.get(), i));
  return {{"n", bandbraid_nf_strands(nf)},
          {"u", bandbraid_nf_power(nf)},
          {"factors", factors},
          {"inf", bandbraid_nf_inf(nf)},
          {"sup", bandbraid_nf_sup(nf)},
          {"len", bandbraid_nf_length(nf)}};
}

void emit(const json& record) { std::cout << record.dump() << '\n'; }

int cmd_normalize(const RunConfig& cfg, const std::string& text) {
  Word w = parse(text, cfg.n);
  Form nf = normalize(w.get());
  if (cfg.structured()) {
    emit(form_record(nf.get()));
  } else {
    std::cout << render(nf.get()) << '\n'
              << "inf=" << bandbraid_nf_inf(nf.get()) << " sup=" << bandbraid_nf_sup(nf.get())
              << " len=" << bandbraid_nf_length(nf.get()) << '\n';
  }
  return kTrue;
}

int cmd_equal(const RunConfig& cfg, const std::string& a, const std::string& b) {
  Word v = parse(a, cfg.n);
  Word w = parse(b, cfg.n);
  int same = 0;
  check(bandbraid_equal(v.get(), w.get(), &same));
  if (cfg.structured())
    emit({{"n", cfg.n}, {"verdict", same ? "true" : "false"}});
  else
    std::cout << (same ? "true" : "false") << '\n';
  return same ? kTrue : kFalse;
}

int cmd_conjugate(const RunConfig& cfg, const std::string& a, const std::string& b) {
  Word v = parse(a, cfg.n);
  Word w = parse(b, cfg.n);
  const bandbraid_caps caps = cfg.caps();
  bandbraid_conjugacy_info info{};
  bandbraid_word* raw = nullptr;
  check(bandbraid_are_conjugate(v.get(), w.get(), &caps, &info, &raw));
  Word certificate(raw);

  const char* verdict = info.verdict == BANDBRAID_TRUE    ? "conjugate"
                        : info.verdict == BANDBRAID_FALSE ? "not conjugate"
                                                          : "undecided";
  if (cfg.structured()) {
    json record = {{"n", cfg.n},
                   {"verdict", verdict},
                   {"inf", {info.inf_first, info.inf_second}},
                   {"sup", {info.sup_first, info.sup_second}},
                   {"sss_size", info.sss_size}};
    record["certificate"] = certificate ? json(render(certificate.get())) : json(nullptr);
    emit(record);
  } else {
    std::cout << verdict << '\n';
    if (info.verdict != BANDBRAID_UNDECIDED) {
      std::cout << "first: inf=" << info.inf_first << " sup=" << info.sup_first << '\n'
                << "second: inf=" << info.inf_second << " sup=" << info.sup_second << '\n';
      if (info.sss_size) std::cout << "sss=" << info.sss_size << '\n';
    }
    if (certificate) {
      const std::string z = render(certificate.get());
      std::cout << "certificate: " << (z.empty() ? "e" : z) << '\n';
    }
  }
  if (info.verdict == BANDBRAID_UNDECIDED) return kUndecided;
  return info.verdict == BANDBRAID_TRUE ? kTrue : kFalse;
}

int cmd_sss(const RunConfig& cfg, const std::string& text, bool list_elements) {
  Word w = parse(text, cfg.n);
  Form nf = normalize(w.get());
  const bandbraid_caps caps = cfg.caps();
  bandbraid_sss* raw = nullptr;
  check(bandbraid_sss_compute(nf.get(), &caps, &raw));
  Summit sss(raw);
  bandbraid_orbit_info orbits{};
  check(bandbraid_sss_orbits(sss.get(), &orbits));
  std::size_t needed = 0;
  bandbraid_sss_cycling_periods(sss.get(), nullptr, 0, &needed);
  std::vector<std::size_t> periods(needed);
  check(bandbraid_sss_cycling_periods(sss.get(), periods.data(), periods.size(), &needed));

  std::vector<std::string> elements;
  if (list_elements) {
    for (std::size_t i = 0; i < bandbraid_sss_size(sss.get()); ++i) {
      bandbraid_nf* e = nullptr;
      check(bandbraid_sss_element(sss.get(), i, &e));
      elements.push_back(render(Form(e).get()));
    }
  }

  if (cfg.structured()) {
    json record = {{"n", cfg.n},
                   {"inf", bandbraid_sss_inf(sss.get())},
                   {"sup", bandbraid_sss_sup(sss.get())},
                   {"size", bandbraid_sss_size(sss.get())},
                   {"cycling_orbits", orbits.cycling_orbits},
                   {"decycling_orbits", orbits.decycling_orbits},
                   {"combined_orbits", orbits.combined_orbits},
                   {"cycling_periods", periods}};
    if (list_elements) record["elements"] = elements;
    emit(record);
  } else {
    std::cout << "inf=" << bandbraid_sss_inf(sss.get()) << " sup=" << bandbraid_sss_sup(sss.get())
              << " size=" << bandbraid_sss_size(sss.get()) << '\n'
              << "orbits: cycling=" << orbits.cycling_orbits << " decycling=" << orbits.decycling_orbits
              << " combined=" << orbits.combined_orbits << '\n'
              << "cycling periods:";
    for (auto p : periods) std::cout << ' ' << p;
    std::cout << '\n';
    for (const auto& e : elements) std::cout << e << '\n';
  }
  return kTrue;
}

int cmd_factors(const RunConfig& cfg) {
  bandbraid_factor_list* raw = nullptr;
  check(bandbraid_factors_enumerate(cfg.n, &raw));
  Factors list(raw);
  const std::size_t count = bandbraid_factor_list_size(list.get());
  if (cfg.structured()) {
    json factors = json::array();
    for (std::size_t i = 0; i < count; ++i) factors.push_back(factor_cycles(list.get(), i));
    emit({{"n", cfg.n}, {"count", count}, {"factors", factors}});
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      char* s = nullptr;
      check(bandbraid_factor_render(list.get(), i, &s));
      std::cout << take(s) << '\n';
    }
    std::cout << "count=" << count << '\n';
  }
  return kTrue;
}

int cmd_random(const RunConfig& cfg, std::size_t length) {
  bandbraid_word* raw = nullptr;
  check(bandbraid_word_random(cfg.n, length, cfg.seed, &raw));
  Word w(raw);
  if (cfg.structured())
    emit({{"n", cfg.n}, {"seed", cfg.seed}, {"len", length}, {"word", render(w.get())}});
  else
    std::cout << render(w.get()) << '\n';
  return kTrue;
}

struct VerifyOptions {
  std::string check = "all";
  std::size_t bound = 3;
  std::size_t max_length = 3;
  std::size_t trials = 100;
};

int cmd_verify(const RunConfig& cfg, const VerifyOptions& opt) {
  bool disagreement = false;
  bool undecided = false;
  auto report = [&](const char* name, bandbraid_status status, const bandbraid_check_report& r,
                    char* details, json extra) {
    std::string text = take(details);
    if (status == BANDBRAID_CAP_EXCEEDED) {
      undecided = true;
      if (cfg.structured())
        emit({{"check", name}, {"n", cfg.n}, {"verdict", "undecided"}, {"error", bandbraid_last_error()}});
      else
        std::cout << name << " n=" << cfg.n << " undecided: " << bandbraid_last_error() << '\n';
      return;
    }
    check(status);
    disagreement = disagreement || r.disagreements > 0;
    undecided = undecided || r.undecided > 0;
    const char* verdict = r.disagreements ? "false" : r.undecided ? "undecided" : "true";
    if (cfg.structured()) {
      json record = {{"check", name},       {"n", cfg.n},         {"verdict", verdict},
                     {"words", r.words},    {"pairs", r.pairs},   {"classes", r.classes},
                     {"undecided", r.undecided}, {"disagreements", r.disagreements}};
      record.update(extra);
      if (!text.empty()) record["details"] = text;
      emit(record);
    } else {
      std::cout << name << " n=" << cfg.n;
      for (auto& [k, v] : extra.items()) std::cout << ' ' << k << '=' << v.dump();
      std::cout << " words=" << r.words << " pairs=" << r.pairs << " undecided=" << r.undecided
                << " disagreements=" << r.disagreements << " -> " << verdict << '\n'
                << text;
    }
  };

  const bool all = opt.check == "all";
  if (all || opt.check == "cancellation") {
    bandbraid_check_report r{};
    char* details = nullptr;
    auto st = bandbraid_verify_cancellation(cfg.n, opt.bound, cfg.cap_bfs, &r, &details);
    report("cancellation", st, r, details, {{"bound", opt.bound}});
  }
  if (all || opt.check == "positive") {
    bandbraid_check_report r{};
    char* details = nullptr;
    auto st = bandbraid_verify_positive(cfg.n, opt.max_length, cfg.cap_bfs, &r, &details);
    report("positive", st, r, details, {{"max_length", opt.max_length}});
  }
  if (all || opt.check == "random") {
    bandbraid_check_report r{};
    char* details = nullptr;
    auto st = bandbraid_verify_random(cfg.n, opt.trials, opt.max_length, cfg.seed, cfg.cap_bfs, &r, &details);
    report("random", st, r, details, {{"trials", opt.trials}, {"max_length", opt.max_length}, {"seed", cfg.seed}});
  }
  if (disagreement) return kFalse;
  return undecided ? kUndecided : kTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid groups in band generators: normal forms, word and conjugacy problems"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("-n,--strands", cfg.n, "Strand count")->check(CLI::Range(1, 1 << 20));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json-lines"}));
  app.add_option("--seed", cfg.seed, "Seed for random words");
  app.add_option("--cap-sss", cfg.cap_sss, "Super summit set element cap")->check(CLI::PositiveNumber);
  app.add_option("--cap-bfs", cfg.cap_bfs, "Oracle search node cap")->check(CLI::PositiveNumber);
  app.add_option("--cap-cycling", cfg.cap_cycling, "Cycling/decycling iteration cap")->check(CLI::PositiveNumber);

  std::string first, second;
  std::size_t length = 0;
  bool list_elements = false;
  VerifyOptions verify;

  auto* normalize = app.add_subcommand("normalize", "Left-canonical form of a word");
  normalize->add_option("word", first, "Braid word")->required();
  auto* equal = app.add_subcommand("equal", "Decide whether two words are equal");
  equal->add_option("first", first)->required();
  equal->add_option("second", second)->required();
  auto* conjugate = app.add_subcommand("conjugate", "Decide whether two words are conjugate");
  conjugate->add_option("first", first)->required();
  conjugate->add_option("second", second)->required();
  auto* sss = app.add_subcommand("sss", "Super summit set of a word");
  sss->add_option("word", first)->required();
  sss->add_flag("--elements", list_elements, "List every element");
  auto* factors = app.add_subcommand("factors", "List the canonical factors");
  auto* random = app.add_subcommand("random", "Seeded random signed word");
  random->add_option("length", length)->required();
  auto* check_cmd = app.add_subcommand("verify", "Cross-check against the brute-force oracle");
  check_cmd->add_option("--check", verify.check)->check(CLI::IsMember({"all", "cancellation", "positive", "random"}));
  check_cmd->add_option("--bound", verify.bound, "Cancellation word length bound");
  check_cmd->add_option("--max-length", verify.max_length, "Word length bound for pair checks");
  check_cmd->add_option("--trials", verify.trials, "Random pairs");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*normalize) return cmd_normalize(cfg, first);
    if (*equal) return cmd_equal(cfg, first, second);
    if (*conjugate) return cmd_conjugate(cfg, first, second);
    if (*sss) return cmd_sss(cfg, first, list_elements);
    if (*factors) return cmd_factors(cfg);
    if (*random) return cmd_random(cfg, length);
    if (*check_cmd) return cmd_verify(cfg, verify);
  } catch (const Failure& f) {
    // The message already names the position for parse errors.
    std::cerr << "error: " << bandbraid_status_name(f.status) << ": " << f.message << '\n';
    if (f.status == BANDBRAID_CAP_EXCEEDED) return kUndecided;
    return kError;
  }
  return kError;
}

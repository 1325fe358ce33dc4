#include "ocl/testkit.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <random>
#include <stdexcept>

#include "ocl/json_io.hpp"

namespace ocl {
namespace testkit {

namespace {

// {a^n b^n | n >= 1}. Counter holds #a - 1; the final b fires on the zero test.
Doca make_anbn() {
  Alphabet al({"a", "b"});
  Doca d({"s0", "s1", "s2", "sf", "sink"}, "s0", {"sf"}, al);
  auto set = [&](const char* from, int test, const char* sym, const char* to, int eff) {
    d.set_edge(*d.state_index(from), test, *al.index_of(sym), *d.state_index(to), eff);
  };
  for (int t = 0; t <= 1; ++t) {
    set("s0", t, "a", t == 0 ? "s1" : "sink", 0);
    set("s0", t, "b", "sink", 0);
    set("s1", t, "a", "s1", 1);
    set("s2", t, "a", "sink", 0);
    set("sf", t, "a", "sink", 0);
    set("sf", t, "b", "sink", 0);
    set("sink", t, "a", "sink", 0);
    set("sink", t, "b", "sink", 0);
  }
  set("s1", 0, "b", "sf", 0);
  set("s1", 1, "b", "s2", -1);
  set("s2", 0, "b", "sf", 0);
  set("s2", 1, "b", "s2", -1);
  return d;
}

// PrimeMatch({2,3}) as a visibly one-counter automaton: a is a call, b and the
// p_i are returns. All omitted transitions land in the sink q7.
Doca make_primematch() {
  Alphabet al({"a", "b", "p2", "p3"});
  Doca d({"q0", "q1", "q2", "q3", "q4", "q5", "q6", "q7"}, "q0", {"q6"}, al);
  auto set = [&](const char* from, int test, const char* sym, const char* to, int eff) {
    d.set_edge(*d.state_index(from), test, *al.index_of(sym), *d.state_index(to), eff);
  };
  const char* all_states[] = {"q0", "q1", "q2", "q3", "q4", "q5", "q6", "q7"};
  // Default sink moves honoring the pushdown alphabet: a pushes, returns pop.
  for (const char* q : all_states) {
    set(q, 0, "a", "q7", 1);
    set(q, 1, "a", "q7", 1);
    for (const char* r : {"b", "p2", "p3"}) {
      set(q, 0, r, "q7", 0);
      set(q, 1, r, "q7", -1);
    }
  }
  set("q0", 0, "a", "q0", 1);
  set("q0", 1, "a", "q0", 1);
  set("q0", 1, "p2", "q1", -1);
  set("q0", 1, "p3", "q3", -1);
  set("q1", 1, "b", "q2", -1);
  set("q2", 1, "b", "q1", -1);
  set("q2", 0, "a", "q6", 1);
  set("q3", 1, "b", "q4", -1);
  set("q4", 1, "b", "q5", -1);
  set("q5", 1, "b", "q3", -1);
  set("q5", 0, "a", "q6", 1);
  return d;
}

// LeadMatch = {a^m b^n c a^k b^k c | m > n}; the first c resets the counter.
Doca make_leadmatch() {
  Alphabet al({"a", "b", "c"});
  Doca d({"q0", "q1", "q2", "q3", "q4", "q5", "sink"}, "q0", {"q5"}, al);
  auto set = [&](const char* from, int test, const char* sym, const char* to, int eff) {
    d.set_edge(*d.state_index(from), test, *al.index_of(sym), *d.state_index(to), eff);
  };
  const char* all_states[] = {"q0", "q1", "q2", "q3", "q4", "q5", "sink"};
  for (const char* q : all_states)
    for (const char* s : {"a", "b", "c"})
      for (int t = 0; t <= 1; ++t) set(q, t, s, "sink", 0);
  set("q0", 0, "a", "q0", 1);
  set("q0", 1, "a", "q0", 1);
  set("q0", 1, "b", "q1", -1);
  set("q0", 1, "c", "q2", kEffectReset);
  set("q1", 1, "b", "q1", -1);
  set("q1", 1, "c", "q2", kEffectReset);
  set("q2", 0, "a", "q3", 1);
  set("q2", 1, "a", "q3", 1);
  set("q2", 0, "c", "q5", 0);
  set("q3", 0, "a", "q3", 1);
  set("q3", 1, "a", "q3", 1);
  set("q3", 1, "b", "q4", -1);
  set("q4", 1, "b", "q4", -1);
  set("q4", 0, "c", "q5", 0);
  return d;
}

// Two states, everything accepted; the counter climbs so that high-counter
// configurations are reachable.
Doca make_allaccept() {
  Alphabet al({"a", "b"});
  Doca d({"u0", "u1"}, "u0", {"u0", "u1"}, al);
  auto set = [&](const char* from, int test, const char* sym, const char* to, int eff) {
    d.set_edge(*d.state_index(from), test, *al.index_of(sym), *d.state_index(to), eff);
  };
  for (int t = 0; t <= 1; ++t) {
    set("u0", t, "a", "u1", 1);
    set("u0", t, "b", "u0", 1);
    set("u1", t, "a", "u0", 1);
    set("u1", t, "b", "u1", 1);
  }
  return d;
}

// {a^(7t) b^(7t) | t >= 1}. The a-count lives in the state modulo 7 and in the
// counter exactly, so successor rows in the coloring stage realign only under
// shifts of 7: candidates fail until the shift window reaches that far.
Doca make_modseven() {
  Alphabet al({"a", "b"});
  std::vector<std::string> states;
  for (int i = 0; i < 7; ++i) states.push_back("m" + std::to_string(i));
  states.push_back("b1");
  states.push_back("acc");
  states.push_back("sink");
  Doca d(states, "m0", {"acc"}, al);
  auto set = [&](const std::string& from, int test, const char* sym, const std::string& to,
                 int eff) {
    d.set_edge(*d.state_index(from), test, *al.index_of(sym), *d.state_index(to), eff);
  };
  for (const std::string& q : states)
    for (const char* s : {"a", "b"})
      for (int t = 0; t <= 1; ++t) set(q, t, s, "sink", 0);
  for (int i = 0; i < 7; ++i) {
    std::string from = "m" + std::to_string(i);
    std::string to = "m" + std::to_string((i + 1) % 7);
    set(from, 0, "a", to, i == 0 ? 0 : 1);
    set(from, 1, "a", to, 1);
  }
  set("m0", 1, "b", "b1", -1);
  set("b1", 1, "b", "b1", -1);
  set("b1", 0, "b", "acc", 0);
  return d;
}

}  // namespace

const std::vector<Fixture>& all_fixtures() {
  static const std::vector<Fixture> fixtures = {
      {"anbn", make_anbn(), "a^n b^n, n >= 1", 12},
      {"primematch", make_primematch(), "PrimeMatch({2,3}) visibly one-counter automaton", 14},
      {"leadmatch", make_leadmatch(), "a^m b^n c a^k b^k c with m > n; uses reset", 12},
      {"allaccept", make_allaccept(), "two states, accepts everything", 12},
      {"modseven", make_modseven(), "a^(7t) b^(7t); coloring-misalignment stressor", 16},
  };
  return fixtures;
}

const Fixture& fixture(const std::string& name) {
  for (const Fixture& f : all_fixtures())
    if (f.name == name) return f;
  throw std::invalid_argument("unknown fixture: " + name);
}

Doca random_doca(int n_states, const Alphabet& alphabet, uint64_t seed, double reset_prob) {
  if (n_states < 1) throw std::invalid_argument("n_states must be positive");
  if (reset_prob < 0.0 || reset_prob > 1.0) throw std::invalid_argument("bad reset probability");
  std::mt19937_64 rng(seed);
  std::vector<std::string> names;
  for (int i = 0; i < n_states; ++i) names.push_back("r" + std::to_string(i));
  std::uniform_int_distribution<int> pick_state(0, n_states - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  std::vector<std::string> finals;
  for (const std::string& nm : names)
    if (coin(rng) < 0.5) finals.push_back(nm);

  Doca d(names, names[0], finals, alphabet);
  for (StateId q = 0; q < n_states; ++q) {
    for (int test = 0; test <= 1; ++test) {
      for (int sym = 0; sym < alphabet.size(); ++sym) {
        StateId to = pick_state(rng);
        int effect;
        if (coin(rng) < reset_prob) {
          effect = kEffectReset;
        } else if (test == 0) {
          effect = std::uniform_int_distribution<int>(0, 1)(rng);
        } else {
          effect = std::uniform_int_distribution<int>(-1, 1)(rng);
        }
        d.set_edge(q, test, sym, to, effect);
      }
    }
  }
  return d;
}

std::set<Word> brute_language(const Oca& machine, int max_len) {
  double total = 1;
  for (int i = 0; i < max_len; ++i) {
    total *= machine.alphabet().size();
    if (total > 1e7)
      throw std::invalid_argument("brute_language refused: |Sigma|^max_len exceeds 10^7");
  }
  std::set<Word> out;
  struct Item {
    Word w;
    Configuration c;
  };
  std::deque<Item> queue;
  queue.push_back({Word(), machine.initial_configuration()});
  while (!queue.empty()) {
    Item item = queue.front();
    queue.pop_front();
    if (machine.is_final(item.c.state)) out.insert(item.w);
    if (static_cast<int>(item.w.size()) == max_len) continue;
    for (int sym = 0; sym < machine.alphabet().size(); ++sym) {
      auto next = machine.maybe_step(item.c, sym);
      if (!next) continue;
      Word w = item.w;
      w.push_back(static_cast<char>(sym));
      queue.push_back({std::move(w), *next});
    }
  }
  return out;
}

std::optional<Word> brute_min_distinguishing(const Oca& m1, const Configuration& c1,
                                             const Oca& m2, const Configuration& c2,
                                             int max_len) {
  struct Item {
    Word w;
    Configuration a, b;
  };
  std::deque<Item> queue;
  queue.push_back({Word(), c1, c2});
  while (!queue.empty()) {
    Item item = queue.front();
    queue.pop_front();
    if (m1.is_final(item.a.state) != m2.is_final(item.b.state)) return item.w;
    if (static_cast<int>(item.w.size()) == max_len) continue;
    for (int sym = 0; sym < m1.alphabet().size(); ++sym) {
      auto na = m1.maybe_step(item.a, sym);
      auto nb = m2.maybe_step(item.b, sym);
      if (!na || !nb) throw std::logic_error("brute_min_distinguishing needs complete machines");
      Word w = item.w;
      w.push_back(static_cast<char>(sym));
      queue.push_back({std::move(w), *na, *nb});
    }
  }
  return std::nullopt;
}

std::vector<std::string> write_fixture_files(const std::string& dir) {
  std::vector<std::string> out;
  for (const Fixture& f : all_fixtures()) {
    std::string path = dir + "/" + f.name + ".json";
    nlohmann::json j = machine_to_json(f.target);
    j["description"] = f.description;
    j["verify_bound"] = f.verify_bound;
    save_machine_file(path, j);
    out.push_back(path);
  }
  return out;
}

Doca load_fixture_file(const std::string& dir, const std::string& name) {
  LoadedMachine lm = load_machine_file(dir + "/" + name + ".json");
  return as_doca(lm.machine);
}

std::vector<std::pair<Word, Word>> unique_state_violations(const Dfa& dfa, const Doca& target,
                                                           int max_len) {
  std::vector<std::pair<Word, Word>> out;
  std::map<Configuration, std::pair<Word, StateId>> seen;
  struct Item {
    Word w;
    Configuration c;
    StateId h;
  };
  std::deque<Item> queue;
  queue.push_back({Word(), target.initial_configuration(), dfa.initial()});
  while (!queue.empty()) {
    Item item = queue.front();
    queue.pop_front();
    auto [it, inserted] = seen.emplace(item.c, std::make_pair(item.w, item.h));
    if (!inserted && it->second.second != item.h) out.push_back({it->second.first, item.w});
    if (static_cast<int>(item.w.size()) == max_len) continue;
    for (int sym = 0; sym < target.alphabet().size(); ++sym) {
      auto next = target.maybe_step(item.c, sym);
      if (!next) continue;
      Word w = item.w;
      w.push_back(static_cast<char>(sym));
      queue.push_back({std::move(w), *next, dfa.next(item.h, sym)});
    }
  }
  return out;
}

}  // namespace testkit
}  // namespace ocl

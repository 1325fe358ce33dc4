#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "ocl/word.hpp"

namespace ocl {

using StateId = int;

// (state, counter value); the counter never goes below zero.
struct Configuration {
  StateId state = 0;
  long long counter = 0;

  bool operator==(const Configuration& o) const {
    return state == o.state && counter == o.counter;
  }
  bool operator<(const Configuration& o) const {
    return state != o.state ? state < o.state : counter < o.counter;
  }
};

constexpr int kEffectReset = INT32_MIN;  // sentinel for the reset counter effect

// One transition table entry: target state plus counter effect.
struct Edge {
  StateId to = -1;  // -1 = undefined entry (partial machine)
  int effect = 0;   // kEffectReset for reset

  bool defined() const { return to >= 0; }
  bool is_reset() const { return effect == kEffectReset; }
};

// Shared engine for counter automata. A DOCA is the m = 1 case: it tests the
// counter for zero and moves it by at most one; an m-DOCA tests min(counter, m)
// and moves it by at most m. Both may reset the counter to zero.
class Oca {
 public:
  Oca() = default;
  Oca(int m, std::vector<std::string> states, const std::string& initial,
      const std::vector<std::string>& finals, Alphabet alphabet);

  int m() const { return m_; }
  int num_states() const { return static_cast<int>(state_names_.size()); }
  StateId initial() const { return initial_; }
  bool is_final(StateId q) const { return final_[q]; }
  const std::vector<std::string>& state_names() const { return state_names_; }
  const std::string& state_name(StateId q) const { return state_names_.at(q); }
  const Alphabet& alphabet() const { return alphabet_; }

  std::optional<StateId> state_index(const std::string& name) const {
    auto it = state_index_.find(name);
    if (it == state_index_.end()) return std::nullopt;
    return it->second;
  }

  // test must lie in [0, m]; a test of m means "counter >= m".
  const Edge& edge(StateId q, int test, int symbol) const {
    return delta_[(static_cast<size_t>(q) * (m_ + 1) + test) * alphabet_.size() + symbol];
  }
  void set_edge(StateId q, int test, int symbol, StateId to, int effect) {
    delta_[(static_cast<size_t>(q) * (m_ + 1) + test) * alphabet_.size() + symbol] =
        Edge{to, effect};
  }

  void set_final(StateId q, bool f) { final_[q] = f; }

  Configuration initial_configuration() const { return {initial_, 0}; }

  // The edge a configuration takes on `symbol` (test = min(counter, m)).
  const Edge& edge_at(const Configuration& c, int symbol) const {
    int test = c.counter < m_ ? static_cast<int>(c.counter) : m_;
    return edge(c.state, test, symbol);
  }

  // nullopt when the transition entry is undefined (partial machines).
  std::optional<Configuration> maybe_step(const Configuration& c, int symbol) const;

 private:
  int m_ = 1;
  std::vector<std::string> state_names_;
  std::unordered_map<std::string, StateId> state_index_;
  StateId initial_ = 0;
  std::vector<bool> final_;
  Alphabet alphabet_;
  std::vector<Edge> delta_;  // [state][test][symbol]
};

struct Doca : Oca {
  Doca() = default;
  Doca(std::vector<std::string> states, const std::string& initial,
       const std::vector<std::string>& finals, Alphabet alphabet)
      : Oca(1, std::move(states), initial, finals, std::move(alphabet)) {}
};

struct MDoca : Oca {
  MDoca() = default;
  MDoca(int m, std::vector<std::string> states, const std::string& initial,
        const std::vector<std::string>& finals, Alphabet alphabet)
      : Oca(m, std::move(states), initial, finals, std::move(alphabet)) {}
};

// Complete deterministic finite automaton.
class Dfa {
 public:
  Dfa() = default;
  Dfa(std::vector<std::string> states, const std::string& initial,
      const std::vector<std::string>& finals, Alphabet alphabet);

  int num_states() const { return static_cast<int>(state_names_.size()); }
  StateId initial() const { return initial_; }
  bool is_final(StateId q) const { return final_[q]; }
  const std::vector<std::string>& state_names() const { return state_names_; }
  const std::string& state_name(StateId q) const { return state_names_.at(q); }
  const Alphabet& alphabet() const { return alphabet_; }

  std::optional<StateId> state_index(const std::string& name) const {
    auto it = state_index_.find(name);
    if (it == state_index_.end()) return std::nullopt;
    return it->second;
  }

  StateId next(StateId q, int symbol) const {
    return delta_[static_cast<size_t>(q) * alphabet_.size() + symbol];
  }
  void set_next(StateId q, int symbol, StateId to) {
    delta_[static_cast<size_t>(q) * alphabet_.size() + symbol] = to;
  }
  void set_final(StateId q, bool f) { final_[q] = f; }

  StateId run(StateId from, const Word& w) const {
    StateId q = from;
    for (char c : w) q = next(q, static_cast<unsigned char>(c));
    return q;
  }
  StateId run(const Word& w) const { return run(initial_, w); }
  bool accepts(const Word& w) const { return is_final(run(w)); }

 private:
  std::vector<std::string> state_names_;
  std::unordered_map<std::string, StateId> state_index_;
  StateId initial_ = 0;
  std::vector<bool> final_;
  Alphabet alphabet_;
  std::vector<StateId> delta_;  // [state][symbol], -1 = undefined
};

// Single transition; throws std::invalid_argument on unknown symbol/state,
// std::runtime_error on an undefined entry of a partial machine.
Configuration step(const Oca& machine, const Configuration& conf, int symbol);
Configuration step(const Oca& machine, const Configuration& conf, const std::string& symbol);

// Left fold of step from `from` (default: the initial configuration).
Configuration run(const Oca& machine, const Word& word);
Configuration run(const Oca& machine, const Configuration& from, const Word& word);
bool accepts(const Oca& machine, const Word& word);

// Convert an m-DOCA to a language-equivalent DOCA. Counter value v is encoded
// as (v mod m stored in the state, v div m in the counter), so one input step
// moves the output counter by at most one. Output states are named after the
// source state, with "__<name>#<r>" for the nonzero remainder copies; only
// (state, remainder) pairs reachable in the test-feasible abstraction are kept.
Doca mdoca_to_doca(const MDoca& machine);

// Wrap a DFA as a DOCA with all effects 0 (both tests take the same edge).
Doca dfa_as_doca(const Dfa& dfa);

// Invariant violations as data; empty means the machine is well formed.
std::vector<std::string> validate(const Oca& machine);
std::vector<std::string> validate(const Dfa& dfa);

// Add a fresh non-final sink state "__sink" (if needed) and route every
// undefined entry to it with effect 0. Returns the number of entries filled.
int complete_with_sink(Oca& machine);
int complete_with_sink(Dfa& dfa);

}  // namespace ocl

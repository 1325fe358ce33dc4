#include "ocl/automata.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace ocl {

namespace {

std::unordered_map<std::string, StateId> index_states(const std::vector<std::string>& names) {
  std::unordered_map<std::string, StateId> idx;
  for (size_t i = 0; i < names.size(); ++i) {
    if (!idx.emplace(names[i], static_cast<StateId>(i)).second)
      throw std::invalid_argument("duplicate state id: " + names[i]);
  }
  return idx;
}

}  // namespace

Oca::Oca(int m, std::vector<std::string> states, const std::string& initial,
         const std::vector<std::string>& finals, Alphabet alphabet)
    : m_(m), state_names_(std::move(states)), alphabet_(std::move(alphabet)) {
  if (m_ < 1) throw std::invalid_argument("m must be positive");
  if (state_names_.empty()) throw std::invalid_argument("state set must be non-empty");
  state_index_ = index_states(state_names_);
  auto init = state_index_.find(initial);
  if (init == state_index_.end()) throw std::invalid_argument("unknown initial state: " + initial);
  initial_ = init->second;
  final_.assign(state_names_.size(), false);
  for (const auto& f : finals) {
    auto it = state_index_.find(f);
    if (it == state_index_.end()) throw std::invalid_argument("unknown final state: " + f);
    final_[it->second] = true;
  }
  delta_.assign(state_names_.size() * (m_ + 1) * alphabet_.size(), Edge{});
}

std::optional<Configuration> Oca::maybe_step(const Configuration& c, int symbol) const {
  const Edge& e = edge_at(c, symbol);
  if (!e.defined()) return std::nullopt;
  if (e.is_reset()) return Configuration{e.to, 0};
  long long next = c.counter + e.effect;
  if (next < 0) throw std::logic_error("counter driven below zero at state " + state_name(c.state));
  return Configuration{e.to, next};
}

Configuration step(const Oca& machine, const Configuration& conf, int symbol) {
  if (symbol < 0 || symbol >= machine.alphabet().size())
    throw std::invalid_argument("symbol index out of range");
  if (conf.state < 0 || conf.state >= machine.num_states())
    throw std::invalid_argument("state index out of range");
  if (conf.counter < 0) throw std::invalid_argument("negative counter");
  auto next = machine.maybe_step(conf, symbol);
  if (!next)
    throw std::runtime_error("no transition from " + machine.state_name(conf.state) + " on " +
                             machine.alphabet().name(symbol));
  return *next;
}

Configuration step(const Oca& machine, const Configuration& conf, const std::string& symbol) {
  auto idx = machine.alphabet().index_of(symbol);
  if (!idx) throw std::invalid_argument("unknown symbol: " + symbol);
  return step(machine, conf, *idx);
}

Configuration run(const Oca& machine, const Configuration& from, const Word& word) {
  Configuration c = from;
  for (char s : word) c = step(machine, c, static_cast<int>(static_cast<unsigned char>(s)));
  return c;
}

Configuration run(const Oca& machine, const Word& word) {
  return run(machine, machine.initial_configuration(), word);
}

bool accepts(const Oca& machine, const Word& word) {
  return machine.is_final(run(machine, word).state);
}

Dfa::Dfa(std::vector<std::string> states, const std::string& initial,
         const std::vector<std::string>& finals, Alphabet alphabet)
    : state_names_(std::move(states)), alphabet_(std::move(alphabet)) {
  if (state_names_.empty()) throw std::invalid_argument("state set must be non-empty");
  state_index_ = index_states(state_names_);
  auto init = state_index_.find(initial);
  if (init == state_index_.end()) throw std::invalid_argument("unknown initial state: " + initial);
  initial_ = init->second;
  final_.assign(state_names_.size(), false);
  for (const auto& f : finals) {
    auto it = state_index_.find(f);
    if (it == state_index_.end()) throw std::invalid_argument("unknown final state: " + f);
    final_[it->second] = true;
  }
  delta_.assign(state_names_.size() * alphabet_.size(), -1);
}

Doca mdoca_to_doca(const MDoca& machine) {
  const int m = machine.m();
  const int nsyms = machine.alphabet().size();

  // Reachable (state, remainder) pairs under the abstraction that ignores the
  // quotient: from (q, r) both the grounded test r and the high test m may fire.
  auto pair_key = [m](StateId q, int r) { return q * m + r; };
  std::vector<bool> seen(static_cast<size_t>(machine.num_states()) * m, false);
  std::deque<std::pair<StateId, int>> queue;
  seen[pair_key(machine.initial(), 0)] = true;
  queue.push_back({machine.initial(), 0});

  auto successor = [&](StateId q, int r, int test, int sym) -> std::optional<std::pair<StateId, int>> {
    const Edge& e = machine.edge(q, test, sym);
    if (!e.defined()) return std::nullopt;
    if (e.is_reset()) return std::make_pair(e.to, 0);
    int rr = r + e.effect;
    if (test < m && rr < 0) return std::nullopt;  // grounded move below zero: not a real edge
    return std::make_pair(e.to, ((rr % m) + m) % m);
  };

  while (!queue.empty()) {
    auto [q, r] = queue.front();
    queue.pop_front();
    for (int sym = 0; sym < nsyms; ++sym) {
      for (int test : {r, m}) {
        auto nxt = successor(q, r, test, sym);
        if (nxt && !seen[pair_key(nxt->first, nxt->second)]) {
          seen[pair_key(nxt->first, nxt->second)] = true;
          queue.push_back(*nxt);
        }
      }
    }
  }

  std::vector<std::string> names;
  std::vector<int> pair_to_out(static_cast<size_t>(machine.num_states()) * m, -1);
  std::vector<std::pair<StateId, int>> out_to_pair;
  for (StateId q = 0; q < machine.num_states(); ++q) {
    for (int r = 0; r < m; ++r) {
      if (!seen[pair_key(q, r)]) continue;
      pair_to_out[pair_key(q, r)] = static_cast<int>(names.size());
      out_to_pair.push_back({q, r});
      names.push_back(r == 0 ? machine.state_name(q)
                             : "__" + machine.state_name(q) + "#" + std::to_string(r));
    }
  }

  std::vector<std::string> finals;
  for (size_t i = 0; i < out_to_pair.size(); ++i)
    if (machine.is_final(out_to_pair[i].first)) finals.push_back(names[i]);

  Doca out(names, machine.state_name(machine.initial()), finals, machine.alphabet());

  // Zero test of the output means quotient 0, i.e. source counter = r < m, so
  // the source test is exactly r; positive quotient means source counter >= m.
  for (size_t i = 0; i < out_to_pair.size(); ++i) {
    auto [q, r] = out_to_pair[i];
    for (int sym = 0; sym < nsyms; ++sym) {
      for (int test01 = 0; test01 <= 1; ++test01) {
        int src_test = test01 == 0 ? r : m;
        const Edge& e = machine.edge(q, src_test, sym);
        if (!e.defined()) continue;
        if (e.is_reset()) {
          int to = pair_to_out[pair_key(e.to, 0)];
          if (to >= 0) out.set_edge(static_cast<StateId>(i), test01, sym, to, kEffectReset);
          continue;
        }
        int rr = r + e.effect;
        if (test01 == 0 && rr < 0) continue;
        int carry = rr >= 0 ? rr / m : -((-rr + m - 1) / m);
        int rem = rr - carry * m;
        int to = pair_to_out[pair_key(e.to, rem)];
        if (to >= 0) out.set_edge(static_cast<StateId>(i), test01, sym, to, carry);
      }
    }
  }
  return out;
}

Doca dfa_as_doca(const Dfa& dfa) {
  std::vector<std::string> finals;
  for (StateId q = 0; q < dfa.num_states(); ++q)
    if (dfa.is_final(q)) finals.push_back(dfa.state_name(q));
  Doca out(dfa.state_names(), dfa.state_name(dfa.initial()), finals, dfa.alphabet());
  for (StateId q = 0; q < dfa.num_states(); ++q) {
    for (int sym = 0; sym < dfa.alphabet().size(); ++sym) {
      StateId to = dfa.next(q, sym);
      if (to < 0) continue;
      out.set_edge(q, 0, sym, to, 0);
      out.set_edge(q, 1, sym, to, 0);
    }
  }
  return out;
}

std::vector<std::string> validate(const Oca& machine) {
  std::vector<std::string> out;
  const int m = machine.m();
  for (StateId q = 0; q < machine.num_states(); ++q) {
    for (int test = 0; test <= m; ++test) {
      for (int sym = 0; sym < machine.alphabet().size(); ++sym) {
        const Edge& e = machine.edge(q, test, sym);
        std::string where = "(" + machine.state_name(q) + ", " + std::to_string(test) + ", " +
                            machine.alphabet().name(sym) + ")";
        if (!e.defined()) {
          out.push_back("missing transition at " + where);
          continue;
        }
        if (e.to >= machine.num_states()) out.push_back("bad target at " + where);
        if (!e.is_reset()) {
          if (e.effect < -m || e.effect > m)
            out.push_back("effect out of range at " + where);
          else if (test < m && test + e.effect < 0)
            out.push_back("effect drives counter below zero at " + where);
        }
      }
    }
  }
  return out;
}

std::vector<std::string> validate(const Dfa& dfa) {
  std::vector<std::string> out;
  for (StateId q = 0; q < dfa.num_states(); ++q) {
    for (int sym = 0; sym < dfa.alphabet().size(); ++sym) {
      if (dfa.next(q, sym) < 0)
        out.push_back("missing transition at (" + dfa.state_name(q) + ", " +
                      dfa.alphabet().name(sym) + ")");
      else if (dfa.next(q, sym) >= dfa.num_states())
        out.push_back("bad target at (" + dfa.state_name(q) + ", " + dfa.alphabet().name(sym) + ")");
    }
  }
  return out;
}

int complete_with_sink(Oca& machine) {
  int holes = 0;
  for (StateId q = 0; q < machine.num_states(); ++q)
    for (int test = 0; test <= machine.m(); ++test)
      for (int sym = 0; sym < machine.alphabet().size(); ++sym)
        if (!machine.edge(q, test, sym).defined()) ++holes;
  if (holes == 0) return 0;

  StateId sink;
  if (auto existing = machine.state_index("__sink")) {
    sink = *existing;
  } else {
    std::vector<std::string> names = machine.state_names();
    names.push_back("__sink");
    std::vector<std::string> finals;
    for (StateId q = 0; q < machine.num_states(); ++q)
      if (machine.is_final(q)) finals.push_back(machine.state_name(q));
    Oca rebuilt(machine.m(), names, machine.state_name(machine.initial()), finals,
                machine.alphabet());
    for (StateId q = 0; q < machine.num_states(); ++q)
      for (int test = 0; test <= machine.m(); ++test)
        for (int sym = 0; sym < machine.alphabet().size(); ++sym) {
          const Edge& e = machine.edge(q, test, sym);
          if (e.defined()) rebuilt.set_edge(q, test, sym, e.to, e.effect);
        }
    machine = rebuilt;
    sink = machine.num_states() - 1;
  }
  for (StateId q = 0; q < machine.num_states(); ++q)
    for (int test = 0; test <= machine.m(); ++test)
      for (int sym = 0; sym < machine.alphabet().size(); ++sym)
        if (!machine.edge(q, test, sym).defined()) machine.set_edge(q, test, sym, sink, 0);
  return holes;
}

int complete_with_sink(Dfa& dfa) {
  int holes = 0;
  for (StateId q = 0; q < dfa.num_states(); ++q)
    for (int sym = 0; sym < dfa.alphabet().size(); ++sym)
      if (dfa.next(q, sym) < 0) ++holes;
  if (holes == 0) return 0;

  StateId sink;
  if (auto existing = dfa.state_index("__sink")) {
    sink = *existing;
  } else {
    std::vector<std::string> names = dfa.state_names();
    names.push_back("__sink");
    std::vector<std::string> finals;
    for (StateId q = 0; q < dfa.num_states(); ++q)
      if (dfa.is_final(q)) finals.push_back(dfa.state_name(q));
    Dfa rebuilt(names, dfa.state_name(dfa.initial()), finals, dfa.alphabet());
    for (StateId q = 0; q < dfa.num_states(); ++q)
      for (int sym = 0; sym < dfa.alphabet().size(); ++sym)
        if (dfa.next(q, sym) >= 0) rebuilt.set_next(q, sym, dfa.next(q, sym));
    dfa = rebuilt;
    sink = dfa.num_states() - 1;
  }
  for (StateId q = 0; q < dfa.num_states(); ++q)
    for (int sym = 0; sym < dfa.alphabet().size(); ++sym)
      if (dfa.next(q, sym) < 0) dfa.set_next(q, sym, sink);
  return holes;
}

}  // namespace ocl

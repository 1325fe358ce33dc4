#include "ocl/geometry.hpp"

#include <deque>

namespace ocl {

std::unordered_map<StateId, Word> lexmin_witnesses(const Dfa& dfa) {
  std::unordered_map<StateId, Word> out;
  std::deque<StateId> queue;
  out.emplace(dfa.initial(), Word());
  queue.push_back(dfa.initial());
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    const Word& w = out.at(q);
    for (int a = 0; a < dfa.alphabet().size(); ++a) {
      StateId to = dfa.next(q, a);
      if (to < 0 || out.count(to)) continue;
      Word next = w;
      next.push_back(static_cast<char>(a));
      out.emplace(to, std::move(next));
      queue.push_back(to);
    }
  }
  return out;
}

RegionPartition partition(const Dfa& dfa, const PolynomialProfile& profile, long long n) {
  RegionPartition out;
  out.polyone = profile.eval_i64("polyone", n);
  out.polytwo = profile.eval_i64("polytwo", n);
  out.lexmin = lexmin_witnesses(dfa);
  out.region.assign(dfa.num_states(), Region::None);
  for (StateId q = 0; q < dfa.num_states(); ++q) {
    auto it = out.lexmin.find(q);
    if (it == out.lexmin.end()) continue;
    long long len = static_cast<long long>(it->second.size());
    if (len < out.polyone) {
      out.region[q] = Region::InitialRegion;
      out.ir.push_back(q);
    } else if (len == out.polyone) {
      out.region[q] = Region::Border;
      out.brd.push_back(q);
    } else if (len < out.polytwo) {
      out.region[q] = Region::RegionOfInterest;
      out.roi.push_back(q);
    }
  }
  return out;
}

std::map<Configuration, Word> lexmin_configurations(const Doca& machine, long long counter_cap) {
  std::map<Configuration, Word> out;
  std::deque<Configuration> queue;
  Configuration init = machine.initial_configuration();
  out.emplace(init, Word());
  queue.push_back(init);
  while (!queue.empty()) {
    Configuration c = queue.front();
    queue.pop_front();
    const Word w = out.at(c);
    for (int a = 0; a < machine.alphabet().size(); ++a) {
      auto next = machine.maybe_step(c, a);
      if (!next || next->counter > counter_cap || out.count(*next)) continue;
      Word nw = w;
      nw.push_back(static_cast<char>(a));
      out.emplace(*next, std::move(nw));
      queue.push_back(*next);
    }
  }
  return out;
}

std::vector<std::string> check_lexmin_length_bound(const Doca& machine, long long max_counter) {
  std::vector<std::string> out;
  const long long n = machine.num_states();
  // Minimal witnesses never climb more than n^2 above their target counter,
  // so this margin makes every witness below max_counter exact.
  auto witnesses = lexmin_configurations(machine, max_counter + n * n + 1);
  for (const auto& [con, w] : witnesses) {
    if (con.counter > max_counter) continue;
    long long bound = n * con.counter + n * (n * n + 1);
    if (static_cast<long long>(w.size()) >= bound) {
      out.push_back("|lexmin (" + machine.state_name(con.state) + "," +
                    std::to_string(con.counter) + ")| = " + std::to_string(w.size()) +
                    " >= " + std::to_string(bound));
    }
  }
  return out;
}

}  // namespace ocl

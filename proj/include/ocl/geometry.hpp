#pragma once

#include <map>
#include <unordered_map>

#include "ocl/automata.hpp"
#include "ocl/profile.hpp"

namespace ocl {

// Length-lexicographically minimal word reaching each reachable state:
// breadth-first from the initial state in word-length layers, symbols in
// alphabet order, first arrival recorded. Unreachable states are absent.
std::unordered_map<StateId, Word> lexmin_witnesses(const Dfa& dfa);

enum class Region { None, InitialRegion, Border, RegionOfInterest };

// DFA-state partition by |lexmin| relative to polyone(n) and polytwo(n).
// States with |lexmin| >= polytwo(n), and unreachable ones, are in no region.
struct RegionPartition {
  std::unordered_map<StateId, Word> lexmin;
  std::vector<Region> region;  // indexed by state
  std::vector<StateId> ir, brd, roi;
  long long polyone = 0;
  long long polytwo = 0;

  bool in_ir(StateId q) const { return region[q] == Region::InitialRegion; }
  bool in_brd(StateId q) const { return region[q] == Region::Border; }
  bool in_roi(StateId q) const { return region[q] == Region::RegionOfInterest; }
};

RegionPartition partition(const Dfa& dfa, const PolynomialProfile& profile, long long n);

// Checks |lexmin con| < n*m + n*(n^2+1) for every configuration con = (q, m)
// reachable with counter <= max_counter, via a configuration-graph BFS.
// The search explores a margin above max_counter so the witnesses it reports
// are the true minima for every checked configuration.
std::vector<std::string> check_lexmin_length_bound(const Doca& machine, long long max_counter);

// Configuration-level lexmin witnesses (the map behind the checker), exposed
// for the factorization tests: first arrival in a layered BFS capped at
// counter <= counter_cap.
std::map<Configuration, Word> lexmin_configurations(const Doca& machine, long long counter_cap);

}  // namespace ocl

#pragma once

#include <set>

#include "ocl/automata.hpp"

namespace ocl {
namespace testkit {

struct Fixture {
  std::string name;
  Doca target;
  std::string description;
  int verify_bound = 8;  // exhaustive verification length used by the suites
};

// The shipped fixtures: anbn, primematch, leadmatch, allaccept, modseven.
const std::vector<Fixture>& all_fixtures();
const Fixture& fixture(const std::string& name);

// Uniform total transition table; reset drawn with the given probability,
// remaining effects uniform over the legal set per test. Reproducible: equal
// seeds give identical machines.
Doca random_doca(int n_states, const Alphabet& alphabet, uint64_t seed, double reset_prob);

// Exact accepted-word set up to max_len by exhaustive simulation. Refuses
// blowups: |Sigma|^max_len must stay within 10^7.
std::set<Word> brute_language(const Oca& machine, int max_len);

// Independent oracle for the product-BFS search: plain enumeration of all
// words in length-lexicographic order.
std::optional<Word> brute_min_distinguishing(const Oca& m1, const Configuration& c1,
                                             const Oca& m2, const Configuration& c2, int max_len);

// Writes <dir>/<name>.json for every fixture; returns the file names.
std::vector<std::string> write_fixture_files(const std::string& dir);
Doca load_fixture_file(const std::string& dir, const std::string& name);

// Pairs (u, v) of words up to max_len that reach the same configuration of
// the target but different states of the dfa. Empty for the true behavior
// graph; a bounded learner's hypothesis may drift (surfaced, not hidden).
std::vector<std::pair<Word, Word>> unique_state_violations(const Dfa& dfa, const Doca& target,
                                                           int max_len);

}  // namespace testkit
}  // namespace ocl

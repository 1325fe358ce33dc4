#pragma once

#include "ocl/geometry.hpp"

namespace ocl {

// A factorization lexmin(p0) = x y^r z together with the DFA states reached by
// pumping y: states[j] = dfa(x y^(r+j) z) for j in [-2n, l+2n].
struct CandidateSequence {
  StateId center = -1;  // p0
  Word x, y, z;
  long long r = 0;
  long long l = 0;  // lsize(n)
  int n = 0;
  std::vector<StateId> states;  // index j stored at j + 2n

  StateId at(long long j) const { return states.at(static_cast<size_t>(j + 2 * n)); }
  long long lo() const { return -2LL * n; }
  long long hi() const { return l + 2LL * n; }

  std::string debug_line(const Dfa& dfa) const;
};

// All factorizations of lexmin(p0) with r >= 2n, y nonempty and
// |x|,|y|,|z| <= 2n(n^2+1), each expanded into its pumped state sequence.
// Order: |y| ascending, then |x| ascending, then r descending.
std::vector<CandidateSequence> enumerate_candidates(const Dfa& dfa,
                                                    const RegionPartition& part, StateId p0,
                                                    int n, const PolynomialProfile& profile);

// Testkit-side check requiring the hidden target: replays the witness words
// x y^(r+j) z and accepts iff the runs land on one target state with counters
// in arithmetic progression of difference d across the whole index range.
bool is_d_winning(const CandidateSequence& seq, const Doca& target, long long d);

}  // namespace ocl

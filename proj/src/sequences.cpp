#include "ocl/sequences.hpp"

#include <stdexcept>

namespace ocl {

std::string CandidateSequence::debug_line(const Dfa& dfa) const {
  const Alphabet& al = dfa.alphabet();
  return "p0=" + dfa.state_name(center) + " x=" + al.format(x, "") + " y=" + al.format(y, "") +
         " r=" + std::to_string(r) + " z=" + al.format(z, "");
}

std::vector<CandidateSequence> enumerate_candidates(const Dfa& dfa, const RegionPartition& part,
                                                    StateId p0, int n,
                                                    const PolynomialProfile& profile) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (!part.in_brd(p0))
    throw std::invalid_argument(dfa.state_name(p0) + " is not a border state");
  const Word& w = part.lexmin.at(p0);
  const long long len = static_cast<long long>(w.size());
  const long long cap = 2LL * n * (static_cast<long long>(n) * n + 1);
  const long long l = profile.eval_i64("lsize", n);
  if (l < 1) throw std::invalid_argument("lsize must be at least 1");

  std::vector<CandidateSequence> out;
  for (long long b = 1; b <= std::min(cap, len); ++b) {
    for (long long a = 0; a + b <= len && a <= cap; ++a) {
      // Maximal repetition count of y = w[a, a+b) starting at a.
      long long rmax = 1;
      while (a + (rmax + 1) * b <= len &&
             w.compare(a + rmax * b, b, w, a, b) == 0)
        ++rmax;
      for (long long r = rmax; r >= 2 * n; --r) {
        long long zlen = len - a - r * b;
        if (zlen > cap) break;  // shrinking r only lengthens z
        CandidateSequence seq;
        seq.center = p0;
        seq.x = w.substr(0, a);
        seq.y = w.substr(a, b);
        seq.z = w.substr(a + r * b);
        seq.r = r;
        seq.l = l;
        seq.n = n;
        seq.states.reserve(static_cast<size_t>(l + 4 * n + 1));
        // dfa(x y^(r+j) z) computed incrementally: pump y from dfa(x y^(r-2n)).
        StateId s = dfa.run(dfa.initial(), seq.x);
        for (long long i = 0; i < r - 2 * n; ++i) s = dfa.run(s, seq.y);
        for (long long j = -2 * n; j <= l + 2 * n; ++j) {
          seq.states.push_back(dfa.run(s, seq.z));
          s = dfa.run(s, seq.y);
        }
        if (seq.at(0) != p0)
          throw std::logic_error("candidate sequence is not centered at its border state");
        out.push_back(std::move(seq));
      }
    }
  }
  return out;
}

bool is_d_winning(const CandidateSequence& seq, const Doca& target, long long d) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  Configuration base = run(target, seq.x);
  for (long long i = 0; i < seq.r - 2 * seq.n; ++i) base = run(target, base, seq.y);
  std::optional<Configuration> first;
  for (long long j = seq.lo(); j <= seq.hi(); ++j) {
    Configuration con = run(target, base, seq.z);
    if (!first) {
      first = con;
    } else {
      if (con.state != first->state) return false;
      if (con.counter != first->counter + (j - seq.lo()) * d) return false;
    }
    base = run(target, base, seq.y);
  }
  return true;
}

}  // namespace ocl

#pragma once

#include <map>

#include "ocl/coloring.hpp"
#include "ocl/lstar.hpp"

namespace ocl {

enum class StateRole { IrCopy, NegCopy, BorderColor, Color, ConversionAux };

// A DOCA fragment built for one border state: copies of the initial region,
// per-border Neg copies, the border colors, and the color states delivered by
// the coloring stage. Counter-positive configurations only ever carry color
// states; every ir/Neg/border copy is grounded at counter zero.
struct PartialDoca {
  Doca machine;             // partial delta; converted from the 2n-DOCA
  MDoca two_n_machine;      // the pre-conversion 2n-DOCA over colors and copies
  std::string border;       // dfa state name of the center p
  std::string start_state;  // brdclr(p)
  std::map<std::string, StateRole> roles;
  Coloring coloring;        // kept for the coloring invariant checks
  CandidateSequence seq;
  int neg_size = 0;
};

struct RestrictedEquivReport {
  bool holds = true;
  std::optional<Word> witness;
  std::string clause;  // which clause of restricted equivalence failed
};

// Deterministic product walks checking restricted equivalence between a
// partial DOCA and the behavioral DFA at border p, for words up to
// length_bound. Clause 1 walks (partial from (brdclr(p), 0)) x (dfa from p):
// final flags must agree everywhere, and wherever the partial dies the dfa
// must sit on a border state q != p with the partial on brdclr(q). Clause 2
// walks both machines from their initial states along runs that stay inside
// ir U {p}: acceptance must agree, and arrival at p must land on brdclr(p).
RestrictedEquivReport check_restricted_equiv(const Doca& partial, const std::string& start_state,
                                             const Dfa& dfa, StateId p,
                                             const RegionPartition& part,
                                             const BorderColoring& brdclr,
                                             long long length_bound);

// Algorithm: color the region of interest from the candidate sequence, then
// assemble the 2n-DOCA (zero transitions over ir U Neg U {p}, Neg-to-color
// entries, reset transitions, decrement-to-zero exits), convert it to a DOCA
// and gate it behind the restricted-equivalence check. nullopt = fail.
std::optional<PartialDoca> partial_oca(const Dfa& dfa, int n, const CandidateSequence& seq,
                                       const BorderColoring& brdclr, const RegionPartition& part,
                                       long long re_length_bound, bool want_trace = false,
                                       RestrictedEquivReport* why = nullptr);

struct BorderReport {
  std::string border;
  int candidates_tried = 0;
  bool succeeded = false;
  int colors = 0;
  int neg_size = 0;
};

struct ConstructResult {
  Doca machine;  // completed with a sink, ready for an equivalence query
  Dfa behavioral;
  RegionPartition part;
  BorderColoring brdclr;
  std::vector<BorderReport> borders;
  std::vector<PartialDoca> partials;
  std::map<std::string, StateRole> roles;
  long long learn_meq = 0;
};

// ConstructOCA(n): learn the behavioral DFA at k = polytwo(n), partition it,
// and union one passing partial DOCA per border state over the shared initial
// region copy. Borders where every candidate fails contribute nothing; the
// outer equivalence query is the safety net. re_length_bound_override replaces
// the profile's f(docasize) bound for the restricted-equivalence gate when
// positive.
ConstructResult construct_oca(Teacher& teacher, int n, const PolynomialProfile& profile,
                              long long re_length_bound_override = 0,
                              const TranscriptSink& log = nullptr);

struct OclOptions {
  int n_max = 6;
  long long re_length_bound_override = 0;
  TranscriptSink log;
};

struct OclResult {
  bool ok = false;
  Doca machine;
  int n_final = 0;
  QueryStats stats;
  std::optional<Word> last_counterexample;
  std::optional<ConstructResult> final_construct;  // from the last n attempted
  std::map<std::string, long long> colors_per_border;
  std::map<std::string, long long> candidates_tried;

  nlohmann::json stats_json() const;
};

// The main loop: n = 1, 2, ... construct and submit until the teacher says
// yes; gives up with diagnostics once n exceeds n_max.
OclResult run_ocl(Teacher& teacher, const PolynomialProfile& profile, const OclOptions& opts = {});

}  // namespace ocl

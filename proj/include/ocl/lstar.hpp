#pragma once

#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "ocl/oracle.hpp"

namespace ocl {

// One line per teacher interaction: "MQ <word> -> 0|1", "MEQ -> OK|CE <word>".
using TranscriptSink = std::function<void(const std::string&)>;

// Angluin-style observation table. Prefixes stay prefix-closed, suffixes stay
// suffix-closed and contain the empty word; entries memoize MQ answers.
class ObservationTable {
 public:
  explicit ObservationTable(const Alphabet& alphabet);

  const std::vector<Word>& prefixes() const { return prefixes_; }
  const std::vector<Word>& suffixes() const { return suffixes_; }
  bool entry(const Word& w) const { return entries_.at(w); }
  bool has_prefix(const Word& w) const { return prefix_set_.count(w) > 0; }

  // Adds w (not its ancestors); callers keep the set prefix-closed.
  void add_prefix(const Word& w);
  void add_suffix(const Word& w);

  // Adds every prefix of the counterexample, then refills via MQ.
  void add_counterexample(const Word& ce, Teacher& teacher, const TranscriptSink& log);

  // Queries every missing (p + s) cell for p in prefixes U prefixes*Sigma.
  void fill(Teacher& teacher, const TranscriptSink& log);

  // Empty word when closed; otherwise a row p*a missing from the prefix rows.
  std::optional<Word> closedness_defect() const;
  // Suffix a*e to add when two equal rows disagree on a successor.
  std::optional<Word> consistency_defect() const;

  // Requires a closed and consistent, filled table.
  Dfa build_hypothesis() const;

  std::string row_signature(const Word& prefix) const;
  bool is_prefix_closed() const;

 private:
  const Alphabet* alphabet_;
  std::vector<Word> prefixes_;
  std::vector<Word> suffixes_;
  std::unordered_set<Word> prefix_set_;
  std::unordered_set<Word> suffix_set_;
  std::unordered_map<Word, bool> entries_;
};

struct LearnResult {
  Dfa dfa;
  long long meq_used = 0;
  long long mq_used = 0;
  int hypotheses = 0;
};

// Bounded L*: learns a complete DFA H with H agreeing with the teacher's
// language on all words of length <= k. The teacher's minimal counterexample
// is trusted: one longer than k certifies the bound, so the loop stops there.
// A counterexample on which hypothesis and teacher agree is a hard error.
LearnResult learn_behavioral_dfa(Teacher& teacher, long long k,
                                 const TranscriptSink& log = nullptr);

}  // namespace ocl

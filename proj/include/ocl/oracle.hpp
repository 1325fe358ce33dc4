#pragma once

#include <mutex>
#include <optional>

#include "ocl/automata.hpp"

namespace ocl {

struct QueryStats {
  long long mq_count = 0;
  long long meq_count = 0;
  long long max_ce_length = 0;
  double mq_seconds = 0;   // wall time spent answering membership queries
  double meq_seconds = 0;  // wall time spent answering equivalence queries
};

struct DistinguishOptions {
  bool dedup = true;  // disable only in tests that cross-check dedup safety
};

// The length-lexicographically minimal word of length <= max_len accepted from
// exactly one of the two configurations; nullopt when none exists within the
// bound. Product BFS in word-length layers, symbols expanded in alphabet
// order, with first-arrival deduplication of configuration pairs: acceptance
// depends only on the pair, and the first arrival carries the lex-least word
// among shortest ones, so pruning later arrivals preserves minimality.
std::optional<Word> min_distinguishing_word(const Oca& m1, const Configuration& conf1,
                                            const Oca& m2, const Configuration& conf2,
                                            long long max_len,
                                            const DistinguishOptions& opts = {});

// Teacher interface used by the learner; implementations must be safe to
// query from several threads.
class Teacher {
 public:
  virtual ~Teacher() = default;
  virtual const Alphabet& alphabet() const = 0;
  virtual bool membership(const Word& word) = 0;
  // nullopt = the hypothesis is (bounded-)equivalent; otherwise the minimal
  // counterexample.
  virtual std::optional<Word> minimal_equivalence(const Doca& hypothesis) = 0;
  virtual QueryStats stats() const = 0;
};

// Teacher that knows a concrete target DOCA and answers equivalence queries by
// a bounded lexicographic product search up to ce_length_bound.
class DocaTeacher : public Teacher {
 public:
  DocaTeacher(Doca target, long long ce_length_bound);

  const Alphabet& alphabet() const override { return target_.alphabet(); }
  bool membership(const Word& word) override;
  std::optional<Word> minimal_equivalence(const Doca& hypothesis) override;
  QueryStats stats() const override;

  long long ce_length_bound() const { return ce_length_bound_; }
  const Doca& target_for_testing() const { return target_; }

 private:
  Doca target_;
  long long ce_length_bound_;
  mutable std::mutex mutex_;
  QueryStats stats_;
};

}  // namespace ocl

#include "ocl/lstar.hpp"

#include <algorithm>
#include <stdexcept>

namespace ocl {

namespace {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

}  // namespace

ObservationTable::ObservationTable(const Alphabet& alphabet) : alphabet_(&alphabet) {
  prefixes_.push_back(Word());
  prefix_set_.insert(Word());
  suffixes_.push_back(Word());
  suffix_set_.insert(Word());
}

void ObservationTable::add_prefix(const Word& w) {
  if (prefix_set_.insert(w).second) prefixes_.push_back(w);
}

void ObservationTable::add_suffix(const Word& w) {
  if (suffix_set_.insert(w).second) suffixes_.push_back(w);
}

void ObservationTable::add_counterexample(const Word& ce, Teacher& teacher,
                                          const TranscriptSink& log) {
  for (size_t i = 1; i <= ce.size(); ++i) add_prefix(ce.substr(0, i));
  fill(teacher, log);
}

void ObservationTable::fill(Teacher& teacher, const TranscriptSink& log) {
  auto query = [&](const Word& w) {
    if (entries_.count(w)) return;
    bool ans = teacher.membership(w);
    entries_.emplace(w, ans);
    if (log) log("MQ " + alphabet_->format(w) + " -> " + (ans ? "1" : "0"));
  };
  for (const Word& p : prefixes_) {
    for (const Word& s : suffixes_) query(p + s);
    for (int a = 0; a < alphabet_->size(); ++a) {
      Word pa = p + static_cast<char>(a);
      for (const Word& s : suffixes_) query(pa + s);
    }
  }
}

std::string ObservationTable::row_signature(const Word& prefix) const {
  std::string sig;
  sig.reserve(suffixes_.size());
  for (const Word& s : suffixes_) sig.push_back(entries_.at(prefix + s) ? '1' : '0');
  return sig;
}

std::optional<Word> ObservationTable::closedness_defect() const {
  std::unordered_set<std::string> prefix_rows;
  for (const Word& p : prefixes_) prefix_rows.insert(row_signature(p));
  for (const Word& p : prefixes_) {
    for (int a = 0; a < alphabet_->size(); ++a) {
      Word pa = p + static_cast<char>(a);
      if (!prefix_rows.count(row_signature(pa))) return pa;
    }
  }
  return std::nullopt;
}

std::optional<Word> ObservationTable::consistency_defect() const {
  std::unordered_map<std::string, std::vector<const Word*>> groups;
  for (const Word& p : prefixes_) groups[row_signature(p)].push_back(&p);
  for (const auto& [sig, members] : groups) {
    if (members.size() < 2) continue;
    for (size_t i = 0; i < members.size(); ++i) {
      for (size_t j = i + 1; j < members.size(); ++j) {
        for (int a = 0; a < alphabet_->size(); ++a) {
          Word ua = *members[i] + static_cast<char>(a);
          Word va = *members[j] + static_cast<char>(a);
          for (size_t si = 0; si < suffixes_.size(); ++si) {
            if (entries_.at(ua + suffixes_[si]) != entries_.at(va + suffixes_[si]))
              return static_cast<char>(a) + suffixes_[si];
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool ObservationTable::is_prefix_closed() const {
  for (const Word& p : prefixes_) {
    if (p.empty()) continue;
    if (!prefix_set_.count(p.substr(0, p.size() - 1))) return false;
  }
  return true;
}

Dfa ObservationTable::build_hypothesis() const {
  // States are the distinct rows among prefixes, named by a stable hash of the
  // row signature so reruns produce identical ids.
  std::unordered_map<std::string, int> row_to_state;
  std::vector<std::string> names;
  std::vector<const Word*> representative;
  std::unordered_set<std::string> used_names;
  for (const Word& p : prefixes_) {
    std::string sig = row_signature(p);
    if (row_to_state.count(sig)) continue;
    std::string name = "s" + hex(fnv1a(sig)).substr(8);
    while (used_names.count(name)) name += "x";
    used_names.insert(name);
    row_to_state.emplace(sig, static_cast<int>(names.size()));
    names.push_back(name);
    representative.push_back(&p);
  }

  std::vector<std::string> finals;
  for (size_t i = 0; i < names.size(); ++i)
    if (entries_.at(*representative[i])) finals.push_back(names[i]);

  Dfa dfa(names, names[row_to_state.at(row_signature(Word()))], finals, *alphabet_);
  for (size_t i = 0; i < names.size(); ++i) {
    for (int a = 0; a < alphabet_->size(); ++a) {
      Word pa = *representative[i] + static_cast<char>(a);
      auto it = row_to_state.find(row_signature(pa));
      if (it == row_to_state.end())
        throw std::logic_error("hypothesis requested from a non-closed table");
      dfa.set_next(static_cast<StateId>(i), a, it->second);
    }
  }
  return dfa;
}

LearnResult learn_behavioral_dfa(Teacher& teacher, long long k, const TranscriptSink& log) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  ObservationTable table(teacher.alphabet());
  table.fill(teacher, log);

  LearnResult result;
  for (;;) {
    for (;;) {
      if (auto pa = table.closedness_defect()) {
        table.add_prefix(*pa);
        table.fill(teacher, log);
        continue;
      }
      if (auto ae = table.consistency_defect()) {
        table.add_suffix(*ae);
        table.fill(teacher, log);
        continue;
      }
      break;
    }

    Dfa hypothesis = table.build_hypothesis();
    ++result.hypotheses;
    ++result.meq_used;
    auto ce = teacher.minimal_equivalence(dfa_as_doca(hypothesis));
    if (!ce) {
      if (log) log("MEQ -> OK");
      result.dfa = hypothesis;
      return result;
    }
    if (log) log("MEQ -> CE " + teacher.alphabet().format(*ce));
    if (static_cast<long long>(ce->size()) > k) {
      // The counterexample is globally minimal, so anything longer than k
      // certifies agreement on all words up to k.
      result.dfa = hypothesis;
      return result;
    }
    bool target_answer = teacher.membership(*ce);
    if (log) log("MQ " + teacher.alphabet().format(*ce) + " -> " + (target_answer ? "1" : "0"));
    if (hypothesis.accepts(*ce) == target_answer)
      throw std::logic_error("teacher returned a word that does not distinguish the hypothesis");
    table.add_counterexample(*ce, teacher, log);
  }
}

}  // namespace ocl

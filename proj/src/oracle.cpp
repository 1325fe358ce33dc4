#include "ocl/oracle.hpp"

#include <chrono>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace ocl {

namespace {

struct PairKey {
  Configuration a, b;
  bool operator==(const PairKey& o) const { return a == o.a && b == o.b; }
};

struct PairKeyHash {
  size_t operator()(const PairKey& k) const {
    size_t h = std::hash<long long>()(k.a.counter);
    h = h * 1000003 + std::hash<int>()(k.a.state);
    h = h * 1000003 + std::hash<long long>()(k.b.counter);
    h = h * 1000003 + std::hash<int>()(k.b.state);
    return h;
  }
};

struct Node {
  Configuration a, b;
  int parent;
  int symbol;
  int depth;
};

}  // namespace

std::optional<Word> min_distinguishing_word(const Oca& m1, const Configuration& conf1,
                                            const Oca& m2, const Configuration& conf2,
                                            long long max_len, const DistinguishOptions& opts) {
  if (max_len < 0) throw std::invalid_argument("max_len must be non-negative");
  if (!(m1.alphabet() == m2.alphabet()))
    throw std::invalid_argument("machines must share an alphabet");
  if (conf1.state < 0 || conf1.state >= m1.num_states() || conf2.state < 0 ||
      conf2.state >= m2.num_states())
    throw std::invalid_argument("configuration state out of range");

  const long long counter_cap =
      std::max(conf1.counter, conf2.counter) + max_len * std::max(m1.m(), m2.m());

  std::vector<Node> nodes;
  std::deque<int> queue;
  std::unordered_set<PairKey, PairKeyHash> visited;

  auto reconstruct = [&](int idx) {
    Word w;
    for (int i = idx; nodes[i].parent >= 0; i = nodes[i].parent)
      w.push_back(static_cast<char>(nodes[i].symbol));
    std::reverse(w.begin(), w.end());
    return w;
  };

  nodes.push_back({conf1, conf2, -1, -1, 0});
  queue.push_back(0);
  if (opts.dedup) visited.insert({conf1, conf2});

  const int nsyms = m1.alphabet().size();
  while (!queue.empty()) {
    int idx = queue.front();
    queue.pop_front();
    Node node = nodes[idx];
    if (m1.is_final(node.a.state) != m2.is_final(node.b.state)) return reconstruct(idx);
    if (node.depth == max_len) continue;
    for (int sym = 0; sym < nsyms; ++sym) {
      auto na = m1.maybe_step(node.a, sym);
      auto nb = m2.maybe_step(node.b, sym);
      if (!na || !nb)
        throw std::logic_error("min_distinguishing_word requires complete machines");
      if (na->counter > counter_cap || nb->counter > counter_cap)
        throw std::logic_error("counter exceeded the search cap");  // cannot happen within bound
      if (opts.dedup && !visited.insert({*na, *nb}).second) continue;
      nodes.push_back({*na, *nb, idx, sym, node.depth + 1});
      queue.push_back(static_cast<int>(nodes.size()) - 1);
    }
  }
  return std::nullopt;
}

DocaTeacher::DocaTeacher(Doca target, long long ce_length_bound)
    : target_(std::move(target)), ce_length_bound_(ce_length_bound) {
  if (ce_length_bound_ < 0) throw std::invalid_argument("ce_length_bound must be non-negative");
  auto problems = validate(target_);
  if (!problems.empty())
    throw std::invalid_argument("teacher target is not a valid DOCA: " + problems.front());
}

bool DocaTeacher::membership(const Word& word) {
  auto t0 = std::chrono::steady_clock::now();
  for (char c : word)
    if (static_cast<unsigned char>(c) >= static_cast<unsigned>(target_.alphabet().size()))
      throw std::invalid_argument("membership word uses a symbol outside the teacher alphabet");
  bool result = accepts(target_, word);
  std::lock_guard<std::mutex> lock(mutex_);
  ++stats_.mq_count;
  stats_.mq_seconds +=
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

std::optional<Word> DocaTeacher::minimal_equivalence(const Doca& hypothesis) {
  auto t0 = std::chrono::steady_clock::now();
  if (!(hypothesis.alphabet() == target_.alphabet()))
    throw std::invalid_argument("hypothesis alphabet differs from the teacher's");
  auto ce = min_distinguishing_word(hypothesis, hypothesis.initial_configuration(), target_,
                                    target_.initial_configuration(), ce_length_bound_);
  if (ce) {
    // Every counterexample is re-verified by simulation before it leaves.
    if (accepts(hypothesis, *ce) == accepts(target_, *ce))
      throw std::logic_error("counterexample search returned a non-distinguishing word");
  }
  std::lock_guard<std::mutex> lock(mutex_);
  ++stats_.meq_count;
  stats_.meq_seconds +=
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (ce && static_cast<long long>(ce->size()) > stats_.max_ce_length)
    stats_.max_ce_length = static_cast<long long>(ce->size());
  return ce;
}

QueryStats DocaTeacher::stats() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return stats_;
}

}  // namespace ocl

#include "ocl/assembly.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace ocl {

namespace {

std::string ir_copy_name(const Dfa& dfa, StateId q) { return dfa.state_name(q) + "'"; }
std::string neg_copy_name(const Dfa& dfa, StateId q, StateId border) {
  return dfa.state_name(q) + "@" + dfa.state_name(border);
}

long long default_re_bound(const PolynomialProfile& profile, int n) {
  BigInt v = profile.eval("f", profile.docasize(n));
  // Under a desk profile the behavioral DFA is only structurally faithful as
  // long as a word and its accepting completions both fit under polytwo, so
  // the walk is kept short of the truncation zone. The paper profile's
  // inequalities make the f(docasize) bound the smaller one by far.
  BigInt faithful = profile.polytwo(n) - BigInt(2) * profile.polyone(n);
  if (faithful < BigInt(1)) faithful = BigInt(1);
  if (faithful < v) v = faithful;
  long long out;
  if (!v.to_i64(out))
    throw std::range_error("restricted-equivalence bound at n=" + std::to_string(n) + " = " +
                           v.to_string() + " is too large; pass an explicit bound");
  return out;
}

}  // namespace

RestrictedEquivReport check_restricted_equiv(const Doca& partial, const std::string& start_state,
                                             const Dfa& dfa, StateId p,
                                             const RegionPartition& part,
                                             const BorderColoring& brdclr,
                                             long long length_bound) {
  RestrictedEquivReport report;
  auto start = partial.state_index(start_state);
  if (!start) throw std::invalid_argument("partial lacks its start state " + start_state);

  struct Node {
    Configuration c;
    StateId q;
    int parent;
    int symbol;
    long long depth;
  };
  auto word_of_node = [](const std::vector<Node>& nodes, int idx) {
    Word w;
    for (int i = idx; nodes[i].parent >= 0; i = nodes[i].parent)
      w.push_back(static_cast<char>(nodes[i].symbol));
    std::reverse(w.begin(), w.end());
    return w;
  };

  // Clause 1: product of (partial from (brdclr(p), 0)) and (dfa from p).
  {
    std::vector<Node> nodes;
    std::deque<int> queue;
    std::set<std::tuple<StateId, long long, StateId>> visited;
    nodes.push_back({{*start, 0}, p, -1, -1, 0});
    queue.push_back(0);
    visited.insert({*start, 0, p});
    while (!queue.empty()) {
      int idx = queue.front();
      queue.pop_front();
      Node node = nodes[idx];
      if (partial.is_final(node.c.state) != dfa.is_final(node.q)) {
        report.holds = false;
        report.clause = "1b: final flags disagree at (" + partial.state_name(node.c.state) +
                        "," + std::to_string(node.c.counter) + ") vs " + dfa.state_name(node.q);
        report.witness = word_of_node(nodes, idx);
        return report;
      }
      if (node.depth == length_bound) continue;
      for (int sym = 0; sym < dfa.alphabet().size(); ++sym) {
        auto next = partial.maybe_step(node.c, sym);
        StateId q2 = dfa.next(node.q, sym);
        if (!next) {
          bool ok = part.in_brd(node.q) && node.q != p && node.c.counter == 0 &&
                    partial.state_name(node.c.state) == brdclr.of(node.q);
          if (!ok) {
            report.holds = false;
            report.clause = "1c: partial has no transition on " + dfa.alphabet().name(sym) +
                            " at (" + partial.state_name(node.c.state) + "," +
                            std::to_string(node.c.counter) + ") vs " + dfa.state_name(node.q);
            report.witness = word_of_node(nodes, idx);
            return report;
          }
          continue;
        }
        if (next->counter > length_bound) continue;  // cannot matter within the bound
        if (!visited.insert({next->state, next->counter, q2}).second) continue;
        nodes.push_back({*next, q2, idx, sym, node.depth + 1});
        queue.push_back(static_cast<int>(nodes.size()) - 1);
      }
    }
  }

  // Clause 2: runs from the initial states staying inside ir U {p}. The
  // partial may die on such a run; that is only a violation if the dfa can
  // still accept within the region.
  {
    struct Node2 {
      StateId q;
      std::optional<Configuration> c;
      int parent;
      int symbol;
      long long depth;
    };
    std::vector<Node2> nodes;
    std::deque<int> queue;
    std::set<std::tuple<StateId, StateId, long long>> visited;  // dead partial: state = -1
    auto key = [](const Node2& n) {
      return std::make_tuple(n.q, n.c ? n.c->state : -1, n.c ? n.c->counter : -1);
    };
    auto word_of = [&nodes](int idx) {
      Word w;
      for (int i = idx; nodes[i].parent >= 0; i = nodes[i].parent)
        w.push_back(static_cast<char>(nodes[i].symbol));
      std::reverse(w.begin(), w.end());
      return w;
    };
    nodes.push_back({dfa.initial(), partial.initial_configuration(), -1, -1, 0});
    queue.push_back(0);
    visited.insert(key(nodes[0]));
    while (!queue.empty()) {
      int idx = queue.front();
      queue.pop_front();
      Node2 node = nodes[idx];
      bool partial_accepts = node.c && partial.is_final(node.c->state);
      if (dfa.is_final(node.q) != partial_accepts) {
        report.holds = false;
        report.clause = "2a: acceptance disagrees inside ir U {p} at " + dfa.state_name(node.q);
        report.witness = word_of(idx);
        return report;
      }
      if (node.q == p) {
        bool ok = node.c && partial.state_name(node.c->state) == brdclr.of(p) &&
                  node.c->counter == 0;
        if (!ok) {
          report.holds = false;
          report.clause = "2b: run arriving at " + dfa.state_name(p) +
                          " does not land on " + brdclr.of(p);
          report.witness = word_of(idx);
          return report;
        }
      }
      if (node.depth == length_bound) continue;
      for (int sym = 0; sym < dfa.alphabet().size(); ++sym) {
        StateId q2 = dfa.next(node.q, sym);
        if (!(part.in_ir(q2) || q2 == p)) continue;
        std::optional<Configuration> c2;
        if (node.c) c2 = partial.maybe_step(*node.c, sym);
        Node2 next{q2, c2, idx, sym, node.depth + 1};
        if (!visited.insert(key(next)).second) continue;
        nodes.push_back(next);
        queue.push_back(static_cast<int>(nodes.size()) - 1);
      }
    }
  }

  return report;
}

std::optional<PartialDoca> partial_oca(const Dfa& dfa, int n, const CandidateSequence& seq,
                                       const BorderColoring& brdclr, const RegionPartition& part,
                                       long long re_length_bound, bool want_trace,
                                       RestrictedEquivReport* why) {
  auto coloring = color(dfa, n, seq, brdclr, part, want_trace);
  if (!coloring) return std::nullopt;

  const StateId p = seq.center;
  const int two_n = 2 * n;

  // Neg: region-of-interest states showing up at negative indices of some row.
  std::set<StateId> neg;
  for (int c = 0; c < coloring->num_colors(); ++c)
    for (long long j = -two_n; j <= -1; ++j)
      if (part.in_roi(coloring->at(c, j))) neg.insert(coloring->at(c, j));

  auto in_inb = [&](StateId q) {
    return part.in_ir(q) || part.in_brd(q) || neg.count(q) > 0;
  };
  auto map_name = [&](StateId q) -> std::string {
    if (part.in_ir(q)) return ir_copy_name(dfa, q);
    if (part.in_brd(q)) return brdclr.of(q);
    return neg_copy_name(dfa, q, p);
  };

  // State list: colors in creation order (color 0 is brdclr(p) = map(p)),
  // then the remaining INB copies in dfa order.
  std::vector<std::string> names = coloring->color_names;
  std::map<std::string, StateRole> roles;
  roles[names[0]] = StateRole::BorderColor;
  for (int c = 1; c < coloring->num_colors(); ++c) roles[names[c]] = StateRole::Color;
  std::vector<std::string> finals;
  for (int c = 0; c < coloring->num_colors(); ++c)
    if (coloring->color_final[c]) finals.push_back(names[c]);
  for (StateId q = 0; q < dfa.num_states(); ++q) {
    if (!in_inb(q) || q == p) continue;
    std::string nm = map_name(q);
    names.push_back(nm);
    roles[nm] = part.in_ir(q) ? StateRole::IrCopy
                              : (part.in_brd(q) ? StateRole::BorderColor : StateRole::NegCopy);
    if (dfa.is_final(q)) finals.push_back(nm);
  }

  MDoca machine(two_n, names, map_name(dfa.initial()), finals, dfa.alphabet());
  auto id_of = [&](const std::string& nm) { return *machine.state_index(nm); };

  // Color transitions first; the grounded zero-level blocks below overwrite
  // the center color's zero row where the run must fall back into the copies.
  for (int c = 0; c < coloring->num_colors(); ++c) {
    for (int sym = 0; sym < dfa.alphabet().size(); ++sym) {
      const ColorAction& act = coloring->action[c][sym];
      if (act.kind == ColorAction::Kind::Reset) {
        StateId target = id_of(map_name(act.reset_target));
        for (int t = 0; t <= two_n; ++t)
          machine.set_edge(id_of(names[c]), t, sym, target, kEffectReset);
        continue;
      }
      if (act.shift >= 0) {
        for (int t = 0; t <= two_n; ++t)
          machine.set_edge(id_of(names[c]), t, sym, id_of(names[act.to_color]), act.shift);
      } else {
        int k = -act.shift;
        for (int t = k; t <= two_n; ++t)
          machine.set_edge(id_of(names[c]), t, sym, id_of(names[act.to_color]), act.shift);
        for (int t = 0; t < k; ++t) {
          StateId q = coloring->at(act.to_color, t - k);
          if (!in_inb(q)) continue;  // no grounded image; leave the hole
          machine.set_edge(id_of(names[c]), t, sym, id_of(map_name(q)), -t);
        }
      }
    }
  }

  // Zero transitions over IN U {p} and the Neg-to-color entries.
  for (StateId r = 0; r < dfa.num_states(); ++r) {
    bool in_in = part.in_ir(r) || neg.count(r) > 0;
    if (!in_in && r != p) continue;
    for (int sym = 0; sym < dfa.alphabet().size(); ++sym) {
      StateId q = dfa.next(r, sym);
      if (in_inb(q)) {
        machine.set_edge(id_of(map_name(r)), 0, sym, id_of(map_name(q)), 0);
        continue;
      }
      if (neg.count(r) == 0) continue;  // p's region-of-interest successors ride the colors
      // Deterministic pick: smallest index k', earliest-created color.
      bool placed = false;
      for (int k = 0; k <= two_n && !placed; ++k) {
        for (int c = 0; c < coloring->num_colors() && !placed; ++c) {
          if (coloring->at(c, k) == q) {
            machine.set_edge(id_of(map_name(r)), 0, sym, id_of(names[c]), k);
            placed = true;
          }
        }
      }
    }
  }

  PartialDoca out;
  out.machine = mdoca_to_doca(machine);
  out.two_n_machine = machine;
  out.border = dfa.state_name(p);
  out.start_state = brdclr.of(p);
  out.coloring = *coloring;
  out.seq = seq;
  out.neg_size = static_cast<int>(neg.size());
  out.roles = std::move(roles);
  for (const std::string& nm : out.machine.state_names())
    if (!out.roles.count(nm)) out.roles[nm] = StateRole::ConversionAux;

  auto report = check_restricted_equiv(out.machine, out.start_state, dfa, p, part, brdclr,
                                       re_length_bound);
  if (why) *why = report;
  if (!report.holds) return std::nullopt;
  return out;
}

namespace {

// Union of partial DOCAs keyed by state name; identical re-insertions are
// fine, conflicting ones are an invariant violation.
class UnionBuilder {
 public:
  void add_state(const std::string& name, bool final) {
    auto [it, inserted] = final_.emplace(name, final);
    if (inserted) order_.push_back(name);
    else if (it->second != final)
      throw std::logic_error("union disagrees on final flag of " + name);
  }

  void add_edge(const std::string& from, int test, int sym, const std::string& to, int effect) {
    auto key = std::make_tuple(from, test, sym);
    auto val = std::make_pair(to, effect);
    auto [it, inserted] = delta_.emplace(key, val);
    if (!inserted && it->second != val)
      throw std::logic_error("union transition conflict at (" + from + "," +
                             std::to_string(test) + ",sym" + std::to_string(sym) + ")");
  }

  Doca build(const std::string& initial, const Alphabet& alphabet) const {
    std::vector<std::string> finals;
    for (const std::string& nm : order_)
      if (final_.at(nm)) finals.push_back(nm);
    Doca out(order_, initial, finals, alphabet);
    for (const auto& [key, val] : delta_) {
      auto [from, test, sym] = key;
      out.set_edge(*out.state_index(from), test, sym, *out.state_index(val.first), val.second);
    }
    return out;
  }

 private:
  std::map<std::string, bool> final_;
  std::vector<std::string> order_;
  std::map<std::tuple<std::string, int, int>, std::pair<std::string, int>> delta_;
};

}  // namespace

ConstructResult construct_oca(Teacher& teacher, int n, const PolynomialProfile& profile,
                              long long re_length_bound_override, const TranscriptSink& log) {
  ConstructResult out;
  long long k = profile.eval_i64("polytwo", n);
  LearnResult learned = learn_behavioral_dfa(teacher, k, log);
  out.behavioral = learned.dfa;
  out.learn_meq = learned.meq_used;
  out.part = partition(out.behavioral, profile, n);
  out.brdclr = BorderColoring::assign(out.behavioral, out.part);

  const Dfa& dfa = out.behavioral;
  long long re_bound = re_length_bound_override > 0 ? re_length_bound_override
                                                    : default_re_bound(profile, n);

  UnionBuilder u;
  // Shared base: the initial-region copy plus every border color as a state.
  for (StateId q : out.part.ir) {
    std::string nm = ir_copy_name(dfa, q);
    u.add_state(nm, dfa.is_final(q));
    out.roles[nm] = StateRole::IrCopy;
    for (int sym = 0; sym < dfa.alphabet().size(); ++sym) {
      StateId to = dfa.next(q, sym);
      if (!(out.part.in_ir(to) || out.part.in_brd(to)))
        throw std::logic_error("initial region has an edge skipping over the border");
      std::string to_nm = out.part.in_ir(to) ? ir_copy_name(dfa, to) : out.brdclr.of(to);
      u.add_edge(nm, 0, sym, to_nm, 0);
    }
  }
  for (StateId q : out.part.brd) {
    u.add_state(out.brdclr.of(q), dfa.is_final(q));
    out.roles[out.brdclr.of(q)] = StateRole::BorderColor;
  }

  // Deterministic border order: by lexmin witness (all the same length).
  std::vector<StateId> borders = out.part.brd;
  std::sort(borders.begin(), borders.end(), [&](StateId a, StateId b) {
    return out.part.lexmin.at(a) < out.part.lexmin.at(b);
  });

  for (StateId p : borders) {
    BorderReport report;
    report.border = dfa.state_name(p);
    auto candidates = enumerate_candidates(dfa, out.part, p, n, profile);
    for (const CandidateSequence& seq : candidates) {
      ++report.candidates_tried;
      auto partial = partial_oca(dfa, n, seq, out.brdclr, out.part, re_bound);
      if (!partial) continue;
      report.succeeded = true;
      report.colors = partial->coloring.num_colors();
      report.neg_size = partial->neg_size;
      const Doca& pm = partial->machine;
      for (StateId s = 0; s < pm.num_states(); ++s) u.add_state(pm.state_name(s), pm.is_final(s));
      for (StateId s = 0; s < pm.num_states(); ++s)
        for (int test = 0; test <= 1; ++test)
          for (int sym = 0; sym < pm.alphabet().size(); ++sym) {
            const Edge& e = pm.edge(s, test, sym);
            if (e.defined())
              u.add_edge(pm.state_name(s), test, sym, pm.state_name(e.to), e.effect);
          }
      for (const auto& [nm, role] : partial->roles)
        if (!out.roles.count(nm)) out.roles[nm] = role;
      out.partials.push_back(std::move(*partial));
      break;
    }
    out.borders.push_back(report);
  }

  out.machine = u.build(ir_copy_name(dfa, dfa.initial()), dfa.alphabet());
  complete_with_sink(out.machine);
  return out;
}

OclResult run_ocl(Teacher& teacher, const PolynomialProfile& profile, const OclOptions& opts) {
  OclResult out;
  for (int n = 1; n <= opts.n_max; ++n) {
    ConstructResult built =
        construct_oca(teacher, n, profile, opts.re_length_bound_override, opts.log);
    auto ce = teacher.minimal_equivalence(built.machine);
    out.n_final = n;
    out.colors_per_border.clear();
    out.candidates_tried.clear();
    for (const BorderReport& b : built.borders) {
      out.colors_per_border[b.border] = b.colors;
      out.candidates_tried[b.border] = b.candidates_tried;
    }
    out.machine = built.machine;
    out.final_construct = std::move(built);
    if (!ce) {
      out.ok = true;
      out.stats = teacher.stats();
      return out;
    }
    if (opts.log) opts.log("OCL n=" + std::to_string(n) + " rejected, CE length " +
                           std::to_string(ce->size()));
    out.last_counterexample = ce;
  }
  out.ok = false;
  out.stats = teacher.stats();
  return out;
}

nlohmann::json OclResult::stats_json() const {
  nlohmann::json j;
  j["n_final"] = n_final;
  j["mq"] = stats.mq_count;
  j["meq"] = stats.meq_count;
  j["colors_per_border"] = colors_per_border;
  j["candidates_tried"] = candidates_tried;
  return j;
}

}  // namespace ocl

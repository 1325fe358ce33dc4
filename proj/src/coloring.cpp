#include "ocl/coloring.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace ocl {

BorderColoring BorderColoring::assign(const Dfa& dfa, const RegionPartition& part) {
  BorderColoring out;
  for (StateId q : part.brd) out.name.emplace(q, dfa.state_name(q) + "^");
  return out;
}

namespace {

// The one initial-region state all core successors collapse into, if any.
std::optional<StateId> reset_collapse(const Dfa& dfa, const RegionPartition& part,
                                      const std::vector<StateId>& row, int n, long long l,
                                      int sym) {
  StateId first = dfa.next(row[static_cast<size_t>(2 * n)], sym);
  if (!part.in_ir(first)) return std::nullopt;
  for (long long i = 1; i <= l; ++i)
    if (dfa.next(row[static_cast<size_t>(i + 2 * n)], sym) != first) return std::nullopt;
  return first;
}

// True iff cand[i] == row[i + shift] for all core indices i in [0, l].
bool matches_with_shift(const std::vector<StateId>& cand, const std::vector<StateId>& row,
                        int n, long long l, int shift) {
  for (long long i = 0; i <= l; ++i)
    if (cand[static_cast<size_t>(i + 2 * n)] != row[static_cast<size_t>(i + shift + 2 * n)])
      return false;
  return true;
}

}  // namespace

std::optional<Coloring> color(const Dfa& dfa, int n, const CandidateSequence& seq,
                              const BorderColoring& brdclr, const RegionPartition& part,
                              bool want_trace) {
  if (seq.n != n) throw std::invalid_argument("sequence was enumerated for a different n");
  if (!part.in_brd(seq.center)) throw std::invalid_argument("sequence center is not a border state");
  const long long l = seq.l;
  const long long budget = static_cast<long long>(n) * n * n;
  const int nsyms = dfa.alphabet().size();

  Coloring out;
  out.n = n;
  out.l = l;
  out.center = seq.center;
  out.color_names.push_back(brdclr.of(seq.center));
  out.rows.push_back(seq.states);
  out.creation_depth.push_back(0);

  // Find an existing color matching `cand` under some shift in [-2n, 2n];
  // increments first, then decrements, smallest magnitude and earliest color
  // first. Collects every match so callers can assert the choice is unique up
  // to row equality.
  auto find_matches = [&](const std::vector<StateId>& cand) {
    std::vector<std::pair<int, int>> found;  // (color, shift)
    for (int k = 0; k <= 2 * n; ++k) {
      for (int c = 0; c < out.num_colors(); ++c) {
        if (matches_with_shift(cand, out.rows[c], n, l, k)) found.push_back({c, k});
        if (k > 0 && matches_with_shift(cand, out.rows[c], n, l, -k)) found.push_back({c, -k});
      }
    }
    return found;
  };

  std::deque<int> worklist;
  worklist.push_back(0);
  while (!worklist.empty()) {
    int c = worklist.front();
    worklist.pop_front();
    for (int sym = 0; sym < nsyms; ++sym) {
      if (reset_collapse(dfa, part, out.rows[c], n, l, sym)) {
        if (want_trace)
          out.trace.push_back("COLOR " + out.color_names[c] + " SYM " +
                              dfa.alphabet().name(sym) + " -> RESET");
        continue;
      }
      std::vector<StateId> succ(out.rows[c].size());
      for (size_t i = 0; i < succ.size(); ++i) succ[i] = dfa.next(out.rows[c][i], sym);
      auto found = find_matches(succ);
      if (found.empty()) {
        out.color_names.push_back("c" + std::to_string(out.num_colors()) + "@" +
                                  dfa.state_name(seq.center));
        out.rows.push_back(std::move(succ));
        out.creation_depth.push_back(out.creation_depth[c] + 1);
        worklist.push_back(out.num_colors() - 1);
        if (want_trace)
          out.trace.push_back("COLOR " + out.color_names[c] + " SYM " +
                              dfa.alphabet().name(sym) + " -> NEW " + out.color_names.back());
        if (out.num_colors() > budget) return std::nullopt;
      } else if (want_trace) {
        out.trace.push_back("COLOR " + out.color_names[c] + " SYM " + dfa.alphabet().name(sym) +
                            " -> MATCH " + out.color_names[found.front().first] + " shift " +
                            std::to_string(found.front().second));
      }
    }
  }

  // Transition synthesis after the drain: every (color, symbol) is either a
  // reset collapse or matches some color under a shift (at worst the color its
  // own expansion created).
  out.action.assign(out.num_colors(), std::vector<ColorAction>(nsyms));
  for (int c = 0; c < out.num_colors(); ++c) {
    for (int sym = 0; sym < nsyms; ++sym) {
      ColorAction& act = out.action[c][sym];
      if (auto target = reset_collapse(dfa, part, out.rows[c], n, l, sym)) {
        act.kind = ColorAction::Kind::Reset;
        act.reset_target = *target;
        continue;
      }
      std::vector<StateId> succ(out.rows[c].size());
      for (size_t i = 0; i < succ.size(); ++i) succ[i] = dfa.next(out.rows[c][i], sym);
      auto found = find_matches(succ);
      if (found.empty())
        throw std::logic_error("drained coloring has an unmatched successor row");
      act.kind = ColorAction::Kind::Shift;
      act.to_color = found[0].first;
      act.shift = found[0].second;
      // All matches must denote the same states wherever the shifted windows
      // are both in range; otherwise the transition choice would be semantic.
      for (size_t alt = 1; alt < found.size(); ++alt) {
        for (int i = 0; i <= 2 * n; ++i) {
          long long ja = i + found[0].second, jb = i + found[alt].second;
          if (ja < -2 * n || ja > l + 2 * n || jb < -2 * n || jb > l + 2 * n) continue;
          if (out.at(found[0].first, ja) != out.at(found[alt].first, jb)) {
            out.ambiguities.push_back(
                "color " + out.color_names[c] + " on " + dfa.alphabet().name(sym) +
                ": matches (" + out.color_names[found[0].first] + "," +
                std::to_string(found[0].second) + ") and (" +
                out.color_names[found[alt].first] + "," + std::to_string(found[alt].second) +
                ") disagree");
            break;
          }
        }
      }
    }
  }

  out.color_final.assign(out.num_colors(), false);
  for (int c = 0; c < out.num_colors(); ++c)
    for (long long i = 0; i <= l; ++i)
      if (dfa.is_final(out.at(c, i))) out.color_final[c] = true;

  return out;
}

}  // namespace ocl

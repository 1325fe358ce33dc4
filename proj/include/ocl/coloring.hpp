#pragma once

#include "ocl/sequences.hpp"

namespace ocl {

// Unique color per border state, shared by every partial construction.
// The color of border q doubles as the seed color when q is the center.
struct BorderColoring {
  std::unordered_map<StateId, std::string> name;  // dfa border state -> color id

  static BorderColoring assign(const Dfa& dfa, const RegionPartition& part);
  const std::string& of(StateId q) const { return name.at(q); }
};

// What a color does on a symbol once the worklist has drained.
struct ColorAction {
  enum class Kind { Reset, Shift };
  Kind kind = Kind::Reset;
  StateId reset_target = -1;  // Reset: the one initial-region successor state
  int to_color = -1;          // Shift
  int shift = 0;              // Shift: counter delta in [-2n, 2n]
};

struct Coloring {
  int n = 0;
  long long l = 0;
  StateId center = -1;                      // the border state p0
  std::vector<std::string> color_names;     // creation order; [0] = brdclr(p0)
  std::vector<std::vector<StateId>> rows;   // rows[c][j + 2n], j in [-2n, l+2n]
  std::vector<bool> color_final;            // from the core index range [0, l]
  std::vector<std::vector<ColorAction>> action;  // [color][symbol]
  std::vector<long long> creation_depth;   // BFS word length that introduced each color
  std::vector<std::string> ambiguities;     // filled when several shifts disagree
  std::vector<std::string> trace;           // optional "COLOR ... SYM ..." lines

  StateId at(int color, long long j) const {
    return rows.at(color).at(static_cast<size_t>(j + 2 * n));
  }
  int num_colors() const { return static_cast<int>(color_names.size()); }
};

// Parallel-BFS coloring of the region of interest from a candidate sequence.
// Returns nullopt when the color budget n^3 is exceeded, a legal outcome the
// caller handles by trying the next candidate.
std::optional<Coloring> color(const Dfa& dfa, int n, const CandidateSequence& seq,
                              const BorderColoring& brdclr, const RegionPartition& part,
                              bool want_trace = false);

}  // namespace ocl

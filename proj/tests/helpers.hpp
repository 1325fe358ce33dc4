#pragma once

#include <random>

#include "ocl/automata.hpp"
#include "ocl/testkit.hpp"

namespace ocl::testhelpers {

// Random m-DOCA mirror of testkit::random_doca for conversion tests.
inline MDoca random_mdoca(int n_states, int m, const Alphabet& alphabet, uint64_t seed,
                          double reset_prob) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> names;
  for (int i = 0; i < n_states; ++i) names.push_back("r" + std::to_string(i));
  std::uniform_int_distribution<int> pick_state(0, n_states - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::string> finals;
  for (const auto& nm : names)
    if (coin(rng) < 0.5) finals.push_back(nm);
  MDoca d(m, names, names[0], finals, alphabet);
  for (StateId q = 0; q < n_states; ++q) {
    for (int test = 0; test <= m; ++test) {
      for (int sym = 0; sym < alphabet.size(); ++sym) {
        StateId to = pick_state(rng);
        int effect;
        if (coin(rng) < reset_prob)
          effect = kEffectReset;
        else if (test < m)
          effect = std::uniform_int_distribution<int>(-test, m)(rng);
        else
          effect = std::uniform_int_distribution<int>(-m, m)(rng);
        d.set_edge(q, test, sym, to, effect);
      }
    }
  }
  return d;
}

// All words over the machine's alphabet up to max_len, in length-lex order.
inline std::vector<Word> all_words(const Alphabet& alphabet, int max_len) {
  std::vector<Word> out{Word()};
  size_t layer_start = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t layer_end = out.size();
    for (size_t i = layer_start; i < layer_end; ++i)
      for (int s = 0; s < alphabet.size(); ++s) out.push_back(out[i] + static_cast<char>(s));
    layer_start = layer_end;
  }
  return out;
}

// Hand-built behaviour graph for PrimeMatch({2,3}), exact for all runs the
// tests drive (depth capped by H). r_i counts a's, t_c needs b^c a to accept.
inline Dfa primematch_behavior_dfa(int H) {
  Alphabet al({"a", "b", "p2", "p3"});
  std::vector<std::string> names;
  for (int i = 0; i <= H; ++i) names.push_back("r" + std::to_string(i));
  for (int c = 0; c <= H; ++c) names.push_back("t" + std::to_string(c));
  names.push_back("ACC");
  names.push_back("SINK");
  Dfa dfa(names, "r0", {"ACC"}, al);
  int acc = 2 * (H + 1), sink = acc + 1;
  int a = 0, b = 1, p2 = 2, p3 = 3;
  for (StateId q = 0; q < dfa.num_states(); ++q)
    for (int s = 0; s < 4; ++s) dfa.set_next(q, s, sink);
  for (int i = 0; i <= H; ++i) {
    int r = i, t = H + 1 + i;
    if (i < H) dfa.set_next(r, a, r + 1);
    if (i >= 2 && i % 2 == 0) dfa.set_next(r, p2, H + 1 + (i - 1));
    if (i >= 3 && i % 3 == 0) dfa.set_next(r, p3, H + 1 + (i - 1));
    if (i >= 1) dfa.set_next(t, b, t - 1);
  }
  dfa.set_next(H + 1, a, acc);  // t0 --a--> ACC
  return dfa;
}

// Hand-built behaviour graph for {a^(7t) b^(7t)}: A_i counts a's, B_c needs
// exactly b^c; B_0 is the accepting class.
inline Dfa modseven_behavior_dfa(int H) {
  Alphabet al({"a", "b"});
  std::vector<std::string> names;
  for (int i = 0; i <= H; ++i) names.push_back("A" + std::to_string(i));
  for (int c = 0; c <= H; ++c) names.push_back("B" + std::to_string(c));
  names.push_back("SINK");
  Dfa dfa(names, "A0", {"B" + std::to_string(0)}, al);
  int sink = 2 * (H + 1);
  int a = 0, b = 1;
  for (StateId q = 0; q < dfa.num_states(); ++q)
    for (int s = 0; s < 2; ++s) dfa.set_next(q, s, sink);
  for (int i = 0; i <= H; ++i) {
    if (i < H) dfa.set_next(i, a, i + 1);
    if (i >= 7 && i % 7 == 0) dfa.set_next(i, b, H + 1 + (i - 1));
  }
  for (int c = 1; c <= H; ++c) dfa.set_next(H + 1 + c, b, H + 1 + (c - 1));
  return dfa;
}

}  // namespace ocl::testhelpers

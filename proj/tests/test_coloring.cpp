#include <doctest.h>

#include "ocl/coloring.hpp"
#include "ocl/lstar.hpp"
#include "ocl/oracle.hpp"
#include "ocl/testkit.hpp"

#include "helpers.hpp"

using namespace ocl;
using testkit::fixture;

namespace {

CandidateSequence pick(const std::vector<CandidateSequence>& all, const Word& x, const Word& y) {
  for (const auto& seq : all)
    if (seq.x == x && seq.y == y) return seq;
  REQUIRE(false);
  return all.front();
}

}  // namespace

TEST_CASE("constant sequence colors itself with a single shift-0 loop") {
  // a-chain absorbing at the border: every pumped word lands on p0 itself.
  Alphabet al({"a"});
  std::vector<std::string> names;
  for (int i = 0; i <= 4; ++i) names.push_back("c" + std::to_string(i));
  Dfa dfa(names, "c0", {}, al);
  for (int i = 0; i < 4; ++i) dfa.set_next(i, 0, i + 1);
  dfa.set_next(4, 0, 4);

  PolynomialProfile toy("toy", "m", "8", "4", "40", "6", "8");
  RegionPartition part = partition(dfa, toy, 1);
  REQUIRE(part.in_brd(4));
  auto candidates = enumerate_candidates(dfa, part, 4, 1, toy);
  REQUIRE(!candidates.empty());
  BorderColoring brdclr = BorderColoring::assign(dfa, part);
  auto coloring = color(dfa, 1, candidates.front(), brdclr, part);
  REQUIRE(coloring.has_value());
  CHECK(coloring->num_colors() == 1);
  CHECK(coloring->action[0][0].kind == ColorAction::Kind::Shift);
  CHECK(coloring->action[0][0].to_color == 0);
  CHECK(coloring->action[0][0].shift == 0);
  CHECK(coloring->ambiguities.empty());
}

TEST_CASE("primematch aa-candidate colors within n*d at the fixture's own n") {
  // n = 8 (the fixture size) and the 2-winning candidate pumped by aa: the
  // countdown rows realign within the +-2n window and the color count stays
  // within n*d = 16.
  const Doca& target = fixture("primematch").target;
  Dfa dfa = testhelpers::primematch_behavior_dfa(200);
  PolynomialProfile tuned("pm-n8", "m", "80", "34", "280", "8", "80");
  const int n = 8;
  RegionPartition part = partition(dfa, tuned, n);
  Word a34(34, static_cast<char>(*target.alphabet().index_of("a")));
  StateId p0 = dfa.run(a34);
  REQUIRE(part.in_brd(p0));
  auto candidates = enumerate_candidates(dfa, part, p0, n, tuned);
  Word aa = dfa.alphabet().parse_spaced("a a");
  CandidateSequence seq = pick(candidates, Word(), aa);
  REQUIRE(is_d_winning(seq, target, 2));

  BorderColoring brdclr = BorderColoring::assign(dfa, part);
  auto coloring = color(dfa, n, seq, brdclr, part, true);
  REQUIRE(coloring.has_value());
  CHECK(coloring->num_colors() <= n * 2);
  CHECK(coloring->ambiguities.empty());
  // Parallel-BFS depth: every color appears within n*d letters of the seed.
  for (long long depth : coloring->creation_depth) CHECK(depth <= n * 2);

  // Reading p2 from the seed color must introduce a fresh color whose row
  // lies on the countdown states (the behavioral dfa's t-states).
  int p2 = *dfa.alphabet().index_of("p2");
  const ColorAction& act = coloring->action[0][p2];
  REQUIRE(act.kind == ColorAction::Kind::Shift);
  CHECK(act.to_color != 0);
  // That row's core states are non-final and all distinct from the a-chain.
  for (long long i = 0; i <= coloring->l; ++i) {
    StateId t = coloring->at(act.to_color, i);
    CHECK_FALSE(dfa.is_final(t));
    CHECK(t != coloring->at(0, i));
  }

  // Trace lines have the documented shape.
  REQUIRE(!coloring->trace.empty());
  for (const std::string& line : coloring->trace) {
    CHECK(line.rfind("COLOR ", 0) == 0);
    bool tagged = line.find(" -> NEW ") != std::string::npos ||
                  line.find(" -> MATCH ") != std::string::npos ||
                  line.find(" -> RESET") != std::string::npos;
    CHECK(tagged);
  }
}

TEST_CASE("modseven blows the color budget at n = 2") {
  const Doca& target = fixture("modseven").target;
  DocaTeacher teacher(target, 60);
  Dfa dfa = learn_behavioral_dfa(teacher, 40).dfa;
  PolynomialProfile small("ms-small", "m", "20", "9", "40", "12", "20");
  RegionPartition part = partition(dfa, small, 2);
  BorderColoring brdclr = BorderColoring::assign(dfa, part);
  REQUIRE(!part.brd.empty());
  bool any_succeeded = false;
  for (StateId p0 : part.brd) {
    for (const auto& seq : enumerate_candidates(dfa, part, p0, 2, small)) {
      if (color(dfa, 2, seq, brdclr, part).has_value()) any_succeeded = true;
    }
  }
  CHECK_FALSE(any_succeeded);
}

TEST_CASE("coloring anbn at n=2 produces the two-color up/down structure") {
  const Doca& target = fixture("anbn").target;
  DocaTeacher teacher(target, 60);
  PolynomialProfile desk = *PolynomialProfile::builtin("desk-small");
  Dfa dfa = learn_behavioral_dfa(teacher, desk.eval_i64("polytwo", 2)).dfa;
  RegionPartition part = partition(dfa, desk, 2);
  BorderColoring brdclr = BorderColoring::assign(dfa, part);
  // Border a^9: the y=a candidate is 1-winning and colors with exactly two
  // colors: the climbing chain and the descending chain.
  Word a9(9, static_cast<char>(*target.alphabet().index_of("a")));
  StateId p0 = dfa.run(a9);
  REQUIRE(part.in_brd(p0));
  auto candidates = enumerate_candidates(dfa, part, p0, 2, desk);
  CandidateSequence seq = pick(candidates, Word(), Word(1, static_cast<char>(0)));
  REQUIRE(is_d_winning(seq, target, 1));
  auto coloring = color(dfa, 2, seq, brdclr, part);
  REQUIRE(coloring.has_value());
  CHECK(coloring->num_colors() == 2);
  int a = 0, b = 1;
  CHECK(coloring->action[0][a].kind == ColorAction::Kind::Shift);
  CHECK(coloring->action[0][a].to_color == 0);
  CHECK(coloring->action[0][a].shift == 1);
  CHECK(coloring->action[0][b].kind == ColorAction::Kind::Shift);
  CHECK(coloring->action[0][b].to_color == 1);
  CHECK(coloring->action[0][b].shift == 0);
  CHECK(coloring->action[1][b].kind == ColorAction::Kind::Shift);
  CHECK(coloring->action[1][b].to_color == 1);
  CHECK(coloring->action[1][b].shift == -1);
  CHECK(coloring->action[1][a].kind == ColorAction::Kind::Reset);
  CHECK(coloring->ambiguities.empty());
}

TEST_CASE("two identical runs produce identical colorings") {
  const Doca& target = fixture("anbn").target;
  DocaTeacher teacher(target, 60);
  PolynomialProfile desk = *PolynomialProfile::builtin("desk-small");
  Dfa dfa = learn_behavioral_dfa(teacher, desk.eval_i64("polytwo", 2)).dfa;
  RegionPartition part = partition(dfa, desk, 2);
  BorderColoring brdclr = BorderColoring::assign(dfa, part);
  StateId p0 = part.brd.front();
  auto candidates = enumerate_candidates(dfa, part, p0, 2, desk);
  auto c1 = color(dfa, 2, candidates.front(), brdclr, part);
  auto c2 = color(dfa, 2, candidates.front(), brdclr, part);
  REQUIRE(c1.has_value());
  REQUIRE(c2.has_value());
  CHECK(c1->color_names == c2->color_names);
  CHECK(c1->rows == c2->rows);
}

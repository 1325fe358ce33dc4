#include <doctest.h>

#include <thread>

#include "ocl/oracle.hpp"
#include "ocl/testkit.hpp"

#include "helpers.hpp"

using namespace ocl;
using testkit::fixture;

namespace {

Doca empty_language_doca(const Alphabet& al) {
  Doca d({"e"}, "e", {}, al);
  for (int t = 0; t <= 1; ++t)
    for (int s = 0; s < al.size(); ++s) d.set_edge(0, t, s, 0, 0);
  return d;
}

}  // namespace

TEST_CASE("min_distinguishing_word on primematch configurations from the figure") {
  const Doca& pm = fixture("primematch").target;
  Configuration q1_3{*pm.state_index("q1"), 3}, q3_3{*pm.state_index("q3"), 3};
  Configuration q1_6{*pm.state_index("q1"), 6}, q3_6{*pm.state_index("q3"), 6};

  auto different = min_distinguishing_word(pm, q1_3, pm, q3_3, 20);
  REQUIRE(different.has_value());
  // Cross-check the witness against plain enumeration.
  auto brute = testkit::brute_min_distinguishing(pm, q1_3, pm, q3_3, 8);
  REQUIRE(brute.has_value());
  CHECK(*different == *brute);

  CHECK_FALSE(min_distinguishing_word(pm, q1_6, pm, q3_6, 20).has_value());

  Configuration same{*pm.state_index("q2"), 4};
  CHECK_FALSE(min_distinguishing_word(pm, same, pm, same, 12).has_value());

  CHECK_THROWS_AS(min_distinguishing_word(pm, q1_3, pm, q3_3, -1), std::invalid_argument);
}

TEST_CASE("min_distinguishing_word finds ab against the empty language") {
  const Doca& anbn = fixture("anbn").target;
  Doca empty = empty_language_doca(anbn.alphabet());
  auto ce = min_distinguishing_word(anbn, anbn.initial_configuration(), empty,
                                    empty.initial_configuration(), 2);
  REQUIRE(ce.has_value());
  CHECK(anbn.alphabet().format(*ce) == "a b");
}

TEST_CASE("minimality equals enumeration on random pairs, with and without dedup") {
  Alphabet al({"a", "b"});
  for (uint64_t seed = 0; seed < 60; ++seed) {
    Doca a = testkit::random_doca(2 + static_cast<int>(seed % 3), al, seed * 2 + 1, 0.15);
    Doca b = testkit::random_doca(2 + static_cast<int>((seed / 3) % 3), al, seed * 2 + 2, 0.15);
    auto fast = min_distinguishing_word(a, a.initial_configuration(), b,
                                        b.initial_configuration(), 8);
    auto brute = testkit::brute_min_distinguishing(a, a.initial_configuration(), b,
                                                   b.initial_configuration(), 8);
    CHECK(fast == brute);
    DistinguishOptions no_dedup;
    no_dedup.dedup = false;
    auto slow = min_distinguishing_word(a, a.initial_configuration(), b,
                                        b.initial_configuration(), 6, no_dedup);
    auto fast6 = min_distinguishing_word(a, a.initial_configuration(), b,
                                         b.initial_configuration(), 6);
    CHECK(slow == fast6);
  }
}

TEST_CASE("teacher membership counts queries and answers by simulation") {
  DocaTeacher teacher(fixture("primematch").target, 20);
  const Alphabet& al = teacher.alphabet();
  CHECK(teacher.membership(al.parse_spaced("a a p2 b a")));
  CHECK(teacher.membership(Word()) == false);
  CHECK(teacher.membership(al.parse_spaced("a a a b b b")) == false);
  CHECK(teacher.stats().mq_count == 3);
  CHECK(teacher.stats().meq_count == 0);
}

TEST_CASE("minimal_equivalence returns yes on itself and minimal counterexamples otherwise") {
  const Doca& anbn = fixture("anbn").target;
  DocaTeacher teacher(anbn, 12);
  CHECK_FALSE(teacher.minimal_equivalence(anbn).has_value());

  Doca empty = empty_language_doca(anbn.alphabet());
  auto ce = teacher.minimal_equivalence(empty);
  REQUIRE(ce.has_value());
  CHECK(anbn.alphabet().format(*ce) == "a b");

  const Doca& pm = fixture("primematch").target;
  DocaTeacher pm_teacher(pm, 12);
  auto pm_ce = pm_teacher.minimal_equivalence(empty_language_doca(pm.alphabet()));
  REQUIRE(pm_ce.has_value());
  CHECK(pm.alphabet().format(*pm_ce) == "a a p2 b a");
  CHECK(pm_ce->size() == 5);

  // Counters only grow; wall time is tracked per phase.
  QueryStats s = pm_teacher.stats();
  CHECK(s.meq_count == 1);
  CHECK(s.max_ce_length == 5);
  CHECK(s.meq_seconds >= 0.0);
  pm_teacher.membership(Word());
  QueryStats s2 = pm_teacher.stats();
  CHECK(s2.mq_count == s.mq_count + 1);
  CHECK(s2.mq_seconds >= s.mq_seconds);
}

TEST_CASE("teacher counters are safe under concurrent queries") {
  DocaTeacher teacher(fixture("anbn").target, 12);
  const Alphabet& al = teacher.alphabet();
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&teacher, &al] {
      for (int i = 0; i < 100; ++i) teacher.membership(al.parse_spaced("a b"));
    });
  for (auto& th : threads) th.join();
  CHECK(teacher.stats().mq_count == 400);
}

TEST_CASE("every counterexample distinguishes by simulation on random pairs") {
  Alphabet al({"a", "b"});
  for (uint64_t seed = 100; seed < 140; ++seed) {
    Doca target = testkit::random_doca(3, al, seed, 0.1);
    DocaTeacher teacher(target, 8);
    Doca hyp = testkit::random_doca(3, al, seed + 1000, 0.1);
    auto ce = teacher.minimal_equivalence(hyp);
    if (ce) CHECK(accepts(target, *ce) != accepts(hyp, *ce));
  }
}

#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "ocl/oracle.hpp"
#include "ocl/testkit.hpp"

#include "helpers.hpp"

using namespace ocl;
using namespace ocl::testkit;

TEST_CASE("random_doca is reproducible and always valid") {
  Alphabet al({"a", "b"});
  Doca d1 = random_doca(3, al, 42, 0.2);
  Doca d2 = random_doca(3, al, 42, 0.2);
  for (const Word& w : testhelpers::all_words(al, 8)) CHECK(run(d1, w) == run(d2, w));

  for (uint64_t seed = 0; seed < 1000; ++seed) {
    Doca d = random_doca(3, al, seed, 0.15);
    CHECK(validate(d).empty());
  }

  Doca no_reset = random_doca(4, al, 7, 0.0);
  for (StateId q = 0; q < no_reset.num_states(); ++q)
    for (int t = 0; t <= 1; ++t)
      for (int s = 0; s < 2; ++s) CHECK_FALSE(no_reset.edge(q, t, s).is_reset());

  CHECK_THROWS_AS(random_doca(0, al, 1, 0.0), std::invalid_argument);
}

TEST_CASE("brute_language matches the documented fixture languages") {
  auto anbn = brute_language(fixture("anbn").target, 6);
  const Alphabet& al = fixture("anbn").target.alphabet();
  std::set<Word> expected = {al.parse_spaced("a b"), al.parse_spaced("a a b b"),
                             al.parse_spaced("a a a b b b")};
  CHECK(anbn == expected);

  Doca empty({"e"}, "e", {}, al);
  for (int t = 0; t <= 1; ++t)
    for (int s = 0; s < al.size(); ++s) empty.set_edge(0, t, s, 0, 0);
  CHECK(brute_language(empty, 6).empty());

  auto pm = brute_language(fixture("primematch").target, 7);
  const Alphabet& pal = fixture("primematch").target.alphabet();
  std::set<Word> pm_expected = {pal.parse_spaced("a a p2 b a"),
                                pal.parse_spaced("a a a p3 b b a")};
  CHECK(pm == pm_expected);

  CHECK_THROWS_AS(brute_language(fixture("primematch").target, 14), std::invalid_argument);
}

TEST_CASE("leadmatch accepts its defining set up to length 12") {
  const Doca& lm = fixture("leadmatch").target;
  const Alphabet& al = lm.alphabet();
  // Independent definition: a^m b^n c a^k b^k c with m > n.
  std::set<Word> expected;
  for (int m = 0; m <= 10; ++m)
    for (int n = 0; n < m; ++n)
      for (int k = 0; m + n + k + k + 2 <= 12; ++k) {
        Word w;
        for (int i = 0; i < m; ++i) w += static_cast<char>(*al.index_of("a"));
        for (int i = 0; i < n; ++i) w += static_cast<char>(*al.index_of("b"));
        w += static_cast<char>(*al.index_of("c"));
        for (int i = 0; i < k; ++i) w += static_cast<char>(*al.index_of("a"));
        for (int i = 0; i < k; ++i) w += static_cast<char>(*al.index_of("b"));
        w += static_cast<char>(*al.index_of("c"));
        expected.insert(w);
      }
  CHECK(brute_language(lm, 12) == expected);
}

TEST_CASE("modseven accepts exactly a^7 b^7 up to length 16") {
  const Doca& ms = fixture("modseven").target;
  std::set<Word> lang = brute_language(ms, 16);
  REQUIRE(lang.size() == 1);
  CHECK(lang.begin()->size() == 14);
}

TEST_CASE("accepts agrees with brute_language across fixtures") {
  for (const auto& f : all_fixtures()) {
    int len = std::min(8, f.verify_bound);
    auto lang = brute_language(f.target, len);
    for (const Word& w : testhelpers::all_words(f.target.alphabet(), len))
      CHECK(accepts(f.target, w) == (lang.count(w) > 0));
  }
}

TEST_CASE("primematch transcription reproduces the figure's equivalence facts") {
  const Doca& pm = fixture("primematch").target;
  Configuration q1_6{*pm.state_index("q1"), 6}, q3_6{*pm.state_index("q3"), 6};
  CHECK_FALSE(min_distinguishing_word(pm, q1_6, pm, q3_6, 20).has_value());
  Configuration q1_3{*pm.state_index("q1"), 3}, q3_3{*pm.state_index("q3"), 3};
  CHECK(min_distinguishing_word(pm, q1_3, pm, q3_3, 20).has_value());
}

TEST_CASE("fixtures validate and ship with sane bounds") {
  for (const auto& f : all_fixtures()) {
    CHECK(validate(f.target).empty());
    CHECK(f.verify_bound >= 8);
  }
}

TEST_CASE("fixture files on disk match the built-in definitions") {
  namespace fs = std::filesystem;
  std::string dir = OCL_FIXTURES_DIR;
  REQUIRE(fs::exists(dir));
  for (const auto& f : all_fixtures()) {
    Doca loaded = load_fixture_file(dir, f.name);
    CHECK(loaded.state_names() == f.target.state_names());
    for (const Word& w : testhelpers::all_words(f.target.alphabet(), 6))
      CHECK(accepts(loaded, w) == accepts(f.target, w));
  }
}

TEST_CASE("write_fixture_files round-trips through a temp directory") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "ocl_fixture_test";
  fs::create_directories(dir);
  auto files = write_fixture_files(dir.string());
  CHECK(files.size() == all_fixtures().size());
  for (const auto& f : all_fixtures()) {
    Doca loaded = load_fixture_file(dir.string(), f.name);
    for (const Word& w : testhelpers::all_words(f.target.alphabet(), 5))
      CHECK(accepts(loaded, w) == accepts(f.target, w));
  }
  fs::remove_all(dir);
}

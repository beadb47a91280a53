#include "doctest.h"
#include "helpers.hpp"
#include "iasm/errors.hpp"
#include "iasm/sequences.hpp"

using namespace iasm;

TEST_SUITE("sequences") {
  TEST_CASE("alphabet indexing and validation") {
    const Alphabet ab("ab");
    CHECK(ab.size() == 2);
    CHECK(ab.index_of('b') == 1);
    CHECK(ab.contains('a'));
    CHECK_FALSE(ab.contains('c'));
    CHECK_THROWS_AS(ab.index_of('c'), IngestionError);
    CHECK_THROWS_AS(ab.validate("abca"), IngestionError);
    CHECK_NOTHROW(ab.validate(""));
    CHECK_THROWS_AS(Alphabet("aa"), UsageError);
    CHECK(Alphabet::lowercase().size() == 26);
  }

  TEST_CASE("sequence is 1-based") {
    Sequence s("cab");
    CHECK(s.length() == 3);
    CHECK(s[1] == 'c');
    CHECK(s.at(3) == 'b');
    CHECK_THROWS_AS(s.at(0), UsageError);
    CHECK_THROWS_AS(s.at(4), UsageError);
    s.prepend('x');
    s.append('y');
    CHECK(s.str() == "xcaby");
    CHECK(s.reversed().str() == "ybacx");
  }

  TEST_CASE("next_match") {
    const Sequence b("ccabaccaa");
    CHECK(next_match(0, 'a', b) == MatchPos::at(3));
    CHECK(next_match(9, 'a', b) == MatchPos::plus_inf());
    CHECK(next_match(0, 'z', Sequence()) == MatchPos::plus_inf());
    CHECK(next_match(3, 'a', b) == MatchPos::at(5));
    CHECK_THROWS_AS(next_match(10, 'a', b), UsageError);
    CHECK_THROWS_AS(next_match(-1, 'a', b), UsageError);
  }

  TEST_CASE("prev_match") {
    const Sequence b("aacabba");
    CHECK(prev_match(2, 'a', b) == MatchPos::at(2));
    CHECK(prev_match(0, 'a', b) == MatchPos::minus_inf());
    CHECK(prev_match(7, 'a', b) == MatchPos::at(7));
    CHECK(prev_match(6, 'a', b) == MatchPos::at(4));
    CHECK_THROWS_AS(prev_match(8, 'a', b), UsageError);
  }

  TEST_CASE("match position sentinels") {
    CHECK_FALSE(MatchPos::plus_inf().finite());
    CHECK_FALSE(MatchPos::minus_inf().finite());
    CHECK(MatchPos::plus_inf().value_or(-7) == -7);
    CHECK(MatchPos::at(4).value() == 4);
    CHECK(MatchPos::plus_inf().to_string() == "+INF");
    CHECK(MatchPos::minus_inf().to_string() == "-INF");
  }

  TEST_CASE("static tables") {
    const Alphabet abc("abc");
    const StaticMatchTables t(Sequence("aacabba"), abc);
    CHECK(t.next_match(3, 'a') == MatchPos::at(4));
    const StaticMatchTables u(Sequence("ccabaccaa"), abc);
    CHECK(u.next_match(5, 'a') == MatchPos::at(8));

    const StaticMatchTables empty(Sequence(), abc);
    for (char c : std::string("abc")) {
      CHECK(empty.next_match(0, c) == MatchPos::plus_inf());
      CHECK(empty.prev_match(0, c) == MatchPos::minus_inf());
    }
  }

  TEST_CASE("static tables agree with linear scans") {
    std::mt19937_64 rng(7);
    const Alphabet abcd("abcd");
    for (int trial = 0; trial < 200; ++trial) {
      const Sequence s(testing::random_string(rng, 20, "abcd"));
      const StaticMatchTables t(s, abcd);
      for (std::int32_t i = 0; i <= s.length(); ++i) {
        for (char c : abcd.symbols()) {
          REQUIRE(t.next_match(i, c) == next_match(i, c, s));
          REQUIRE(t.prev_match(i, c) == prev_match(i, c, s));
        }
      }
    }
  }

  TEST_CASE("dynamic append updates the stored cells") {
    const Alphabet abc("abc");
    DynamicMatchTables t(Sequence("aacabb"), abc);
    t.append('a');
    CHECK(t.prev_cell(7, 'a') == MatchPos::at(7));
    CHECK(t.prev_cell(7, 'b') == MatchPos::at(6));
    CHECK(t.next_cell(4, 'a') == MatchPos::at(7));

    DynamicMatchTables x(Alphabet("x"));
    x.append('x');
    CHECK(x.prev_cell(1, 'x') == MatchPos::at(1));
    CHECK(x.next_cell(0, 'x') == MatchPos::at(1));
  }

  TEST_CASE("dynamic queries after appends") {
    const Alphabet abc("abc");
    DynamicMatchTables t(abc);
    for (char c : std::string("aacabba")) t.append(c);
    CHECK(t.next_match(3, 'a') == MatchPos::at(4));
    CHECK(t.next_match(7, 'c') == MatchPos::plus_inf());

    DynamicMatchTables u(abc);
    for (char c : std::string("ccabaccaa")) u.append(c);
    CHECK(u.next_match(5, 'a') == MatchPos::at(8));
  }

  TEST_CASE("append then next_match(n) gives n+1") {
    std::mt19937_64 rng(11);
    const Alphabet abcd("abcd");
    for (int trial = 0; trial < 100; ++trial) {
      DynamicMatchTables t(Sequence(testing::random_string(rng, 15, "abcd")), abcd);
      const std::int32_t n = t.length();
      const Symbol c = testing::random_symbol(rng, "abcd");
      t.append(c);
      REQUIRE(t.next_match(n, c) == MatchPos::at(n + 1));
      REQUIRE(t.next_match(n + 1, c) == MatchPos::plus_inf());
    }
  }

  TEST_CASE("dynamic equals static after every append, exhaustive over short strings") {
    const Alphabet ab("ab");
    for (const std::string& s : testing::all_strings("ab", 8)) {
      DynamicMatchTables t(ab);
      std::string prefix;
      for (char c : s) {
        t.append(c);
        prefix.push_back(c);
        const StaticMatchTables ref(Sequence(prefix), ab);
        for (std::int32_t i = 0; i <= t.length(); ++i) {
          for (char d : ab.symbols()) {
            REQUIRE(t.next_match(i, d) == ref.next_match(i, d));
            REQUIRE(t.prev_match(i, d) == ref.prev_match(i, d));
          }
        }
      }
    }
  }

  TEST_CASE("reversed view answers queries over rev(S)") {
    std::mt19937_64 rng(3);
    const Alphabet abc("abc");
    for (int trial = 0; trial < 100; ++trial) {
      const Sequence s(testing::random_string(rng, 16, "abc"));
      const DynamicMatchTables forward(s, abc);
      const ReversedMatchView<DynamicMatchTables> view(forward);
      const Sequence r = s.reversed();
      for (std::int32_t i = 0; i <= s.length(); ++i) {
        for (char c : abc.symbols()) {
          REQUIRE(view.next_match(i, c) == next_match(i, c, r));
          REQUIRE(view.prev_match(i, c) == prev_match(i, c, r));
        }
      }
    }
  }

  TEST_CASE("foreign symbols are rejected at ingestion") {
    DynamicMatchTables t(Alphabet("ab"));
    CHECK_THROWS_AS(t.append('z'), IngestionError);
    CHECK_THROWS_AS(StaticMatchTables(Sequence("abz"), Alphabet("ab")), IngestionError);
  }
}

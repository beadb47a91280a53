#include "doctest.h"
#include "helpers.hpp"
#include "iasm/errors.hpp"
#include "iasm/oracle.hpp"
#include "iasm/ssam.hpp"

using namespace iasm;
using iasm::testing::sorted;

namespace {

void require_oracle(const SsamState& s) {
  INFO("A=" << s.a().str() << " B=" << s.b().str());
  const PivotSet want = oracle::ssam_pivots(s.a(), s.b());
  REQUIRE(sorted(s.pivots().points) == sorted(want.points));
  REQUIRE(sorted(s.column_pivots().points) == sorted(want.points));
  REQUIRE(s.delta() == s.n() - oracle::lcs_length(s.a(), s.b()));
  REQUIRE(s.scratch().all_zero());
}

}  // namespace

TEST_SUITE("ssam_dynamic") {
  TEST_CASE("build") {
    const SsamState s("bbcac", "ccabaccaa");
    CHECK(sorted(s.pivots().points) == std::vector<Pivot>{{1, 3}, {2, 5}, {3, 4}, {5, 7}, {6, 8}, {8, 9}});
    CHECK(s.pivots().order == PivotOrder::RowBlocks);
    CHECK(s.column_pivots().order == PivotOrder::ColumnBlocks);
    CHECK(SsamState("", "").pivots().empty());
    CHECK(SsamState("abc", "abc").pivots().empty());
  }

  TEST_CASE("prepend a to the fixture") {
    SsamState s("bbcac", "ccabaccaa");
    s.prepend_a('a');
    CHECK(s.a().str() == "abbcac");
    CHECK(sorted(s.pivots().points) == std::vector<Pivot>{{1, 3}, {2, 4}, {4, 7}, {6, 8}, {7, 9}});
    const DeltaPivots& d = s.last_update().delta;
    CHECK(sorted(d.additions) == std::vector<Pivot>{{2, 4}, {4, 7}, {7, 9}});
    CHECK(sorted(d.removals) == std::vector<Pivot>{{2, 5}, {3, 4}, {5, 7}, {8, 9}});
    CHECK(dump_pivots(s.pivots()) == "SSAM 9 6 5\n1 3\n2 4\n4 7\n6 8\n7 9\n");
  }

  TEST_CASE("append a to the fixture") {
    SsamState s("bbcac", "ccabaccaa");
    s.append_a('a');
    require_oracle(s);
  }

  TEST_CASE("symbol absent from B leaves the pivots unchanged") {
    SsamState s("bbcac", "ccabaccaa");
    const auto before = sorted(s.pivots().points);
    s.prepend_a('z');
    CHECK(sorted(s.pivots().points) == before);
    CHECK(s.last_update().delta.empty());
    s.append_a('z');
    CHECK(sorted(s.pivots().points) == before);
    CHECK(s.last_update().delta.empty());
  }

  TEST_CASE("B is fixed") {
    SsamState s("ab", "ab");
    CHECK_THROWS_AS(s.append_b('a'), CapabilityError);
    CHECK_THROWS_AS(s.prepend_b('a'), CapabilityError);
    CHECK_THROWS_AS(s.prepend_a('!'), IngestionError);
  }

  TEST_CASE("random prepend streams match the oracle") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 1000; ++trial) {
      const std::string_view sigma = trial % 2 ? "ab" : "abcd";
      SsamState s(testing::random_string(rng, 12, sigma), testing::random_string(rng, 24, sigma));
      for (int op = 0; op < 8; ++op) {
        s.prepend_a(testing::random_symbol(rng, sigma));
        require_oracle(s);
      }
    }
  }

  TEST_CASE("interleaved streams match the oracle; K grows by 0/1 cells") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
      const std::string_view sigma = trial % 2 ? "ab" : "abcd";
      SsamState s(testing::random_string(rng, 16, sigma), testing::random_string(rng, 16, sigma));
      for (int op = 0; op < 32; ++op) {
        const auto before = oracle::oracle_ssam(s.a(), s.b());
        const std::int32_t delta_before = s.delta();
        const Symbol c = testing::random_symbol(rng, sigma);
        if (rng() % 2) {
          s.prepend_a(c);
        } else {
          s.append_a(c);
        }
        require_oracle(s);
        const auto after = oracle::oracle_ssam(s.a(), s.b());
        for (std::int32_t i = 0; i <= s.n(); ++i) {
          for (std::int32_t j = i; j <= s.n(); ++j) {
            const std::int32_t diff = after(i, j) - before(i, j);
            REQUIRE((diff == 0 || diff == 1));
          }
        }
        const SsamUpdate& u = s.last_update();
        REQUIRE(u.step_count <= delta_before);
        REQUIRE(u.counters.touched_pivots <= 4 * (delta_before + 1));
        REQUIRE(u.counters.table_queries <= 2 * (delta_before + 1) + 8);
      }
    }
  }

  TEST_CASE("near-identical strings keep the work small") {
    std::mt19937_64 rng(43);
    std::string b = testing::random_string(rng, 0, "abcd");
    for (int t = 0; t < 400; ++t) b.push_back(testing::random_symbol(rng, "abcd"));
    std::string a = b;
    a[100] = a[100] == 'a' ? 'b' : 'a';
    SsamState s(a, b);
    for (int op = 0; op < 200; ++op) {
      const std::int32_t delta_before = s.delta();
      if (op % 2) {
        s.append_a(testing::random_symbol(rng, "abcd"));
      } else {
        s.prepend_a(testing::random_symbol(rng, "abcd"));
      }
      REQUIRE(s.last_update().counters.touched_pivots <= 4 * (delta_before + 1));
      REQUIRE(s.last_update().counters.table_queries <= 2 * (delta_before + 1) + 8);
    }
  }

  TEST_CASE("corruption hook is visible to the oracle") {
    SsamState s("bbcac", "ccabaccaa");
    s.corrupt_for_testing();
    CHECK_FALSE(same_pivots(s.pivots(), oracle::ssam_pivots(s.a(), s.b())));
  }
}

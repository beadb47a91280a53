#include "doctest.h"
#include "helpers.hpp"
#include "iasm/errors.hpp"
#include "iasm/oracle.hpp"
#include "iasm/psam.hpp"

using namespace iasm;
using iasm::testing::sorted;

namespace {

void require_oracle(const PsamState& s) {
  INFO("A=" << s.a().str() << " B=" << s.b().str());
  const PivotSet want = oracle::psam_pivots(s.a(), s.b());
  REQUIRE(sorted(s.pivots().points) == sorted(want.points));
  REQUIRE(s.lcs() == oracle::lcs_length(s.a(), s.b()));
  REQUIRE(s.scratch().all_zero());
}

bool is_sorted_by(const std::vector<Pivot>& points, bool by_row) {
  return std::is_sorted(points.begin(), points.end(), [by_row](const Pivot& x, const Pivot& y) {
    return by_row ? x.row < y.row : x.col < y.col;
  });
}

}  // namespace

TEST_SUITE("psam_dynamic") {
  TEST_CASE("build") {
    const PsamState s("bbcbbaa", "aacabba");
    CHECK(sorted(s.pivots().points) == std::vector<Pivot>{{3, 5}, {5, 2}, {6, 1}, {7, 6}});
    CHECK(PsamState("", "abc").pivots().empty());
    CHECK(PsamState("ab", "ab").pivots().size() == 2);
  }

  TEST_CASE("prepend a to the fixture") {
    PsamState s("bbcbbaa", "aacabba");
    s.prepend_a('a');
    CHECK(s.a().str() == "abbcbbaa");
    CHECK(sorted(s.pivots().points) == std::vector<Pivot>{{2, 6}, {4, 2}, {5, 3}, {6, 7}, {7, 1}});
    CHECK(sorted(s.last_delta().additions) == std::vector<Pivot>{{2, 5}, {4, 1}, {6, 6}, {7, 0}});
    CHECK(sorted(s.last_delta().removals) == std::vector<Pivot>{{3, 5}, {6, 1}, {7, 6}});
    CHECK(dump_pivots(s.pivots()) == "PSAM 7 8 5\n2 6\n4 2\n5 3\n6 7\n7 1\n");
    CHECK(is_sorted_by(s.pivots().points, true));
  }

  TEST_CASE("prepend of a symbol absent from B only shifts columns") {
    PsamState s("bbcbbaa", "aacabba");
    s.prepend_a('z');
    CHECK(s.last_delta().empty());
    CHECK(sorted(s.pivots().points) == std::vector<Pivot>{{3, 6}, {5, 3}, {6, 2}, {7, 7}});
  }

  TEST_CASE("append to B") {
    PsamState s("bbcbbaa", "aacabba");
    s.append_b('a');
    require_oracle(s);
    CHECK(is_sorted_by(s.pivots().points, false));

    PsamState t("a", "");
    t.append_b('a');
    CHECK(t.pivots().points == std::vector<Pivot>{{1, 1}});
    CHECK(score_psam(t.pivots(), 0, 1) == 1);

    PsamState u("ab", "ab");
    const auto before = sorted(u.pivots().points);
    u.append_b('z');
    CHECK(sorted(u.pivots().points) == before);
    CHECK(u.n() == 3);
  }

  TEST_CASE("unsupported ops") {
    PsamState s("ab", "ab");
    CHECK_THROWS_AS(s.append_a('a'), CapabilityError);
    CHECK_THROWS_AS(s.prepend_b('a'), CapabilityError);
    CHECK_THROWS_AS(s.append_b('?'), IngestionError);
  }

  TEST_CASE("resort") {
    PsamState s("bbcbbaa", "aacabba");
    s.resort(PivotOrder::ColumnSorted);
    CHECK(s.pivots().points == std::vector<Pivot>{{6, 1}, {5, 2}, {3, 5}, {7, 6}});
    s.resort(PivotOrder::ColumnSorted);
    CHECK(s.pivots().points == std::vector<Pivot>{{6, 1}, {5, 2}, {3, 5}, {7, 6}});
    s.resort(PivotOrder::RowSorted);
    CHECK(s.pivots().points == std::vector<Pivot>{{3, 5}, {5, 2}, {6, 1}, {7, 6}});
    CHECK_THROWS_AS(s.resort(PivotOrder::RowBlocks), UsageError);

    PsamState e("", "");
    e.resort(PivotOrder::ColumnSorted);
    CHECK(e.pivots().empty());
  }

  TEST_CASE("mirror is an involution with n and m swapped") {
    const std::vector<Pivot> p = {{3, 5}, {5, 2}, {6, 1}, {7, 6}};
    const auto once = mirror_pivots(p, 7, 7);
    CHECK(sorted(once) == std::vector<Pivot>{{2, 1}, {3, 5}, {6, 3}, {7, 2}});
    CHECK(mirror_pivots(once, 7, 7) == p);

    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
      const Sequence a(testing::random_string(rng, 12, "abc"));
      const Sequence b(testing::random_string(rng, 12, "abc"));
      const auto direct = oracle::psam_pivots(b.reversed(), a.reversed());
      const auto mirrored = mirror_pivots(oracle::psam_pivots(a, b).points, b.length(), a.length());
      REQUIRE(sorted(mirrored) == sorted(direct.points));
    }
  }

  TEST_CASE("random prepend streams match the oracle") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 1000; ++trial) {
      const std::string_view sigma = trial % 2 ? "ab" : "abcd";
      PsamState s(testing::random_string(rng, 24, sigma), testing::random_string(rng, 24, sigma));
      for (int op = 0; op < 6; ++op) {
        s.prepend_a(testing::random_symbol(rng, sigma));
        require_oracle(s);
      }
    }
  }

  TEST_CASE("interleaved streams match the oracle; psi grows by 0/1 cells") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 300; ++trial) {
      const std::string_view sigma = trial % 2 ? "ab" : "abcd";
      PsamState s(testing::random_string(rng, 16, sigma), testing::random_string(rng, 16, sigma));
      for (int op = 0; op < 32; ++op) {
        const auto before = oracle::oracle_psam(s.a(), s.b());
        const std::int32_t lcs_before = s.lcs();
        const Symbol c = testing::random_symbol(rng, sigma);
        const bool prepend = rng() % 2;
        if (prepend) {
          s.prepend_a(c);
        } else {
          s.append_b(c);
        }
        require_oracle(s);
        const auto after = oracle::oracle_psam(s.a(), s.b());
        // Prepending to A shifts A's prefixes by one column; appending to B
        // keeps every old cell's coordinates.
        for (std::int32_t i = 0; i <= before.rows(); ++i) {
          for (std::int32_t j = 0; j <= before.cols(); ++j) {
            const std::int32_t diff = after(i, prepend ? j + 1 : j) - before(i, j);
            REQUIRE((diff == 0 || diff == 1));
          }
        }
        const OpCounters& k = s.last_counters();
        REQUIRE(k.touched_pivots <= 4 * (lcs_before + 1));
        REQUIRE(k.table_queries <= 2 * (lcs_before + 1) + 8);
        REQUIRE(is_sorted_by(s.pivots().points, prepend));
      }
    }
  }

  TEST_CASE("disjoint alphabets keep the work constant") {
    PsamState s("abababab", "cdcdcdcd");
    std::mt19937_64 rng(61);
    for (int op = 0; op < 100; ++op) {
      if (op % 2) {
        s.prepend_a(testing::random_symbol(rng, "ab"));
      } else {
        s.append_b(testing::random_symbol(rng, "cd"));
      }
      CHECK(s.lcs() == 0);
      CHECK(s.last_counters().touched_pivots <= 4);
    }
  }
}

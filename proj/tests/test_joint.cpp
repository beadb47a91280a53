#include "doctest.h"
#include "helpers.hpp"
#include "iasm/errors.hpp"
#include "iasm/joint.hpp"
#include "iasm/oracle.hpp"

using namespace iasm;
using iasm::testing::sorted;

namespace {

void require_oracle(const JointState& s) {
  INFO("A=" << s.a().str() << " B=" << s.b().str());
  REQUIRE(sorted(s.ssam_pivots().points) == sorted(oracle::ssam_pivots(s.a(), s.b()).points));
  REQUIRE(sorted(s.psam_pivots().points) == sorted(oracle::psam_pivots(s.a(), s.b()).points));
  REQUIRE(s.delta() + s.lcs() == s.n());
  REQUIRE(s.scratch().all_zero());
}

std::vector<Pivot> gained(const std::vector<Pivot>& before, const std::vector<Pivot>& after) {
  std::vector<Pivot> out;
  const auto b = sorted(before);
  for (const Pivot& p : sorted(after)) {
    if (!std::binary_search(b.begin(), b.end(), p)) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_SUITE("joint_dynamic") {
  TEST_CASE("append to B with a symbol absent from A") {
    JointState s("aa", "a");
    s.set_self_check(false);
    const auto before = s.ssam_pivots().points;
    s.append_b('b');
    CHECK(gained(before, s.ssam_pivots().points) == std::vector<Pivot>{{2, 2}});
    require_oracle(s);
  }

  TEST_CASE("append to B with a symbol absent from both strings") {
    JointState s("ab", "ab");
    const auto psi = sorted(s.psam_pivots().points);
    const auto k = s.ssam_pivots().points;
    s.append_b('x');
    CHECK(sorted(s.psam_pivots().points) == psi);
    CHECK(gained(k, s.ssam_pivots().points) == std::vector<Pivot>{{3, 3}});
    require_oracle(s);
  }

  TEST_CASE("fixture appends") {
    JointState s("bbcbbaa", "aacabba");
    s.append_b('a');
    require_oracle(s);
    CHECK(s.b().str() == "aacabbaa");

    JointState t("bbcac", "ccabaccaa");
    t.append_a('a');
    require_oracle(t);
    CHECK(t.a().str() == "bbcaca");
  }

  TEST_CASE("append to A with a symbol absent from B") {
    JointState s("bbcac", "ccabaccaa");
    const auto k = sorted(s.ssam_pivots().points);
    const auto psi = sorted(s.psam_pivots().points);
    s.append_a('z');
    CHECK(sorted(s.ssam_pivots().points) == k);
    CHECK(sorted(s.psam_pivots().points) == psi);
  }

  TEST_CASE("prepends are not supported") {
    JointState s("ab", "ab");
    CHECK_THROWS_AS(s.prepend_a('a'), CapabilityError);
    CHECK_THROWS_AS(s.prepend_b('a'), CapabilityError);
  }

  TEST_CASE("random interleavings match the oracle; one list gains at most one pivot") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 400; ++trial) {
      const std::string_view sigma = trial % 3 == 0 ? "abcd" : "ab";
      JointState s(testing::random_string(rng, 16, sigma), testing::random_string(rng, 16, sigma));
      s.set_self_check(false);
      for (int op = 0; op < 32; ++op) {
        const auto k_before = s.ssam_pivots().points;
        const auto psi_before = s.psam_pivots().points;
        const std::int32_t delta_before = s.delta();
        const std::int32_t lcs_before = s.lcs();
        const bool on_a = rng() % 2;
        const Symbol c = testing::random_symbol(rng, sigma);
        if (on_a) {
          s.append_a(c);
        } else {
          s.append_b(c);
        }
        require_oracle(s);
        // The passive list only grows, by at most one pivot in the new line.
        const auto& passive_before = on_a ? psi_before : k_before;
        const auto& passive_after = on_a ? s.psam_pivots().points : s.ssam_pivots().points;
        const auto extra = gained(passive_before, passive_after);
        REQUIRE(extra.size() <= 1);
        REQUIRE(passive_after.size() == passive_before.size() + extra.size());
        if (!extra.empty()) {
          if (on_a) {
            REQUIRE(extra[0].col == s.m());
          } else {
            REQUIRE(extra[0].col == s.n());
          }
        }
        const std::int32_t s_before = on_a ? delta_before : lcs_before;
        REQUIRE(s.last_counters().touched_pivots <= 4 * (s_before + 1));
        REQUIRE(s.last_counters().table_queries <= 2 * (s_before + 1) + 8);
        // Both lists stay sorted by increasing column.
        for (const auto* list : {&s.ssam_pivots().points, &s.psam_pivots().points}) {
          REQUIRE(std::is_sorted(list->begin(), list->end(),
                                 [](const Pivot& x, const Pivot& y) { return x.col < y.col; }));
        }
      }
    }
  }

  TEST_CASE("self-check catches a corrupted state") {
    JointState s("ab", "ab");
    s.set_self_check(true);
    s.corrupt_for_testing();
    CHECK_THROWS_AS(s.append_a('a'), StructuralError);
  }
}

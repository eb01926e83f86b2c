#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "qgenus/bounds.hpp"
#include "qgenus/oracle.hpp"

using namespace qgenus;

namespace {

bool lex_less(const GammaSequence& a, const GammaSequence& b) {
    return std::lexicographical_compare(a.values().begin(), a.values().end(),
                                        b.values().begin(), b.values().end());
}

// independent generator: every positive-entry sequence up to the defensive
// length cap, filtered through the admissibility checker alone
std::vector<GammaSequence> naive_all(const ConstraintProfile& profile) {
    std::vector<GammaSequence> out;
    const i64 max_len = profile.n_min + profile.prefix_length + 2;
    std::vector<i64> cur;
    const std::function<void(i64)> rec = [&](i64 remaining) {
        if (remaining == 0) {
            GammaSequence g(cur);
            if (is_admissible(g, profile)) out.push_back(g);
            return;
        }
        if (static_cast<i64>(cur.size()) >= max_len) return;
        const i64 top = std::min(profile.plateau_height, remaining);
        for (i64 v = 1; v <= top; ++v) {
            cur.push_back(v);
            rec(remaining - v);
            cur.pop_back();
        }
    };
    rec(profile.mass);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace

TEST_CASE("tiny profiles enumerate to the exact known sets") {
    const auto a = all_admissible(ConstraintProfile::large_degree(4, 1));
    REQUIRE(a.size() == 1);
    CHECK(a[0] == GammaSequence({1, 2, 1}));

    const auto b = all_admissible(ConstraintProfile::large_degree(9, 2));
    REQUIRE(b.size() == 1);
    CHECK(b[0] == GammaSequence({1, 3, 4, 1}));
}

TEST_CASE("enumeration is ascending lexicographic and duplicate free") {
    const auto list = all_admissible(ConstraintProfile::large_degree(15, 3));
    REQUIRE(list.size() == 3);
    CHECK(list[0] == GammaSequence({1, 3, 5, 4, 2}));
    CHECK(list[1] == GammaSequence({1, 3, 5, 5, 1}));
    CHECK(list[2] == GammaSequence({1, 3, 5, 6}));

    const auto wide = all_admissible(ConstraintProfile::large_degree(26, 4));
    CHECK(std::is_sorted(wide.begin(), wide.end(), lex_less));
    CHECK(std::adjacent_find(wide.begin(), wide.end()) == wide.end());
}

TEST_CASE("oracle maxima match the frozen instances") {
    const OracleResult a = oracle_max(ConstraintProfile::large_degree(15, 3));
    CHECK(a.max_value == 18);
    CHECK(a.search_space_size == 3);
    REQUIRE(a.argmax_sequences.size() == 1);
    CHECK(a.argmax_sequences[0] == GammaSequence({1, 3, 5, 4, 2}));

    const OracleResult b = oracle_max(ConstraintProfile::large_degree(14, 3));
    CHECK(b.max_value == 15);
    CHECK(b.search_space_size == 2);
    REQUIRE(b.argmax_sequences.size() == 1);
    CHECK(b.argmax_sequences[0] == GammaSequence({1, 3, 5, 4, 1}));

    const OracleResult c = oracle_max(ConstraintProfile::large_degree(12, 2));
    CHECK(c.max_value == 12);
    CHECK(c.search_space_size == 2);
    REQUIRE(c.argmax_sequences.size() == 1);
    CHECK(c.argmax_sequences[0] == GammaSequence({1, 3, 4, 3, 1}));

    const OracleResult d = oracle_max(ConstraintProfile::small_degree(10, 5));
    CHECK(d.max_value == 15);
    CHECK(d.search_space_size == 1);
    REQUIRE(d.argmax_sequences.size() == 1);
    CHECK(d.argmax_sequences[0] == GammaSequence({1, 2, 2, 2, 2, 1}));

    CHECK(oracle_max(ConstraintProfile::theta_k(10, 3)).max_value == 6);
    CHECK(oracle_max(ConstraintProfile::theta_k(12, 3)).max_value == 10);
}

TEST_CASE("oracle agrees with the closed form on a degenerate-free grid") {
    for (i64 d = 1; d <= 16; ++d)
        CHECK(oracle_max(ConstraintProfile::large_degree(d, 1)).max_value == pi(d, 1));
    for (i64 d = 5; d <= 20; ++d)
        CHECK(oracle_max(ConstraintProfile::large_degree(d, 2)).max_value == pi(d, 2));
    for (i64 d = 13; d <= 24; ++d)
        CHECK(oracle_max(ConstraintProfile::large_degree(d, 3)).max_value == pi(d, 3));
}

TEST_CASE("a heavy instance matches the closed form with a unique maximizer") {
    const OracleResult r = oracle_max(ConstraintProfile::large_degree(200, 6));
    CHECK(r.max_value == 1962);
    CHECK(r.max_value == pi(200, 6));
    CHECK(r.search_space_size == 20);
    CHECK(r.argmax_sequences.size() == 1);
    for (const auto& g : r.argmax_sequences) {
        CHECK(g.mass() == 200);
        CHECK(genus_functional(g) == 1962);
    }
}

TEST_CASE("every emitted sequence is admissible and within the support cap") {
    const std::vector<ConstraintProfile> profiles = {
        ConstraintProfile::large_degree(15, 3),
        ConstraintProfile::large_degree(12, 2),
        ConstraintProfile::small_degree(10, 5),
        ConstraintProfile::theta_k(12, 3),
    };
    for (const auto& profile : profiles) {
        i64 seen = 0;
        enumerate_admissible(profile, [&](const GammaSequence& g) {
            ++seen;
            CHECK(is_admissible(g, profile));
            CHECK(static_cast<i64>(g.size()) <= profile.n_min + profile.prefix_length);
        });
        CHECK(seen > 0);
    }
}

TEST_CASE("enumeration matches an unpruned generate-and-filter pass") {
    std::vector<ConstraintProfile> profiles;
    for (i64 d = 1; d <= 12; ++d) profiles.push_back(ConstraintProfile::large_degree(d, 1));
    for (i64 d = 5; d <= 12; ++d) profiles.push_back(ConstraintProfile::large_degree(d, 2));
    profiles.push_back(ConstraintProfile::small_degree(10, 5));
    profiles.push_back(ConstraintProfile::theta_k(12, 3));
    for (const auto& profile : profiles) {
        CAPTURE(profile.mass);
        CAPTURE(profile.plateau_height);
        const auto fast = all_admissible(profile);
        const auto slow = naive_all(profile);
        CHECK(fast == slow);
    }
}

TEST_CASE("the node budget aborts with the documented message") {
    CHECK_THROWS_WITH_AS(oracle_max(ConstraintProfile::large_degree(200, 6), 10),
                         "node budget exceeded; use smaller instance", BudgetExceeded);
}

TEST_CASE("enumeration is deterministic") {
    const auto first = all_admissible(ConstraintProfile::large_degree(26, 4));
    const auto second = all_admissible(ConstraintProfile::large_degree(26, 4));
    CHECK(first == second);
    const OracleResult a = oracle_max(ConstraintProfile::large_degree(42, 5));
    const OracleResult b = oracle_max(ConstraintProfile::large_degree(42, 5));
    CHECK(a.max_value == b.max_value);
    CHECK(a.argmax_sequences == b.argmax_sequences);
    CHECK(a.search_space_size == b.search_space_size);
}

TEST_CASE("verify_pair passes on representative cells") {
    for (auto [d, k] : std::vector<std::pair<i64, i64>>{{9, 2}, {15, 3}, {12, 3}, {10, 5}, {1, 1}}) {
        CAPTURE(d);
        CAPTURE(k);
        const VerificationReport report = verify_pair(d, k);
        CHECK(report.d == d);
        CHECK(report.k == k);
        CHECK(!report.checks.empty());
        for (const auto& check : report.checks) {
            CAPTURE(check.name);
            CHECK(check.pass);
            CHECK(check.expected == check.actual);
        }
        CHECK(report.all_pass());
    }
}

TEST_CASE("a nonzero expected offset makes verify_pair fail honestly") {
    const VerificationReport report = verify_pair(9, 2, kDefaultNodeBudget, 5);
    CHECK(!report.all_pass());
    for (const auto& check : report.checks) {
        CAPTURE(check.name);
        CHECK(!check.pass);
        CHECK(check.expected == check.actual + 5);
    }
}

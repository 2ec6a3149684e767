#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "frob/analysis.hpp"
#include "frob/bounds.hpp"
#include "frob/core.hpp"
#include "frob/exact.hpp"
#include "frob/rng.hpp"

using namespace frob;

TEST_CASE("tightness_gap sign convention") {
    CHECK(tightness_gap(2, 3, 5) == doctest::Approx(-0.227940).epsilon(1e-4));
    CHECK(tightness_gap(5, 7, 9) > 0.0);
    CHECK(tightness_gap(1, 2, 3) < 0.0);
}

TEST_CASE("ub2_not_worse exact-integer predicate") {
    CHECK(ub2_not_worse(2, 3, 5));  // 300 <= 348
    CHECK_FALSE(ub2_not_worse(5, 7, 9)); // 6615 > 1585
    CHECK(condition9_margin(5, 7, 9) == 6615 - 1585);
    CHECK(condition9_margin(1, 2, 25) == 0); // the tie
    // with a1 a2 >= 33 and a1 < a2 < a3 the product side always wins
    for (std::int64_t a1 = 3; a1 <= 12; ++a1)
        for (std::int64_t a2 = std::max<std::int64_t>(a1 + 1, 33 / a1);
             a2 <= 40; ++a2)
            if (a1 * a2 >= 33)
                for (std::int64_t a3 = a2 + 1; a3 <= 60; a3 += 7)
                    CHECK_FALSE(ub2_not_worse(a1, a2, a3));
}

TEST_CASE("predicate agrees with the real-valued gap away from ties") {
    SplitMix64 rng(111);
    for (int trial = 0; trial < 3000; ++trial) {
        const std::int64_t a1 = rng.uniform(1, 40);
        const std::int64_t a2 = rng.uniform(a1, 40);
        const std::int64_t a3 = rng.uniform(a2, 60);
        const double gap = tightness_gap(a1, a2, a3);
        if (ub2_not_worse(a1, a2, a3))
            CHECK(gap <= 1e-9);
        else
            CHECK(gap >= -1e-9);
    }
}

TEST_CASE("exceptional triple enumeration matches the published table") {
    const auto result = enumerate_exceptional_triples();
    const auto merged = result.all();
    CHECK(merged.size() == 30);
    CHECK(merged == theorem4_list());
    CHECK(result.sharper.size() == 29);
    REQUIRE(result.ties.size() == 1);
    // the one strictness discrepancy: (1,2,25) sits exactly on the boundary
    CHECK(result.ties[0] == Triple{1, 2, 25});
    CHECK(condition9_margin(1, 2, 25) == 0);

    const auto has = [&merged](Triple t) {
        return std::binary_search(merged.begin(), merged.end(), t);
    };
    CHECK(has({1, 2, 3}));
    CHECK(has({2, 3, 5}));
    CHECK_FALSE(has({5, 7, 9}));
}

TEST_CASE("exceptional closure: F <= ub2 <= ub1 with exact F") {
    const auto result = enumerate_exceptional_triples();
    for (const auto& t : result.all()) {
        const auto inst = Instance::validate({t[0], t[1], t[2]});
        REQUIRE(inst.strong_ok());
        const double f = static_cast<double>(frobenius_exact(inst));
        const double u1 = ub1_value(t[0], t[1], t[2]);
        const double u2 = ub2_value(t[0], t[1], t[2]);
        CHECK(f <= u2);
        CHECK(u2 <= u1 + 1e-12);
        if (condition9_margin(t[0], t[1], t[2]) < 0)
            CHECK(u2 < u1);
    }
}

TEST_CASE("allow-repeats exposes the (1,1,k) family") {
    EnumerationOptions opts;
    opts.allow_repeats = true;
    opts.max_a3_for_open_families = 40;
    const auto result = enumerate_exceptional_triples(opts);
    int family = 0;
    for (const auto& t : result.sharper) {
        if (t[0] == 1 && t[1] == 1) {
            ++family;
            CHECK(tightness_gap(1, 1, t[2]) < 0.0);
            CHECK(is_known_exceptional(1, 1, t[2]));
        }
    }
    CHECK(family == 40); // every k in [1, 40]
    // strictly increasing part unchanged
    auto strict = enumerate_exceptional_triples();
    for (const auto& t : strict.all())
        CHECK(std::find(result.all().begin(), result.all().end(), t) !=
              result.all().end());
}

TEST_CASE("per-pair scan termination is sound") {
    // once the margin is positive and rising for 3 consecutive a3, no later
    // a3 flips back: brute-check far beyond the analytic crossover
    const std::int64_t pairs[][2] = {{1, 2}, {1, 3}, {1, 7}, {2, 3},
                                     {3, 4}, {4, 7}, {5, 6}};
    for (const auto& pr : pairs) {
        const std::int64_t a1 = pr[0], a2 = pr[1];
        std::int64_t consecutive = 0;
        int128 prev = 0;
        std::int64_t settled_at = -1;
        for (std::int64_t a3 = a2 + 1; a3 <= 3000; ++a3) {
            const int128 margin = condition9_margin(a1, a2, a3);
            if (margin > 0 && margin > prev) {
                if (++consecutive == 3 && settled_at < 0)
                    settled_at = a3;
            } else {
                consecutive = 0;
                settled_at = -1;
            }
            prev = margin;
        }
        REQUIRE(settled_at > 0);
        for (std::int64_t a3 = settled_at; a3 <= 3000; ++a3)
            CHECK(condition9_margin(a1, a2, a3) > 0);
    }
}

TEST_CASE("counterexample verifier") {
    const auto checks = verify_counterexamples();
    REQUIRE(checks.size() == 2);
    for (const auto& c : checks)
        CHECK(c.pass);
    // deterministic: a rerun reports identically
    const auto again = verify_counterexamples();
    for (std::size_t i = 0; i < checks.size(); ++i) {
        CHECK(checks[i].pass == again[i].pass);
        CHECK(checks[i].detail == again[i].detail);
    }
    // margin of check (i) is 35 - ub2(3,6,19)
    CHECK(35.0 - ub2_value(3, 6, 19) ==
          doctest::Approx(0.071481).epsilon(1e-4));
}

TEST_CASE("theorem-6 table verifier") {
    const auto checks = verify_theorem6_table();
    REQUIRE(checks.size() == 15);
    for (const auto& c : checks)
        CHECK(c.pass);
}

TEST_CASE("approx_gap") {
    CHECK(approx_gap(1, 11) == doctest::Approx(0.0));
    CHECK(approx_gap(1, 1000) ==
          doctest::Approx(500.0 * (std::sqrt(3.0) - std::sqrt(2.011))));
    // large-product limit: gap / (a1 a2) -> (sqrt 3 - sqrt 2) / 2
    const double limit_ratio = (std::sqrt(3.0) - std::sqrt(2.0)) / 2.0;
    CHECK(approx_gap(1000, 1000) / 1e6 ==
          doctest::Approx(limit_ratio).epsilon(1e-4));
}

TEST_CASE("approx_gap tracks the true gap when entries are comparable") {
    // consecutive pairwise-coprime triples keep all three entries close;
    // below prod12 ~ 90 the 11/p term regime makes the approximation poor
    for (std::int64_t m = 10; m <= 900; ++m) {
        if (std::gcd(m, m + 1) != 1 || std::gcd(m, m + 2) != 1 ||
            std::gcd(m + 1, m + 2) != 1)
            continue;
        const double gap = tightness_gap(m, m + 1, m + 2);
        const double approx = approx_gap(m, m + 1);
        CHECK(std::abs(gap / approx - 1.0) <= 0.15);
    }
}

#include "doctest.h"

#include "fol/errors.hpp"
#include "fol/sheafcoh.hpp"

#include <random>

using namespace fol;

TEST_CASE("Whitney products and twisting") {
    CHECK(whitney_line_sum({-1, -1, -1, -1}) == ChernTriple{-4, 6, -4});
    CHECK(whitney_line_sum({-1, 0}) == ChernTriple{-1, 0, 0});
    // O(a) + O(b) twisted by t is O(a+t) + O(b+t).
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            for (int t = -4; t <= 4; ++t)
                CHECK(twisted_chern(2, whitney_line_sum({a, b}), t) == whitney_line_sum({a + t, b + t}));
    CHECK_THROWS_AS(twisted_chern(3, {}, 1), Error);
}

TEST_CASE("Riemann-Roch anchors") {
    for (long t = -3; t <= 8; ++t) CHECK(euler_characteristic(1, {t, 0, 0}, 0) == binomial_l(t + 3, 3));
    CHECK(euler_characteristic(SheafSymbol::line_sum({0}), 0) == 1);
    for (long n = 1; n <= 5; ++n) CHECK(euler_characteristic(2, {0, n, 0}, 1) == 8 - 3 * n);
    for (long t = 0; t <= 8; ++t) {
        CHECK(euler_characteristic(SheafSymbol::null_correlation(), t) == 2 * binomial_l(t + 3, 3) - (t + 2));
        CHECK(euler_characteristic(SheafSymbol::null_correlation(), t) == null_correlation_h0(t));
    }
    CHECK(null_correlation_h0(1) == 5);
    CHECK(null_correlation_h0(0) == 0);
    CHECK(null_correlation_h0(2) == 16);
    CHECK(null_correlation_h0(-3) == 0);
    CHECK_THROWS_AS(euler_characteristic(SheafSymbol::cotangent(), 0), Error);
    CHECK_THROWS_AS(euler_characteristic(2, {0, 0, 1}, 0), Error);
}

TEST_CASE("two Riemann-Roch routes agree") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> u(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        long t = u(rng);
        ChernTriple l{u(rng), u(rng), u(rng)};
        if ((l.c1 * l.c2 - l.c3) % 2 != 0) ++l.c3;  // integrality of chi
        CHECK(euler_characteristic(1, l, t) == euler_characteristic_by_twisting(1, l, t));
        ChernTriple e{u(rng), u(rng), 0};
        e.c3 = (e.c1 * e.c2) % 2 == 0 ? 0 : 1;
        CHECK(euler_characteristic(2, e, t) == euler_characteristic_by_twisting(2, e, t));
    }
}

TEST_CASE("line bundle rows and Serre duality") {
    CHECK(line_bundle_cohomology(0).h == std::array<long, 4>{1, 0, 0, 0});
    CHECK(line_bundle_cohomology(-4).h == std::array<long, 4>{0, 0, 0, 1});
    CHECK(line_bundle_cohomology(-2).h == std::array<long, 4>{0, 0, 0, 0});
    for (long a = -10; a <= 10; ++a) {
        auto r = line_bundle_cohomology(a), s = line_bundle_cohomology(-4 - a);
        for (int i = 0; i < 4; ++i) CHECK(r.h[i] == s.h[3 - i]);
        CHECK(r.alternating_sum() == euler_characteristic(1, {a, 0, 0}, 0));
    }
}

TEST_CASE("cotangent Bott values") {
    CHECK(cotangent_cohomology(1, 0).h == std::array<long, 4>{0, 1, 0, 0});
    CHECK(cotangent_cohomology(1, 2).h[0] == 6);
    CHECK(cotangent_cohomology(1, 1).h[0] == 0);
    CHECK(cotangent_cohomology(1, -3).h[3] == 4);
    for (long k = -10; k <= 10; ++k) CHECK(cotangent_cohomology(1, k).alternating_sum() == cotangent_euler_characteristic(k));
    CHECK_THROWS_AS(cotangent_cohomology(2, 0), Error);
}

TEST_CASE("instanton tables") {
    auto r = instanton_cohomology(1, std::nullopt, -1);
    CHECK(r.h == std::array<long, 4>{0, 1, 0, 0});
    CHECK(r.source[1] == Provenance::Stated);
    auto s = instanton_cohomology(2, std::nullopt, 1);
    CHECK(s.h[0] == 2);
    CHECK(s.h[1] == 0);
    CHECK(instanton_cohomology(1, std::nullopt, 1).h[0] == 5);
    CHECK(instanton_cohomology(4, std::nullopt, 2).h[0] == 4);
    for (int n = 1; n <= 4; ++n) {
        std::vector<long> choices = n == 3 ? std::vector<long>{0, 1, 2} : std::vector<long>{-1};
        for (long h0 : choices) {
            std::optional<long> in = h0 < 0 ? std::nullopt : std::optional<long>(h0);
            auto T = cohomology_table(SheafSymbol::instanton(n, in), -12, 12);
            for (const auto& [k, row] : T.rows) {
                CHECK(row.alternating_sum() == instanton_euler_characteristic(n, k));
                CHECK(row.alternating_sum() == euler_characteristic(2, {0, n, 0}, k));
                for (long v : row.h) CHECK(v >= 0);
                // at most h^1 in the middle range: E(k) vanishes h^0 for k <= 0
                if (k <= 0) CHECK(row.h[0] == 0);
            }
            long expect = n == 1 ? 1 : n == 2 ? 4 : n == 3 ? 8 + h0 : 14;
            CHECK(T.total(1) == expect);
            CHECK(T.rows.at(-2).h == std::array<long, 4>{0, 0, 0, 0});
        }
    }
    CHECK(instanton_cohomology(3, 1, 1).h[1] == 2);
    CHECK_THROWS_AS(instanton_cohomology(3, std::nullopt, 0), Error);
    CHECK_THROWS_AS(instanton_cohomology(3, 3, 0), Error);
    CHECK_THROWS_AS(instanton_cohomology(1, 4, 0), Error);
    CHECK_THROWS_AS(instanton_cohomology(5, std::nullopt, 0), Error);
    auto j = cohomology_table(SheafSymbol::null_correlation(), -1, 0).to_json();
    CHECK(j["twists"]["-1"] == nlohmann::json::array({0, 1, 0, 0}));
    CHECK(j["provenance"]["-1"][1] == "stated");
}

TEST_CASE("small formulas") {
    CHECK(serre_dual_twist(3, 1) == 1);
    CHECK(serre_dual_twist(1, 0) == 0);
    CHECK(serre_dual_twist(3, -2) == 4);
    CHECK(hom_lower_bound(1) == 29);
    CHECK(hom_lower_bound(2) == 18);
    CHECK(hom_lower_bound(3) == 7);
}

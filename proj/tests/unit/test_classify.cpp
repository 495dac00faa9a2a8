#include "doctest.h"

#include "fol/classify.hpp"
#include "fol/errors.hpp"

using namespace fol;

TEST_CASE("invariants from c2") {
    auto a = invariants_from_c2(3, 10, true);
    CHECK(a.degC == 8);
    CHECK(*a.paC == 5);
    CHECK(a.c1N == -6);
    auto b = invariants_from_c2(2, 6, true);
    CHECK(b.degC == 5);
    CHECK(*b.paC == 1);
    auto c = invariants_from_c2(1, 4, true);
    CHECK(c.degC == 2);
    CHECK(*c.paC == -1);
    CHECK_THROWS_AS(invariants_from_c2(2, 7, true), Error);
    CHECK_THROWS_AS(invariants_from_c2(3, 17, true), Error);
    CHECK_THROWS_AS(invariants_from_c2(3, 4, true), Error);
    auto nlf = invariants_from_c2(3, 18, false);
    CHECK(nlf.degC == 0);
    CHECK_FALSE(nlf.paC);
}

TEST_CASE("locally free invariants close the isolated-point identity") {
    for (int d = 1; d <= 6; ++d)
        for (long c2 = d + 2; c2 <= d * d + 2 * d + 1; ++c2) {
            FoliationInvariants inv;
            try {
                inv = invariants_from_c2(d, c2, true);
            } catch (const Error& e) {
                CHECK(e.kind() == ErrorKind::NonIntegralGenus);
                continue;
            }
            long d3 = long(d) * d * d + long(d) * d + d + 1;
            CHECK(d3 - 3 * inv.degC * (d - 1) - 2 * (1 - *inv.paC) == 0);
            CHECK(isolated_count(d, inv.degC, 1 - *inv.paC) == 0);
        }
    // degree and genus decrease with c2
    for (int d = 2; d <= 6; ++d) {
        long prev_deg = 1 << 20, prev_pa = 1 << 20;
        for (long c2 = d + 2; c2 <= d * d + 2 * d + 1; ++c2) {
            if ((3 * (d - 1) * c2) % 2) continue;
            auto inv = invariants_from_c2(d, c2, true);
            CHECK(inv.degC < prev_deg);
            CHECK(*inv.paC < prev_pa);
            prev_deg = inv.degC;
            prev_pa = *inv.paC;
        }
    }
}

TEST_CASE("generic and isolated counts") {
    CHECK(generic_invariants(0) == std::pair<long, long>{3, 1});
    CHECK(generic_invariants(1) == std::pair<long, long>{6, 4});
    CHECK(generic_invariants(2) == std::pair<long, long>{11, 15});
    CHECK(isolated_count(2, 5, 0) == 0);
    CHECK(isolated_count(1, 2, 2) == 0);
    for (long d = 0; d <= 5; ++d) CHECK(isolated_count(d, 0, 0) == generic_invariants(d).second);
    CHECK_THROWS_AS(isolated_count(3, 10, 5), Error);
}

TEST_CASE("degree three table") {
    struct Row {
        long c2N, deg, pa, charge;
        std::vector<long> dimM, h0;
    };
    std::vector<Row> rows{{10, 8, 5, 1, {1}, {1}}, {11, 7, 2, 2, {4}, {1}}, {12, 6, -1, 3, {8, 9}, {2, 3}},
                          {13, 5, -4, 4, {14}, {5}}};
    for (const auto& row : rows) {
        auto r = classify_low_degree(3, row.c2N, true);
        CHECK(r.kind == VerdictKind::Instanton);
        CHECK(r.charge == row.charge);
        CHECK(r.invariants->degC == row.deg);
        CHECK(*r.invariants->paC == row.pa);
        REQUIRE(r.profiles.size() == row.dimM.size());
        for (std::size_t i = 0; i < row.dimM.size(); ++i) {
            CHECK(r.profiles[i].dim_M == row.dimM[i]);
            CHECK(r.profiles[i].h0_OC == row.h0[i]);
        }
    }
    auto r13 = classify_low_degree(3, 13, true);
    CHECK(*r13.components == 5);
    CHECK(r13.profiles[0].natural);
    CHECK(*classify_low_degree(3, 10, true).components == 1);
    CHECK(*classify_low_degree(3, 11, true).components == 1);
}

TEST_CASE("other low degree verdicts") {
    auto d1 = classify_low_degree(1, 4, false);
    CHECK(d1.kind == VerdictKind::Split);
    CHECK(d1.split == std::pair<int, int>{-2, -2});
    auto d2 = classify_low_degree(2, 6, false);
    CHECK(d2.split == std::pair<int, int>{-2, -3});
    CHECK(*d2.components == 1);
    CHECK(d2.invariants->degC == 5);
    CHECK_THROWS_AS(classify_low_degree(2, 8, false), Error);
    CHECK_THROWS_AS(classify_low_degree(2, 8, true), Error);
    CHECK_THROWS_AS(classify_low_degree(2, 4, true), Error);
    CHECK_THROWS_AS(classify_low_degree(2, 5, true), Error);
    CHECK_THROWS_AS(classify_low_degree(1, 3, true), Error);
    CHECK_THROWS_AS(classify_low_degree(3, 16, false), Error);
    CHECK_THROWS_AS(classify_low_degree(3, 15, false), Error);
    CHECK_THROWS_AS(classify_low_degree(3, 14, true), Error);
    CHECK_THROWS_AS(classify_low_degree(3, 7, true), Error);
    try {
        classify_low_degree(3, 17, true);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OutOfBounds);
    }
    CHECK(classify_low_degree(3, 14, false).kind == VerdictKind::StableRank2);
    auto s8 = classify_low_degree(3, 8, true);
    CHECK(s8.split == std::pair<int, int>{-2, -4});
    REQUIRE(s8.flags.size() == 1);
    CHECK(s8.flags[0].computed == 11);
    CHECK(s8.flags[0].stated == 5);
    auto s9 = classify_low_degree(3, 9, true);
    CHECK(s9.flags[0].computed == 8);
    CHECK(s9.flags[0].stated == 3);
    CHECK(assess_low_degree(3, 16, true).kind == VerdictKind::Impossible);
    CHECK_FALSE(assess_low_degree(3, 16, true).reason.empty());
}

TEST_CASE("small formulas") {
    CHECK(connected_components(0, 2) == 1);
    CHECK(connected_components(4, 3) == 5);
    CHECK(connected_components(1, 3) == 2);
    CHECK_THROWS_AS(connected_components(0, 1), Error);
    CHECK(sections_of_singular_scheme(1, 5) == 1);
    CHECK(sections_of_singular_scheme(4, 0) == 5);
    CHECK(sections_of_singular_scheme(3, 0) == 2);
    CHECK(legendrian_moduli_dim(1) == 8);
    CHECK(legendrian_moduli_dim(2) == 20);
    CHECK(legendrian_moduli_dim(3) == 39);
    auto m1 = nc_moduli_dim(1);
    CHECK(m1.stated == 34);
    CHECK(m1.derived == 33);
    CHECK(m1.flag);
    // 8 C(6,3) - 2 C(7,3) - 9 = 160 - 70 - 9
    CHECK(nc_moduli_dim(2).stated == 81);
    CHECK(nc_moduli_dim(2).derived == 80);
    for (long k = 1; k <= 10; ++k) CHECK(nc_moduli_dim(k).stated - nc_moduli_dim(k).derived == 1);
    CHECK(nc_curve_invariants(1) == CurveDegreeGenus{8, 5});
    CHECK(nc_curve_invariants(2) == CurveDegreeGenus{21, 49});
    CHECK(nc_curve_invariants(3) == CurveDegreeGenus{40, 161});
    CHECK(ci_foliation_invariants(0, 0).curve == CurveDegreeGenus{2, -1});
    CHECK(ci_foliation_invariants(0, 1).curve == CurveDegreeGenus{5, 1});
    CHECK(ci_foliation_invariants(0, 1).flags.empty());
    auto ci11 = ci_foliation_invariants(1, 1);
    CHECK(ci11.curve == CurveDegreeGenus{9, 8});
    REQUIRE(ci11.flags.size() == 1);
    CHECK(ci11.flags[0].stated == 3);
    CHECK(ci_foliation_invariants(0, 2).curve == CurveDegreeGenus{10, 11});
    for (long a = 0; a <= 3; ++a)
        for (long b = a; b <= 3; ++b) CHECK_NOTHROW(ci_foliation_invariants(a, b));
    CHECK(*rao_bounds(0, true).exact == 1);
    CHECK(*rao_bounds(1, true).exact == 2);
    auto rb = rao_bounds(4, false);
    CHECK(rb.lower == 4);
    CHECK(rb.upper == 5);
    CHECK_FALSE(rb.exact);
    CHECK(split_criterion(1) == SplitVerdict::Splits);
    CHECK(split_criterion(2) == SplitVerdict::TwistedNullCorrelation);
    CHECK(split_criterion(3) == SplitVerdict::Impossible);
    CHECK(split_criterion(4) == SplitVerdict::Undetermined);
}

TEST_CASE("report json") {
    auto j = classify_low_degree(3, 13, true).to_json();
    CHECK(j["verdict"]["kind"] == "instanton");
    CHECK(j["curve"]["degree"] == 5);
    CHECK(j["dim_M"] == 14);
    CHECK(j["flags"].empty());
    auto k = classify_low_degree(3, 8, true).to_json();
    CHECK(k["flags"][0]["computed"] == 11);
}

#include "doctest.h"

#include "fol/errors.hpp"
#include "fol/monad.hpp"

#include <algorithm>
#include <random>

using namespace fol;

TEST_CASE("instanton monads") {
    auto m1 = instanton_monad(1);
    CHECK(m1.left == std::vector<int>{-1});
    CHECK(m1.middle == std::vector<int>{0, 0, 0, 0});
    CHECK(m1.right == std::vector<int>{1});
    for (int n = 1; n <= 8; ++n) {
        auto m = instanton_monad(n);
        CHECK(monad_chern(m) == MonadChern{2, 0, n, 0});
        CHECK(monad_regularity_bound(m) == n);
    }
    CHECK_THROWS_AS(instanton_monad(0), Error);
}

TEST_CASE("Chern classes of displayed monads") {
    CHECK(monad_chern(MonadSpec::raw({}, {-1, 0}, {})) == MonadChern{2, -1, 0, 0});
    CHECK(monad_chern(exceptional_monad()) == MonadChern{2, -1, 2, 0});
    auto b1 = monad_chern(bad_monad_1());
    CHECK(b1.rank == 4);
    auto b2 = bad_monad_2();
    CHECK(b2.cohomology_rank() == 2);
    CHECK(monad_chern(b2) == MonadChern{2, 0, 6, 0});
    CHECK_THROWS_AS(monad_regularity_bound(b2), Error);
    CHECK_THROWS_AS(monad_regularity_bound(exceptional_monad()), Error);
    CHECK_THROWS_AS(monad_chern(MonadSpec::raw({0, 0}, {1}, {})), Error);
}

TEST_CASE("regularity formula") {
    CHECK(monad_regularity_bound(MonadSpec::from_template({1, 2, 2}, {0, 0, 1, 1})) == 9);
    CHECK(monad_regularity_bound(MonadSpec::from_template({1}, {1, 1})) == 1);
    CHECK_THROWS_AS(MonadSpec::from_template({0}, {0, 0}), Error);
    CHECK_THROWS_AS(MonadSpec::from_template({2, 1}, {0, 0, 0}), Error);
    CHECK_THROWS_AS(MonadSpec::from_template({1}, {0}), Error);
}

TEST_CASE("template detection") {
    auto t = detect_template(bad_monad_2());
    REQUIRE(t);
    CHECK(t->c == std::vector<int>{1, 3});
    CHECK(t->b == std::vector<int>{0, 0, 2});
    CHECK_FALSE(detect_template(bad_monad_1()));
    CHECK_FALSE(detect_template(exceptional_monad()));
    CHECK(detect_template(instanton_monad(3)) == instanton_monad(3).tmpl);
}

TEST_CASE("random template monads") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        int s = 1 + static_cast<int>(rng() % 4);
        std::vector<int> c(s), b(s + 1);
        for (auto& x : c) x = 1 + static_cast<int>(rng() % 4);
        for (auto& x : b) x = static_cast<int>(rng() % 4);
        std::sort(c.begin(), c.end());
        std::sort(b.begin(), b.end());
        auto m = MonadSpec::from_template(c, b);
        auto ch = monad_chern(m);
        CHECK(ch.rank == static_cast<int>(m.middle.size() - m.left.size() - m.right.size()));
        CHECK(ch.c1 == 0);
        CHECK(ch.c3 == 0);
        long reg = monad_regularity_bound(m);
        // raising any entry (keeping the lists sorted) never lowers the bound
        for (int i = 0; i < s; ++i) {
            auto c2 = c;
            ++c2[i];
            std::sort(c2.begin(), c2.end());
            CHECK(monad_regularity_bound(MonadSpec::from_template(c2, b)) >= reg);
        }
        for (int j = 0; j <= s; ++j) {
            auto b2 = b;
            ++b2[j];
            std::sort(b2.begin(), b2.end());
            CHECK(monad_regularity_bound(MonadSpec::from_template(c, b2)) >= reg);
        }
    }
}

TEST_CASE("monad JSON") {
    auto j = instanton_monad(1).to_json();
    CHECK(j.dump() == R"({"left":[-1],"middle":[0,0,0,0],"right":[1],"template":{"b":[0,0],"c":[1]}})");
    auto back = parse_monad(j.dump());
    CHECK(back.tmpl == instanton_monad(1).tmpl);
    CHECK(back.middle == instanton_monad(1).middle);
    auto raw = parse_monad(R"({"left":[-2],"middle":[0,-1,0,-1],"right":[1]})");
    CHECK_FALSE(raw.tmpl);
    CHECK(monad_chern(raw) == MonadChern{2, -1, 2, 0});
    CHECK_THROWS_AS(parse_monad("{"), Error);
    CHECK_THROWS_AS(parse_monad(R"({"left":[-1],"middle":[0,0,0,0],"right":[1],"template":{"c":[2],"b":[0,0]}})"), Error);
    CHECK_THROWS_AS(parse_monad(R"({"left":[-1],"right":[1]})"), Error);
}

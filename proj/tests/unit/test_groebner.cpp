#include "doctest.h"

#include "fol/errors.hpp"
#include "fol/groebner.hpp"
#include "fol/hilbert.hpp"
#include "fol/matrix.hpp"
#include "fol/parse.hpp"
#include "fol/rao.hpp"
#include "fol/resolution.hpp"
#include "fol/syzygy.hpp"

using namespace fol;

namespace {

GradedIdeal ideal(const std::string& s) { return GradedIdeal(parse_polynomial_list(s)); }

// dim (S/I)_k by spanning I_k with all monomial multiples of the generators.
long brute_hilbert(const GradedIdeal& I, int k) {
    std::vector<SparseVec> span;
    for (auto& g : I.generators()) {
        if (g.degree() > k) continue;
        for (auto& m : monomials_of_degree(k - g.degree())) span.push_back(to_sparse(to_dense(g.times(m))));
    }
    return graded_piece_dimension(k) - sparse_rank(span);
}

}  // namespace

TEST_CASE("groebner basis of a small binomial ideal") {
    auto G = buchberger(parse_polynomial_list("z0*z1 - z2*z3, z0^2"));
    // S-pair of z0*z1 - z2*z3 with z0^2 adds z0*z2*z3, whose pair with the
    // first generator adds z2^2*z3^2.
    std::vector<Poly> expect =
        parse_polynomial_list("z0^2, z0*z1 - z2*z3, z0*z2*z3, z2^2*z3^2");
    REQUIRE(G.size() == expect.size());
    for (std::size_t i = 0; i < G.size(); ++i) CHECK(G[i] == expect[i]);
    GradedIdeal I(parse_polynomial_list("z0*z1 - z2*z3, z0^2"));
    CHECK(I.contains(parse_polynomial("z2^2*z3^2")));
    CHECK_FALSE(I.contains(parse_polynomial("z2*z3^2")));
}

TEST_CASE("groebner basis is reduced and generates the same ideal") {
    auto I = ideal("z0^2 - z1*z2, z1^2 - z0*z3, z0*z1 - z2*z3");
    auto& G = I.groebner_basis();
    for (auto& g : I.generators()) CHECK(normal_form(g, G).is_zero());
    for (std::size_t i = 0; i < G.size(); ++i) {
        CHECK(G[i].lead_coefficient() == 1);
        for (std::size_t j = 0; j < G.size(); ++j)
            if (i != j)
                for (auto& t : G[i].terms()) CHECK_FALSE(G[j].lead_monomial().divides(t.m));
    }
    for (int k = 0; k <= 6; ++k) CHECK(hilbert_function(I, k) == brute_hilbert(I, k));
}

TEST_CASE("hilbert polynomials of linear spaces and curves") {
    auto line = ideal("z0, z1");
    CHECK(hilbert_polynomial(line).to_string() == "t + 1");
    CHECK(curve_invariants(line).degree == 1);
    CHECK(curve_invariants(line).genus == 0);
    auto plane = ideal("z0");
    CHECK(hilbert_polynomial(plane).degree() == 2);
    CHECK_THROWS_AS(curve_invariants(plane), Error);
    auto conic = ideal("z3, z0*z1 - z2^2");
    CHECK(hilbert_polynomial(conic).to_string() == "2t + 1");
    auto ci22 = ideal("z0*z1 - z2*z3, z0^2 + z1^2 + z2^2 + z3^2");
    auto inv = curve_invariants(ci22);
    CHECK(inv.degree == 4);
    CHECK(inv.genus == 1);
    auto cubic = ideal("z0*z2 - z1^2, z1*z3 - z2^2, z0*z3 - z1*z2");
    CHECK(curve_invariants(cubic).degree == 3);
    CHECK(curve_invariants(cubic).genus == 0);
    CHECK(hilbert_series_numerator({}) == std::vector<Integer>{1});
    CHECK(hilbert_polynomial(ideal("z0, z1, z2, z3")).degree() == -1);
}

TEST_CASE("hilbert function matches linear algebra on random monomial ideals") {
    auto I = ideal("z0^3, z0*z1^2, z2^2*z3, z1*z2*z3^2, z3^4");
    auto P = hilbert_polynomial(I);
    for (int k = 0; k <= 8; ++k) {
        long b = brute_hilbert(I, k);
        CHECK(hilbert_function(I, k) == b);
        if (k >= P.regularity_index()) CHECK(P(k) == b);
    }
}

TEST_CASE("resolution of two skew lines") {
    auto I = ideal("z0*z2, z0*z3, z1*z2, z1*z3");
    auto res = minimal_free_resolution(I, 6);
    REQUIRE(res.layers.size() >= 4);
    CHECK(res.layers[0].size() == 1);
    CHECK(res.layers[1].size() == 4);
    CHECK(res.layers[2].size() == 4);
    CHECK(res.layers[3].size() == 1);
    CHECK(compositions_vanish(res));
    for (int k = 0; k <= 6; ++k) CHECK(alternating_sum(res, k) == hilbert_function(I, k));
    auto rao = rao_module_dimensions(I);
    CHECK(rao.total == 1);
    CHECK(rao.profile == std::map<int, long>{{0, 1}});
}

TEST_CASE("complete intersections have no rao module") {
    auto I = ideal("z0*z1 - z2*z3, z0^2 + z1^2 + z2^2 + z3^2");
    auto rao = rao_module_dimensions(I);
    CHECK(rao.total == 0);
    CHECK(rao.profile.empty());
    auto res = complete_free_resolution(I);
    REQUIRE(res.layers.size() == 3);
    CHECK(res.layers[1] == std::vector<int>{2, 2});
    CHECK(res.layers[2] == std::vector<int>{4});
    CHECK(compositions_vanish(res));
}

TEST_CASE("twisted cubic is arithmetically cohen macaulay") {
    auto I = ideal("z0*z2 - z1^2, z1*z3 - z2^2, z0*z3 - z1*z2");
    CHECK(rao_module_dimensions(I).total == 0);
    CHECK_THROWS_AS(rao_module_dimensions(ideal("z0")), Error);
}

TEST_CASE("rao window too small") {
    auto I = ideal("z0*z2, z0*z3, z1*z2, z1*z3");
    CHECK_THROWS_AS(rao_module_dimensions(I, RaoWindow{0, 0}), Error);
}

TEST_CASE("graded syzygies") {
    auto row = parse_polynomial_list("z0^2, z1^2, z2, z3");
    auto syz = graded_syzygies(row, {-1, -1, 0, 0}, 2);
    CHECK(syz.size() == 8);
    for (auto& s : syz) {
        Poly acc = Poly::zero(3);
        for (std::size_t i = 0; i < row.size(); ++i) acc += s[i] * row[i];
        CHECK(acc.is_zero());
    }
    CHECK(span_contains(syz, {syz[0]}));
    CHECK_THROWS_AS(graded_syzygies(row, {0, 0, 0, 0}, 2), Error);
}

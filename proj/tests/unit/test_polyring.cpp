#include "doctest.h"

#include "fol/errors.hpp"
#include "fol/matrix.hpp"
#include "fol/parse.hpp"
#include "fol/polynomial.hpp"

#include <random>
#include <set>

using namespace fol;

TEST_CASE("binomial with negative upper argument") {
    CHECK(binomial(Integer(5), 2) == 10);
    CHECK(binomial(Integer(-1), 3) == -1);
    CHECK(binomial(Integer(-3), 2) == 6);
    CHECK(binomial(Integer(2), 5) == 0);
    CHECK(binomial_l(7, 0) == 1);
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("monomial ordering and indexing") {
    // degrevlex: z0^2 > z0 z1 > z1^2 > z0 z2
    Monomial a(2, 0, 0, 0), b(1, 1, 0, 0), c(0, 2, 0, 0), d(1, 0, 1, 0);
    CHECK(compare(a, b) > 0);
    CHECK(compare(b, c) > 0);
    CHECK(compare(c, d) > 0);
    for (int k = 0; k <= 6; ++k) {
        auto ms = monomials_of_degree(k);
        CHECK(long(ms.size()) == graded_piece_dimension(k));
        for (std::size_t i = 0; i < ms.size(); ++i) {
            CHECK(monomial_index(ms[i]) == int(i));
            if (i > 0) CHECK(compare(ms[i - 1], ms[i]) > 0);
        }
    }
    CHECK(graded_piece_dimension(-1) == 0);
    CHECK(to_string(Monomial(0, 1, 2, 0)) == "z1*z2^2");
    CHECK(to_string(Monomial()) == "1");
}

TEST_CASE("polynomial parsing and printing") {
    Poly p = parse_polynomial("x*y - 3/2*z^2");
    CHECK(p.degree() == 2);
    CHECK(p.to_string() == "z0*z1 - 3/2*z2^2");
    CHECK(parse_polynomial("(z0+z1)^2").to_string() == "z0^2 + 2*z0*z1 + z1^2");
    CHECK(parse_polynomial("-z3").to_string() == "-z3");
    Poly z = parse_polynomial("z0*z2 - z0*z2");
    CHECK(z.is_zero());
    CHECK(z.degree() == 2);
    CHECK_THROWS_AS(parse_polynomial("z0 + z1^2"), Error);
    CHECK_THROWS_AS(parse_polynomial("z0 +"), Error);
    CHECK_THROWS_AS(parse_polynomial("w1"), Error);
    try {
        parse_polynomial("z0 + z1^2");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotHomogeneous);
    }
    auto list = parse_polynomial_list("z0, z1*z2");
    REQUIRE(list.size() == 2);
    CHECK(list[1].degree() == 2);
}

TEST_CASE("polynomial arithmetic") {
    Poly a = parse_polynomial("z0 + z1"), b = parse_polynomial("z0 - z1");
    CHECK((a * b) == parse_polynomial("z0^2 - z1^2"));
    CHECK((a - a).is_zero());
    CHECK_THROWS_AS(a += parse_polynomial("z0^2"), Error);
    Poly f = parse_polynomial("z0^3*z1 + 2*z2^4");
    CHECK(f.derivative(0) == parse_polynomial("3*z0^2*z1"));
    CHECK(f.derivative(3).is_zero());
    CHECK(f.derivative(3).degree() == 3);
    CHECK(parse_polynomial("2/3*z0 + 4/3*z1").primitive() == parse_polynomial("z0 + 2*z1"));
    CHECK(parse_polynomial("2*z0 + 4*z1").monic() == parse_polynomial("z0 + 2*z1"));
    Poly g = parse_polynomial("z0*z3 - 7*z1^2 + z2*z3");
    CHECK(from_dense(2, to_dense(g)) == g);
}

namespace {

// Fraction-free elimination as an independent rank oracle.
long bareiss_rank(std::vector<std::vector<Integer>> a) {
    if (a.empty()) return 0;
    int n = a.size(), m = a[0].size();
    long r = 0;
    Integer prev = 1;
    for (int c = 0; c < m && r < n; ++c) {
        int p = -1;
        for (int i = r; i < n; ++i)
            if (a[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[p], a[r]);
        for (int i = r + 1; i < n; ++i) {
            for (int j = c + 1; j < m; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

}  // namespace

TEST_CASE("rank agrees across the dense, sparse, modular and Bareiss routes") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coef(-3, 3), shape(1, 7), zero(0, 2);
    for (int trial = 0; trial < 60; ++trial) {
        int n = shape(rng), m = shape(rng);
        std::vector<std::vector<Integer>> ints(n, std::vector<Integer>(m));
        std::vector<Vector> rows(n, Vector(m));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) {
                int v = zero(rng) == 0 ? 0 : coef(rng);
                ints[i][j] = v;
                rows[i][j] = v;
            }
        // force some dependency
        if (n > 2) {
            for (int j = 0; j < m; ++j) {
                rows[n - 1][j] = rows[0][j] - 2 * rows[1][j];
                ints[n - 1][j] = ints[0][j] - 2 * ints[1][j];
            }
        }
        long expect = bareiss_rank(ints);
        auto M = ExactMatrix::from_rows(rows, m);
        CHECK(M.rank() == expect);
        std::vector<SparseVec> sv;
        for (auto& r : rows) sv.push_back(to_sparse(r));
        CHECK(sparse_rank(sv) == expect);
        CHECK(rank_mod_p(sv, m, 2147483647u) == expect);

        auto K = M.kernel_basis();
        CHECK(long(K.size()) == m - expect);
        for (auto& k : K)
            for (auto& x : M.apply(k)) CHECK(x == 0);

        // sparse_kernel takes columns: use the rows of M as columns of M^T.
        auto SK = sparse_kernel(sv);
        CHECK(long(SK.size()) == n - expect);
        for (auto& k : SK) {
            Vector acc(m);
            for (auto& [idx, c] : k)
                for (int j = 0; j < m; ++j) acc[j] += c * rows[idx][j];
            for (auto& x : acc) CHECK(x == 0);
        }
    }
}

TEST_CASE("sparse echelon incremental insert") {
    SparseEchelon E;
    CHECK(E.insert(to_sparse({1, 2, 0})));
    CHECK(E.insert(to_sparse({0, 1, 1})));
    CHECK_FALSE(E.insert(to_sparse({2, 5, 1})));
    CHECK(E.reduce(to_sparse({1, 3, 1})).empty());
    CHECK(E.rank() == 2);
}

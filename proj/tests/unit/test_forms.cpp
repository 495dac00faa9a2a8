#include "doctest.h"

#include "fol/errors.hpp"
#include "fol/forms.hpp"
#include "fol/hilbert.hpp"
#include "fol/parse.hpp"
#include "fol/rao.hpp"

using namespace fol;

namespace {

TwistedForm random_form(FormSampler& s, int q, int e) {
    TwistedForm w(q, e);
    for (Covector c = 0; c <= kVolume; ++c)
        if (covector_degree(c) == q) w.add(c, s.polynomial(e));
    return w;
}

}  // namespace

TEST_CASE("parse and print forms") {
    auto w = parse_form("z0*dz1 - z1*dz0");
    CHECK(w.form_degree() == 1);
    CHECK(w.coefficient_degree() == 1);
    CHECK(w.twist() == 2);
    CHECK(w.to_string() == "z0*dz1 - z1*dz0");
    CHECK(parse_form("dz0^dz1") == parse_form("dz0/\\dz1"));
    CHECK(parse_form("dz1^dz0") == -parse_form("dz0/\\dz1"));
    CHECK(parse_form("z0^2*dz3").to_string() == "z0^2*dz3");
    CHECK(parse_form("(z0 + z1)^2").form_degree() == 0);
    CHECK(parse_form("dx/\\dt") == parse_form("dz0/\\dz3"));
    CHECK(parse_form("dz0/\\dz0").is_zero());
    CHECK(parse_form("2*dz0/\\dz1").to_string() == "2*dz0/\\dz1");
    CHECK_THROWS_AS(parse_form("dz0 + dz0/\\dz1"), Error);
    CHECK_THROWS_AS(parse_form("z0*dz1 + dz2"), Error);
    CHECK_THROWS_AS(parse_form("dz0*dz1"), Error);
    CHECK_THROWS_AS(parse_form("dz0^2"), Error);
    CHECK_THROWS_AS(parse_form("dz0^dz1^dz2^dz3^dz0"), Error);
}

TEST_CASE("pencil wedge contact is the degree one example") {
    TwistedForm w = wedge(pencil_form(), standard_contact_form());
    CHECK(w.to_string() == "z0*z2*dz1/\\dz3 - z0*z3*dz1/\\dz2 - z1*z2*dz0/\\dz3 + z1*z3*dz0/\\dz2");
    CHECK(is_projective(w));
    CHECK(is_decomposable(w));
    auto I = singular_ideal(w);
    CHECK(hilbert_polynomial(I).to_string() == "2t + 2");
    CHECK(curve_invariants(I).degree == 2);
    CHECK(curve_invariants(I).genus == -1);

    auto fp = legendrian_foliation(standard_contact_form(), pencil_form());
    CHECK(fp.degree == 1);
    REQUIRE(fp.conormal);
    CHECK(*fp.conormal == std::make_pair(-2, -2));
    auto rao = rao_module_dimensions(fp.singular);
    CHECK(rao.total == 1);
    CHECK(rao.profile == std::map<int, long>{{0, 1}});
}

TEST_CASE("small identities") {
    auto w1 = pencil_form();
    CHECK(wedge(w1, w1).is_zero());
    CHECK(radial_contraction(w1).is_zero());
    CHECK(radial_contraction(parse_form("dz0")) == parse_form("z0"));
    CHECK(is_projective(standard_contact_form()));
    CHECK_FALSE(is_projective(parse_form("dz0")));
    CHECK(is_contact(standard_contact_form()));
    CHECK_FALSE(is_contact(pencil_form()));
    CHECK_FALSE(is_decomposable(parse_form("dz0/\\dz1 + dz2/\\dz3")));
    CHECK(wedge(parse_form("dz0/\\dz1 + dz2/\\dz3"), parse_form("dz0/\\dz1 + dz2/\\dz3")) ==
          parse_form("2*dz0/\\dz1/\\dz2/\\dz3"));
    CHECK(is_decomposable(TwistedForm(2, 3)));
    CHECK_THROWS_AS(is_decomposable(w1), Error);
    CHECK_THROWS_AS(singular_ideal(TwistedForm(2, 1)), Error);
    CHECK_THROWS_AS(wedge(parse_form("dz0/\\dz1/\\dz2"), parse_form("dz1/\\dz3")), Error);
    CHECK_THROWS_AS(legendrian_foliation(standard_contact_form(), standard_contact_form().times(parse_polynomial("z1"))),
                    Error);
    CHECK_THROWS_AS(legendrian_foliation(standard_contact_form(), parse_form("dz0")), Error);
}

TEST_CASE("vector fields to two-forms") {
    std::array<Poly, 4> R{Poly::var(0), Poly::var(1), Poly::var(2), Poly::var(3)};
    CHECK(vector_field_to_twoform(R).is_zero());
    std::array<Poly, 4> c{Poly::zero(0), Poly::zero(0), Poly::zero(0), Poly::constant(1)};
    auto w = vector_field_to_twoform(c);
    CHECK(w.coefficient_degree() == 1);
    for (const auto& [cv, f] : w.coefficients()) CHECK((cv & 0b1000) == 0);
    FormSampler s(11);
    for (int trial = 0; trial < 10; ++trial) {
        std::array<Poly, 4> v{s.polynomial(2), s.polynomial(2), s.polynomial(2), s.polynomial(2)};
        auto a = vector_field_to_twoform(v);
        CHECK(is_projective(a));
        CHECK(is_decomposable(a));
        Poly f = s.polynomial(1);
        std::array<Poly, 4> vf;
        for (int i = 0; i < 4; ++i) vf[i] = v[i] + f * R[i];
        CHECK(vector_field_to_twoform(vf) == a);
    }
}

TEST_CASE("wedge laws and Leibniz on random forms") {
    FormSampler s(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_form(s, 1, 1), b = random_form(s, 1, 2), c = random_form(s, 2, 1);
        CHECK(wedge(a, b) == -wedge(b, a));
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
        CHECK(wedge(a, c) == wedge(c, a));
        for (auto [x, y] : {std::pair{a, c}, std::pair{c, b}, std::pair{a, b}}) {
            TwistedForm lhs = radial_contraction(wedge(x, y));
            TwistedForm rhs = wedge(radial_contraction(x), y);
            TwistedForm tail = wedge(x, radial_contraction(y));
            if (x.form_degree() % 2) rhs -= tail;
            else rhs += tail;
            CHECK(lhs == rhs);
        }
        CHECK(exterior_derivative(exterior_derivative(c)).is_zero());
    }
}

TEST_CASE("samples are projective and deterministic") {
    FormSampler a(5), b(5);
    for (int e = 1; e <= 3; ++e) {
        auto w = a.projective_one_form(e);
        CHECK(w.coefficient_degree() == e);
        CHECK(is_projective(w));
        CHECK(w == b.projective_one_form(e));
    }
}

TEST_CASE("pencil invariance of the singular ideal") {
    FormSampler s(17);
    auto a = s.projective_one_form(1), b = s.projective_one_form(2);
    Poly f = s.polynomial(1);
    auto I = singular_ideal(wedge(a, b));
    auto J = singular_ideal(wedge(a, b + a.times(f)));
    for (const auto& g : I.generators()) CHECK(J.contains(g));
    for (const auto& g : J.generators()) CHECK(I.contains(g));
}

TEST_CASE("degree two legendrian sample") {
    FormSampler s(2024);
    auto fp = sample_legendrian(2, s);
    CHECK(fp.degree == 2);
    CHECK(*fp.conormal == std::make_pair(-2, -3));
    auto inv = curve_invariants(fp.singular);
    CHECK(inv.degree == 5);
    CHECK(inv.genus == 1);
    CHECK(rao_module_dimensions(fp.singular).total == 1);
}

#pragma once

#include "fol/monomial.hpp"
#include "fol/rational.hpp"

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace fol {

struct Term {
    Monomial m;
    Rational c;
};

// Homogeneous polynomial in z0..z3 over Q. Terms are kept in descending
// degrevlex order with nonzero coefficients; the zero polynomial keeps its
// degree tag.
class HomogeneousPolynomial {
public:
    HomogeneousPolynomial() = default;
    explicit HomogeneousPolynomial(int degree) : degree_(degree) {}

    // Terms may be unsorted and contain repeats; they must all have `degree`.
    HomogeneousPolynomial(int degree, std::vector<Term> terms);

    static HomogeneousPolynomial zero(int degree) { return HomogeneousPolynomial(degree); }
    static HomogeneousPolynomial constant(const Rational& c);
    static HomogeneousPolynomial monomial(const Monomial& m, const Rational& c = 1);
    static HomogeneousPolynomial var(int i) { return monomial(Monomial::var(i)); }

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Require !is_zero().
    const Monomial& lead_monomial() const { return terms_.front().m; }
    const Rational& lead_coefficient() const { return terms_.front().c; }

    Rational coefficient(const Monomial& m) const;

    HomogeneousPolynomial operator-() const;
    HomogeneousPolynomial& operator+=(const HomogeneousPolynomial& o);
    HomogeneousPolynomial& operator-=(const HomogeneousPolynomial& o);
    HomogeneousPolynomial& operator*=(const Rational& c);

    friend HomogeneousPolynomial operator+(HomogeneousPolynomial a, const HomogeneousPolynomial& b) {
        return a += b;
    }
    friend HomogeneousPolynomial operator-(HomogeneousPolynomial a, const HomogeneousPolynomial& b) {
        return a -= b;
    }
    friend HomogeneousPolynomial operator*(HomogeneousPolynomial a, const Rational& c) { return a *= c; }
    friend HomogeneousPolynomial operator*(const Rational& c, HomogeneousPolynomial a) { return a *= c; }
    friend HomogeneousPolynomial operator*(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b);

    HomogeneousPolynomial times(const Monomial& m, const Rational& c = 1) const;

    // d/dz_i; the result has degree-1 (or stays a degree-0 zero).
    HomogeneousPolynomial derivative(int i) const;

    HomogeneousPolynomial monic() const;

    // Divide out the gcd of numerators and lcm of denominators, positive lead.
    HomogeneousPolynomial primitive() const;

    bool operator==(const HomogeneousPolynomial& o) const;
    bool operator!=(const HomogeneousPolynomial& o) const { return !(*this == o); }

    // Canonical text form, e.g. "z0*z1 - 3/2*z2^2"; "0" for zero.
    std::string to_string() const;

private:
    void normalize();

    int degree_ = 0;
    std::vector<Term> terms_;
};

using Poly = HomogeneousPolynomial;

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

// Dense coordinates of p in the basis monomials_of_degree(p.degree()).
std::vector<Rational> to_dense(const Poly& p);
Poly from_dense(int degree, const std::vector<Rational>& v);

}  // namespace fol

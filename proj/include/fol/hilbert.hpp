#pragma once

#include "fol/groebner.hpp"

#include <string>
#include <vector>

namespace fol {

// Numerator N(t) of the Hilbert series N(t)/(1-t)^4 of S/M for a monomial ideal M.
std::vector<Integer> hilbert_series_numerator(const std::vector<Monomial>& gens);

// P(t) = sum_j coeffs[j] * C(t+j, j).
class HilbertPolynomial {
public:
    HilbertPolynomial() = default;
    HilbertPolynomial(std::vector<Rational> binomial_coefficients, long regularity_index)
        : coeffs_(std::move(binomial_coefficients)), reg_index_(regularity_index) {}

    static HilbertPolynomial from_numerator(const std::vector<Integer>& numerator);

    const std::vector<Rational>& binomial_coefficients() const { return coeffs_; }
    // Coefficients of 1, t, t^2, ...
    std::vector<Rational> power_coefficients() const;
    int degree() const;  // -1 for the zero polynomial
    Rational operator()(long k) const;
    // P(k) = dim (S/I)_k for every k >= regularity_index().
    long regularity_index() const { return reg_index_; }
    std::string to_string() const;

    bool operator==(const HilbertPolynomial& o) const { return power_coefficients() == o.power_coefficients(); }

private:
    std::vector<Rational> coeffs_;
    long reg_index_ = 0;
};

HilbertPolynomial hilbert_polynomial(const GradedIdeal& I);
HilbertPolynomial hilbert_polynomial_of_monomials(const std::vector<Monomial>& gens);

// dim (S/I)_k, exact for every k.
long hilbert_function(const GradedIdeal& I, long k);
long hilbert_function_of_numerator(const std::vector<Integer>& numerator, long k);

struct CurveInvariants {
    long degree;
    long genus;
};

// Requires a Hilbert polynomial of degree one: P(t) = a t + b gives (a, 1 - b).
CurveInvariants curve_invariants(const GradedIdeal& I);
CurveInvariants curve_invariants(const HilbertPolynomial& P);

}  // namespace fol

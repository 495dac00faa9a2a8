#pragma once

#include "fol/groebner.hpp"
#include "fol/polynomial.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>

namespace fol {

// Basis covector dz_{i1}^...^dz_{iq} as the bit set {i1, ..., iq}.
using Covector = unsigned;

constexpr Covector kVolume = 0b1111;

inline int covector_degree(Covector c) { return __builtin_popcount(c); }

// Differential q-form sum_I f_I dz_I on C^4 with homogeneous coefficients of a
// common degree. Zero coefficients are never stored.
class TwistedForm {
public:
    TwistedForm() = default;
    TwistedForm(int form_degree, int coefficient_degree);

    static TwistedForm scalar(const Poly& f);
    static TwistedForm basis(Covector c, const Poly& f);

    int form_degree() const { return q_; }
    int coefficient_degree() const { return cdeg_; }
    // The bundle twist: a q-form with degree-e coefficients is a section of Omega^q(e + q).
    int twist() const { return cdeg_ + q_; }

    const std::map<Covector, Poly>& coefficients() const { return coeffs_; }
    Poly coefficient(Covector c) const;
    bool is_zero() const { return coeffs_.empty(); }

    // Adds f dz_c; throws DegreeMismatch on a form or coefficient degree clash.
    void add(Covector c, const Poly& f);

    TwistedForm& operator+=(const TwistedForm& o);
    TwistedForm& operator-=(const TwistedForm& o);
    friend TwistedForm operator+(TwistedForm a, const TwistedForm& b) { return a += b; }
    friend TwistedForm operator-(TwistedForm a, const TwistedForm& b) { return a -= b; }
    TwistedForm operator-() const;

    // f * this
    TwistedForm times(const Poly& f) const;

    bool operator==(const TwistedForm& o) const;
    bool operator!=(const TwistedForm& o) const { return !(*this == o); }

    // Expanded into monomial terms, lex order on monomials, e.g.
    // "z0*z2*dz1/\dz3 - z0*z3*dz1/\dz2".
    std::string to_string() const;

private:
    int q_ = 0;
    int cdeg_ = 0;
    std::map<Covector, Poly> coeffs_;
};

// Sign of dz_a ^ dz_b relative to dz_{a|b}; 0 when a and b overlap.
int wedge_sign(Covector a, Covector b);

// Throws DegreeOverflow when the form degrees add up past 4.
TwistedForm wedge(const TwistedForm& a, const TwistedForm& b);

// Interior product with sum_i v_i d/dz_i; the v_i share a degree.
TwistedForm contraction(const std::array<Poly, 4>& v, const TwistedForm& w);

// Contraction with the Euler field sum_i z_i d/dz_i. Requires form_degree >= 1.
TwistedForm radial_contraction(const TwistedForm& w);

TwistedForm exterior_derivative(const TwistedForm& w);

bool is_projective(const TwistedForm& w);

// w ^ w == 0 for a 2-form (WrongFormDegree otherwise).
bool is_decomposable(const TwistedForm& w);

// Ideal of the coefficients of a nonzero 2-form.
GradedIdeal singular_ideal(const TwistedForm& w);

// i_v i_R (dz0^dz1^dz2^dz3); coefficient degree deg v + 1.
TwistedForm vector_field_to_twoform(const std::array<Poly, 4>& v);

// Form expressions: polynomial atoms, dz0..dz3 (or dx, dy, dz, dt), '*' and
// '/\' for products. '^' is an exponent after a scalar atom followed by a
// number and a wedge otherwise.
TwistedForm parse_form(const std::string& text);

// z0 dz1 - z1 dz0 + z2 dz3 - z3 dz2
TwistedForm standard_contact_form();
// z0 dz1 - z1 dz0
TwistedForm pencil_form();

// True when w is a linear projective 1-form with dw ^ w a nonzero constant
// multiple of i_R(vol).
bool is_contact(const TwistedForm& w);

struct FoliationPresentation {
    TwistedForm omega;  // defining 2-form
    int degree = 0;     // foliation degree d; omega has coefficient degree d + 1
    GradedIdeal singular;
    // N* = O(a) + O(b) when the 2-form is a wedge of two 1-forms.
    std::optional<std::pair<int, int>> conormal;
};

// The foliation cut out by two projective 1-forms a ^ b; conormal (-a.twist(), -b.twist()).
// Throws NotProjective, WrongFormDegree or ProportionalInput.
FoliationPresentation foliation_from_pair(const TwistedForm& a, const TwistedForm& b);

// As above with a checked contact form w0 (NotContact otherwise).
FoliationPresentation legendrian_foliation(const TwistedForm& w0, const TwistedForm& w);

// Deterministic sampler: integers uniform in [-9, 9] from a mt19937_64 stream.
class FormSampler {
public:
    explicit FormSampler(std::uint64_t seed) : rng_(seed) {}

    int integer();  // uniform in [-9, 9]
    Poly polynomial(int degree);
    // i_R of a random 2-form with coefficient degree e - 1; e >= 1.
    TwistedForm projective_one_form(int coefficient_degree);

private:
    std::mt19937_64 rng_;
};

// Legendrian foliation w2 ^ w with w random of coefficient degree d. Redraws
// up to 20 times while the singular ideal is not one-dimensional, then throws
// SamplingFailed. `draws` receives the number of draws used.
FoliationPresentation sample_legendrian(int d, FormSampler& sampler, int* draws = nullptr);

}  // namespace fol

#include "fol/hilbert.hpp"

#include "fol/errors.hpp"

#include <algorithm>

namespace fol {

namespace {

using Series = std::vector<Integer>;

void trim(Series& s) {
    while (s.size() > 1 && s.back() == 0) s.pop_back();
}

Series mul(const Series& a, const Series& b) {
    Series r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

void add_shifted(Series& acc, const Series& s, int shift, int sign) {
    if (acc.size() < s.size() + shift) acc.resize(s.size() + shift);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (sign > 0)
            acc[i + shift] += s[i];
        else
            acc[i + shift] -= s[i];
    }
    trim(acc);
}

bool pairwise_coprime(const std::vector<Monomial>& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (!coprime(g[i], g[j])) return false;
    return true;
}

// Numerator of the Hilbert series of S/(gens); gens minimal.
Series numerator(std::vector<Monomial> gens) {
    if (gens.empty()) return {1};
    if (pairwise_coprime(gens)) {
        Series r{1};
        for (const auto& m : gens) {
            Series f(m.degree() + 1);
            f[0] = 1;
            f[m.degree()] -= 1;
            r = mul(r, f);
        }
        return r;
    }
    // Pivot on a variable shared by the most generators, at the smallest
    // positive exponent among them: N(M) = N(M + (p)) + t^deg(p) N(M : p).
    int best_var = 0, best_count = -1;
    for (int v = 0; v < kVars; ++v) {
        int count = 0;
        for (const auto& m : gens)
            if (m.e[v] > 0) ++count;
        if (count > best_count) best_count = count, best_var = v;
    }
    int e = 0;
    for (const auto& m : gens)
        if (m.e[best_var] > 0 && (e == 0 || m.e[best_var] < e)) e = m.e[best_var];
    Monomial p = Monomial::var(best_var, e);

    std::vector<Monomial> plus{p};
    for (const auto& m : gens)
        if (!p.divides(m)) plus.push_back(m);
    std::vector<Monomial> colon;
    for (auto m : gens) {
        m.e[best_var] = static_cast<std::uint16_t>(std::max(0, m.e[best_var] - e));
        colon.push_back(m);
    }
    Series a = numerator(minimalize(plus));
    Series b = numerator(minimalize(colon));
    add_shifted(a, b, e, 1);
    return a;
}

Rational binom_at(long x, long j) {
    // C(x + j, j) as a polynomial in x
    return Rational(binomial(Integer(x + j), j));
}

}  // namespace

std::vector<Integer> hilbert_series_numerator(const std::vector<Monomial>& gens) {
    for (const auto& m : gens)
        if (m.degree() == 0) return {0};
    return numerator(minimalize(gens));
}

HilbertPolynomial HilbertPolynomial::from_numerator(const std::vector<Integer>& numerator) {
    Series q = numerator;
    trim(q);
    int r = 4;
    // Divide by (1 - t) while t = 1 is a root.
    auto value_at_one = [](const Series& s) {
        Integer v = 0;
        for (const auto& c : s) v += c;
        return v;
    };
    while (r > 0 && !(q.size() == 1 && q[0] == 0) && value_at_one(q) == 0) {
        Series d(q.size() - 1);
        Integer acc = 0;
        for (std::size_t i = 0; i + 1 < q.size(); ++i) {
            acc += q[i];
            d[i] = acc;
        }
        q = d.empty() ? Series{0} : d;
        trim(q);
        --r;
    }
    bool zero_q = q.size() == 1 && q[0] == 0;
    long deg_q = zero_q ? -1 : static_cast<long>(q.size()) - 1;
    long reg_index = std::max<long>(0, deg_q - r + 1);
    if (r == 0 || zero_q) return HilbertPolynomial({}, reg_index);
    // e_i = Q^{(i)}(1)/i!, coefficient of C(t+j, j) with j = r-1-i is (-1)^i e_i.
    std::vector<Rational> coeffs(r);
    for (int i = 0; i < r; ++i) {
        Integer e = 0;
        for (std::size_t k = 0; k < q.size(); ++k) e += binomial(Integer(static_cast<long>(k)), i) * q[k];
        coeffs[r - 1 - i] = Rational(i % 2 ? Integer(-e) : e);
    }
    return HilbertPolynomial(coeffs, reg_index);
}

std::vector<Rational> HilbertPolynomial::power_coefficients() const {
    // C(t+j, j) = prod_{m=1..j} (t+m)/m
    std::vector<Rational> out;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        std::vector<Rational> b{Rational(1)};
        for (std::size_t m = 1; m <= j; ++m) {
            std::vector<Rational> nb(b.size() + 1);
            for (std::size_t i = 0; i < b.size(); ++i) {
                nb[i + 1] += b[i] / Rational(long(m));
                nb[i] += b[i];
            }
            b = nb;
        }
        if (out.size() < b.size()) out.resize(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) out[i] += coeffs_[j] * b[i];
    }
    while (!out.empty() && sgn(out.back()) == 0) out.pop_back();
    return out;
}

int HilbertPolynomial::degree() const { return static_cast<int>(power_coefficients().size()) - 1; }

Rational HilbertPolynomial::operator()(long k) const {
    Rational v = 0;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) v += coeffs_[j] * binom_at(k, static_cast<long>(j));
    return v;
}

std::string HilbertPolynomial::to_string() const {
    auto pc = power_coefficients();
    if (pc.empty()) return "0";
    std::string s;
    for (int i = static_cast<int>(pc.size()) - 1; i >= 0; --i) {
        if (sgn(pc[i]) == 0) continue;
        Rational c = pc[i];
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (i == 0 || c != 1) s += fol::to_string(c);
        if (i > 0) s += (i == 1) ? "t" : "t^" + std::to_string(i);
    }
    return s;
}

HilbertPolynomial hilbert_polynomial_of_monomials(const std::vector<Monomial>& gens) {
    return HilbertPolynomial::from_numerator(hilbert_series_numerator(gens));
}

HilbertPolynomial hilbert_polynomial(const GradedIdeal& I) { return hilbert_polynomial_of_monomials(I.lead_terms()); }

long hilbert_function_of_numerator(const std::vector<Integer>& numerator, long k) {
    if (k < 0) return 0;
    Integer v = 0;
    for (std::size_t i = 0; i < numerator.size() && static_cast<long>(i) <= k; ++i)
        v += numerator[i] * graded_piece_dimension(k - static_cast<long>(i));
    return v.get_si();
}

long hilbert_function(const GradedIdeal& I, long k) {
    return hilbert_function_of_numerator(hilbert_series_numerator(I.lead_terms()), k);
}

CurveInvariants curve_invariants(const HilbertPolynomial& P) {
    auto pc = P.power_coefficients();
    if (pc.size() != 2)
        fail(ErrorKind::NotACurve, "Hilbert polynomial " + P.to_string() + " does not have degree 1");
    if (!is_integer(pc[0]) || !is_integer(pc[1]))
        fail(ErrorKind::NotACurve, "Hilbert polynomial " + P.to_string() + " has non-integral coefficients");
    return {to_long(pc[1]), 1 - to_long(pc[0])};
}

CurveInvariants curve_invariants(const GradedIdeal& I) { return curve_invariants(hilbert_polynomial(I)); }

}  // namespace fol

#include "fol/polynomial.hpp"

#include "fol/errors.hpp"

#include <algorithm>

namespace fol {

HomogeneousPolynomial::HomogeneousPolynomial(int degree, std::vector<Term> terms)
    : degree_(degree), terms_(std::move(terms)) {
    for (const auto& t : terms_)
        if (t.m.degree() != degree_)
            fail(ErrorKind::NotHomogeneous, "term " + fol::to_string(t.m) + " has degree " +
                                                std::to_string(t.m.degree()) + ", expected " +
                                                std::to_string(degree_));
    normalize();
}

void HomogeneousPolynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.m.key() > b.m.key(); });
    std::size_t w = 0;
    for (std::size_t r = 0; r < terms_.size();) {
        Term t = std::move(terms_[r]);
        std::size_t s = r + 1;
        while (s < terms_.size() && terms_[s].m == t.m) t.c += terms_[s++].c;
        r = s;
        if (sgn(t.c) != 0) terms_[w++] = std::move(t);
    }
    terms_.resize(w);
}

HomogeneousPolynomial HomogeneousPolynomial::constant(const Rational& c) {
    HomogeneousPolynomial p(0);
    if (sgn(c) != 0) p.terms_.push_back({Monomial(), c});
    return p;
}

HomogeneousPolynomial HomogeneousPolynomial::monomial(const Monomial& m, const Rational& c) {
    HomogeneousPolynomial p(m.degree());
    if (sgn(c) != 0) p.terms_.push_back({m, c});
    return p;
}

Rational HomogeneousPolynomial::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m.key(),
                               [](const Term& t, std::uint64_t k) { return t.m.key() > k; });
    if (it != terms_.end() && it->m == m) return it->c;
    return 0;
}

HomogeneousPolynomial HomogeneousPolynomial::operator-() const {
    HomogeneousPolynomial r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

static std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].m.key() > b[j].m.key())) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].m.key() > a[i].m.key()) {
            out.push_back({b[j].m, sign > 0 ? b[j].c : Rational(-b[j].c)});
            ++j;
        } else {
            Rational c = sign > 0 ? Rational(a[i].c + b[j].c) : Rational(a[i].c - b[j].c);
            if (sgn(c) != 0) out.push_back({a[i].m, std::move(c)});
            ++i, ++j;
        }
    }
    return out;
}

static void check_same_degree(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
    if (a.degree() != b.degree())
        fail(ErrorKind::DegreeMismatch, "cannot add polynomials of degree " + std::to_string(a.degree()) +
                                            " and " + std::to_string(b.degree()));
}

HomogeneousPolynomial& HomogeneousPolynomial::operator+=(const HomogeneousPolynomial& o) {
    check_same_degree(*this, o);
    terms_ = merge_terms(terms_, o.terms_, 1);
    return *this;
}

HomogeneousPolynomial& HomogeneousPolynomial::operator-=(const HomogeneousPolynomial& o) {
    check_same_degree(*this, o);
    terms_ = merge_terms(terms_, o.terms_, -1);
    return *this;
}

HomogeneousPolynomial& HomogeneousPolynomial::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.c *= c;
    return *this;
}

HomogeneousPolynomial operator*(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
    std::vector<Term> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) prod.push_back({s.m * t.m, s.c * t.c});
    return HomogeneousPolynomial(a.degree_ + b.degree_, std::move(prod));
}

HomogeneousPolynomial HomogeneousPolynomial::times(const Monomial& m, const Rational& c) const {
    HomogeneousPolynomial r(degree_ + m.degree());
    if (sgn(c) == 0) return r;
    r.terms_.reserve(terms_.size());
    // Multiplying by a monomial preserves degrevlex order.
    for (const auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
    return r;
}

HomogeneousPolynomial HomogeneousPolynomial::derivative(int i) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.m.e[i] == 0) continue;
        Monomial m = t.m;
        m.e[i] -= 1;
        out.push_back({m, t.c * t.m.e[i]});
    }
    return HomogeneousPolynomial(std::max(degree_ - 1, 0), std::move(out));
}

HomogeneousPolynomial HomogeneousPolynomial::monic() const {
    if (is_zero()) return *this;
    HomogeneousPolynomial r = *this;
    Rational inv = 1 / lead_coefficient();
    for (auto& t : r.terms_) t.c *= inv;
    return r;
}

HomogeneousPolynomial HomogeneousPolynomial::primitive() const {
    if (is_zero()) return *this;
    Integer g = 0, l = 1;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den_mpz_t());
    }
    Rational scale(l, g);
    if (sgn(lead_coefficient()) < 0) scale = -scale;
    return *this * scale;
}

bool HomogeneousPolynomial::operator==(const HomogeneousPolynomial& o) const {
    if (degree_ != o.degree_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

std::string HomogeneousPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.c;
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) s += '-';
        } else {
            s += neg ? " - " : " + ";
        }
        first = false;
        bool unit_mono = t.m.degree() == 0;
        if (c != 1 || unit_mono) {
            s += fol::to_string(c);
            if (!unit_mono) s += '*';
        }
        if (!unit_mono) s += fol::to_string(t.m);
    }
    return s;
}

std::vector<Rational> to_dense(const Poly& p) {
    std::vector<Rational> v(graded_piece_dimension(p.degree()));
    for (const auto& t : p.terms()) v[monomial_index(t.m)] = t.c;
    return v;
}

Poly from_dense(int degree, const std::vector<Rational>& v) {
    auto basis = monomials_of_degree(degree);
    std::vector<Term> terms;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) terms.push_back({basis[i], v[i]});
    return Poly(degree, std::move(terms));
}

}  // namespace fol

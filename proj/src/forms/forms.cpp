#include "fol/forms.hpp"

#include "fol/errors.hpp"
#include "fol/hilbert.hpp"
#include "fol/parse.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>
#include <vector>

namespace fol {

TwistedForm::TwistedForm(int form_degree, int coefficient_degree) : q_(form_degree), cdeg_(coefficient_degree) {
    if (form_degree < 0 || form_degree > 4) fail(ErrorKind::DegreeOverflow, "form degree must lie in 0..4");
}

TwistedForm TwistedForm::scalar(const Poly& f) { return basis(0, f); }

TwistedForm TwistedForm::basis(Covector c, const Poly& f) {
    TwistedForm w(covector_degree(c), f.degree());
    w.add(c, f);
    return w;
}

Poly TwistedForm::coefficient(Covector c) const {
    auto it = coeffs_.find(c);
    return it == coeffs_.end() ? Poly::zero(cdeg_) : it->second;
}

void TwistedForm::add(Covector c, const Poly& f) {
    if (c > kVolume || covector_degree(c) != q_)
        fail(ErrorKind::DegreeMismatch, "covector of degree " + std::to_string(covector_degree(c)) + " in a " +
                                            std::to_string(q_) + "-form");
    if (f.is_zero()) return;
    if (f.degree() != cdeg_)
        fail(ErrorKind::DegreeMismatch, "coefficient of degree " + std::to_string(f.degree()) +
                                            " in a form with coefficient degree " + std::to_string(cdeg_));
    auto [it, fresh] = coeffs_.try_emplace(c, f);
    if (!fresh) {
        it->second += f;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

TwistedForm& TwistedForm::operator+=(const TwistedForm& o) {
    if (o.is_zero()) return *this;
    if (is_zero() && q_ == o.q_) cdeg_ = o.cdeg_;
    if (o.q_ != q_ || o.cdeg_ != cdeg_) fail(ErrorKind::DegreeMismatch, "adding forms of different degrees");
    for (const auto& [c, f] : o.coeffs_) add(c, f);
    return *this;
}

TwistedForm& TwistedForm::operator-=(const TwistedForm& o) { return *this += -o; }

TwistedForm TwistedForm::operator-() const {
    TwistedForm r = *this;
    for (auto& [c, f] : r.coeffs_) f = -f;
    return r;
}

TwistedForm TwistedForm::times(const Poly& f) const {
    TwistedForm r(q_, cdeg_ + f.degree());
    for (const auto& [c, g] : coeffs_) r.add(c, f * g);
    return r;
}

bool TwistedForm::operator==(const TwistedForm& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero() && q_ == o.q_;
    return q_ == o.q_ && cdeg_ == o.cdeg_ && coeffs_ == o.coeffs_;
}

namespace {

bool lex_greater(const Monomial& a, const Monomial& b) { return a.e > b.e; }

std::string covector_string(Covector c) {
    std::string s;
    for (int i = 0; i < 4; ++i) {
        if (!(c >> i & 1)) continue;
        if (!s.empty()) s += "/\\";
        s += "dz" + std::to_string(i);
    }
    return s;
}

}  // namespace

std::string TwistedForm::to_string() const {
    struct Item {
        Monomial m;
        Covector c;
        Rational coef;
    };
    std::vector<Item> items;
    for (const auto& [c, f] : coeffs_)
        for (const auto& t : f.terms()) items.push_back({t.m, c, t.c});
    if (items.empty()) return "0";
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        if (a.m != b.m) return lex_greater(a.m, b.m);
        return a.c < b.c;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& it : items) {
        bool neg = sgn(it.coef) < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        Rational a = abs(it.coef);
        std::vector<std::string> parts;
        bool bare = it.m.degree() == 0 && it.c == 0;
        if (a != 1 || bare) parts.push_back(fol::to_string(a));
        if (it.m.degree() > 0) parts.push_back(fol::to_string(it.m));
        if (it.c != 0) parts.push_back(covector_string(it.c));
        for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "*" : "") << parts[i];
    }
    return os.str();
}

int wedge_sign(Covector a, Covector b) {
    if (a & b) return 0;
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
        if (a >> i & 1) inversions += covector_degree(b & ((1u << i) - 1));
    return inversions % 2 ? -1 : 1;
}

TwistedForm wedge(const TwistedForm& a, const TwistedForm& b) {
    int q = a.form_degree() + b.form_degree();
    if (q > 4)
        fail(ErrorKind::DegreeOverflow, "wedge of a " + std::to_string(a.form_degree()) + "-form and a " +
                                            std::to_string(b.form_degree()) + "-form exceeds degree 4");
    TwistedForm r(q, a.coefficient_degree() + b.coefficient_degree());
    for (const auto& [ca, fa] : a.coefficients())
        for (const auto& [cb, fb] : b.coefficients()) {
            int s = wedge_sign(ca, cb);
            if (s == 0) continue;
            Poly p = fa * fb;
            if (s < 0) p = -p;
            r.add(ca | cb, p);
        }
    return r;
}

TwistedForm contraction(const std::array<Poly, 4>& v, const TwistedForm& w) {
    if (w.form_degree() < 1) fail(ErrorKind::WrongFormDegree, "cannot contract a 0-form");
    int e = v[0].degree();
    for (const auto& vi : v)
        if (vi.degree() != e) fail(ErrorKind::DegreeMismatch, "vector field components of different degrees");
    TwistedForm r(w.form_degree() - 1, w.coefficient_degree() + e);
    for (const auto& [c, f] : w.coefficients()) {
        int k = 0;
        for (int i = 0; i < 4; ++i) {
            if (!(c >> i & 1)) continue;
            Poly p = v[i] * f;
            if (k % 2) p = -p;
            r.add(c & ~(1u << i), p);
            ++k;
        }
    }
    return r;
}

TwistedForm radial_contraction(const TwistedForm& w) {
    return contraction({Poly::var(0), Poly::var(1), Poly::var(2), Poly::var(3)}, w);
}

TwistedForm exterior_derivative(const TwistedForm& w) {
    if (w.form_degree() >= 4) return TwistedForm(4, std::max(0, w.coefficient_degree() - 1));
    TwistedForm r(w.form_degree() + 1, std::max(0, w.coefficient_degree() - 1));
    for (const auto& [c, f] : w.coefficients())
        for (int j = 0; j < 4; ++j) {
            int s = wedge_sign(1u << j, c);
            if (s == 0) continue;
            Poly p = f.derivative(j);
            if (s < 0) p = -p;
            r.add(c | (1u << j), p);
        }
    return r;
}

bool is_projective(const TwistedForm& w) {
    if (w.form_degree() == 0) return true;
    return radial_contraction(w).is_zero();
}

bool is_decomposable(const TwistedForm& w) {
    if (w.form_degree() != 2) fail(ErrorKind::WrongFormDegree, "decomposability is tested on 2-forms");
    return wedge(w, w).is_zero();
}

GradedIdeal singular_ideal(const TwistedForm& w) {
    if (w.form_degree() != 2) fail(ErrorKind::WrongFormDegree, "the singular ideal is taken of a 2-form");
    if (w.is_zero()) fail(ErrorKind::ZeroForm, "the zero 2-form has no singular ideal");
    std::vector<Poly> gens;
    for (const auto& [c, f] : w.coefficients()) gens.push_back(f);
    return GradedIdeal(std::move(gens));
}

TwistedForm vector_field_to_twoform(const std::array<Poly, 4>& v) {
    TwistedForm vol = TwistedForm::basis(kVolume, Poly::constant(1));
    return contraction(v, radial_contraction(vol));
}

// ---------------------------------------------------------------- parsing

namespace {

struct FormValue {
    std::map<Covector, SparsePoly> parts;
    std::optional<int> q;  // -1 once summands of different form degree met

    static FormValue scalar(SparsePoly p) {
        FormValue v;
        v.parts[0] = std::move(p);
        v.q = 0;
        return v;
    }
    bool is_scalar() const { return q && *q == 0; }
};

void add_into(FormValue& acc, const FormValue& o, int sign) {
    for (const auto& [c, p] : o.parts) acc.parts[c].add(p, sign);
    if (!acc.q)
        acc.q = o.q;
    else if (o.q && *o.q != *acc.q)
        acc.q = -1;
}

FormValue product(const FormValue& a, const FormValue& b) {
    if (a.q && b.q && *a.q >= 0 && *b.q >= 0 && *a.q + *b.q > 4)
        fail(ErrorKind::DegreeOverflow, "product of forms exceeds degree 4");
    FormValue r;
    if (a.q && b.q) r.q = (*a.q < 0 || *b.q < 0) ? -1 : *a.q + *b.q;
    for (const auto& [ca, pa] : a.parts)
        for (const auto& [cb, pb] : b.parts) {
            int s = wedge_sign(ca, cb);
            if (s == 0) continue;
            r.parts[ca | cb].add(pa.mul(pb), s);
        }
    return r;
}

FormValue parse_form_expr(TokenStream& ts);

FormValue parse_form_atom(TokenStream& ts) {
    const Token& t = ts.peek();
    switch (t.kind) {
        case Token::Number: return FormValue::scalar(SparsePoly::constant(parse_rational(ts.next().text)));
        case Token::Variable: return FormValue::scalar(SparsePoly::variable(ts.next().var));
        case Token::Differential: {
            FormValue v;
            v.parts[1u << ts.next().var] = SparsePoly::constant(1);
            v.q = 1;
            return v;
        }
        case Token::LParen: {
            ts.next();
            FormValue v = parse_form_expr(ts);
            ts.expect(Token::RParen, "')'");
            return v;
        }
        default: ts.error("expected a variable, differential, number or '('");
    }
}

FormValue parse_form_factor(TokenStream& ts) {
    FormValue a = parse_form_atom(ts);
    if (ts.peek().kind == Token::Caret && ts.peek(1).kind == Token::Number) {
        if (!a.is_scalar()) ts.error("exponent applied to a differential form");
        ts.next();
        const Token& n = ts.peek();
        if (n.text.find('/') != std::string::npos || n.text.size() > 4) ts.error("expected a natural exponent");
        auto e = static_cast<unsigned>(std::stoul(ts.next().text));
        return FormValue::scalar(a.parts[0].pow(e));
    }
    return a;
}

FormValue parse_form_term(TokenStream& ts) {
    FormValue a = parse_form_factor(ts);
    for (;;) {
        Token::Kind k = ts.peek().kind;
        if (k != Token::Star && k != Token::Caret && k != Token::Wedge) return a;
        ts.next();
        FormValue b = parse_form_factor(ts);
        if (k == Token::Star && !a.is_scalar() && !b.is_scalar())
            ts.error("use '/\\' or '^' between two differential forms");
        a = product(a, b);
    }
}

FormValue parse_form_expr(TokenStream& ts) {
    int sign = 1;
    if (ts.accept(Token::Minus))
        sign = -1;
    else
        ts.accept(Token::Plus);
    FormValue acc;
    add_into(acc, parse_form_term(ts), sign);
    for (;;) {
        if (ts.accept(Token::Plus))
            add_into(acc, parse_form_term(ts), 1);
        else if (ts.accept(Token::Minus))
            add_into(acc, parse_form_term(ts), -1);
        else
            return acc;
    }
}

}  // namespace

TwistedForm parse_form(const std::string& text) {
    TokenStream ts(tokenize(text));
    FormValue v = parse_form_expr(ts);
    if (ts.peek().kind != Token::End) ts.error("unexpected trailing input");
    int q = v.q.value_or(0);
    if (q < 0) fail(ErrorKind::NotHomogeneous, "expression combines forms of different degrees");

    std::optional<int> cdeg;
    std::vector<std::pair<Covector, Poly>> coeffs;
    for (const auto& [c, p] : v.parts) {
        Poly f = p.to_homogeneous();
        if (f.is_zero()) {
            if (!cdeg && p.formal_degree && *p.formal_degree >= 0) cdeg = *p.formal_degree;
            continue;
        }
        coeffs.emplace_back(c, f);
    }
    if (!coeffs.empty()) cdeg = coeffs.front().second.degree();
    TwistedForm w(q, cdeg.value_or(0));
    for (const auto& [c, f] : coeffs) {
        if (f.degree() != *cdeg) fail(ErrorKind::NotHomogeneous, "form coefficients of different degrees");
        w.add(c, f);
    }
    return w;
}

TwistedForm standard_contact_form() { return parse_form("z0*dz1 - z1*dz0 + z2*dz3 - z3*dz2"); }

TwistedForm pencil_form() { return parse_form("z0*dz1 - z1*dz0"); }

bool is_contact(const TwistedForm& w) {
    if (w.form_degree() != 1 || w.coefficient_degree() != 1 || !is_projective(w)) return false;
    TwistedForm lhs = wedge(exterior_derivative(w), w);
    TwistedForm rv = radial_contraction(TwistedForm::basis(kVolume, Poly::constant(1)));
    if (lhs.is_zero()) return false;
    // lhs = lambda * rv; the z0 dz123 coefficient of rv is z0.
    Rational lambda = lhs.coefficient(0b1110).coefficient(Monomial::var(0));
    if (sgn(lambda) == 0) return false;
    return lhs == rv.times(Poly::constant(lambda));
}

FoliationPresentation foliation_from_pair(const TwistedForm& a, const TwistedForm& b) {
    if (a.form_degree() != 1 || b.form_degree() != 1)
        fail(ErrorKind::WrongFormDegree, "a foliation by curves needs two 1-forms");
    if (!is_projective(a) || !is_projective(b))
        fail(ErrorKind::NotProjective, "the radial contraction of an input 1-form does not vanish");
    FoliationPresentation fp;
    fp.omega = wedge(a, b);
    if (fp.omega.is_zero()) fail(ErrorKind::ProportionalInput, "the two 1-forms are proportional");
    fp.degree = fp.omega.coefficient_degree() - 1;
    fp.singular = singular_ideal(fp.omega);
    fp.conormal = std::make_pair(-a.twist(), -b.twist());
    return fp;
}

FoliationPresentation legendrian_foliation(const TwistedForm& w0, const TwistedForm& w) {
    if (w0.form_degree() == 1 && !is_projective(w0))
        fail(ErrorKind::NotProjective, "the contact form is not projective");
    if (!is_contact(w0)) fail(ErrorKind::NotContact, "dw0 ^ w0 is not a nonzero multiple of i_R(vol)");
    return foliation_from_pair(w0, w);
}

int FormSampler::integer() {
    constexpr std::uint64_t range = 19;
    constexpr std::uint64_t bound = ~std::uint64_t(0) / range * range;
    std::uint64_t r;
    do r = rng_();
    while (r >= bound);
    return static_cast<int>(r % range) - 9;
}

Poly FormSampler::polynomial(int degree) {
    std::vector<Term> ts;
    for (const auto& m : monomials_of_degree(degree)) {
        int c = integer();
        if (c != 0) ts.push_back({m, c});
    }
    return Poly(degree, std::move(ts));
}

TwistedForm FormSampler::projective_one_form(int e) {
    if (e < 1) fail(ErrorKind::InvalidArgument, "projective 1-forms need coefficient degree >= 1");
    for (;;) {
        TwistedForm beta(2, e - 1);
        for (Covector c = 0; c <= kVolume; ++c)
            if (covector_degree(c) == 2) beta.add(c, polynomial(e - 1));
        TwistedForm w = radial_contraction(beta);
        if (!w.is_zero()) return w;
    }
}

FoliationPresentation sample_legendrian(int d, FormSampler& sampler, int* draws) {
    const TwistedForm w0 = standard_contact_form();
    for (int attempt = 1; attempt <= 21; ++attempt) {
        TwistedForm w = sampler.projective_one_form(d);
        if (draws) *draws = attempt;
        if (wedge(w0, w).is_zero()) continue;
        FoliationPresentation fp = legendrian_foliation(w0, w);
        if (hilbert_polynomial(fp.singular).degree() == 1) return fp;
    }
    fail(ErrorKind::SamplingFailed, "no one-dimensional singular scheme after 20 redraws");
}

}  // namespace fol

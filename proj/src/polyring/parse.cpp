#include "fol/parse.hpp"

#include "fol/errors.hpp"

#include <cctype>

namespace fol {

namespace {

int alias_index(char c) {
    switch (c) {
        case 'x': return 0;
        case 'y': return 1;
        case 'z': return 2;
        case 't': return 3;
        default: return -1;
    }
}

// Reads a variable name starting at s[i]; returns its index and advances i.
int read_variable(const std::string& s, std::size_t& i) {
    if (s[i] == 'z' && i + 1 < s.size() && s[i + 1] >= '0' && s[i + 1] <= '3' &&
        !(i + 2 < s.size() && std::isalnum(static_cast<unsigned char>(s[i + 2])))) {
        int v = s[i + 1] - '0';
        i += 2;
        return v;
    }
    int v = alias_index(s[i]);
    if (v >= 0 && !(i + 1 < s.size() && std::isalnum(static_cast<unsigned char>(s[i + 1])))) {
        i += 1;
        return v;
    }
    return -1;
}

}  // namespace

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto err = [&](const std::string& msg) {
        fail(ErrorKind::SyntaxError, msg + " at position " + std::to_string(i) + " in '" + s + "'");
    };
    while (i < s.size()) {
        char c = s[i];
        std::size_t start = i;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i + 1 < s.size() && s[i] == '/' && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
                ++i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            }
            out.push_back({Token::Number, s.substr(start, i - start), -1, start});
            continue;
        }
        if (c == 'd' && i + 1 < s.size()) {
            std::size_t j = i + 1;
            int v = read_variable(s, j);
            if (v >= 0) {
                out.push_back({Token::Differential, s.substr(start, j - start), v, start});
                i = j;
                continue;
            }
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            int v = read_variable(s, j);
            if (v < 0) err("unknown identifier");
            out.push_back({Token::Variable, s.substr(start, j - start), v, start});
            i = j;
            continue;
        }
        Token::Kind k = Token::End;
        std::size_t len = 1;
        switch (c) {
            case '+': k = Token::Plus; break;
            case '-': k = Token::Minus; break;
            case '*': k = Token::Star; break;
            case '^': k = Token::Caret; break;
            case '(': k = Token::LParen; break;
            case ')': k = Token::RParen; break;
            case ',': k = Token::Comma; break;
            case '/':
                if (i + 1 < s.size() && s[i + 1] == '\\') {
                    k = Token::Wedge;
                    len = 2;
                    break;
                }
                err("unexpected '/'");
                break;
            default: err(std::string("unexpected character '") + c + "'");
        }
        out.push_back({k, s.substr(i, len), -1, start});
        i += len;
    }
    out.push_back({Token::End, "", -1, s.size()});
    return out;
}

const Token& TokenStream::peek(std::size_t ahead) const {
    std::size_t j = std::min(i_ + ahead, toks_.size() - 1);
    return toks_[j];
}

Token TokenStream::next() {
    Token t = toks_[i_];
    if (i_ + 1 < toks_.size()) ++i_;
    return t;
}

bool TokenStream::accept(Token::Kind k) {
    if (peek().kind != k) return false;
    next();
    return true;
}

void TokenStream::expect(Token::Kind k, const char* what) {
    if (!accept(k)) error(std::string("expected ") + what);
}

void TokenStream::error(const std::string& msg) const {
    const Token& t = peek();
    fail(ErrorKind::SyntaxError,
         msg + " at position " + std::to_string(t.pos) + (t.kind == Token::End ? " (end of input)" : " near '" + t.text + "'"));
}

SparsePoly SparsePoly::constant(const Rational& c) {
    SparsePoly p;
    if (sgn(c) != 0) {
        p.terms[Monomial()] = c;
        p.formal_degree = 0;
    }
    return p;
}

SparsePoly SparsePoly::variable(int i) {
    SparsePoly p;
    p.terms[Monomial::var(i)] = 1;
    p.formal_degree = 1;
    return p;
}

SparsePoly& SparsePoly::add(const SparsePoly& o, int sign) {
    for (const auto& [m, c] : o.terms) {
        Rational& slot = terms[m];
        if (sign > 0)
            slot += c;
        else
            slot -= c;
        if (sgn(slot) == 0) terms.erase(m);
    }
    if (!formal_degree)
        formal_degree = o.formal_degree;
    else if (o.formal_degree && *o.formal_degree != *formal_degree)
        formal_degree = -1;
    return *this;
}

SparsePoly SparsePoly::mul(const SparsePoly& o) const {
    SparsePoly r;
    for (const auto& [m1, c1] : terms)
        for (const auto& [m2, c2] : o.terms) {
            Rational& slot = r.terms[m1 * m2];
            slot += c1 * c2;
        }
    for (auto it = r.terms.begin(); it != r.terms.end();)
        it = sgn(it->second) == 0 ? r.terms.erase(it) : std::next(it);
    if (formal_degree && o.formal_degree)
        r.formal_degree = (*formal_degree < 0 || *o.formal_degree < 0) ? -1 : *formal_degree + *o.formal_degree;
    return r;
}

SparsePoly SparsePoly::pow(unsigned n) const {
    SparsePoly r = constant(1);
    for (unsigned k = 0; k < n; ++k) r = r.mul(*this);
    return r;
}

Poly SparsePoly::to_homogeneous() const {
    if (terms.empty()) {
        if (formal_degree && *formal_degree < 0)
            fail(ErrorKind::NotHomogeneous, "expression combines summands of different degrees");
        return Poly::zero(formal_degree.value_or(0));
    }
    int d = terms.begin()->first.degree();
    std::vector<Term> ts;
    for (const auto& [m, c] : terms) {
        if (m.degree() != d)
            fail(ErrorKind::NotHomogeneous, "mixed degrees " + std::to_string(d) + " and " + std::to_string(m.degree()));
        ts.push_back({m, c});
    }
    return Poly(d, std::move(ts));
}

namespace {

SparsePoly parse_term(TokenStream& ts);

SparsePoly parse_atom(TokenStream& ts) {
    const Token& t = ts.peek();
    if (t.kind == Token::Number) return SparsePoly::constant(parse_rational(ts.next().text));
    if (t.kind == Token::Variable) return SparsePoly::variable(ts.next().var);
    if (t.kind == Token::LParen) {
        ts.next();
        SparsePoly p = parse_sparse_expression(ts);
        ts.expect(Token::RParen, "')'");
        return p;
    }
    if (t.kind == Token::Differential) ts.error("differentials are not allowed in a polynomial");
    ts.error("expected a variable, number or '('");
}

unsigned parse_exponent(TokenStream& ts) {
    const Token& t = ts.peek();
    if (t.kind != Token::Number || t.text.find('/') != std::string::npos) ts.error("expected a natural exponent");
    std::string text = ts.next().text;
    if (text.size() > 4) ts.error("exponent too large");
    return static_cast<unsigned>(std::stoul(text));
}

SparsePoly parse_factor(TokenStream& ts) {
    SparsePoly a = parse_atom(ts);
    if (ts.accept(Token::Caret)) a = a.pow(parse_exponent(ts));
    return a;
}

SparsePoly parse_term(TokenStream& ts) {
    SparsePoly a = parse_factor(ts);
    while (ts.accept(Token::Star)) a = a.mul(parse_factor(ts));
    return a;
}

}  // namespace

SparsePoly parse_sparse_expression(TokenStream& ts) {
    int sign = 1;
    if (ts.accept(Token::Minus))
        sign = -1;
    else
        ts.accept(Token::Plus);
    SparsePoly acc;
    acc.add(parse_term(ts), sign);
    for (;;) {
        if (ts.accept(Token::Plus))
            acc.add(parse_term(ts), 1);
        else if (ts.accept(Token::Minus))
            acc.add(parse_term(ts), -1);
        else
            break;
    }
    return acc;
}

Poly parse_polynomial(const std::string& text) {
    TokenStream ts(tokenize(text));
    SparsePoly p = parse_sparse_expression(ts);
    if (ts.peek().kind != Token::End) ts.error("unexpected trailing input");
    return p.to_homogeneous();
}

std::vector<Poly> parse_polynomial_list(const std::string& text) {
    TokenStream ts(tokenize(text));
    std::vector<Poly> out;
    do {
        out.push_back(parse_sparse_expression(ts).to_homogeneous());
    } while (ts.accept(Token::Comma));
    if (ts.peek().kind != Token::End) ts.error("unexpected trailing input");
    return out;
}

}  // namespace fol

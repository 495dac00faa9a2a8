#pragma once

#include "fol/polynomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fol {

struct Token {
    enum Kind { Number, Variable, Differential, Plus, Minus, Star, Caret, Wedge, LParen, RParen, Comma, End };
    Kind kind;
    std::string text;
    int var = -1;  // variable index for Variable / Differential
    std::size_t pos = 0;
};

// Variables z0..z3 with aliases x,y,z,t; dz0..dz3 (and dx, dy, dz, dt) as
// differentials; "/\" is the ASCII wedge token.
std::vector<Token> tokenize(const std::string& text);

// Possibly inhomogeneous polynomial, used while parsing. `formal_degree` is the
// degree implied by the expression structure: unset for a bare zero literal,
// -1 when summands of different degrees were combined.
struct SparsePoly {
    std::map<Monomial, Rational, DegrevlexGreater> terms;
    std::optional<int> formal_degree;

    static SparsePoly constant(const Rational& c);
    static SparsePoly variable(int i);

    SparsePoly& add(const SparsePoly& o, int sign);
    SparsePoly mul(const SparsePoly& o) const;
    SparsePoly pow(unsigned n) const;

    // Throws NotHomogeneous when terms of different degrees remain.
    Poly to_homogeneous() const;
};

class TokenStream {
public:
    explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}
    const Token& peek(std::size_t ahead = 0) const;
    Token next();
    bool accept(Token::Kind k);
    void expect(Token::Kind k, const char* what);
    [[noreturn]] void error(const std::string& msg) const;

private:
    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

// expr := ['+'|'-'] term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := atom ('^' nat)?; atom := variable | rational | '(' expr ')'.
SparsePoly parse_sparse_expression(TokenStream& ts);

Poly parse_polynomial(const std::string& text);

// Comma separated list of polynomials.
std::vector<Poly> parse_polynomial_list(const std::string& text);

}  // namespace fol

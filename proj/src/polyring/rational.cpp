#include "fol/rational.hpp"

#include "fol/errors.hpp"

#include <cctype>

namespace fol {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
    auto digits = [](const std::string& s) {
        if (s.empty()) return false;
        for (char ch : s)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };
    std::string body = text;
    bool neg = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        neg = body[0] == '-';
        body = body.substr(1);
    }
    auto slash = body.find('/');
    std::string num = body.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
    if (!digits(num) || !digits(den)) fail(ErrorKind::SyntaxError, "malformed rational literal '" + text + "'");
    Integer n(num), d(den);
    if (d == 0) fail(ErrorKind::SyntaxError, "zero denominator in '" + text + "'");
    Rational q(n, d);
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

Integer binomial(const Integer& n, long k) {
    if (k < 0) return 0;
    Integer num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

long binomial_l(long n, long k) { return binomial(Integer(n), k).get_si(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long to_long(const Rational& q) { return q.get_num().get_si(); }

}  // namespace fol

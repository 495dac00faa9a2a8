#include "fol/monomial.hpp"

#include <algorithm>

namespace fol {

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kVars; ++i) r.e[i] = std::min(a.e[i], b.e[i]);
    return r;
}

long graded_piece_dimension(long k) {
    if (k < 0) return 0;
    return (k + 1) * (k + 2) * (k + 3) / 6;
}

std::vector<Monomial> monomials_of_degree(int k) {
    std::vector<Monomial> out;
    if (k < 0) return out;
    out.reserve(graded_piece_dimension(k));
    // Descending degrevlex is ascending lex on (e3, e2, e1).
    for (int e3 = 0; e3 <= k; ++e3)
        for (int e2 = 0; e2 <= k - e3; ++e2)
            for (int e1 = 0; e1 <= k - e3 - e2; ++e1) out.emplace_back(k - e3 - e2 - e1, e1, e2, e3);
    return out;
}

int monomial_index(const Monomial& m) {
    const int d = m.degree();
    const int e1 = m.e[1], e2 = m.e[2], e3 = m.e[3];
    int idx = 0;
    for (int j = 0; j < e3; ++j) {
        int r = d - j;
        idx += (r + 1) * (r + 2) / 2;
    }
    for (int i = 0; i < e2; ++i) idx += d - e3 - i + 1;
    return idx + e1;
}

std::string to_string(const Monomial& m) {
    std::string s;
    for (int i = 0; i < kVars; ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += 'z';
        s += char('0' + i);
        if (m.e[i] > 1) s += '^' + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace fol

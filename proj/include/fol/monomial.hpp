#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace fol {

constexpr int kVars = 4;

struct Monomial {
    std::array<std::uint16_t, kVars> e{};

    Monomial() = default;
    Monomial(int a, int b, int c, int d)
        : e{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
            static_cast<std::uint16_t>(c), static_cast<std::uint16_t>(d)} {}

    static Monomial var(int i, int power = 1) {
        Monomial m;
        m.e[i] = static_cast<std::uint16_t>(power);
        return m;
    }

    int degree() const { return e[0] + e[1] + e[2] + e[3]; }

    // Larger key means larger in degrevlex with z0 > z1 > z2 > z3.
    std::uint64_t key() const {
        return (std::uint64_t(degree()) << 48) | (std::uint64_t(0xFFFF - e[3]) << 32) |
               (std::uint64_t(0xFFFF - e[2]) << 16) | std::uint64_t(0xFFFF - e[1]);
    }

    std::uint64_t packed() const {
        return (std::uint64_t(e[0]) << 48) | (std::uint64_t(e[1]) << 32) |
               (std::uint64_t(e[2]) << 16) | std::uint64_t(e[3]);
    }

    bool divides(const Monomial& o) const {
        return e[0] <= o.e[0] && e[1] <= o.e[1] && e[2] <= o.e[2] && e[3] <= o.e[3];
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
        return r;
    }

    // Requires divides(o); returns o / *this.
    Monomial quotient_of(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kVars; ++i) r.e[i] = static_cast<std::uint16_t>(o.e[i] - e[i]);
        return r;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
inline bool coprime(const Monomial& a, const Monomial& b) { return gcd(a, b).degree() == 0; }

// -1, 0, 1 in degrevlex.
inline int compare(const Monomial& a, const Monomial& b) {
    auto ka = a.key(), kb = b.key();
    return ka < kb ? -1 : (ka > kb ? 1 : 0);
}

struct DegrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.key() > b.key(); }
};

// dim S_k = C(k+3, 3), zero for k < 0.
long graded_piece_dimension(long k);

// All monomials of degree k, descending degrevlex.
std::vector<Monomial> monomials_of_degree(int k);

// Position of m inside monomials_of_degree(m.degree()).
int monomial_index(const Monomial& m);

std::string to_string(const Monomial& m);

}  // namespace fol

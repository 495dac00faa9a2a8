#include "fol/sheafcoh.hpp"

#include "fol/errors.hpp"

namespace fol {

ChernTriple whitney_line_sum(const std::vector<int>& twists) {
    // coefficients of 1, h, h^2, h^3 in prod (1 + a h)
    std::array<long, 4> c{1, 0, 0, 0};
    for (int a : twists)
        for (int i = 3; i >= 1; --i) c[i] += a * c[i - 1];
    return {c[1], c[2], c[3]};
}

ChernTriple twisted_chern(int rank, const ChernTriple& c, long t) {
    if (rank == 1) return {c.c1 + t, c.c2, c.c3 - c.c2 * t};
    if (rank == 2) return {c.c1 + 2 * t, c.c2 + c.c1 * t + t * t, c.c3};
    fail(ErrorKind::UnsupportedRank, "Chern twisting is implemented for ranks 1 and 2, not " + std::to_string(rank));
}

SheafSymbol SheafSymbol::line_sum(std::vector<int> twists) {
    SheafSymbol s;
    s.rank = static_cast<int>(twists.size());
    s.chern = whitney_line_sum(twists);
    s.kind = SheafKind::LineSum;
    s.twists = std::move(twists);
    return s;
}

SheafSymbol SheafSymbol::cotangent() {
    SheafSymbol s;
    s.rank = 3;
    s.chern = whitney_line_sum({-1, -1, -1, -1});  // c(Omega^1) = (1 - h)^4
    s.kind = SheafKind::Cotangent;
    return s;
}

SheafSymbol SheafSymbol::null_correlation() {
    SheafSymbol s = instanton(1);
    s.kind = SheafKind::NullCorrelation;
    return s;
}

SheafSymbol SheafSymbol::instanton(int charge, std::optional<long> h0_E1) {
    if (charge < 1) fail(ErrorKind::InvalidProfile, "instanton charge must be positive");
    SheafSymbol s;
    s.rank = 2;
    s.chern = {0, charge, 0};
    s.kind = SheafKind::Instanton;
    s.charge = charge;
    s.h0_E1 = h0_E1;
    return s;
}

SheafSymbol SheafSymbol::generic(int rank, ChernTriple c) {
    if (rank < 1) fail(ErrorKind::InvalidArgument, "rank must be positive");
    SheafSymbol s;
    s.rank = rank;
    s.chern = c;
    return s;
}

namespace {

long integral_or_fail(const Rational& v) {
    if (!is_integer(v)) fail(ErrorKind::NonIntegralChern, "Chern data give the non-integral Euler characteristic " + to_string(v));
    return to_long(v);
}

void require_low_rank(int rank) {
    if (rank < 1 || rank > 2)
        fail(ErrorKind::UnsupportedRank, "Riemann-Roch is implemented for ranks 1 and 2, not " + std::to_string(rank));
}

// Degree-3 part of ch(E(t)) td(P^3), with td = 1 + 2h + 11/6 h^2 + h^3.
Rational hrr(int rank, const ChernTriple& c, long t) {
    Rational c1 = c.c1, c2 = c.c2, c3 = c.c3, T = t;
    Rational ch2 = (c1 * c1 - 2 * c2) / 2;
    Rational ch3 = (c1 * c1 * c1 - 3 * c1 * c2 + 3 * c3) / 6;
    Rational r_part = Rational(binomial(Integer(t + 3), 3)) * rank;
    return r_part + c1 * (T * T / 2 + 2 * T + Rational(11, 6)) + ch2 * (T + 2) + ch3;
}

}  // namespace

long euler_characteristic(int rank, const ChernTriple& c, long t) {
    require_low_rank(rank);
    return integral_or_fail(hrr(rank, c, t));
}

long euler_characteristic(const SheafSymbol& sym, long t) { return euler_characteristic(sym.rank, sym.chern, t); }

long euler_characteristic_by_twisting(int rank, const ChernTriple& c, long t) {
    require_low_rank(rank);
    return integral_or_fail(hrr(rank, twisted_chern(rank, c, t), 0));
}

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::ClosedForm: return "closed-form";
        case Provenance::ChiForced: return "chi-forced";
        case Provenance::Stated: return "stated";
        case Provenance::Input: return "input";
    }
    return "?";
}

long CohomologyTable::total(int i) const {
    long s = 0;
    for (const auto& [k, r] : rows) s += r.h[i];
    return s;
}

nlohmann::json CohomologyTable::to_json() const {
    nlohmann::json twists = nlohmann::json::object(), prov = nlohmann::json::object();
    for (const auto& [k, r] : rows) {
        twists[std::to_string(k)] = r.h;
        nlohmann::json tags = nlohmann::json::array();
        for (auto p : r.source) tags.push_back(provenance_name(p));
        prov[std::to_string(k)] = tags;
    }
    return {{"twists", twists}, {"provenance", prov}};
}

CohomologyRow line_bundle_cohomology(long a) {
    CohomologyRow r;
    if (a >= 0) r.h[0] = binomial_l(a + 3, 3);
    if (a <= -4) r.h[3] = binomial_l(-a - 1, 3);
    return r;
}

CohomologyRow cotangent_cohomology(int p, long k) {
    if (p != 1) fail(ErrorKind::UnsupportedFormIndex, "only Omega^1 is tabulated, not Omega^" + std::to_string(p));
    CohomologyRow r;
    if (k > 1) r.h[0] = binomial_l(k + 2, 2) * (k - 1);
    if (k == 0) r.h[1] = 1;
    // h^3(Omega^1(k)) = h^0(Omega^2(-k)) by Serre duality.
    if (k < -2) r.h[3] = binomial_l(1 - k, -k) * binomial_l(-k - 1, 2);
    return r;
}

long cotangent_euler_characteristic(long k) {
    // 0 -> Omega^1(k) -> O(k-1)^4 -> O(k) -> 0
    Integer v = 4 * binomial(Integer(k + 2), 3) - binomial(Integer(k + 3), 3);
    return v.get_si();
}

long instanton_euler_characteristic(int n, long k) { return 2 * binomial(Integer(k + 3), 3).get_si() - n * (k + 2); }

namespace {

long checked_h0_E1(int n, std::optional<long> h0_E1) {
    auto bad = [&](const std::string& why) {
        fail(ErrorKind::InvalidProfile, "charge " + std::to_string(n) + " instanton: " + why);
    };
    switch (n) {
        case 1:
        case 2: {
            long forced = n == 1 ? 5 : 2;
            if (h0_E1 && *h0_E1 != forced) bad("h^0(E(1)) is forced to be " + std::to_string(forced));
            return forced;
        }
        case 3:
            if (!h0_E1) bad("h^0(E(1)) must be given");
            if (*h0_E1 < 0 || *h0_E1 > 2) bad("h^0(E(1)) must lie in {0, 1, 2}");
            return *h0_E1;
        case 4:
            if (h0_E1 && *h0_E1 != 0) bad("only natural cohomology (h^0(E(1)) = 0) is tabulated");
            return 0;
        default: break;
    }
    bad("charges 1 to 4 are tabulated");
    return 0;
}

// Rows for k >= -2, where h^2 and h^3 vanish.
CohomologyRow instanton_upper_row(int n, long h0_E1, long k) {
    CohomologyRow r;
    long chi = instanton_euler_characteristic(n, k);
    if (k <= 0) {
        // h^0 = 0 by stability; h^1(E(-2)) = 0 is the instanton condition.
        r.h[1] = -chi;
        r.source[1] = k == -2 ? Provenance::ClosedForm : Provenance::ChiForced;
    } else if (k >= n - 1 || n == 4) {
        // n-regularity kills h^1 from k = n - 1 on; for the natural charge-4
        // profile the sign of chi decides which of h^0, h^1 survives.
        if (chi >= 0) {
            r.h[0] = chi;
            r.source[0] = Provenance::ChiForced;
        } else {
            r.h[1] = -chi;
            r.source[1] = Provenance::ChiForced;
        }
    } else {
        // n = 3, k = 1
        r.h[0] = h0_E1;
        r.source[0] = Provenance::Input;
        r.h[1] = h0_E1 - chi;
        r.source[1] = Provenance::ChiForced;
    }
    if (r.h[0] < 0 || r.h[1] < 0) fail(ErrorKind::InvalidProfile, "inputs are inconsistent with chi");

    bool stated = (n == 1 && (k == -1 || k == 1)) || (n == 2 && (k == -1 || k == 0 || k == 1)) ||
                  (n == 3 && k == 1) || (n == 4 && k >= -1 && k <= 1);
    if (stated) {
        for (int i = 0; i < 2; ++i)
            if (r.h[i] != 0 && r.source[i] != Provenance::Input) r.source[i] = Provenance::Stated;
    }
    return r;
}

}  // namespace

CohomologyRow instanton_cohomology(int n, std::optional<long> h0_E1, long k) {
    long h0 = checked_h0_E1(n, h0_E1);
    if (k >= -2) return instanton_upper_row(n, h0, k);
    // Serre duality with E* = E: h^i(E(k)) = h^{3-i}(E(-k-4)).
    CohomologyRow dual = instanton_upper_row(n, h0, -k - 4);
    CohomologyRow r;
    for (int i = 0; i < 4; ++i) {
        r.h[i] = dual.h[3 - i];
        r.source[i] = dual.source[3 - i];
    }
    return r;
}

CohomologyRow cohomology_row(const SheafSymbol& sym, long k) {
    switch (sym.kind) {
        case SheafKind::LineSum: {
            CohomologyRow r;
            for (int a : sym.twists) {
                CohomologyRow s = line_bundle_cohomology(a + k);
                for (int i = 0; i < 4; ++i) r.h[i] += s.h[i];
            }
            return r;
        }
        case SheafKind::Cotangent: return cotangent_cohomology(1, k);
        case SheafKind::NullCorrelation: return instanton_cohomology(1, std::nullopt, k);
        case SheafKind::Instanton: return instanton_cohomology(sym.charge, sym.h0_E1, k);
        case SheafKind::Generic: break;
    }
    fail(ErrorKind::InvalidArgument, "cohomology is not determined by Chern data alone");
}

CohomologyTable cohomology_table(const SheafSymbol& sym, long lo, long hi) {
    if (lo > hi) fail(ErrorKind::InvalidArgument, "empty twist range");
    CohomologyTable t;
    for (long k = lo; k <= hi; ++k) t.rows[static_cast<int>(k)] = cohomology_row(sym, k);
    return t;
}

long null_correlation_h0(long t) {
    if (t < 0) return 0;  // stability: h^0(N(t)) = 0 for t <= 0
    return 2 * binomial_l(t + 3, 3) - (t + 2);
}

long hom_lower_bound(long c2) {
    if (c2 < 1) fail(ErrorKind::InvalidArgument, "c2 must be at least 1");
    return 40 - 11 * c2;
}

}  // namespace fol

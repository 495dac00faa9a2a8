#include "fol/classify.hpp"

#include "fol/errors.hpp"
#include "fol/rational.hpp"
#include "fol/sheafcoh.hpp"

#include <algorithm>

namespace fol {

nlohmann::json FoliationInvariants::to_json() const {
    nlohmann::json j{{"d", d}, {"c1N", c1N}, {"c2N", c2N}, {"degree", degC}, {"locally_free", locally_free}};
    j["genus"] = paC ? nlohmann::json(*paC) : nlohmann::json(nullptr);
    j["c3"] = c3 ? nlohmann::json(*c3) : nlohmann::json(nullptr);
    return j;
}

FoliationInvariants invariants_from_c2(int d, long c2N, bool locally_free) {
    if (d < 1) fail(ErrorKind::InvalidArgument, "foliation degree must be at least 1");
    long lo = d + 2, hi = long(d) * d + 2 * d + (locally_free ? 1 : 3);
    if (c2N < lo || c2N > hi)
        fail(ErrorKind::OutOfBounds, "c2(N*) = " + std::to_string(c2N) + " violates " + std::to_string(lo) +
                                         " <= c2(N*) <= " + std::to_string(hi) + " for degree " + std::to_string(d) +
                                         (locally_free ? " with locally free conormal sheaf" : ""));
    FoliationInvariants inv;
    inv.d = d;
    inv.c1N = -3 - d;
    inv.c2N = c2N;
    inv.locally_free = locally_free;
    inv.degC = long(d) * d + 2 * d + 3 - c2N;
    if (locally_free) {
        long t = 3 * (d - 1) * c2N;
        if (t % 2 != 0)
            fail(ErrorKind::NonIntegralGenus, "p_a = d^3 + d^2 + d - 3(d-1)c2/2 - 4 is not an integer for d = " +
                                                  std::to_string(d) + ", c2(N*) = " + std::to_string(c2N));
        inv.paC = long(d) * d * d + long(d) * d + d - t / 2 - 4;
        inv.c3 = 0;
    }
    return inv;
}

std::pair<long, long> generic_invariants(long d) { return {d * d + 2 * d + 3, d * d * d + d * d + d + 1}; }

long isolated_count(long d, long degC, long chiOC) {
    long n = d * d * d + d * d + d + 1 - 3 * degC * (d - 1) - 2 * chiOC;
    if (n < 0)
        fail(ErrorKind::InconsistentTriple, "(d, deg C, chi(O_C)) = (" + std::to_string(d) + ", " + std::to_string(degC) +
                                                ", " + std::to_string(chiOC) + ") gives " + std::to_string(n) +
                                                " isolated singular points");
    return n;
}

nlohmann::json DiscrepancyFlag::to_json() const {
    return {{"claim", claim}, {"computed", computed}, {"stated", stated}, {"location", location}};
}

const char* verdict_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::Split: return "split";
        case VerdictKind::Instanton: return "instanton";
        case VerdictKind::StableRank2: return "stable_rank2";
        case VerdictKind::Impossible: return "impossible";
    }
    return "?";
}

nlohmann::json ClassificationReport::to_json() const {
    nlohmann::json v{{"kind", verdict_name(kind)}, {"constraints", constraints}};
    if (kind == VerdictKind::Split) v["conormal"] = {split.first, split.second};
    if (kind == VerdictKind::Instanton || kind == VerdictKind::StableRank2) v["charge"] = charge;
    if (kind == VerdictKind::Impossible) v["reason"] = reason;

    nlohmann::json j{{"d", d}, {"c2N", c2N}, {"reduced", reduced}, {"verdict", v}};
    j["curve"] = invariants ? invariants->to_json() : nlohmann::json(nullptr);
    auto opt = [](const std::optional<long>& x) { return x ? nlohmann::json(*x) : nlohmann::json(nullptr); };
    j["components"] = opt(components);
    j["dim_M"] = opt(dim_M);
    j["h0_OC"] = opt(h0_OC);
    nlohmann::json ps = nlohmann::json::array();
    for (const auto& p : profiles)
        ps.push_back({{"h0_E1", p.h0_E1},
                      {"dim_M", p.dim_M},
                      {"h0_OC", p.h0_OC},
                      {"components", p.components},
                      {"natural_cohomology", p.natural}});
    j["profiles"] = ps;
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : flags) fs.push_back(f.to_json());
    j["flags"] = fs;
    return j;
}

namespace {

InstantonProfile instanton_profile(int n, long h0_E1) {
    std::optional<long> in = n == 3 ? std::optional<long>(h0_E1) : std::nullopt;
    CohomologyTable t = cohomology_table(SheafSymbol::instanton(n, in), -n - 6, n + 6);
    InstantonProfile p;
    p.h0_E1 = t.rows.at(1).h[0];
    p.dim_M = t.total(1);
    p.h0_OC = sections_of_singular_scheme(n, p.h0_E1);
    p.components = t.rows.at(1).h[1] + 1;
    p.natural = n == 4;
    if (p.h0_OC != p.components)
        fail(ErrorKind::CrossCheckFailure, "h^0(O_C) and the component count disagree for charge " + std::to_string(n));
    return p;
}

ClassificationReport impossible(ClassificationReport r, std::string why) {
    r.kind = VerdictKind::Impossible;
    r.reason = std::move(why);
    return r;
}

DiscrepancyFlag genus_flag(std::pair<int, int> conormal, long degree, long computed, long stated) {
    std::string split = "O(" + std::to_string(conormal.first) + ")+O(" + std::to_string(conormal.second) + ")";
    DiscrepancyFlag f;
    f.claim = "the singular curve of a degree-3 foliation with conormal " + split + " has degree " +
              std::to_string(degree) + " and arithmetic genus " + std::to_string(stated);
    f.computed = computed;
    f.stated = stated;
    f.location = "degree-3 classification, split conormal " + split;
    return f;
}

}  // namespace

ClassificationReport assess_low_degree(int d, long c2N, bool reduced) {
    if (d < 1 || d > 3) fail(ErrorKind::InvalidArgument, "the low-degree classification covers d in {1, 2, 3}");
    ClassificationReport r;
    r.d = d;
    r.c2N = c2N;
    r.reduced = reduced;
    try {
        r.invariants = invariants_from_c2(d, c2N, true);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NonIntegralGenus) throw;
        return impossible(r, "c2(N*) must be even in degree 2, otherwise p_a = 10 - 3c2(N*)/2 is not an integer");
    }

    auto set_split = [&](int a, int b) {
        r.kind = VerdictKind::Split;
        r.split = {a, b};
        r.dim_M = 0;
        r.constraints.push_back("N* = O(" + std::to_string(a) + ") + O(" + std::to_string(b) +
                                ") is a global complete intersection; the Rao module is 1-dimensional");
    };

    if (d == 1) {
        if (c2N != 4)
            return impossible(r, "a degree-1 foliation of local complete intersection type has N* = O(-2)+O(-2), "
                                 "so c2(N*) = 4");
        set_split(-2, -2);
        r.components = 2;  // two skew lines
        r.h0_OC = 2;
        r.constraints.push_back("the singular scheme is two skew lines");
        return r;
    }

    if (d == 2) {
        if (c2N == 4)
            return impossible(r, "c2(N*) = 4: N* is not stable, and a section of N*(2) would vanish on a curve "
                                 "of negative degree");
        if (c2N == 8)
            return impossible(r, "c2(N*) = 8: N*(2) would be a stable bundle with (c1, c2) = (-1, 2), whose monad "
                                 "admits no foliation");
        set_split(-2, -3);
        r.components = connected_components(0, d);
        r.h0_OC = 1;
        return r;
    }

    // d = 3
    if (c2N < 8)
        return impossible(r, "in degree 3, N* is O(-2)+O(-4) (c2 = 8), O(-3)+O(-3) (c2 = 9) or stable with "
                             "10 <= c2(N*) <= 16");
    if (c2N == 8 || c2N == 9) {
        bool first = c2N == 8;
        set_split(first ? -2 : -3, first ? -4 : -3);
        r.components = connected_components(0, d);
        r.h0_OC = 1;
        r.flags.push_back(genus_flag(r.split, r.invariants->degC, *r.invariants->paC, first ? 5 : 3));
        return r;
    }
    if (c2N == 16 || c2N == 15)
        return impossible(r, "there are no degree-3 foliations of local complete intersection type with c2(N*) = " +
                                 std::to_string(c2N));

    long n = c2N - 9;
    r.charge = n;
    r.constraints.push_back("E = N*(3) is stable of rank 2 with c1(E) = 0 and 1 <= c2(E) <= 5");
    if (!reduced) {
        r.kind = VerdictKind::StableRank2;
        return r;
    }
    if (n == 5)
        return impossible(r, "c2(N*) = 14 with reduced singular scheme gives deg C = 4 and h^0(O_C) >= 8, which no "
                             "reduced curve satisfies");
    r.kind = VerdictKind::Instanton;
    r.constraints.push_back("E is an instanton bundle of charge " + std::to_string(n));
    r.constraints.push_back("the singular scheme is connected if and only if c2(E) is 1 or 2");
    std::vector<long> h0s;
    switch (n) {
        case 1: h0s = {5}; break;
        case 2: h0s = {2}; break;
        case 3:
            h0s = {0, 1};
            r.constraints.push_back("h^0(E(1)) <= 1, so E is not a special 't Hooft instanton");
            break;
        case 4:
            h0s = {0};
            r.constraints.push_back("E has natural cohomology; the singular scheme is five disjoint lines");
            break;
    }
    for (long h0 : h0s) r.profiles.push_back(instanton_profile(static_cast<int>(n), h0));
    if (r.profiles.size() == 1) {
        r.dim_M = r.profiles[0].dim_M;
        r.h0_OC = r.profiles[0].h0_OC;
        r.components = r.profiles[0].components;
    }
    return r;
}

ClassificationReport classify_low_degree(int d, long c2N, bool reduced) {
    ClassificationReport r = assess_low_degree(d, c2N, reduced);
    if (r.kind == VerdictKind::Impossible) fail(ErrorKind::Impossible, r.reason);
    return r;
}

long connected_components(long h2_value, long d) {
    if (d < 2) fail(ErrorKind::DegreeTooSmall, "the component count h^2(N*(1-d)) + 1 needs d >= 2");
    if (h2_value < 0) fail(ErrorKind::InvalidArgument, "h^2 must be non-negative");
    return h2_value + 1;
}

long sections_of_singular_scheme(long c2E, long h0E1) {
    if (c2E < 1 || c2E > 5) fail(ErrorKind::InvalidArgument, "c2(E) must lie in 1..5");
    return 3 * c2E - 7 + h0E1;
}

long legendrian_moduli_dim(long d) {
    if (d < 1) fail(ErrorKind::InvalidArgument, "legendrian foliations have degree at least 1");
    if (d == 1) return 8;
    return d * binomial_l(d + 3, 2) - binomial_l(d + 2, 3) + 4;
}

NcModuli nc_moduli_dim(long k) {
    if (k < 1) fail(ErrorKind::InvalidArgument, "k must be at least 1");
    NcModuli m;
    m.stated = 8 * binomial_l(k + 4, 3) - 2 * binomial_l(k + 5, 3) - 3 * k - 3;
    // ext^1(N, N) = 5; hom(N*, Omega^1) = 4 h^0(N(k+1)) - h^0(N(k+2)).
    long hom = 4 * null_correlation_h0(k + 1) - null_correlation_h0(k + 2);
    m.derived = 5 + hom - 1;
    m.flag = m.stated != m.derived;
    return m;
}

DiscrepancyFlag nc_moduli_flag(long k) {
    NcModuli m = nc_moduli_dim(k);
    DiscrepancyFlag f;
    f.claim = "foliations of degree 2k+1 with twisted null correlation conormal form a moduli space of dimension "
              "8C(k+4,3) - 2C(k+5,3) - 3k - 3";
    f.computed = m.derived;
    f.stated = m.stated;
    f.location = "null correlation moduli dimension, k = " + std::to_string(k);
    return f;
}

CurveDegreeGenus nc_curve_invariants(long k) {
    if (k < 1) fail(ErrorKind::InvalidArgument, "k must be at least 1");
    CurveDegreeGenus c{(3 * k + 1) * (k + 1), 5 * k * k * k + 4 * k * k - 3 * k - 1};
    FoliationInvariants inv = invariants_from_c2(static_cast<int>(2 * k + 1), 1 + (k + 2) * (k + 2), true);
    if (inv.degC != c.degree || *inv.paC != c.genus)
        fail(ErrorKind::CrossCheckFailure, "null correlation curve invariants disagree with the c2 route at k = " +
                                               std::to_string(k));
    return c;
}

CiInvariants ci_foliation_invariants(long d1, long d2) {
    if (d1 < 0 || d2 < 0) fail(ErrorKind::InvalidArgument, "d1 and d2 must be non-negative");
    long s = d1 + d2, p = d1 * d2;
    CiInvariants out;
    out.curve.degree = s * s - p + 2 * (s + 1);
    // s(3p - 2) is even: when s is odd one of d1, d2 is even.
    out.curve.genus = (s + 1) * (s + 1) * (s + 1) - 2 * (s + 1) * (s + 1) - s * (3 * p - 2) / 2;
    FoliationInvariants inv = invariants_from_c2(static_cast<int>(s + 1), (2 + d1) * (2 + d2), true);
    if (inv.degC != out.curve.degree || *inv.paC != out.curve.genus)
        fail(ErrorKind::CrossCheckFailure, "complete intersection invariants disagree with the c2 route for (" +
                                               std::to_string(d1) + ", " + std::to_string(d2) + ")");
    long a = std::min(d1, d2), b = std::max(d1, d2);
    if (a == 0 && b == 2)
        out.flags.push_back(genus_flag({-2, -4}, out.curve.degree, out.curve.genus, 5));
    else if (a == 1 && b == 1)
        out.flags.push_back(genus_flag({-3, -3}, out.curve.degree, out.curve.genus, 3));
    return out;
}

RaoBounds rao_bounds(long dimM, bool h1N_zero) {
    if (dimM < 0) fail(ErrorKind::InvalidArgument, "dim M must be non-negative");
    RaoBounds b{dimM, dimM + 1, std::nullopt};
    if (h1N_zero) b.exact = dimM + 1;
    return b;
}

const char* split_verdict_name(SplitVerdict v) {
    switch (v) {
        case SplitVerdict::Splits: return "splits";
        case SplitVerdict::TwistedNullCorrelation: return "twisted_null_correlation";
        case SplitVerdict::Impossible: return "impossible";
        case SplitVerdict::Undetermined: return "undetermined";
    }
    return "?";
}

SplitVerdict split_criterion(long rao_dim) {
    if (rao_dim < 1) fail(ErrorKind::InvalidArgument, "the Rao module of a foliation singular curve is nonzero");
    switch (rao_dim) {
        case 1: return SplitVerdict::Splits;
        case 2: return SplitVerdict::TwistedNullCorrelation;
        case 3: return SplitVerdict::Impossible;
        default: return SplitVerdict::Undetermined;
    }
}

}  // namespace fol

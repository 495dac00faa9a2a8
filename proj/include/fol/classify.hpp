#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fol {

struct FoliationInvariants {
    int d = 0;
    long c1N = 0;  // always -3 - d
    long c2N = 0;
    long degC = 0;
    std::optional<long> paC;  // known when locally free
    std::optional<long> c3;   // isolated singularities; 0 when locally free
    bool locally_free = true;

    nlohmann::json to_json() const;
};

// Degree and genus of the singular curve from (d, c2(N*)). OutOfBounds outside
// d + 2 <= c2N <= d^2 + 2d + 3 (d^2 + 2d + 1 when locally free); NonIntegralGenus
// when locally free and 3(d-1)c2N is odd.
FoliationInvariants invariants_from_c2(int d, long c2N, bool locally_free);

// (c2, c3) of N for a foliation of degree d with only isolated singularities.
std::pair<long, long> generic_invariants(long d);

// Number of isolated singular points; InconsistentTriple when negative.
long isolated_count(long d, long degC, long chiOC);

struct DiscrepancyFlag {
    std::string claim;     // statement being checked, restated
    nlohmann::json computed;
    nlohmann::json stated;
    std::string location;  // which statement the flag refers to

    nlohmann::json to_json() const;
};

// One admissible cohomological profile of E = N*(3) in a degree-3 instanton case.
struct InstantonProfile {
    long h0_E1 = 0;
    long dim_M = 0;       // sum_k h^1(E(k))
    long h0_OC = 0;       // 3 c2(E) - 7 + h^0(E(1))
    long components = 0;  // h^1(E(1)) + 1
    bool natural = false;
};

enum class VerdictKind { Split, Instanton, StableRank2, Impossible };
const char* verdict_name(VerdictKind k);

struct ClassificationReport {
    int d = 0;
    long c2N = 0;
    bool reduced = false;
    VerdictKind kind = VerdictKind::Impossible;
    std::pair<int, int> split{0, 0};  // conormal O(a) + O(b)
    long charge = 0;                  // c2(N*(3)) for the non-split cases
    std::vector<std::string> constraints;
    std::string reason;  // set for Impossible
    std::optional<FoliationInvariants> invariants;
    std::optional<long> components;
    std::optional<long> dim_M;
    std::optional<long> h0_OC;
    std::vector<InstantonProfile> profiles;
    std::vector<DiscrepancyFlag> flags;

    nlohmann::json to_json() const;
};

// Full verdict including impossible ones; OutOfBounds outside d + 2 <= c2N <= d^2 + 2d + 1.
ClassificationReport assess_low_degree(int d, long c2N, bool reduced_singular_scheme);
// As above but throws Impossible (with the reason) instead of returning such a verdict.
ClassificationReport classify_low_degree(int d, long c2N, bool reduced_singular_scheme);

// h2 + 1 components, for d >= 2 (DegreeTooSmall).
long connected_components(long h2_value, long d);

// h^0(O_Z) = 3 c2(E) - 7 + h^0(E(1)), c2(E) in 1..5.
long sections_of_singular_scheme(long c2E, long h0E1);

long legendrian_moduli_dim(long d);

struct NcModuli {
    long stated = 0;
    long derived = 0;
    bool flag = false;
};
// Stated closed form against 5 + hom(N*, Omega^1) - 1 with hom from the
// Euler sequence and h^0(N(t)).
NcModuli nc_moduli_dim(long k);
DiscrepancyFlag nc_moduli_flag(long k);

struct CurveDegreeGenus {
    long degree = 0;
    long genus = 0;
    bool operator==(const CurveDegreeGenus&) const = default;
};

// Twisted null correlation conormal N(-k-2), foliation degree 2k + 1.
CurveDegreeGenus nc_curve_invariants(long k);

struct CiInvariants {
    CurveDegreeGenus curve;
    std::vector<DiscrepancyFlag> flags;
};
// Complete intersection of 1-forms in Omega^1(d1 + 2) and Omega^1(d2 + 2).
CiInvariants ci_foliation_invariants(long d1, long d2);

struct RaoBounds {
    long lower = 0;
    long upper = 0;
    std::optional<long> exact;
};
RaoBounds rao_bounds(long dimM, bool h1N_zero);

enum class SplitVerdict { Splits, TwistedNullCorrelation, Impossible, Undetermined };
const char* split_verdict_name(SplitVerdict v);
SplitVerdict split_criterion(long rao_dim);

}  // namespace fol

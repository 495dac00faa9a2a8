#pragma once

#include "fol/rational.hpp"

#include <json.hpp>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fol {

struct ChernTriple {
    long c1 = 0, c2 = 0, c3 = 0;
    bool operator==(const ChernTriple&) const = default;
};

// Total Chern class of a direct sum of line bundles, truncated at degree 3.
ChernTriple whitney_line_sum(const std::vector<int>& twists);

// Chern classes of E(t) for E of rank 1 or 2.
ChernTriple twisted_chern(int rank, const ChernTriple& c, long t);

enum class SheafKind { LineSum, Cotangent, NullCorrelation, Instanton, Generic };

struct SheafSymbol {
    int rank = 1;
    ChernTriple chern;
    SheafKind kind = SheafKind::Generic;
    std::vector<int> twists;   // LineSum
    int charge = 0;            // Instanton
    std::optional<long> h0_E1; // Instanton, charge 3

    static SheafSymbol line_sum(std::vector<int> twists);
    static SheafSymbol cotangent();
    static SheafSymbol null_correlation();
    static SheafSymbol instanton(int charge, std::optional<long> h0_E1 = std::nullopt);
    static SheafSymbol generic(int rank, ChernTriple c);
};

// chi(E(t)) by Riemann-Roch as a polynomial in t. Ranks 1 and 2 only
// (UnsupportedRank), NonIntegralChern if the data give a fractional value.
long euler_characteristic(const SheafSymbol& sym, long t);
long euler_characteristic(int rank, const ChernTriple& c, long t);
// Same value through twisted_chern and the untwisted formula at t = 0.
long euler_characteristic_by_twisting(int rank, const ChernTriple& c, long t);

enum class Provenance { ClosedForm, ChiForced, Stated, Input };
const char* provenance_name(Provenance p);

struct CohomologyRow {
    std::array<long, 4> h{};
    std::array<Provenance, 4> source{Provenance::ClosedForm, Provenance::ClosedForm, Provenance::ClosedForm,
                                     Provenance::ClosedForm};
    long alternating_sum() const { return h[0] - h[1] + h[2] - h[3]; }
};

struct CohomologyTable {
    std::map<int, CohomologyRow> rows;
    long total(int i) const;
    nlohmann::json to_json() const;
};

CohomologyRow line_bundle_cohomology(long a);

// Bott values for Omega^p(k); only p = 1 (UnsupportedFormIndex).
CohomologyRow cotangent_cohomology(int p, long k);
// chi(Omega^1(k)) from the Euler sequence, independent of the Bott row.
long cotangent_euler_characteristic(long k);

// Stable rank-2 instanton E of charge n in 1..4. h0_E1 = h^0(E(1)) is forced
// for n = 1, 2 (5 and 2), one of 0, 1, 2 for n = 3, and 0 for n = 4 where the
// natural-cohomology profile is the only one tabulated. InvalidProfile on any
// other input.
CohomologyRow instanton_cohomology(int n, std::optional<long> h0_E1, long k);
long instanton_euler_characteristic(int n, long k);

CohomologyRow cohomology_row(const SheafSymbol& sym, long k);
CohomologyTable cohomology_table(const SheafSymbol& sym, long lo, long hi);

// h^0(N(t)) for the null correlation bundle; 0 for t < 0 by stability.
long null_correlation_h0(long t);

// h^1(N*(k)) = h^2(N*(d - k - 1)) for a foliation of degree d.
inline long serre_dual_twist(long d, long k) { return d - k - 1; }

// Lower bound 40 - 11 c2 for hom(E(-3), Omega^1); requires c2 >= 1.
long hom_lower_bound(long c2);

}  // namespace fol

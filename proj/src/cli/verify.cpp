#include "fol/verify.hpp"

#include "fol/errors.hpp"
#include "fol/forms.hpp"
#include "fol/hilbert.hpp"
#include "fol/monad.hpp"
#include "fol/parse.hpp"
#include "fol/rao.hpp"
#include "fol/resolution.hpp"
#include "fol/sheafcoh.hpp"
#include "fol/syzygy.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <set>

namespace fol {

nlohmann::json CriterionResult::to_json() const {
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : flags) fs.push_back(f.to_json());
    return {{"id", id},           {"suite", suite},       {"title", title},   {"passed", passed},
            {"report_only", report_only}, {"failures", failures}, {"detail", detail}, {"flags", fs}};
}

namespace {

class Checker {
public:
    explicit Checker(CriterionResult& r) : r_(r) {}

    void that(bool ok, const std::string& what) {
        if (!ok) r_.failures.push_back(what);
    }

    template <class A, class B>
    void eq(const A& got, const B& want, const std::string& what) {
        if (!(got == want))
            r_.failures.push_back(what + ": got " + nlohmann::json(got).dump() + ", expected " + nlohmann::json(want).dump());
    }

private:
    CriterionResult& r_;
};

// Sparse random homogeneous polynomial: up to `terms` monomials, coefficients in [-3, 3] \ {0}.
Poly random_sparse(std::mt19937_64& rng, int degree, int terms) {
    auto monos = monomials_of_degree(degree);
    std::vector<Term> ts;
    for (int i = 0; i < terms; ++i) {
        int c = static_cast<int>(rng() % 6);
        ts.push_back({monos[rng() % monos.size()], c < 3 ? c - 3 : c - 2});
    }
    return Poly(degree, std::move(ts));
}

std::vector<Poly> random_generators(std::mt19937_64& rng, int max_degree) {
    std::vector<Poly> gens;
    int n = 2 + static_cast<int>(rng() % 2);
    while (static_cast<int>(gens.size()) < n) {
        Poly g = random_sparse(rng, 1 + static_cast<int>(rng() % max_degree), 1 + static_cast<int>(rng() % 3));
        if (!g.is_zero()) gens.push_back(g);
    }
    return gens;
}

TwistedForm random_form(FormSampler& s, int q, int e) {
    TwistedForm w(q, e);
    for (Covector c = 0; c <= kVolume; ++c)
        if (covector_degree(c) == q) w.add(c, s.polynomial(e));
    return w;
}

nlohmann::json profile_json(const RaoProfile& p) {
    nlohmann::json prof = nlohmann::json::object();
    for (const auto& [k, v] : p.profile) prof[std::to_string(k)] = v;
    return {{"profile", prof}, {"total", p.total}};
}

void table1(CriterionResult& r, std::uint64_t) {
    struct Row {
        long c2N, deg, pa, charge;
        std::set<long> dims, h0s;
    };
    const std::vector<Row> rows{{10, 8, 5, 1, {1}, {1}},
                                {11, 7, 2, 2, {4}, {1}},
                                {12, 6, -1, 3, {8, 9}, {2, 3}},
                                {13, 5, -4, 4, {14}, {5}}};
    Checker ck(r);
    for (const auto& row : rows) {
        std::string at = "c2N = " + std::to_string(row.c2N);
        ClassificationReport rep = classify_low_degree(3, row.c2N, true);
        ck.eq(verdict_name(rep.kind), std::string("instanton"), at + " verdict");
        ck.that(rep.invariants.has_value(), at + " curve invariants missing");
        if (rep.invariants) {
            ck.eq(rep.invariants->degC, row.deg, at + " degree");
            ck.eq(rep.invariants->paC.value_or(1 << 30), row.pa, at + " genus");
        }
        ck.eq(rep.charge, row.charge, at + " charge");
        std::set<long> dims, h0s;
        for (const auto& p : rep.profiles) {
            // The degree-3 table lists the charge-3 profiles with h^0(E(1)) in {0, 1}.
            if (row.charge == 3 && p.h0_E1 > 1) continue;
            dims.insert(p.dim_M);
            h0s.insert(p.h0_OC);
        }
        ck.eq(dims, row.dims, at + " dim M");
        ck.eq(h0s, row.h0s, at + " h0(O_C)");
        r.detail[std::to_string(row.c2N)] = rep.to_json();
    }
}

void degree_one_example(CriterionResult& r, std::uint64_t) {
    Checker ck(r);
    TwistedForm w = wedge(pencil_form(), standard_contact_form());
    const std::string shown = "z0*z2*dz1/\\dz3 - z0*z3*dz1/\\dz2 - z1*z2*dz0/\\dz3 + z1*z3*dz0/\\dz2";
    ck.eq(w.to_string(), shown, "wedge");
    ck.that(w == parse_form(shown), "wedge differs from the parsed display");
    GradedIdeal I = singular_ideal(w);
    GradedIdeal expected(parse_polynomial_list("z0*z2, z0*z3, z1*z2, z1*z3"));
    for (const auto& g : expected.generators()) ck.that(I.contains(g), "singular ideal misses " + g.to_string());
    for (const auto& g : I.generators()) ck.that(expected.contains(g), "singular ideal has extra " + g.to_string());
    auto P = hilbert_polynomial(I);
    ck.eq(P.to_string(), std::string("2t + 2"), "Hilbert polynomial");
    auto inv = curve_invariants(P);
    ck.eq(std::pair{inv.degree, inv.genus}, std::pair{2L, -1L}, "curve invariants");
    auto fp = foliation_from_pair(pencil_form(), standard_contact_form());
    ck.eq(fp.degree, 1, "foliation degree");
    auto rao = rao_module_dimensions(I);
    ck.eq(rao.profile, std::map<int, long>{{0, 1}}, "Rao profile");
    ck.eq(rao.total, 1L, "Rao total");
    r.detail = {{"wedge", w.to_string()}, {"hilbert", P.to_string()}, {"rao", profile_json(rao)}};
}

void degree_two_samples(CriterionResult& r, std::uint64_t seed) {
    Checker ck(r);
    r.detail["samples"] = nlohmann::json::array();
    for (std::uint64_t i = 0; i < 5; ++i) {
        FormSampler s(seed + i);
        int draws = 0;
        FoliationPresentation fp = sample_legendrian(2, s, &draws);
        std::string at = "seed " + std::to_string(seed + i);
        auto P = hilbert_polynomial(fp.singular);
        ck.eq(P.to_string(), std::string("5t"), at + " Hilbert polynomial");
        auto rao = rao_module_dimensions(fp.singular);
        ck.eq(rao.total, 1L, at + " Rao total");
        ck.that(draws <= 21, at + " used more than 20 redraws");
        r.detail["samples"].push_back({{"seed", seed + i}, {"draws", draws}, {"hilbert", P.to_string()},
                                       {"rao", profile_json(rao)}});
    }
}

PolyVector column(const std::vector<std::string>& entries) {
    static const int slot_degree[4] = {1, 1, 2, 2};
    PolyVector v;
    for (int i = 0; i < 4; ++i)
        v.push_back(entries[i] == "0" ? Poly::zero(slot_degree[i]) : parse_polynomial(entries[i]));
    return v;
}

void syzygy_matrix(CriterionResult& r, std::uint64_t) {
    Checker ck(r);
    auto row = parse_polynomial_list("x^2, y^2, z, t");
    auto syz = graded_syzygies(row, {-1, -1, 0, 0}, 2);
    ck.eq(syz.size(), std::size_t{8}, "syzygy dimension");
    std::vector<PolyVector> shown{
        column({"0", "0", "-x*t", "x*z"}), column({"0", "0", "-y*t", "y*z"}),
        column({"0", "0", "-t^2", "t*z"}), column({"0", "0", "-t*z", "z^2"}),
        column({"0", "-z", "y^2", "0"}),   column({"-z", "0", "x^2", "0"}),
        column({"0", "-t", "0", "y^2"}),   column({"-t", "0", "0", "x^2"}),
    };
    for (const auto& c : shown) {
        Poly acc = Poly::zero(3);
        for (int i = 0; i < 4; ++i) acc += c[i] * row[i];
        ck.that(acc.is_zero(), "displayed column is not a syzygy");
    }
    ck.that(span_contains(syz, shown), "computed space misses a displayed column");
    ck.that(span_contains(shown, syz), "displayed columns miss a computed syzygy");
    int nonzero_minors = 0;
    for (int r1 = 0; r1 < 4; ++r1)
        for (int r2 = r1 + 1; r2 < 4; ++r2)
            for (int c1 = 0; c1 < 4; ++c1)
                for (int c2 = c1 + 1; c2 < 4; ++c2) {
                    Poly m = shown[c1][r1] * shown[c2][r2] - shown[c2][r1] * shown[c1][r2];
                    if (!m.is_zero()) ++nonzero_minors;
                }
    ck.eq(nonzero_minors, 0, "nonzero 2x2 minors in the first four columns");
    r.detail = {{"dimension", syz.size()}, {"nonzero_minors", nonzero_minors}};
}

void cohomology_identities(CriterionResult& r, std::uint64_t) {
    Checker ck(r);
    for (long n = 1; n <= 5; ++n)
        ck.eq(euler_characteristic(2, {0, n, 0}, 1), 8 - 3 * n, "chi(E(1)) for c2 = " + std::to_string(n));
    for (long t = 0; t <= 8; ++t)
        ck.eq(null_correlation_h0(t), euler_characteristic(SheafSymbol::null_correlation(), t),
              "h0(N(t)) at t = " + std::to_string(t));
    ck.eq(null_correlation_h0(1), 5L, "h0(N(1))");
    nlohmann::json totals = nlohmann::json::object();
    auto check_table = [&](int n, std::optional<long> h0, long expected_total) {
        auto tab = cohomology_table(SheafSymbol::instanton(n, h0), -12, 12);
        std::string at = "charge " + std::to_string(n) + (h0 ? " h0(E(1)) = " + std::to_string(*h0) : "");
        for (const auto& [k, row] : tab.rows)
            ck.eq(row.alternating_sum(), instanton_euler_characteristic(n, k), at + " chi at k = " + std::to_string(k));
        ck.eq(tab.total(1), expected_total, at + " total h1");
        totals[at] = tab.total(1);
    };
    check_table(1, std::nullopt, 1);
    check_table(2, std::nullopt, 4);
    for (long h0 = 0; h0 <= 2; ++h0) check_table(3, h0, 8 + h0);
    check_table(4, std::nullopt, 14);
    r.detail["h1_totals"] = totals;
}

void moduli(CriterionResult& r, std::uint64_t) {
    Checker ck(r);
    ck.eq(legendrian_moduli_dim(1), 8L, "legendrian d = 1");
    ck.eq(legendrian_moduli_dim(2), 20L, "legendrian d = 2");
    ck.eq(legendrian_moduli_dim(3), 39L, "legendrian d = 3");
    NcModuli m = nc_moduli_dim(1);
    ck.eq(m.stated, 34L, "nc k = 1 stated");
    ck.eq(m.derived, 33L, "nc k = 1 derived");
    ck.that(m.flag, "nc k = 1 flag not raised");
    for (long k = 1; k <= 10; ++k) {
        NcModuli mk = nc_moduli_dim(k);
        ck.eq(mk.stated - mk.derived, 1L, "stated - derived at k = " + std::to_string(k));
    }
    r.flags.push_back(nc_moduli_flag(1));
    r.detail = {{"legendrian", {8, 20, 39}}, {"nc_k1", {{"stated", m.stated}, {"derived", m.derived}}}};
}

void regularity(CriterionResult& r, std::uint64_t) {
    Checker ck(r);
    nlohmann::json bounds = nlohmann::json::array();
    for (int n = 1; n <= 8; ++n) {
        long b = monad_regularity_bound(instanton_monad(n));
        ck.eq(b, long(n), "regularity of charge " + std::to_string(n));
        bounds.push_back(b);
    }
    r.detail["bounds"] = bounds;
}

void closure(CriterionResult& r, std::uint64_t) {
    Checker ck(r);
    int cases = 0;
    for (long d = 1; d <= 6; ++d)
        for (long c2 = d + 2; c2 <= d * d + 2 * d + 1; ++c2) {
            FoliationInvariants inv;
            try {
                inv = invariants_from_c2(static_cast<int>(d), c2, true);
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::NonIntegralGenus) continue;
                throw;
            }
            ++cases;
            long lhs = d * d * d + d * d + d + 1 - 3 * inv.degC * (d - 1) - 2 * (1 - *inv.paC);
            ck.eq(lhs, 0L, "closure at (" + std::to_string(d) + ", " + std::to_string(c2) + ")");
        }
    r.detail["cases"] = cases;
}

void genus_report(CriterionResult& r, std::uint64_t seed) {
    r.report_only = true;
    Checker ck(r);
    FormSampler s(seed);
    int draws = 0;
    FoliationPresentation fp = sample_legendrian(3, s, &draws);
    auto coeffs = hilbert_polynomial(fp.singular).power_coefficients();
    long lead = to_long(coeffs.at(1)), constant = to_long(coeffs.at(0));
    long pa = 1 - constant;
    ck.eq(lead, 10L, "degree of the singular curve");
    const long formula = 11, stated = 5;
    std::string matches = pa == formula ? "formula" : pa == stated ? "stated" : "neither";
    r.detail = {{"seed", seed},         {"draws", draws},   {"degree", lead}, {"genus", pa},
                {"formula_genus", formula}, {"stated_genus", stated}, {"matches", matches}};
    DiscrepancyFlag f;
    f.claim = "degree-3 legendrian foliations have singular curve of degree 10 and genus 5";
    f.computed = pa;
    f.stated = stated;
    f.location = "degree-3 legendrian singular curve genus";
    if (pa != stated) r.flags.push_back(f);
}

void properties(CriterionResult& r, std::uint64_t seed) {
    Checker ck(r);
    std::mt19937_64 rng(seed);

    int members = 0;
    for (int trial = 0; trial < 50; ++trial) {
        auto gens = random_generators(rng, 2);
        GradedIdeal I(gens);
        int top = 0;
        for (const auto& g : gens) top = std::max(top, g.degree());
        int target = top + 1;
        Poly f = Poly::zero(target);
        for (const auto& g : gens) f += random_sparse(rng, target - g.degree(), 3) * g;
        ck.that(normal_form(f, I.groebner_basis()).is_zero(), "nonzero remainder for an ideal member");
        ++members;
    }

    int resolutions = 0;
    for (int trial = 0; trial < 20; ++trial) {
        GradedIdeal I(random_generators(rng, 3));
        FreeResolution res = complete_free_resolution(I);
        ck.that(compositions_vanish(res), "resolution is not a complex");
        for (int k = 0; k <= res.degree_bound; ++k) {
            ck.eq(map_rank_in_degree(res, 0, k), graded_piece_dimension(k) - hilbert_function(I, k),
                  "image of F1 in degree " + std::to_string(k));
            for (std::size_t i = 1; i < res.layers.size(); ++i)
                ck.eq(map_rank_in_degree(res, i - 1, k) + map_rank_in_degree(res, i, k), res.rank_in_degree(i, k),
                      "exactness at F" + std::to_string(i) + " in degree " + std::to_string(k));
        }
        ++resolutions;
    }

    const std::vector<std::string> curves{"z0*z2, z0*z3, z1*z2, z1*z3", "z0*z2 - z1^2, z1*z3 - z2^2, z0*z3 - z1*z2",
                                          "z0*z1 - z2*z3, z0^2 + z1^2 + z2^2 + z3^2"};
    for (const auto& text : curves) {
        auto gens = parse_polynomial_list(text);
        auto base = rao_module_dimensions(GradedIdeal(gens));
        Poly extra = Poly::zero(4);
        for (const auto& g : gens) extra += random_sparse(rng, 4 - g.degree(), 2) * g;
        auto more = gens;
        more.push_back(extra);
        auto again = rao_module_dimensions(GradedIdeal(more));
        ck.eq(again.profile, base.profile, "Rao profile changed by a redundant generator of " + text);
    }

    FormSampler fs(seed);
    for (int trial = 0; trial < 50; ++trial) {
        int q = 1 + trial % 2;
        auto a = random_form(fs, q, 1 + trial % 2), b = random_form(fs, 1, 1 + trial % 3);
        TwistedForm lhs = radial_contraction(wedge(a, b));
        TwistedForm rhs = wedge(radial_contraction(a), b);
        TwistedForm tail = wedge(a, radial_contraction(b));
        if (q % 2) rhs -= tail;
        else rhs += tail;
        ck.that(lhs == rhs, "Leibniz rule fails for a random pair");
    }

    const std::vector<std::pair<int, int>> ci_degrees{{1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}};
    for (auto [a, b] : ci_degrees) {
        GradedIdeal I({fs.polynomial(a), fs.polynomial(b)});
        ck.eq(curve_invariants(I).degree, long(a * b), "complete intersection degree");
        ck.eq(rao_module_dimensions(I).total, 0L,
              "Rao module of a complete intersection (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
    r.detail = {{"memberships", members}, {"resolutions", resolutions}, {"leibniz", 50}, {"complete_intersections", 5}};
}

void route_agreement(CriterionResult& r, std::uint64_t) {
    Checker ck(r);
    for (long k = 1; k <= 6; ++k) {
        auto c = nc_curve_invariants(k);
        auto inv = invariants_from_c2(static_cast<int>(2 * k + 1), 1 + (k + 2) * (k + 2), true);
        ck.eq(c.degree, inv.degC, "nc degree at k = " + std::to_string(k));
        ck.eq(c.genus, inv.paC.value_or(1 << 30), "nc genus at k = " + std::to_string(k));
    }
    for (long d1 = 0; d1 <= 3; ++d1)
        for (long d2 = d1; d2 <= 3; ++d2) {
            auto ci = ci_foliation_invariants(d1, d2);
            auto inv = invariants_from_c2(static_cast<int>(d1 + d2 + 1), (d1 + 2) * (d2 + 2), true);
            std::string at = "(" + std::to_string(d1) + ", " + std::to_string(d2) + ")";
            ck.eq(ci.curve.degree, inv.degC, "complete intersection degree at " + at);
            ck.eq(ci.curve.genus, inv.paC.value_or(1 << 30), "complete intersection genus at " + at);
            for (const auto& f : ci.flags) r.flags.push_back(f);
        }
}

struct Criterion {
    int id;
    const char* suite;
    const char* title;
    void (*run)(CriterionResult&, std::uint64_t);
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {1, "table1", "degree-3 instanton table", table1},
        {2, "forms", "degree-1 pencil wedge contact example", degree_one_example},
        {3, "forms", "degree-2 legendrian samples", degree_two_samples},
        {4, "syzygy", "syzygies of (x^2, y^2, z, t)", syzygy_matrix},
        {5, "formulas", "cohomology identities", cohomology_identities},
        {6, "moduli", "moduli dimensions", moduli},
        {7, "formulas", "instanton monad regularity", regularity},
        {8, "formulas", "singular locus closure identity", closure},
        {9, "forms", "degree-3 legendrian genus", genus_report},
        {10, "all", "property suites", properties},
        {11, "formulas", "curve invariant route agreement", route_agreement},
    };
    return all;
}

CriterionResult run_one(const Criterion& c, std::uint64_t seed) {
    CriterionResult r;
    r.id = c.id;
    r.suite = c.suite;
    r.title = c.title;
    try {
        c.run(r, seed);
    } catch (const Error& e) {
        r.failures.push_back(std::string(e.kind_name()) + ": " + e.what());
    } catch (const std::exception& e) {
        r.failures.push_back(e.what());
    }
    r.passed = r.failures.empty();
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"all", "table1", "formulas", "forms", "syzygy", "moduli"};
    return names;
}

bool is_suite(const std::string& name) {
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<CriterionResult> run_criteria(const std::vector<int>& ids, std::uint64_t seed) {
    std::vector<std::future<CriterionResult>> jobs;
    for (const auto& c : criteria())
        if (std::find(ids.begin(), ids.end(), c.id) != ids.end())
            jobs.push_back(std::async(std::launch::async, run_one, c, seed));
    std::vector<CriterionResult> out;
    for (auto& j : jobs) out.push_back(j.get());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return out;
}

std::vector<CriterionResult> run_suite(const std::string& suite, std::uint64_t seed) {
    if (!is_suite(suite)) fail(ErrorKind::InvalidArgument, "unknown suite '" + suite + "'");
    std::vector<int> ids;
    for (const auto& c : criteria())
        if (suite == "all" || suite == c.suite) ids.push_back(c.id);
    return run_criteria(ids, seed);
}

}  // namespace fol

#include "fol/groebner.hpp"

#include "fol/errors.hpp"
#include "fol/parse.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace fol {

namespace {

int find_divisor(const Monomial& m, const std::vector<const Poly*>& G) {
    for (std::size_t i = 0; i < G.size(); ++i)
        if (G[i]->lead_monomial().divides(m)) return static_cast<int>(i);
    return -1;
}

// Reduces f in the dense coordinates of S_D. G entries are nonzero.
Poly reduce_dense(const Poly& f, const std::vector<const Poly*>& G) {
    if (f.is_zero()) return f;
    const int D = f.degree();
    std::vector<const Poly*> usable;
    for (auto* g : G)
        if (g->degree() <= D) usable.push_back(g);
    if (usable.empty()) return f;
    std::vector<Rational> v = to_dense(f);
    auto basis = monomials_of_degree(D);
    Rational c;
    for (std::size_t idx = 0; idx < v.size(); ++idx) {
        if (sgn(v[idx]) == 0) continue;
        int gi = find_divisor(basis[idx], usable);
        if (gi < 0) continue;
        const Poly& g = *usable[gi];
        Monomial q = g.lead_monomial().quotient_of(basis[idx]);
        c = v[idx] / g.lead_coefficient();
        for (const auto& t : g.terms()) v[monomial_index(t.m * q)] -= c * t.c;
    }
    return from_dense(D, v);
}

struct Pair {
    int i, j;
    Monomial lcm;
};

}  // namespace

Poly normal_form(const Poly& f, const std::vector<Poly>& G) {
    std::vector<const Poly*> ptrs;
    for (const auto& g : G)
        if (!g.is_zero()) ptrs.push_back(&g);
    return reduce_dense(f, ptrs);
}

std::vector<Monomial> minimalize(std::vector<Monomial> ms) {
    std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) { return a.key() < b.key(); });
    std::vector<Monomial> out;
    for (const auto& m : ms) {
        bool redundant = false;
        for (const auto& o : out)
            if (o.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(m);
    }
    return out;
}

std::vector<Poly> buchberger(const std::vector<Poly>& generators, const GroebnerOptions& opts) {
    std::vector<Poly> polys;     // every element ever added
    std::vector<bool> active;    // still in the (non-reduced) basis
    std::vector<Pair> pairs;
    std::size_t pairs_queued = 0;

    auto active_ptrs = [&]() {
        std::vector<const Poly*> out;
        for (std::size_t i = 0; i < polys.size(); ++i)
            if (active[i]) out.push_back(&polys[i]);
        return out;
    };

    // Gebauer-Moeller update with the product and chain criteria.
    auto update = [&](Poly h) {
        const int hi = static_cast<int>(polys.size());
        const Monomial lh = h.lead_monomial();
        polys.push_back(std::move(h));
        active.push_back(true);

        std::vector<int> C;
        for (int g = 0; g < hi; ++g)
            if (active[g]) C.push_back(g);
        std::vector<int> D;
        for (std::size_t a = 0; a < C.size(); ++a) {
            int g1 = C[a];
            Monomial l1 = lcm(lh, polys[g1].lead_monomial());
            bool keep = coprime(lh, polys[g1].lead_monomial());
            if (!keep) {
                keep = true;
                for (std::size_t b = a + 1; b < C.size() && keep; ++b)
                    if (lcm(lh, polys[C[b]].lead_monomial()).divides(l1)) keep = false;
                for (std::size_t b = 0; b < D.size() && keep; ++b)
                    if (lcm(lh, polys[D[b]].lead_monomial()).divides(l1)) keep = false;
            }
            if (keep) D.push_back(g1);
        }
        std::vector<Pair> fresh;
        for (int g : D)
            if (!coprime(lh, polys[g].lead_monomial())) fresh.push_back({g, hi, lcm(lh, polys[g].lead_monomial())});

        std::vector<Pair> kept;
        for (const auto& p : pairs) {
            Monomial l1 = lcm(polys[p.i].lead_monomial(), lh);
            Monomial l2 = lcm(polys[p.j].lead_monomial(), lh);
            if (!lh.divides(p.lcm) || l1 == p.lcm || l2 == p.lcm) kept.push_back(p);
        }
        pairs = std::move(kept);
        pairs_queued += fresh.size();
        if (pairs_queued > opts.max_pairs)
            fail(ErrorKind::ResourceLimit, "Groebner pair queue exceeded " + std::to_string(opts.max_pairs));
        pairs.insert(pairs.end(), fresh.begin(), fresh.end());

        for (int g = 0; g < hi; ++g)
            if (active[g] && lh.divides(polys[g].lead_monomial())) active[g] = false;
    };

    std::map<int, std::vector<Poly>> inputs;
    for (const auto& f : generators)
        if (!f.is_zero()) inputs[f.degree()].push_back(f);

    for (;;) {
        int D = -1;
        if (!inputs.empty()) D = inputs.begin()->first;
        for (const auto& p : pairs)
            if (D < 0 || p.lcm.degree() < D) D = p.lcm.degree();
        if (D < 0) break;
        if (opts.max_degree >= 0 && D > opts.max_degree) break;

        std::vector<Poly> todo;
        if (!inputs.empty() && inputs.begin()->first == D) {
            todo = std::move(inputs.begin()->second);
            inputs.erase(inputs.begin());
        }
        for (auto& f : todo) {
            Poly h = reduce_dense(f, active_ptrs());
            if (!h.is_zero()) update(h.monic());
        }
        for (;;) {
            // Normal selection: the pair with the smallest lcm in this degree.
            int best = -1;
            for (std::size_t k = 0; k < pairs.size(); ++k)
                if (pairs[k].lcm.degree() == D && (best < 0 || pairs[k].lcm.key() < pairs[best].lcm.key()))
                    best = static_cast<int>(k);
            if (best < 0) break;
            Pair p = pairs[best];
            pairs.erase(pairs.begin() + best);
            const Poly& f = polys[p.i];
            const Poly& g = polys[p.j];
            Poly s = f.times(f.lead_monomial().quotient_of(p.lcm), 1 / f.lead_coefficient()) -
                     g.times(g.lead_monomial().quotient_of(p.lcm), 1 / g.lead_coefficient());
            Poly h = reduce_dense(s, active_ptrs());
            if (!h.is_zero()) update(h.monic());
        }
    }

    std::vector<Poly> basis;
    for (std::size_t i = 0; i < polys.size(); ++i)
        if (active[i]) basis.push_back(polys[i]);
    std::vector<Poly> reduced;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<const Poly*> others;
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (j != i) others.push_back(&basis[j]);
        reduced.push_back(reduce_dense(basis[i], others).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [](const Poly& a, const Poly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.lead_monomial().key() > b.lead_monomial().key();
    });
    return reduced;
}

struct GradedIdeal::Cache {
    std::once_flag once;
    std::vector<Poly> gb;
};

GradedIdeal::GradedIdeal(std::vector<Poly> generators, GroebnerOptions opts)
    : gens_(std::move(generators)), opts_(opts), cache_(std::make_shared<Cache>()) {}

int GradedIdeal::max_generator_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

int GradedIdeal::sum_generator_degrees() const {
    int d = 0;
    for (const auto& g : gens_) d += g.degree();
    return d;
}

const std::vector<Poly>& GradedIdeal::groebner_basis() const {
    std::call_once(cache_->once, [this] { cache_->gb = buchberger(gens_, opts_); });
    return cache_->gb;
}

std::vector<Monomial> GradedIdeal::lead_terms() const {
    std::vector<Monomial> out;
    for (const auto& g : groebner_basis()) out.push_back(g.lead_monomial());
    return out;
}

bool GradedIdeal::contains(const Poly& f) const { return normal_form(f, groebner_basis()).is_zero(); }

bool GradedIdeal::is_unit() const {
    const auto& gb = groebner_basis();
    return gb.size() == 1 && gb[0].degree() == 0;
}

std::vector<Poly> GradedIdeal::graded_basis(int k) const {
    std::vector<Poly> out;
    const auto& gb = groebner_basis();
    for (const auto& m : monomials_of_degree(k)) {
        for (const auto& g : gb)
            if (g.lead_monomial().divides(m)) {
                out.push_back(g.times(g.lead_monomial().quotient_of(m)));
                break;
            }
    }
    return out;
}

GradedIdeal parse_ideal(const std::string& text) {
    std::vector<Poly> gens;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            gens.push_back(parse_polynomial(line));
        } catch (const Error& e) {
            throw Error(e.kind(), "line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return GradedIdeal(std::move(gens));
}

}  // namespace fol

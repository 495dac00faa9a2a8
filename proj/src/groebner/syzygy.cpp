#include "fol/syzygy.hpp"

#include "fol/errors.hpp"
#include "fol/matrix.hpp"

#include <optional>

namespace fol {

namespace {

// Flattens a homogeneous tuple into coordinates slot by slot.
std::optional<SparseVec> flatten(const PolyVector& v, const std::vector<int>& slot_degrees) {
    SparseVec out;
    int offset = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        int d = slot_degrees[i];
        if (!v[i].is_zero()) {
            if (v[i].degree() != d) return std::nullopt;
            std::vector<std::pair<int, Rational>> block;
            for (const auto& t : v[i].terms()) block.emplace_back(offset + monomial_index(t.m), t.c);
            std::sort(block.begin(), block.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            out.insert(out.end(), block.begin(), block.end());
        }
        offset += static_cast<int>(graded_piece_dimension(d));
    }
    return out;
}

}  // namespace

std::vector<PolyVector> graded_syzygies(const std::vector<Poly>& row, const std::vector<int>& weights, int target_degree) {
    if (row.size() != weights.size())
        fail(ErrorKind::DegreeMismatch, "row has " + std::to_string(row.size()) + " entries but " +
                                            std::to_string(weights.size()) + " weights were given");
    std::optional<int> out_degree;
    for (std::size_t i = 0; i < row.size(); ++i) {
        int w = weights[i] + row[i].degree();
        if (out_degree && *out_degree != w)
            fail(ErrorKind::DegreeMismatch, "slot " + std::to_string(i) + " maps to degree " + std::to_string(w) +
                                                ", previous slots to " + std::to_string(*out_degree));
        out_degree = w;
    }
    std::vector<PolyVector> result;
    if (row.empty()) return result;

    std::vector<int> slot_deg(row.size());
    std::vector<SparseVec> columns;
    std::vector<std::pair<int, Monomial>> unknowns;
    for (std::size_t i = 0; i < row.size(); ++i) {
        slot_deg[i] = target_degree + weights[i];
        for (const auto& m : monomials_of_degree(slot_deg[i])) {
            unknowns.emplace_back(static_cast<int>(i), m);
            Poly img = row[i].times(m);
            SparseVec col;
            for (const auto& t : img.terms()) col.emplace_back(monomial_index(t.m), t.c);
            std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            columns.push_back(std::move(col));
        }
    }
    for (const auto& kv : sparse_kernel(columns)) {
        PolyVector v;
        for (std::size_t i = 0; i < row.size(); ++i) v.push_back(Poly::zero(std::max(slot_deg[i], 0)));
        std::vector<std::vector<Term>> terms(row.size());
        for (const auto& [idx, c] : kv) terms[unknowns[idx].first].push_back({unknowns[idx].second, c});
        for (std::size_t i = 0; i < row.size(); ++i)
            if (!terms[i].empty()) v[i] = Poly(slot_deg[i], std::move(terms[i]));
        result.push_back(std::move(v));
    }
    return result;
}

bool span_contains(const std::vector<PolyVector>& b, const std::vector<PolyVector>& a) {
    if (a.empty()) return true;
    if (b.empty()) {
        for (const auto& v : a)
            for (const auto& p : v)
                if (!p.is_zero()) return false;
        return true;
    }
    std::vector<int> slot_deg;
    for (const auto& p : b[0]) slot_deg.push_back(p.degree());
    SparseEchelon e;
    for (const auto& v : b) {
        auto f = flatten(v, slot_deg);
        if (!f) return false;
        e.insert(*f);
    }
    for (const auto& v : a) {
        if (v.size() != slot_deg.size()) return false;
        auto f = flatten(v, slot_deg);
        if (!f) return false;
        if (!e.reduce(*f).empty()) return false;
    }
    return true;
}

}  // namespace fol

#include "fol/resolution.hpp"

#include "fol/errors.hpp"
#include "fol/hilbert.hpp"
#include "fol/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace fol {

namespace {

constexpr std::uint32_t kPrime = 2147483647u;

struct Layout {
    std::vector<int> offset;  // -1 when the generator has no degree-k part
    int size = 0;
};

Layout layout(const std::vector<int>& degs, int k) {
    Layout L;
    for (int a : degs) {
        if (k - a < 0) {
            L.offset.push_back(-1);
            continue;
        }
        L.offset.push_back(L.size);
        L.size += static_cast<int>(graded_piece_dimension(k - a));
    }
    return L;
}

// m * (column j of map), in the coordinates of the target layout.
SparseVec image(const GradedMap& map, int j, const Monomial& m, const Layout& target) {
    SparseVec out;
    const PolyVector& col = map.columns[j];
    for (std::size_t r = 0; r < col.size(); ++r) {
        if (col[r].is_zero()) continue;
        const int base = target.offset[r];
        std::size_t start = out.size();
        for (const auto& t : col[r].terms()) out.emplace_back(base + monomial_index(t.m * m), t.c);
        std::sort(out.begin() + start, out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return out;
}

// Coordinates of a degree-k element of a free module -> polynomial column.
PolyVector to_column(const SparseVec& v, const std::vector<int>& degs, int k) {
    Layout L = layout(degs, k);
    std::vector<std::vector<Term>> terms(degs.size());
    std::vector<std::vector<Monomial>> bases(degs.size());
    std::size_t r = 0;
    for (const auto& [idx, c] : v) {
        while (L.offset[r] < 0 || idx >= L.offset[r] + graded_piece_dimension(k - degs[r])) ++r;
        if (bases[r].empty()) bases[r] = monomials_of_degree(k - degs[r]);
        terms[r].push_back({bases[r][idx - L.offset[r]], c});
    }
    PolyVector col;
    for (std::size_t s = 0; s < degs.size(); ++s) {
        int d = k - degs[s];
        col.push_back(d < 0 ? Poly::zero(0) : Poly(d, std::move(terms[s])));
    }
    return col;
}

long dim_in_degree(const std::vector<int>& degs, int k) {
    long n = 0;
    for (int a : degs) n += graded_piece_dimension(k - a);
    return n;
}

// Vectors spanning the image of the existing generators of F_i in (F_{i-1})_k.
std::vector<SparseVec> generated_part(const FreeResolution& res, std::size_t i, int k) {
    std::vector<SparseVec> out;
    Layout target = layout(res.layers[i - 1], k);
    const auto& degs = res.layers[i];
    for (std::size_t j = 0; j < degs.size(); ++j) {
        if (degs[j] > k) continue;
        for (const auto& m : monomials_of_degree(k - degs[j])) {
            auto v = image(res.maps[i - 1], static_cast<int>(j), m, target);
            if (!v.empty()) out.push_back(std::move(v));
        }
    }
    return out;
}

// Kernel of maps[i-2] : F_{i-1} -> F_{i-2} in degree k.
std::vector<SparseVec> kernel_in_degree(const FreeResolution& res, std::size_t i, int k) {
    Layout target = layout(res.layers[i - 2], k);
    std::vector<SparseVec> columns;
    const auto& degs = res.layers[i - 1];
    for (std::size_t r = 0; r < degs.size(); ++r) {
        if (degs[r] > k) continue;
        for (const auto& m : monomials_of_degree(k - degs[r]))
            columns.push_back(image(res.maps[i - 2], static_cast<int>(r), m, target));
    }
    return sparse_kernel(columns);
}

SparseVec poly_coordinates(const Poly& p) {
    SparseVec v;
    for (const auto& t : p.terms()) v.emplace_back(monomial_index(t.m), t.c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

}  // namespace

std::vector<std::vector<int>> FreeResolution::twists() const {
    std::vector<std::vector<int>> out;
    for (const auto& l : layers) {
        std::vector<int> t;
        for (int a : l) t.push_back(-a);
        out.push_back(t);
    }
    return out;
}

long FreeResolution::rank_in_degree(std::size_t i, int k) const {
    if (i >= layers.size()) return 0;
    return dim_in_degree(layers[i], k);
}

std::string FreeResolution::betti_table() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < layers.size(); ++i) {
        os << "F" << i << ":";
        if (layers[i].empty()) os << " 0";
        for (int a : layers[i]) os << " S(" << -a << ")";
        os << "\n";
    }
    return os.str();
}

FreeResolution minimal_free_resolution(const GradedIdeal& I, int B) {
    if (B < I.max_generator_degree() + 4)
        fail(ErrorKind::InvalidArgument, "degree bound " + std::to_string(B) + " is below max generator degree + 4");
    const auto numerator = hilbert_series_numerator(I.lead_terms());

    FreeResolution res;
    res.degree_bound = B;
    res.layers.assign(5, {});
    res.layers[0] = {0};
    res.maps.assign(4, {});
    if (I.is_unit()) {
        // S/I = 0: the resolution is F_1 = S -> F_0 = S.
        res.layers[1] = {0};
        res.maps[0].columns.push_back({Poly::constant(1)});
        return res;
    }

    for (int k = 0; k <= B; ++k) {
        long rank_prev = hilbert_function_of_numerator(numerator, k);
        for (std::size_t i = 1; i <= 5; ++i) {
            const long dimK = dim_in_degree(res.layers[i - 1], k) - rank_prev;
            rank_prev = dimK;
            if (dimK == 0) continue;
            if (i == 5) fail(ErrorKind::CrossCheckFailure, "resolution longer than four steps in degree " + std::to_string(k));

            auto gen = generated_part(res, i, k);
            const int length = static_cast<int>(dim_in_degree(res.layers[i - 1], k));
            if (rank_mod_p(gen, length, kPrime) == dimK) continue;

            SparseEchelon ech;
            for (auto& v : gen) ech.insert(std::move(v));
            if (ech.rank() == dimK) continue;

            std::vector<SparseVec> candidates;
            if (i == 1) {
                for (const auto& g : I.generators())
                    if (g.degree() == k && !g.is_zero()) candidates.push_back(poly_coordinates(g));
            } else {
                candidates = kernel_in_degree(res, i, k);
            }
            for (const auto& c : candidates) {
                if (ech.rank() == dimK) break;
                if (!ech.insert(c)) continue;
                res.layers[i].push_back(k);
                res.maps[i - 1].columns.push_back(to_column(c, res.layers[i - 1], k));
            }
            if (ech.rank() != dimK)
                fail(ErrorKind::CrossCheckFailure, "kernel in degree " + std::to_string(k) + " at step " +
                                                       std::to_string(i) + " not spanned by candidates");
        }
    }
    while (res.layers.size() > 1 && res.layers.back().empty()) {
        res.layers.pop_back();
        res.maps.pop_back();
    }
    return res;
}

FreeResolution complete_free_resolution(const GradedIdeal& I) {
    int B = I.max_generator_degree() + 4;
    for (int b : resolution_degree_bounds(I)) B = std::max(B, b);
    return minimal_free_resolution(I, B);
}

bool compositions_vanish(const FreeResolution& res) {
    for (std::size_t i = 1; i < res.maps.size(); ++i) {
        const auto& outer = res.maps[i - 1];  // F_i -> F_{i-1}
        const auto& inner = res.maps[i];      // F_{i+1} -> F_i
        for (std::size_t j = 0; j < inner.columns.size(); ++j) {
            const int aj = res.layers[i + 1][j];
            for (std::size_t r = 0; r < res.layers[i - 1].size(); ++r) {
                const int d = aj - res.layers[i - 1][r];
                if (d < 0) continue;
                Poly acc = Poly::zero(d);
                for (std::size_t s = 0; s < res.layers[i].size(); ++s) {
                    const Poly& a = outer.columns[s][r];
                    const Poly& b = inner.columns[j][s];
                    if (a.is_zero() || b.is_zero()) continue;
                    acc += a * b;
                }
                if (!acc.is_zero()) return false;
            }
        }
    }
    return true;
}

long map_rank_in_degree(const FreeResolution& res, std::size_t i, int k) {
    if (i >= res.maps.size()) return 0;
    return sparse_rank(generated_part(res, i + 1, k));
}

long alternating_sum(const FreeResolution& res, int k) {
    long s = 0;
    for (std::size_t i = 0; i < res.layers.size(); ++i) s += (i % 2 ? -1 : 1) * res.rank_in_degree(i, k);
    return s;
}

namespace {

// Reduced homology dimensions H~_q, q = -1..3, of a complex on 4 vertices given
// by face membership over bitmasks.
std::array<int, 5> reduced_homology(const std::array<bool, 16>& face) {
    std::array<std::vector<int>, 5> by_size;
    for (int f = 0; f < 16; ++f)
        if (face[f]) by_size[__builtin_popcount(f)].push_back(f);
    std::array<int, 6> rank_boundary{};  // rank of the map from size s to size s-1
    for (int s = 1; s <= 4; ++s) {
        if (by_size[s].empty() || by_size[s - 1].empty()) continue;
        ExactMatrix m(static_cast<int>(by_size[s - 1].size()), static_cast<int>(by_size[s].size()));
        for (std::size_t c = 0; c < by_size[s].size(); ++c) {
            int F = by_size[s][c];
            int pos = 0;
            for (int v = 0; v < 4; ++v) {
                if (!(F >> v & 1)) continue;
                int G = F & ~(1 << v);
                auto it = std::find(by_size[s - 1].begin(), by_size[s - 1].end(), G);
                if (it != by_size[s - 1].end()) m.at(static_cast<int>(it - by_size[s - 1].begin()), static_cast<int>(c)) = (pos % 2) ? -1 : 1;
                ++pos;
            }
        }
        rank_boundary[s] = m.rank();
    }
    std::array<int, 5> h{};
    for (int s = 0; s <= 4; ++s)
        h[s] = static_cast<int>(by_size[s].size()) - rank_boundary[s] - (s + 1 <= 4 ? rank_boundary[s + 1] : 0);
    return h;
}

}  // namespace

std::vector<int> resolution_degree_bounds(const GradedIdeal& I) {
    std::vector<int> bound(5, -1);
    bound[0] = 0;
    if (I.is_unit()) {
        bound[1] = 0;
        return bound;
    }
    auto gens = minimalize(I.lead_terms());
    const std::size_t n = gens.size();
    std::unordered_set<std::uint64_t> seen;
    std::vector<Monomial> lattice;
    auto visit = [&](const Monomial& m) {
        if (seen.insert(m.packed()).second) lattice.push_back(m);
    };
    for (std::size_t a = 0; a < n; ++a) {
        visit(gens[a]);
        for (std::size_t b = a + 1; b < n; ++b) {
            Monomial ab = lcm(gens[a], gens[b]);
            visit(ab);
            for (std::size_t c = b + 1; c < n; ++c) {
                Monomial abc = lcm(ab, gens[c]);
                visit(abc);
                for (std::size_t d = c + 1; d < n; ++d) visit(lcm(abc, gens[d]));
            }
        }
    }
    auto member = [&](const Monomial& m) {
        for (const auto& g : gens)
            if (g.divides(m)) return true;
        return false;
    };
    for (const auto& alpha : lattice) {
        std::array<bool, 16> face{};
        bool full = true;
        for (int F = 0; F < 16; ++F) {
            bool ok = true;
            Monomial beta = alpha;
            for (int v = 0; v < 4 && ok; ++v)
                if (F >> v & 1) {
                    if (beta.e[v] == 0)
                        ok = false;
                    else
                        beta.e[v] -= 1;
                }
            face[F] = ok && member(beta);
            if (ok && !face[F]) full = false;
        }
        if (full) continue;  // a full simplex is acyclic
        auto h = reduced_homology(face);
        for (int s = 0; s <= 4; ++s)
            if (h[s] > 0 && s + 1 < 5) bound[s + 1] = std::max(bound[s + 1], alpha.degree());
    }
    return bound;
}

}  // namespace fol

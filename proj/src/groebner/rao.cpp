#include "fol/rao.hpp"

#include "fol/errors.hpp"
#include "fol/hilbert.hpp"
#include "fol/matrix.hpp"

#include <algorithm>

namespace fol {

namespace {

struct DualLayout {
    std::vector<int> offset;
    int size = 0;
};

// Hom(F, S)_e = sum_j S_{e + a_j}
DualLayout dual_layout(const std::vector<int>& degs, int e) {
    DualLayout L;
    for (int a : degs) {
        if (e + a < 0) {
            L.offset.push_back(-1);
            continue;
        }
        L.offset.push_back(L.size);
        L.size += static_cast<int>(graded_piece_dimension(e + a));
    }
    return L;
}

// Rank of the transpose of maps[i-1] : F_i -> F_{i-1} in degree e.
long dual_rank(const FreeResolution& res, std::size_t i, int e) {
    if (i >= res.layers.size() || res.layers[i].empty()) return 0;
    const auto& src = res.layers[i - 1];
    const auto& dst = res.layers[i];
    DualLayout target = dual_layout(dst, e);
    std::vector<SparseVec> images;
    for (std::size_t r = 0; r < src.size(); ++r) {
        if (e + src[r] < 0) continue;
        for (const auto& m : monomials_of_degree(e + src[r])) {
            SparseVec v;
            for (std::size_t j = 0; j < dst.size(); ++j) {
                const Poly& entry = res.maps[i - 1].columns[j][r];
                if (entry.is_zero() || target.offset[j] < 0) continue;
                std::size_t start = v.size();
                for (const auto& t : entry.terms()) v.emplace_back(target.offset[j] + monomial_index(t.m * m), t.c);
                std::sort(v.begin() + start, v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            }
            if (!v.empty()) images.push_back(std::move(v));
        }
    }
    return sparse_rank(images);
}

}  // namespace

long ext3_dimension(const FreeResolution& res, int e) {
    if (res.layers.size() <= 3) return 0;
    long hom3 = dual_layout(res.layers[3], e).size;
    if (hom3 == 0) return 0;
    return hom3 - dual_rank(res, 4, e) - dual_rank(res, 3, e);
}

RaoWindow default_rao_window(const GradedIdeal& I) {
    return {-I.max_generator_degree(), 3 + I.sum_generator_degrees()};
}

RaoProfile rao_module_dimensions(const GradedIdeal& I, std::optional<RaoWindow> window) {
    HilbertPolynomial P = hilbert_polynomial(I);
    if (P.degree() != 1) fail(ErrorKind::NotACurve, "S/I has Hilbert polynomial " + P.to_string() + ", not of degree 1");
    RaoWindow w = window.value_or(default_rao_window(I));
    if (w.lo > w.hi) fail(ErrorKind::InvalidArgument, "empty Rao window");

    FreeResolution res = complete_free_resolution(I);

    RaoProfile out;
    out.window = w;
    for (int k = w.lo; k <= w.hi; ++k) {
        long h = ext3_dimension(res, -k - 4);
        if (h == 0) continue;
        if (k == w.lo || k == w.hi)
            fail(ErrorKind::WindowTooSmall, "h^1(I_C(" + std::to_string(k) + ")) = " + std::to_string(h) +
                                                " is nonzero at the window endpoint [" + std::to_string(w.lo) + ", " +
                                                std::to_string(w.hi) + "]");
        out.profile[k] = h;
        out.total += h;
    }
    return out;
}

}  // namespace fol

#pragma once

#include "fol/groebner.hpp"
#include "fol/syzygy.hpp"

#include <string>
#include <vector>

namespace fol {

// Map F_i -> F_{i-1} of free modules; column j is the image of the j-th
// generator of F_i. Entry (row r, column j) has degree a_j - b_r, and is zero
// whenever that is negative.
struct GradedMap {
    std::vector<PolyVector> columns;
};

struct FreeResolution {
    // layers[i][j] = internal degree a of the j-th generator of F_i = sum S(-a).
    std::vector<std::vector<int>> layers;
    // maps[i] : F_{i+1} -> F_i.
    std::vector<GradedMap> maps;
    int degree_bound = 0;

    std::vector<std::vector<int>> twists() const;  // layers with sign flipped
    long rank_in_degree(std::size_t i, int k) const;
    std::string betti_table() const;
};

// Minimal graded free resolution of S/I, complete in internal degrees <= B.
// Requires B >= max generator degree + 4.
FreeResolution minimal_free_resolution(const GradedIdeal& I, int degree_bound);

// Upper bounds on the generator degrees of F_0..F_4 in a minimal resolution of
// S/I, from the Betti numbers of the lead-term ideal (which dominate those of I).
std::vector<int> resolution_degree_bounds(const GradedIdeal& I);

// Resolution with degree bound max(max generator degree + 4, all of the above),
// hence containing every generator of F_0..F_4.
FreeResolution complete_free_resolution(const GradedIdeal& I);

// The composite F_{i+1} -> F_i -> F_{i-1} is identically zero for every i.
bool compositions_vanish(const FreeResolution& res);

// Rank of maps[i] : F_{i+1} -> F_i restricted to internal degree k.
long map_rank_in_degree(const FreeResolution& res, std::size_t i, int k);

// sum_i (-1)^i dim (F_i)_k
long alternating_sum(const FreeResolution& res, int k);

}  // namespace fol

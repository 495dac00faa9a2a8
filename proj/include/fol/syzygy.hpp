#pragma once

#include "fol/polynomial.hpp"

#include <vector>

namespace fol {

using PolyVector = std::vector<Poly>;

// Slot i is the summand S(weights[i]) mapping to S(w) by row[i]; all
// weights[i] + deg(row[i]) must agree (DegreeMismatch otherwise). Returns a
// basis of the tuples (g_i), deg g_i = target_degree + weights[i], with
// sum g_i row[i] = 0. Slots of negative degree hold zero.
std::vector<PolyVector> graded_syzygies(const std::vector<Poly>& row, const std::vector<int>& weights, int target_degree);

// True when every column of a lies in the span of b (degree by degree, exactly).
bool span_contains(const std::vector<PolyVector>& b, const std::vector<PolyVector>& a);

}  // namespace fol

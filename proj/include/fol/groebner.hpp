#pragma once

#include "fol/polynomial.hpp"

#include <cstddef>
#include <memory>
#include <vector>

namespace fol {

struct GroebnerOptions {
    std::size_t max_pairs = 100000;  // total S-pairs ever queued
    int max_degree = -1;             // ignore pairs above this degree when >= 0
};

// Reduced degrevlex Groebner basis, sorted by degree then descending lead term.
// Throws ResourceLimit when the pair queue exceeds the cap.
std::vector<Poly> buchberger(const std::vector<Poly>& generators, const GroebnerOptions& opts = {});

// Full reduction of f by G (G need not be a Groebner basis).
Poly normal_form(const Poly& f, const std::vector<Poly>& G);

// Minimal generators of the monomial ideal spanned by ms.
std::vector<Monomial> minimalize(std::vector<Monomial> ms);

class GradedIdeal {
public:
    GradedIdeal() : GradedIdeal(std::vector<Poly>{}) {}
    explicit GradedIdeal(std::vector<Poly> generators, GroebnerOptions opts = {});

    const std::vector<Poly>& generators() const { return gens_; }
    int max_generator_degree() const;
    int sum_generator_degrees() const;

    // Computed once, then shared by copies of this ideal.
    const std::vector<Poly>& groebner_basis() const;
    std::vector<Monomial> lead_terms() const;

    bool contains(const Poly& f) const;
    // Basis of I_k whose lead terms are exactly the degree-k monomials of in(I).
    std::vector<Poly> graded_basis(int k) const;
    bool is_unit() const;

private:
    struct Cache;
    std::vector<Poly> gens_;
    GroebnerOptions opts_;
    std::shared_ptr<Cache> cache_;
};

// Parses an ideal file body: one generator per line, '#' starts a comment.
GradedIdeal parse_ideal(const std::string& text);

}  // namespace fol

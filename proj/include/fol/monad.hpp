#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fol {

// Symmetric template 0 -> (+) O(-c_i) -> (+) O(-b_j) (+) O(b_j) -> (+) O(c_i) -> 0,
// 1 <= c_1 <= ... <= c_s and b_1 <= ... <= b_{s+1}.
struct MonadTemplate {
    std::vector<int> c;
    std::vector<int> b;
    bool operator==(const MonadTemplate&) const = default;
};

// Twists of the three split bundles, each kept sorted.
struct MonadSpec {
    std::vector<int> left;
    std::vector<int> middle;
    std::vector<int> right;
    std::optional<MonadTemplate> tmpl;

    // Raw multisets; no template claim is recorded.
    static MonadSpec raw(std::vector<int> left, std::vector<int> middle, std::vector<int> right);
    // InvalidArgument unless c, b are sorted, c_1 >= 1 and |b| = |c| + 1.
    static MonadSpec from_template(std::vector<int> c, std::vector<int> b);

    int cohomology_rank() const;

    nlohmann::json to_json() const;
    // InvalidArgument on missing fields or a template that disagrees with the multisets.
    static MonadSpec from_json(const nlohmann::json& j);
};

// The template this raw spec would match, if any.
std::optional<MonadTemplate> detect_template(const MonadSpec& spec);

struct MonadChern {
    int rank = 0;
    long c1 = 0, c2 = 0, c3 = 0;
    bool operator==(const MonadChern&) const = default;
};

// c(E) = c(middle) / (c(left) c(right)) truncated at degree 3. InvalidArgument
// when the cohomology rank is below 1, NonIntegralChern if the quotient series
// is not integral, CrossCheckFailure if a template spec gives c1 != 0.
MonadChern monad_chern(const MonadSpec& spec);

// 2 c_s + b_3 + ... + b_{s+1} + c_1 + ... + c_s - 2; NotTemplateMode for raw specs.
long monad_regularity_bound(const MonadSpec& spec);

// c = [1]^n, b = [0]^(n+1); InvalidArgument for n < 1.
MonadSpec instanton_monad(int n);

// The monads used in the degree-2 and regularity arguments, kept as raw multisets.
MonadSpec bad_monad_1();
MonadSpec bad_monad_2();
MonadSpec exceptional_monad();

// Reads a MonadSpec JSON document; SyntaxError on malformed JSON.
MonadSpec parse_monad(const std::string& text);

}  // namespace fol

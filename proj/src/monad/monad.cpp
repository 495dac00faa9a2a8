#include "fol/monad.hpp"

#include "fol/errors.hpp"
#include "fol/rational.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace fol {

namespace {

using Series = std::array<Rational, 4>;  // coefficients of 1, h, h^2, h^3

Series total_chern(const std::vector<int>& twists) {
    Series s{1, 0, 0, 0};
    for (int a : twists)
        for (int i = 3; i >= 1; --i) s[i] += a * s[i - 1];
    return s;
}

Series mul(const Series& a, const Series& b) {
    Series r{0, 0, 0, 0};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; i + j < 4; ++j) r[i + j] += a[i] * b[j];
    return r;
}

// a / b for b with constant term 1.
Series div(const Series& a, const Series& b) {
    Series q{0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
        Rational v = a[i];
        for (int j = 1; j <= i; ++j) v -= b[j] * q[i - j];
        q[i] = v / b[0];
    }
    return q;
}

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<int> template_middle(const MonadTemplate& t) {
    std::vector<int> m;
    for (int b : t.b) {
        m.push_back(-b);
        m.push_back(b);
    }
    return sorted(m);
}

void check_template(const MonadTemplate& t) {
    if (t.c.empty()) fail(ErrorKind::InvalidArgument, "template needs s >= 1");
    if (t.b.size() != t.c.size() + 1) fail(ErrorKind::InvalidArgument, "template needs s + 1 values b_j");
    if (!std::is_sorted(t.c.begin(), t.c.end()) || !std::is_sorted(t.b.begin(), t.b.end()))
        fail(ErrorKind::InvalidArgument, "template lists must be non-decreasing");
    if (t.c.front() < 1) fail(ErrorKind::InvalidArgument, "template needs c_1 >= 1");
}

std::vector<int> int_list(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) fail(ErrorKind::InvalidArgument, std::string("missing list '") + key + "'");
    std::vector<int> v;
    for (const auto& x : j[key]) {
        if (!x.is_number_integer()) fail(ErrorKind::InvalidArgument, std::string("non-integer twist in '") + key + "'");
        v.push_back(x.get<int>());
    }
    return v;
}

}  // namespace

MonadSpec MonadSpec::raw(std::vector<int> left, std::vector<int> middle, std::vector<int> right) {
    MonadSpec s;
    s.left = sorted(std::move(left));
    s.middle = sorted(std::move(middle));
    s.right = sorted(std::move(right));
    return s;
}

MonadSpec MonadSpec::from_template(std::vector<int> c, std::vector<int> b) {
    MonadTemplate t{std::move(c), std::move(b)};
    check_template(t);
    MonadSpec s;
    for (int ci : t.c) {
        s.left.push_back(-ci);
        s.right.push_back(ci);
    }
    s.left = sorted(s.left);
    s.middle = template_middle(t);
    s.tmpl = std::move(t);
    return s;
}

int MonadSpec::cohomology_rank() const {
    return static_cast<int>(middle.size()) - static_cast<int>(left.size()) - static_cast<int>(right.size());
}

nlohmann::json MonadSpec::to_json() const {
    nlohmann::json j{{"left", left}, {"middle", middle}, {"right", right}};
    if (tmpl) j["template"] = {{"c", tmpl->c}, {"b", tmpl->b}};
    return j;
}

MonadSpec MonadSpec::from_json(const nlohmann::json& j) {
    if (!j.is_object()) fail(ErrorKind::InvalidArgument, "monad spec must be a JSON object");
    MonadSpec s = raw(int_list(j, "left"), int_list(j, "middle"), int_list(j, "right"));
    if (j.contains("template")) {
        const auto& t = j["template"];
        MonadSpec expected = from_template(int_list(t, "c"), int_list(t, "b"));
        if (expected.left != s.left || expected.middle != s.middle || expected.right != s.right)
            fail(ErrorKind::InvalidArgument, "template fields disagree with the twist multisets");
        s.tmpl = expected.tmpl;
    }
    return s;
}

std::optional<MonadTemplate> detect_template(const MonadSpec& spec) {
    std::size_t s = spec.right.size();
    if (s == 0 || spec.left.size() != s || spec.middle.size() != 2 * (s + 1)) return std::nullopt;
    MonadTemplate t;
    t.c = spec.right;
    std::vector<int> neg;
    for (int c : t.c) neg.push_back(-c);
    if (sorted(neg) != spec.left) return std::nullopt;
    // middle is symmetric about 0; its upper half (with zeros split evenly) gives b.
    std::size_t half = s + 1;
    t.b.assign(spec.middle.begin() + half, spec.middle.end());
    try {
        check_template(t);
    } catch (const Error&) {
        return std::nullopt;
    }
    if (template_middle(t) != spec.middle) return std::nullopt;
    return t;
}

MonadChern monad_chern(const MonadSpec& spec) {
    int rank = spec.cohomology_rank();
    if (rank < 1) fail(ErrorKind::InvalidArgument, "monad cohomology rank is " + std::to_string(rank) + ", need at least 1");
    Series q = div(total_chern(spec.middle), mul(total_chern(spec.left), total_chern(spec.right)));
    for (int i = 1; i < 4; ++i)
        if (!is_integer(q[i]))
            fail(ErrorKind::NonIntegralChern, "c" + std::to_string(i) + " of the monad is " + to_string(q[i]));
    MonadChern r{rank, to_long(q[1]), to_long(q[2]), to_long(q[3])};
    if (spec.tmpl && r.c1 != 0) fail(ErrorKind::CrossCheckFailure, "template monad with c1 = " + std::to_string(r.c1));
    return r;
}

long monad_regularity_bound(const MonadSpec& spec) {
    if (!spec.tmpl) fail(ErrorKind::NotTemplateMode, "regularity bound needs a monad in template mode");
    const auto& c = spec.tmpl->c;
    const auto& b = spec.tmpl->b;
    long v = 2L * c.back() - 2;
    for (std::size_t j = 2; j < b.size(); ++j) v += b[j];
    return std::accumulate(c.begin(), c.end(), v);
}

MonadSpec instanton_monad(int n) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "instanton charge must be positive");
    return MonadSpec::from_template(std::vector<int>(n, 1), std::vector<int>(n + 1, 0));
}

MonadSpec bad_monad_1() { return MonadSpec::raw({-2, -2, -1}, {-1, -1, -1, 0, 0, 0, 0, 1, 1, 1}, {1, 2, 2}); }

MonadSpec bad_monad_2() { return MonadSpec::raw({-3, -1}, {-2, 0, 0, 0, 0, 2}, {1, 3}); }

MonadSpec exceptional_monad() { return MonadSpec::raw({-2}, {-1, -1, 0, 0}, {1}); }

MonadSpec parse_monad(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::SyntaxError, std::string("monad spec: ") + e.what());
    }
    return MonadSpec::from_json(j);
}

}  // namespace fol

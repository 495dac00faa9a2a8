#include "fol/cli.hpp"

#include "fol/errors.hpp"
#include "fol/forms.hpp"
#include "fol/hilbert.hpp"
#include "fol/monad.hpp"
#include "fol/parse.hpp"
#include "fol/rao.hpp"
#include "fol/resolution.hpp"
#include "fol/sheafcoh.hpp"
#include "fol/syzygy.hpp"
#include "fol/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

namespace fol::cli {

nlohmann::json CommandResult::to_json() const {
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : flags) fs.push_back(f.to_json());
    return {{"status", exit_code == kRejected ? "error" : "ok"}, {"payload", payload}, {"flags", fs}, {"elapsed", elapsed}};
}

CommandResult run(const std::function<CommandResult()>& body) {
    auto start = std::chrono::steady_clock::now();
    CommandResult r;
    try {
        r = body();
    } catch (const Error& e) {
        r = CommandResult{};
        r.exit_code = kRejected;
        r.payload = {{"error", e.kind_name()}, {"message", e.what()}};
        r.text = std::string("error (") + e.kind_name() + "): " + e.what() + "\n";
    }
    r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

void Table::row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

std::string Table::str() const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_)
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (width.size() <= i) width.push_back(0);
            width[i] = std::max(width[i], r[i].size());
        }
    std::ostringstream os;
    for (const auto& r : rows_) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
        }
        os << line << "\n";
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

std::string show(const nlohmann::json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string flags_text(const std::vector<DiscrepancyFlag>& flags) {
    if (flags.empty()) return "";
    Table t;
    t.row({"flag", "computed", "stated", "claim"});
    for (const auto& f : flags) t.row({f.location, show(f.computed), show(f.stated), f.claim});
    return "\n" + t.str();
}

long parse_long(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) fail(ErrorKind::InvalidArgument, "malformed " + what + " '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) {
        cur.erase(0, cur.find_first_not_of(" \t"));
        cur.erase(cur.find_last_not_of(" \t") + 1);
        out.push_back(cur);
    }
    return out;
}

nlohmann::json rao_json(const RaoProfile& p) {
    nlohmann::json prof = nlohmann::json::object();
    for (const auto& [k, v] : p.profile) prof[std::to_string(k)] = v;
    return {{"profile", prof}, {"total", p.total}};
}

std::string rao_text(const RaoProfile& p) {
    if (p.profile.empty()) return "{}";
    std::string s = "{";
    for (const auto& [k, v] : p.profile) s += (s.size() > 1 ? ", " : "") + std::to_string(k) + ": " + std::to_string(v);
    return s + "}";
}

std::string opt_text(const nlohmann::json& j) { return j.is_null() ? "-" : show(j); }

}  // namespace

CommandResult cmd_classify(int d, long c2N, bool reduced) {
    ClassificationReport rep = classify_low_degree(d, c2N, reduced);
    CommandResult r;
    r.payload = rep.to_json();
    r.flags = rep.flags;
    Table t;
    t.row({"degree", std::to_string(d)});
    t.row({"c2(N*)", std::to_string(c2N)});
    t.row({"verdict", verdict_name(rep.kind)});
    if (rep.kind == VerdictKind::Split)
        t.row({"conormal", "O(" + std::to_string(rep.split.first) + ") + O(" + std::to_string(rep.split.second) + ")"});
    else t.row({"charge", std::to_string(rep.charge)});
    if (rep.invariants)
        t.row({"curve (deg, p_a)", "(" + std::to_string(rep.invariants->degC) + ", " +
                                       (rep.invariants->paC ? std::to_string(*rep.invariants->paC) : "-") + ")"});
    const auto& j = r.payload;
    t.row({"components", opt_text(j["components"])});
    t.row({"dim M", opt_text(j["dim_M"])});
    t.row({"h0(O_C)", opt_text(j["h0_OC"])});
    for (const auto& c : rep.constraints) t.row({"constraint", c});
    r.text = t.str();
    if (!rep.profiles.empty()) {
        Table p;
        p.row({"h0(E(1))", "dim M", "h0(O_C)", "components", "natural"});
        for (const auto& pr : rep.profiles)
            p.row({std::to_string(pr.h0_E1), std::to_string(pr.dim_M), std::to_string(pr.h0_OC),
                   std::to_string(pr.components), pr.natural ? "yes" : "no"});
        r.text += "\n" + p.str();
    }
    r.text += flags_text(r.flags);
    return r;
}

CommandResult cmd_wedge(const std::string& a_text, const std::optional<std::string>& b_text, bool invariants, bool rao,
                        std::optional<int> sample, std::uint64_t seed) {
    TwistedForm a = parse_form(a_text);
    std::optional<FoliationPresentation> fp;
    int draws = 0;
    if (sample) {
        if (*sample < 1) fail(ErrorKind::InvalidArgument, "--sample needs a coefficient degree >= 1");
        FormSampler s(seed);
        // Same redraw budget as the legendrian sampler: 1 draw + 20 redraws.
        for (draws = 1; draws <= 21 && !fp; ++draws) {
            TwistedForm b = s.projective_one_form(*sample);
            try {
                FoliationPresentation cand = foliation_from_pair(a, b);
                if (hilbert_polynomial(cand.singular).degree() == 1) fp = std::move(cand);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::ProportionalInput) throw;
            }
        }
        --draws;
        if (!fp) fail(ErrorKind::SamplingFailed, "no sample with a one-dimensional singular scheme in 21 draws");
    } else {
        if (!b_text) fail(ErrorKind::InvalidArgument, "wedge needs two forms or --sample");
        fp = foliation_from_pair(a, parse_form(*b_text));
    }

    CommandResult r;
    r.payload = {{"wedge", fp->omega.to_string()}, {"degree", fp->degree}};
    if (fp->conormal) r.payload["conormal"] = {fp->conormal->first, fp->conormal->second};
    if (sample) r.payload["sample"] = {{"seed", seed}, {"draws", draws}};
    Table t;
    t.row({"wedge", fp->omega.to_string()});
    t.row({"foliation degree", std::to_string(fp->degree)});
    if (fp->conormal)
        t.row({"conormal", "O(" + std::to_string(fp->conormal->first) + ") + O(" + std::to_string(fp->conormal->second) + ")"});
    if (invariants) {
        HilbertPolynomial P = hilbert_polynomial(fp->singular);
        CurveInvariants inv = curve_invariants(P);
        r.payload["hilbert_polynomial"] = P.to_string();
        r.payload["curve"] = {{"degree", inv.degree}, {"genus", inv.genus}};
        t.row({"Hilbert polynomial", P.to_string()});
        t.row({"curve (deg, p_a)", "(" + std::to_string(inv.degree) + ", " + std::to_string(inv.genus) + ")"});
    }
    if (rao) {
        RaoProfile p = rao_module_dimensions(fp->singular);
        r.payload["rao"] = rao_json(p);
        t.row({"Rao profile", rao_text(p)});
        t.row({"Rao total", std::to_string(p.total)});
    }
    r.text = t.str();
    return r;
}

CommandResult cmd_verify(const std::string& suite, std::uint64_t seed) {
    auto results = run_suite(suite, seed);
    CommandResult r;
    nlohmann::json list = nlohmann::json::array();
    Table t;
    bool all = true;
    for (const auto& c : results) {
        list.push_back(c.to_json());
        for (const auto& f : c.flags) r.flags.push_back(f);
        std::string status = c.passed ? (c.report_only ? "REPORT" : "PASS") : "FAIL";
        all = all && c.passed;
        t.row({status, std::to_string(c.id), c.title, c.failures.empty() ? "" : c.failures.front()});
    }
    r.payload = {{"suite", suite}, {"seed", seed}, {"criteria", list}, {"passed", all}};
    r.text = t.str() + flags_text(r.flags);
    if (!all) r.exit_code = kVerificationFailure;
    return r;
}

CommandResult cmd_hilbert(const std::string& ideal_text) {
    GradedIdeal I = parse_ideal(ideal_text);
    HilbertPolynomial P = hilbert_polynomial(I);
    CommandResult r;
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : P.power_coefficients()) coeffs.push_back(to_string(c));
    r.payload = {{"hilbert_polynomial", P.to_string()}, {"coefficients", coeffs}, {"dimension", P.degree()},
                 {"regularity_index", P.regularity_index()}};
    Table t;
    t.row({"Hilbert polynomial", P.to_string()});
    t.row({"projective dimension", std::to_string(P.degree())});
    if (P.degree() == 1) {
        CurveInvariants inv = curve_invariants(P);
        r.payload["curve"] = {{"degree", inv.degree}, {"genus", inv.genus}};
        t.row({"curve (deg, p_a)", "(" + std::to_string(inv.degree) + ", " + std::to_string(inv.genus) + ")"});
    }
    r.text = t.str();
    return r;
}

CommandResult cmd_rao(const std::string& ideal_text) {
    GradedIdeal I = parse_ideal(ideal_text);
    RaoProfile p = rao_module_dimensions(I);
    FreeResolution res = complete_free_resolution(I);
    CommandResult r;
    nlohmann::json betti = nlohmann::json::array();
    auto tw = res.twists();
    for (std::size_t i = 0; i < tw.size(); ++i) betti.push_back({i, tw[i]});
    r.payload = rao_json(p);
    r.payload["window"] = {p.window.lo, p.window.hi};
    r.payload["betti"] = betti;
    Table t;
    t.row({"Rao profile", rao_text(p)});
    t.row({"Rao total", std::to_string(p.total)});
    t.row({"window", "[" + std::to_string(p.window.lo) + ", " + std::to_string(p.window.hi) + "]"});
    r.text = t.str() + "\n" + res.betti_table();
    return r;
}

CommandResult cmd_syzygy(const std::string& row_text, const std::string& weights_text, int degree) {
    auto row = parse_polynomial_list(row_text);
    std::vector<int> weights;
    for (const auto& w : split(weights_text, ',')) weights.push_back(static_cast<int>(parse_long(w, "weight")));
    if (weights.size() != row.size()) fail(ErrorKind::InvalidArgument, "row and weights differ in length");
    auto syz = graded_syzygies(row, weights, degree);
    CommandResult r;
    nlohmann::json cols = nlohmann::json::array();
    Table t;
    for (const auto& col : syz) {
        nlohmann::json c = nlohmann::json::array();
        std::vector<std::string> cells;
        for (const auto& p : col) {
            c.push_back(p.to_string());
            cells.push_back(p.to_string());
        }
        cols.push_back(c);
        t.row(cells);
    }
    r.payload = {{"dimension", syz.size()}, {"basis", cols}};
    r.text = "dimension " + std::to_string(syz.size()) + "\n" + t.str();
    return r;
}

CommandResult cmd_chi(int rank, long c1, long c2, long c3, long twist) {
    long chi = euler_characteristic(rank, {c1, c2, c3}, twist);
    CommandResult r;
    r.payload = {{"rank", rank}, {"chern", {c1, c2, c3}}, {"twist", twist}, {"chi", chi}};
    Table t;
    t.row({"rank", std::to_string(rank)});
    t.row({"(c1, c2, c3)", "(" + std::to_string(c1) + ", " + std::to_string(c2) + ", " + std::to_string(c3) + ")"});
    t.row({"twist", std::to_string(twist)});
    t.row({"chi", std::to_string(chi)});
    r.text = t.str();
    return r;
}

CommandResult cmd_cohomology(const std::string& kind, const std::string& range) {
    auto parts = split(kind, ':');
    SheafSymbol sym;
    if (parts[0] == "line" && parts.size() == 2) {
        std::vector<int> tw;
        for (const auto& a : split(parts[1], ',')) tw.push_back(static_cast<int>(parse_long(a, "twist")));
        sym = SheafSymbol::line_sum(tw);
    } else if (parts[0] == "cotangent" && parts.size() == 1) {
        sym = SheafSymbol::cotangent();
    } else if (parts[0] == "null-correlation" && parts.size() == 1) {
        sym = SheafSymbol::null_correlation();
    } else if (parts[0] == "instanton" && (parts.size() == 2 || parts.size() == 3)) {
        int n = static_cast<int>(parse_long(parts[1], "charge"));
        std::optional<long> h0;
        if (parts.size() == 3) h0 = parse_long(parts[2], "h0(E(1))");
        sym = SheafSymbol::instanton(n, h0);
    } else {
        fail(ErrorKind::InvalidArgument,
             "sheaf kind must be line:a[,b,...], cotangent, null-correlation or instanton:n[:h0]");
    }
    auto dots = range.find("..");
    if (dots == std::string::npos) fail(ErrorKind::InvalidArgument, "twist range must look like lo..hi");
    long lo = parse_long(range.substr(0, dots), "twist"), hi = parse_long(range.substr(dots + 2), "twist");
    CohomologyTable tab = cohomology_table(sym, lo, hi);
    CommandResult r;
    r.payload = tab.to_json();
    r.payload["kind"] = kind;
    Table t;
    t.row({"k", "h0", "h1", "h2", "h3", "source"});
    for (const auto& [k, row] : tab.rows) {
        std::string src;
        for (int i = 0; i < 4; ++i)
            if (row.h[i] != 0) src += (src.empty() ? "" : " ") + std::string(provenance_name(row.source[i]));
        t.row({std::to_string(k), std::to_string(row.h[0]), std::to_string(row.h[1]), std::to_string(row.h[2]),
               std::to_string(row.h[3]), src});
    }
    r.text = t.str();
    return r;
}

CommandResult cmd_monad(const std::string& spec_text, bool regularity) {
    MonadSpec spec = parse_monad(spec_text);
    MonadChern ch = monad_chern(spec);
    CommandResult r;
    r.payload = {{"spec", spec.to_json()},
                 {"rank", ch.rank},
                 {"chern", {ch.c1, ch.c2, ch.c3}},
                 {"template_mode", spec.tmpl.has_value()}};
    Table t;
    t.row({"rank", std::to_string(ch.rank)});
    t.row({"(c1, c2, c3)", "(" + std::to_string(ch.c1) + ", " + std::to_string(ch.c2) + ", " + std::to_string(ch.c3) + ")"});
    if (!spec.tmpl) {
        if (auto fits = detect_template(spec))
            r.payload["matching_template"] = {{"c", fits->c}, {"b", fits->b}};
    }
    if (ch.rank != 2) {
        DiscrepancyFlag f;
        f.claim = "the monad cohomology is a rank-2 bundle";
        f.computed = ch.rank;
        f.stated = 2;
        f.location = "monad cohomology rank";
        r.flags.push_back(f);
    }
    if (regularity) {
        long reg = monad_regularity_bound(spec);
        r.payload["regularity"] = reg;
        t.row({"regular from", std::to_string(reg)});
    }
    r.text = t.str() + flags_text(r.flags);
    return r;
}

CommandResult cmd_moduli(const std::string& kind, long n) {
    CommandResult r;
    Table t;
    if (kind == "legendrian") {
        long dim = legendrian_moduli_dim(n);
        r.payload = {{"kind", kind}, {"d", n}, {"dimension", dim}};
        t.row({"legendrian degree", std::to_string(n)});
        t.row({"dimension", std::to_string(dim)});
    } else if (kind == "nc") {
        NcModuli m = nc_moduli_dim(n);
        r.payload = {{"kind", kind}, {"k", n}, {"stated", m.stated}, {"derived", m.derived}, {"flag", m.flag}};
        if (m.flag) r.flags.push_back(nc_moduli_flag(n));
        t.row({"k", std::to_string(n)});
        t.row({"foliation degree", std::to_string(2 * n + 1)});
        t.row({"closed form", std::to_string(m.stated)});
        t.row({"5 + hom - 1", std::to_string(m.derived)});
    } else {
        fail(ErrorKind::InvalidArgument, "moduli kind must be 'legendrian' or 'nc'");
    }
    r.text = t.str() + flags_text(r.flags);
    return r;
}

CommandResult cmd_invariants(int d, long c2N) {
    FoliationInvariants inv = invariants_from_c2(d, c2N, true);
    CommandResult r;
    r.payload = inv.to_json();
    Table t;
    t.row({"d", std::to_string(d)});
    t.row({"c1(N*)", std::to_string(inv.c1N)});
    t.row({"c2(N*)", std::to_string(inv.c2N)});
    t.row({"deg C", std::to_string(inv.degC)});
    t.row({"p_a(C)", inv.paC ? std::to_string(*inv.paC) : "-"});
    r.text = t.str();
    return r;
}

}  // namespace fol::cli

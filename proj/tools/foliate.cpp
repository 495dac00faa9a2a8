#include "fol/cli.hpp"
#include "fol/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace fol::cli;

int main(int argc, char** argv) {
    CLI::App app{"foliate: foliations by curves on P^3"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json = false;
    std::uint64_t seed = fol::kDefaultSeed;
    app.add_flag("--json", json, "Emit the JSON envelope instead of tables");
    app.add_option("--seed", seed, "Seed for random samples")->capture_default_str();

    std::function<CommandResult()> command;

    auto* classify = app.add_subcommand("classify", "Classify degree d foliations with given c2(N*)");
    int cl_d = 0;
    long cl_c2 = 0;
    bool cl_reduced = false;
    classify->add_option("d", cl_d)->required();
    classify->add_option("c2", cl_c2)->required();
    classify->add_flag("--reduced", cl_reduced, "Singular scheme is reduced");
    classify->callback([&] { command = [&] { return cmd_classify(cl_d, cl_c2, cl_reduced); }; });

    auto* wedge = app.add_subcommand("wedge", "Foliation cut out by two projective 1-forms");
    std::string w_a;
    std::optional<std::string> w_b;
    bool w_inv = false, w_rao = false;
    std::optional<int> w_sample;
    wedge->add_option("a", w_a)->required();
    wedge->add_option("b", w_b);
    wedge->add_flag("--invariants", w_inv, "Degree and genus of the singular curve");
    wedge->add_flag("--rao", w_rao, "Rao module dimensions");
    wedge->add_option("--sample", w_sample, "Use a random 1-form with coefficients of this degree as b");
    wedge->callback([&] { command = [&] { return cmd_wedge(w_a, w_b, w_inv, w_rao, w_sample, seed); }; });

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    std::string v_suite = "all";
    verify->add_option("--suite", v_suite)->check(CLI::IsMember(fol::suite_names()))->capture_default_str();
    verify->callback([&] { command = [&] { return cmd_verify(v_suite, seed); }; });

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert polynomial of an ideal file");
    std::string h_file;
    hilbert->add_option("file", h_file)->required();
    hilbert->callback([&] { command = [&] { return cmd_hilbert(read_file(h_file)); }; });

    auto* rao = app.add_subcommand("rao", "Rao module dimensions of a curve ideal file");
    std::string r_file;
    rao->add_option("file", r_file)->required();
    rao->callback([&] { command = [&] { return cmd_rao(read_file(r_file)); }; });

    auto* syzygy = app.add_subcommand("syzygy", "Graded syzygies of a row of polynomials");
    std::string s_row, s_weights;
    int s_degree = 0;
    syzygy->add_option("row", s_row)->required();
    syzygy->add_option("weights", s_weights)->required();
    syzygy->add_option("degree", s_degree)->required();
    syzygy->callback([&] { command = [&] { return cmd_syzygy(s_row, s_weights, s_degree); }; });

    auto* chi = app.add_subcommand("chi", "Euler characteristic chi(E(t)) for rank 1 or 2");
    int c_rank = 0;
    long c_1 = 0, c_2 = 0, c_3 = 0, c_t = 0;
    chi->add_option("rank", c_rank)->required();
    chi->add_option("c1", c_1)->required();
    chi->add_option("c2", c_2)->required();
    chi->add_option("c3", c_3)->required();
    chi->add_option("twist", c_t)->required();
    chi->callback([&] { command = [&] { return cmd_chi(c_rank, c_1, c_2, c_3, c_t); }; });

    auto* coh = app.add_subcommand("cohomology", "Cohomology table over a twist range lo..hi");
    std::string k_kind, k_range;
    coh->add_option("kind", k_kind, "line:a[,b...] | cotangent | null-correlation | instanton:n[:h0]")->required();
    coh->add_option("range", k_range, "lo..hi")->required();
    coh->callback([&] { command = [&] { return cmd_cohomology(k_kind, k_range); }; });

    auto* monad = app.add_subcommand("monad", "Chern classes of a monad JSON file");
    std::string m_file;
    bool m_reg = false;
    monad->add_option("file", m_file)->required();
    monad->add_flag("--regularity", m_reg, "Regularity bound (template monads only)");
    monad->callback([&] { command = [&] { return cmd_monad(read_file(m_file), m_reg); }; });

    auto* moduli = app.add_subcommand("moduli", "Moduli dimensions: legendrian d | nc k");
    std::string mo_kind;
    long mo_n = 0;
    moduli->add_option("kind", mo_kind)->required()->check(CLI::IsMember({"legendrian", "nc"}));
    moduli->add_option("n", mo_n)->required();
    moduli->callback([&] { command = [&] { return cmd_moduli(mo_kind, mo_n); }; });

    auto* inv = app.add_subcommand("invariants", "Singular curve invariants from (d, c2(N*))");
    int i_d = 0;
    long i_c2 = 0;
    inv->add_option("d", i_d)->required();
    inv->add_option("c2", i_c2)->required();
    inv->callback([&] { command = [&] { return cmd_invariants(i_d, i_c2); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kRejected;
    }

    CommandResult result = run(command);
    if (json) std::cout << result.to_json().dump(2) << "\n";
    else if (result.exit_code == kRejected) std::cerr << result.text;
    else std::cout << result.text;
    return result.exit_code;
}

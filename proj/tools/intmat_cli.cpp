// Command-line front end: decides membership of rational polynomials in the
// integer-valued polynomial rings over n x n integer matrices (all of
// M_n(Z), matrices with a prescribed characteristic polynomial, triangular
// matrices), reports certificates or counterexample witnesses, and exposes
// the underlying divided-difference, Newton-expansion and null-ideal
// machinery. Exit codes: 0 member/true, 1 non-member/false, 2 error/budget.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "intmat/parse.hpp"
#include "intmat/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"integer-valued polynomials over integer matrix rings"};
    app.require_subcommand(1);

    intmat::Request req;
    std::string budget_text, entry_box_text, d_box_text;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", req.format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--jobs", req.jobs, "worker threads for exhaustive sweeps")->check(CLI::PositiveNumber);
        cmd->add_option("--budget", budget_text, "max candidates for exhaustive sweeps (default 1e8, env INTMAT_BUDGET)");
        cmd->add_option("--seed", req.seed, "seed for randomized commands (reserved; current commands are deterministic)");
    };

    auto* check_mn = app.add_subcommand("check-mn", "decide membership in Int(M_n(Z))");
    check_mn->add_option("--f", req.f_text, "polynomial, e.g. \"(x^2-x)/2\"")->required();
    check_mn->add_option("--n", req.n, "matrix dimension")->required()->check(CLI::PositiveNumber);
    check_mn->add_option("--d-box", d_box_text, "also run the sampled-irreducible necessary check with this coefficient box");
    add_common(check_mn);

    auto* check_mnp = app.add_subcommand("check-mnp", "decide membership in Int(M_n^p(Z), M_n(Z))");
    check_mnp->add_option("--f", req.f_text, "polynomial")->required();
    check_mnp->add_option("--p", req.p_text, "monic characteristic polynomial")->required();
    check_mnp->add_option("--n", req.n, "matrix dimension (must equal deg p)");
    add_common(check_mnp);

    auto* check_tn = app.add_subcommand("check-tn", "decide membership in Int(T_n(Z), M_n(Z))");
    check_tn->add_option("--f", req.f_text, "polynomial")->required();
    check_tn->add_option("--n", req.n, "matrix dimension")->required()->check(CLI::PositiveNumber);
    add_common(check_tn);

    auto* check_closure = app.add_subcommand("check-closure",
                                             "verify that matrices annihilated by an irreducible p are exactly those "
                                             "with characteristic polynomial p, over a finite entry box");
    check_closure->add_option("--p", req.p_text, "monic irreducible polynomial, degree <= 2")->required();
    check_closure->add_option("--entry-box", entry_box_text, "scan matrices with entries in [-box, box] (default 3)");
    add_common(check_closure);

    auto* divdiff = app.add_subcommand("divdiff", "evaluate a divided difference");
    divdiff->add_option("--g", req.g_text, "polynomial")->required();
    divdiff->add_option("--points", req.points_text, "comma-separated points, e.g. 2,3")->required();
    add_common(divdiff);

    auto* newton = app.add_subcommand("newton", "Newton expansion with respect to a node sequence");
    newton->add_option("--g", req.g_text, "polynomial")->required();
    newton->add_option("--nodes", req.nodes_text, "comma-separated nodes")->required();
    add_common(newton);

    auto* nullideal = app.add_subcommand("nullideal", "enumerate annihilating polynomials of a matrix mod d");
    nullideal->add_option("--matrix", req.matrix_text, "matrix literal, e.g. \"[[0,1],[0,0]]\"");
    nullideal->add_option("--p", req.p_text, "monic polynomial; uses its companion matrix");
    nullideal->add_option("--d", req.d, "modulus")->required();
    nullideal->add_option("--bound", req.bound, "degree bound (default 2n-1)");
    add_common(nullideal);

    CLI11_PARSE(app, argc, argv);

    req.command = app.get_subcommands().front()->get_name();
    req.budget = intmat::Budget::from_env();
    try {
        if (!budget_text.empty()) req.budget.max_candidates = std::stoull(budget_text);
        if (!entry_box_text.empty()) req.entry_box = intmat::Int(entry_box_text);
        if (!d_box_text.empty()) req.d_box = intmat::Int(d_box_text);
    } catch (const std::exception& e) {
        std::cerr << "error: bad numeric option: " << e.what() << "\n";
        return 2;
    }

    intmat::RunResult result = intmat::run(req);
    std::cout << result.output;
    return result.exit_code;
}

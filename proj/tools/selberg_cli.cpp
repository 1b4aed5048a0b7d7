#include <iostream>

#include <CLI11.hpp>

#include "selberg/cli.hpp"

int main(int argc, char** argv) {
    using selberg::cli::RunConfig;
    CLI::App app{"Numerical checks for Selberg-class L-functions and the GL(2) converse identities"};
    app.require_subcommand(1);

    RunConfig rc;
    auto common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input) sub->add_option("config", rc.input, "config file")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", rc.out, "CSV output path");
        sub->add_option("--tol", rc.tol, "tolerance for the pass/fail checks");
        sub->add_option("--xmax", rc.xmax, "upper end of the x range");
        sub->add_option("--grid", rc.grid, "evaluation grid (x for fe-check, r for converse-check)")->delimiter(',');
        sub->add_option("--max-terms", rc.max_terms, "cap on series terms");
    };

    common(app.add_subcommand("fe-check", "contour-shift functional-equation residual"), true);
    common(app.add_subcommand("converse-check", "f(r e^{i theta}) = conj f(r^{-1} e^{i theta}) sweep"), true);
    auto* st = app.add_subcommand("stats", "prime-sum statistics");
    common(st, true);
    st->add_flag("--nf", rc.nf, "estimate n_F from the slope of sum |a_p|^2/p");
    st->add_flag("--orth", rc.orth, "orthogonality against --with");
    st->add_flag("--pole", rc.pole, "sum a_p / p^{1+i alpha}");
    st->add_option("--with", rc.with, "second config for --orth")->check(CLI::ExistingFile);
    st->add_option("--alpha", rc.alpha, "alpha for --pole");
    common(app.add_subcommand("degree-audit", "K-coefficient decay and Euler-factor roots"), true);
    common(app.add_subcommand("axioms", "axiom audit"), true);
    common(app.add_subcommand("specfun-test", "special-function identity suite"), false);
    app.add_subcommand("list-builtins", "builtin functions usable in configs");

    CLI11_PARSE(app, argc, argv);
    rc.command = app.get_subcommands().front()->get_name();
    try {
        return selberg::cli::run(rc, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

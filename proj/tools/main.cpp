#include "schurlab/runner.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

void add_common(CLI::App* sub, schurlab::run_config& cfg)
{
    sub->add_option("--workers", cfg.workers, "worker threads (default: SCHURLAB_WORKERS or 1)")
        ->check(CLI::PositiveNumber);
    sub->add_option_function<std::string>(
           "--output",
           [&cfg](const std::string& v) {
               cfg.output = v == "json" ? schurlab::run_config::format::json
                                        : schurlab::run_config::format::text;
           },
           "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out_path, "write the report to FILE instead of stdout");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact verification suites for the Schur expansion of "
                 "sums of e-products, q-log-convexity of sum binomial(n,k)^2 q^k, "
                 "and the log-convexity-preserving transform criterion"};
    app.require_subcommand(1);

    schurlab::run_config cfg;
    using command = schurlab::run_config::command;

    auto* identity = app.add_subcommand("verify-identity",
                                        "check L(r) = sum of admissible s_lam for r = 1..r-max");
    identity->add_option("--r-max", cfg.r_max, "largest r to check")->check(CLI::PositiveNumber);
    add_common(identity, cfg);

    auto* lemmas = app.add_subcommand("verify-lemmas", "check the lemma chain for t = 0..t-max");
    lemmas->add_option("--t-max", cfg.t_max, "largest t to check")
        ->check(CLI::NonNegativeNumber);
    lemmas->add_option("--lemma", cfg.lemma_filter, "restrict to one lemma, 3.2 .. 3.10");
    add_common(lemmas, cfg);

    auto* qlc = app.add_subcommand(
        "verify-qlc", "check nonnegativity of the defects W_{n-1} W_{n+1} - W_n^2");
    qlc->add_option("--n-max", cfg.qlc_n_max, "largest n to check")->check(CLI::PositiveNumber);
    qlc->add_option("--seq", cfg.sequences_path,
                    "JSON file with a polynomial sequence to check as well");
    add_common(qlc, cfg);

    auto* bridge = app.add_subcommand(
        "verify-bridge", "tie defect coefficients to the identity and check shuffle relations");
    bridge->add_option("--n-max", cfg.bridge_n_max, "largest n for the coefficient bridge")
        ->check(CLI::PositiveNumber);
    bridge->add_option("--r-shuffle-max", cfg.shuffle_r_max, "largest r for shuffle relations")
        ->check(CLI::PositiveNumber);
    add_common(bridge, cfg);

    auto* transform = app.add_subcommand(
        "verify-transform", "check the alpha sign-change criterion and preservation corpus");
    transform->add_option("--n-factor", cfg.n_factor,
                          "largest n for factorization and derivative sweeps");
    transform->add_option("--n-sign", cfg.n_sign,
                          "largest n for sign-change and closed-form sweeps");
    transform->add_option("--n-preserve", cfg.n_preserve, "corpus length for preservation");
    transform->add_option("--array", cfg.array_path, "JSON file with a custom triangular array");
    transform->add_option("--corpus", cfg.corpus_path, "JSON file with custom corpus sequences");
    add_common(transform, cfg);

    auto* counter = app.add_subcommand(
        "counterexample", "scan sum binomial(n,k)^m q^k for a negative defect coefficient");
    counter->add_option("--m", cfg.power_m, "exponent m >= 3");
    counter->add_option("--n-max", cfg.power_n_max, "scan bound");
    add_common(counter, cfg);

    auto* expand = app.add_subcommand("expand", "print a Schur expansion");
    expand->add_option("--eproduct", cfg.eproduct_expr, "product of e's, e.g. \"e2*e2\"");
    expand->add_option("--family", cfg.family_expr, "family name, e.g. E1 or T41");
    expand->add_option("--minus", cfg.minus_family, "subtract this family");
    expand->add_option("--t", cfg.family_t, "family parameter t");
    add_common(expand, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (identity->parsed())
        cfg.cmd = command::verify_identity;
    else if (lemmas->parsed())
        cfg.cmd = command::verify_lemmas;
    else if (qlc->parsed())
        cfg.cmd = command::verify_qlc;
    else if (bridge->parsed())
        cfg.cmd = command::verify_bridge;
    else if (transform->parsed())
        cfg.cmd = command::verify_transform;
    else if (counter->parsed())
        cfg.cmd = command::counterexample;
    else if (expand->parsed())
        cfg.cmd = command::expand;

    try {
        const schurlab::run_result res = schurlab::run(cfg);
        if (cfg.out_path.empty())
            std::cout << res.report;
        return res.exit_code;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}

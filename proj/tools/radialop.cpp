// radialop: exact operator algebra for radial differential operators in
// n-dimensional Euclidean space, with numeric cross-checks.
//
//   radialop derive --n symbolic|<int> [--format text|json]
//   radialop verify [--n a..b] [--suite <name>] [--seed <u64>] [--tol <float>]
//                   [--format text|json]
//   radialop eval "<expression>" [--n <int>] [--format text|json]

#include "radialop/report.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"exact algebra of radial differential operators in n dimensions"};
    app.require_subcommand(1);

    std::string format = "text";

    auto* derive = app.add_subcommand("derive", "run the full operator derivation");
    std::string derive_n = "symbolic";
    derive->add_option("--n", derive_n, "dimension: 'symbolic' or a positive integer");
    derive->add_option("--format", format, "output format: text|json");

    auto* verify = app.add_subcommand("verify", "run numeric verification suites");
    std::string verify_n = "1..7";
    std::string suite = "all";
    std::uint64_t seed = 42;
    std::optional<double> tol;
    verify->add_option("--n", verify_n, "dimension range: a..b or a single integer");
    verify->add_option("--suite", suite,
                       "laplacian|divergence|directional|adjoint|metric|all");
    verify->add_option("--seed", seed, "sampling seed");
    verify->add_option("--tol", tol, "override the default tolerance of every record");
    verify->add_option("--format", format, "output format: text|json");

    auto* eval = app.add_subcommand("eval", "parse and canonicalize an operator expression");
    std::string expression;
    std::optional<long long> eval_n;
    eval->add_option("expression", expression, "operator expression")->required();
    eval->add_option("--n", eval_n, "specialize the dimension to a positive integer");
    eval->add_option("--format", format, "output format: text|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and friends exit 0; genuine usage errors exit 2.
        const int code = app.exit(e);
        return code == 0 ? radialop::cli::kExitOk : radialop::cli::kExitUsage;
    }

    try {
        if (derive->parsed())
            return radialop::cli::cmd_derive(derive_n, format, std::cout, std::cerr);
        if (verify->parsed())
            return radialop::cli::cmd_verify(verify_n, suite, seed, tol, format,
                                             std::cout, std::cerr);
        return radialop::cli::cmd_eval(expression, eval_n, format, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return radialop::cli::kExitUsage;
    }
}

#include <cstdint>
#include <iostream>

#include <CLI11.hpp>

#include "polyplan/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Motion planning on polyhedral products of metric groups"};
    app.require_subcommand(1);

    polyplan::TcArgs tc_args;
    CLI::App* tc = app.add_subcommand(
        "tc", "Print the category and topological-complexity values with witnesses");
    tc->add_option("--complex", tc_args.complex_path, "Complex JSON file")->required();
    tc->add_option("--groups", tc_args.groups_path, "Group assignment JSON file")->required();

    polyplan::PlanArgs plan_args;
    CLI::App* plan = app.add_subcommand("plan", "Plan a path between two configurations");
    plan->add_option("--complex", plan_args.complex_path, "Complex JSON file")->required();
    plan->add_option("--groups", plan_args.groups_path, "Group assignment JSON file")->required();
    plan->add_option("--from", plan_args.from_path, "Start configuration JSON file")->required();
    plan->add_option("--to", plan_args.to_path, "End configuration JSON file")->required();
    plan->add_option("--samples", plan_args.samples, "Number of CSV samples (>= 2)")
        ->required()
        ->check(CLI::Range(2L, 100000000L));
    plan->add_option("--out", plan_args.out_path, "Output CSV path")->required();

    polyplan::VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Run the cover verification battery");
    verify->add_option("--complex", verify_args.complex_path, "Complex JSON file")->required();
    verify->add_option("--groups", verify_args.groups_path, "Group assignment JSON file")
        ->required();
    verify->add_option("--trials", verify_args.trials, "Trials per check (>= 1)")
        ->required()
        ->check(CLI::Range(1L, 100000000L));
    verify->add_option("--seed", verify_args.seed, "Random seed")
        ->envname("POLYPLAN_SEED")
        ->default_val(std::uint64_t{0});
    verify->add_option("--out", verify_args.out_path, "Output report JSON path")->required();

    CLI11_PARSE(app, argc, argv);

    if (tc->parsed()) return polyplan::run_tc(tc_args, std::cout, std::cerr);
    if (plan->parsed()) return polyplan::run_plan(plan_args, std::cout, std::cerr);
    return polyplan::run_verify(verify_args, std::cout, std::cerr);
}

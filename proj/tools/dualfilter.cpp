#include "dualfilter/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv) {
  using namespace dualfilter;
  cli::RunConfig config;

  CLI::App app{"Arc-consistency for weighted alldifferent / shortest-path constraints via dual LPs"};
  app.require_subcommand(1);

  const std::map<std::string, FamilyStrategy> families{{"domains", FamilyStrategy::Domains},
                                                       {"layers", FamilyStrategy::Layers}};
  const std::map<std::string, cli::OutputFormat> formats{{"json", cli::OutputFormat::Json},
                                                         {"text", cli::OutputFormat::Text}};
  const std::map<std::string, SetOrder> orders{{"greedy", SetOrder::Greedy}, {"listed", SetOrder::AsListed}};

  std::optional<long long> budget;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("instance", config.instance_path, "instance file (JSON)")->required();
    sub->add_option("--family", config.family, "incompatible-set family")
        ->transform(CLI::CheckedTransformer(families, CLI::ignore_case).description("domains|layers"));
    sub->add_option("--format", config.format, "report format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description("json|text"));
  };
  auto add_filtering = [&](CLI::App* sub) {
    sub->add_option("--budget", budget, "maximum number of dual solves");
    sub->add_option("--order", config.order, "set processing order")
        ->transform(CLI::CheckedTransformer(orders, CLI::ignore_case).description("greedy|listed"));
    sub->add_flag("--parallel", config.parallel, "solve pending sets concurrently");
  };

  auto* filter = app.add_subcommand("filter", "filter domains by family dual solves");
  add_common(filter);
  add_filtering(filter);
  filter->add_flag("--emit-duals", config.emit_duals, "include the dual solutions used");
  filter->callback([&] { config.command = cli::Command::Filter; });

  auto* oracle = app.add_subcommand("oracle", "brute-force enumeration report");
  add_common(oracle);
  oracle->callback([&] { config.command = cli::Command::Oracle; });

  auto* verify = app.add_subcommand("verify", "compare filtering marks with the oracle");
  add_common(verify);
  add_filtering(verify);
  verify->callback([&] { config.command = cli::Command::Verify; });

  auto* bound = app.add_subcommand("bound", "optimal cost from one covering-set dual solve");
  add_common(bound);
  bound->callback([&] { config.command = cli::Command::Bound; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::exit_code::kUsage;
  }
  config.budget = budget;
  return cli::run(config, std::cout, std::cerr);
}

#include <CLI11.hpp>
#include <iostream>
#include <map>

#include "winertia/cli.hpp"

using namespace winertia;
using namespace winertia::cli;

int main(int argc, char** argv) {
    CLI::App app{"Inertia of weighted trees, unicyclic and bicyclic graphs"};
    app.require_subcommand(1);
    CliConfig config;
    std::string class_name = "tree";

    const std::map<std::string, GraphFormat> formats{{"edgelist", GraphFormat::EdgeList},
                                                     {"json", GraphFormat::Json}};
    const std::map<std::string, Method> methods{
        {"structural", Method::Structural}, {"oracle", Method::Oracle}, {"both", Method::Both}};
    const std::map<std::string, Output> outputs{{"human", Output::Human}, {"json", Output::Json}};
    const std::map<std::string, GraphKind> classes{{"tree", GraphKind::Tree},
                                                   {"unicyclic", GraphKind::Unicyclic},
                                                   {"bicyclic", GraphKind::Bicyclic}};

    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--output", config.output, "human|json")
            ->transform(CLI::CheckedTransformer(outputs, CLI::ignore_case));
    };
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", config.input, "graph file, or - for standard input");
        sub->add_option("--format", config.format, "edgelist|json")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        add_output(sub);
    };
    auto add_generation = [&](CLI::App* sub) {
        sub->add_option("--seed", config.seed, "random seed");
        sub->add_option("--count", config.count, "number of instances");
        sub->add_option("--n", config.n, "maximum number of vertices");
        sub->add_option("--class", class_name, "tree|unicyclic|bicyclic")
            ->check(CLI::IsMember(classes, CLI::ignore_case));
    };

    auto* inertia = app.add_subcommand("inertia", "inertia of a graph");
    add_input(inertia);
    inertia->add_option("--method", config.method, "structural|oracle|both")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    inertia->add_flag("--dump-matrix", config.dump_matrix, "print the adjacency matrix first");
    inertia->callback([&] { config.command = Command::Inertia; });

    auto* classify = app.add_subcommand("classify", "graph class and base shape");
    add_input(classify);
    classify->callback([&] { config.command = Command::Classify; });

    auto* reduce = app.add_subcommand("reduce", "pendant-pair and path-contraction trace");
    add_input(reduce);
    reduce->callback([&] { config.command = Command::Reduce; });

    auto* verify = app.add_subcommand("verify", "compare the structural solver with the oracle");
    add_generation(verify);
    add_output(verify);
    verify->callback([&] { config.command = Command::Verify; });

    auto* gen = app.add_subcommand("gen", "generate random graphs");
    add_generation(gen);
    gen->add_option("--format", config.format, "edgelist|json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    gen->callback([&] { config.command = Command::Gen; });

    auto* table1 = app.add_subcommand("table1", "reproduce the infinity-graph table");
    table1->add_option("--seed", config.seed, "random seed");
    add_output(table1);
    table1->callback([&] { config.command = Command::Table1; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
    config.graph_class = classes.at(CLI::detail::to_lower(class_name));
    return run(config, std::cin, std::cout, std::cerr);
}

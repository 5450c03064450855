/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ekr/builders.hh>
#include <ekr/errors.hh>
#include <ekr/graph_io.hh>
#include <ekr/suite.hh>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace ekr;

namespace
{
    auto group_json(const GroupAction & g) -> nlohmann::json
    {
        auto generators = nlohmann::json::array();
        for (auto & p : g.generators())
            generators.push_back(to_cycle_string(p));
        auto orbits = nlohmann::json::array();
        for (auto & o : g.orbits())
            orbits.push_back(o.members);
        return { { "degree", g.degree() }, { "order", g.order() }, { "transitive", g.is_transitive() },
            { "regular", g.is_regular() }, { "generators", generators }, { "orbits", orbits },
            { "derangements", derangement_set(g).size() }, { "largest_stabilizer_order", largest_stabilizer_order(g) } };
    }

    auto write_json_file(const std::string & path, const nlohmann::json & j) -> void
    {
        std::ofstream out(path);
        if (! out)
            throw Error("cannot write " + path);
        out << j.dump(2) << '\n';
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Intersection density and EKR tools for permutation groups" };
    app.require_subcommand(1);

    VerifyOptions options;
    app.add_option("--threads", options.threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--element-cap", options.element_cap, "largest group order to build");
    app.add_option("--mis-cap", options.mis_cap, "largest number of sets to enumerate");
    app.add_option("--vertex-cap", options.vertex_cap, "largest graph to build");
    app.add_option("--node-budget", options.node_budget, "search nodes per solver call (0 for unlimited)");
    app.add_option("--seed", options.seed, "seed for random sampling");
    app.add_option("--cache-dir", options.cache_dir, "directory for cached search results");

    std::string spec_path;
    auto build = app.add_subcommand("build", "build a group and describe it");
    build->add_option("--spec", spec_path, "group spec JSON file")->required();

    auto density = app.add_subcommand("density", "intersection density of a group");
    density->add_option("--spec", spec_path, "group spec JSON file")->required();

    bool strict = false;
    auto ekr_cmd = app.add_subcommand("ekr", "EKR and optionally strict-EKR verdicts");
    ekr_cmd->add_option("--spec", spec_path, "group spec JSON file")->required();
    ekr_cmd->add_flag("--strict", strict, "also decide strict-EKR");

    std::string dot_path;
    bool complemented = false;
    auto graph = app.add_subcommand("graph", "write the derangement graph");
    graph->add_option("--spec", spec_path, "group spec JSON file")->required();
    graph->add_option("--dot", dot_path, "Graphviz output file")->required();
    graph->add_flag("--complement", complemented, "write the complement instead");

    std::string suite = "all", report_path, csv_path;
    bool extended = false;
    auto verify = app.add_subcommand("verify", "run verification checks");
    verify->add_option("--suite", suite, "all, or comma-separated check IDs");
    verify->add_option("--report", report_path, "JSON report file")->required();
    verify->add_option("--csv", csv_path, "CSV summary file");
    verify->add_flag("--extended", extended, "raise the vertex cap for stretch instances");

    std::size_t degree = 0, parts = 0;
    std::uint64_t pair_budget = 0;
    auto search = app.add_subcommand("search-multipartite",
            "find transitive 2-generated groups with complete multipartite derangement graphs");
    search->add_option("--degree", degree, "degree")->required();
    search->add_option("--parts", parts, "number of parts")->required();
    search->add_option("--budget", pair_budget, "generator pairs to examine (0 for all)");

    double seconds = 0;
    auto conjecture = app.add_subcommand("conjecture-wreath", "tabulate rho(G wr H) against rho(G)");
    conjecture->add_option("--budget", seconds, "seconds before remaining rows are skipped (0 for none)");

    CLI11_PARSE(app, argc, argv);

    try {
        DensityOptions density_options;
        density_options.solver.node_budget = options.node_budget;
        density_options.solver.threads = options.threads;
        density_options.mis_cap = options.mis_cap;
        density_options.vertex_cap = options.vertex_cap;

        if (build->parsed()) {
            auto g = build_group(load_group_spec(spec_path), options.element_cap);
            std::cout << group_json(g).dump(2) << '\n';
        }
        else if (density->parsed()) {
            auto g = build_group(load_group_spec(spec_path), options.element_cap);
            std::cout << to_json(density_report(g, density_options, false), g).dump(2) << '\n';
        }
        else if (ekr_cmd->parsed()) {
            auto g = build_group(load_group_spec(spec_path), options.element_cap);
            std::cout << to_json(density_report(g, density_options, strict), g).dump(2) << '\n';
        }
        else if (graph->parsed()) {
            auto g = build_group(load_group_spec(spec_path), options.element_cap);
            auto x = derangement_graph(g, options.vertex_cap);
            if (complemented)
                x = complement(x);
            std::ofstream out(dot_path);
            if (! out)
                throw Error("cannot write " + dot_path);
            write_dot(out, x, element_labels(g));
        }
        else if (verify->parsed()) {
            if (extended)
                options.vertex_cap = std::max<std::size_t>(options.vertex_cap, 40'000);
            options.extended = extended;
            auto entries = select_checks(suite);
            Workbench bench(options);
            auto results = run_suite(bench, entries, [] (const CheckResult & r) {
                std::cerr << "finished " << r.check_id << " (" << to_string(r.status) << ", " << r.runtime_ms << " ms)\n"; });
            auto report = suite_report(results);
            write_json_file(report_path, report);
            if (! csv_path.empty()) {
                std::ofstream out(csv_path);
                if (! out)
                    throw Error("cannot write " + csv_path);
                write_csv(out, results);
            }
            for (auto & r : results)
                std::cout << to_string(r.status) << "  " << r.check_id << "  (" << r.instances.size() << " instances, "
                    << r.runtime_ms << " ms)\n";
            auto & s = report["summary"];
            std::cout << s["pass"] << " pass, " << s["fail"] << " fail, " << s["skip"] << " skip\n";
            return any_failed(results) ? 1 : 0;
        }
        else if (search->parsed()) {
            auto result = search_multipartite(degree, parts, pair_budget);
            std::cout << to_json(result).dump(2) << '\n';
        }
        else if (conjecture->parsed()) {
            Workbench bench(options);
            auto result = explore_wreath_density_conjecture_within(bench, seconds);
            result.check_id = "wreath-density-conjecture";
            for (auto & i : result.instances)
                std::cout << to_string(i.status) << "  " << i.input["label"].get<std::string>() << ": " << i.outcome << '\n';
            return any_failed({ result }) ? 1 : 0;
        }
    }
    catch (const std::exception & e) {
        std::cerr << "ekr: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

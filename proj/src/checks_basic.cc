/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "check_support.hh"

#include <algorithm>
#include <set>

using namespace ekr;
using namespace ekr::detail;

namespace
{
    /// A graph for the toolbox checks, with how to rebuild it.
    struct NamedGraph
    {
        nlohmann::json input;
        Graph graph;
        bool vertex_transitive;
    };

    auto gamma_entry(Workbench & bench, const CorpusEntry & e, bool complemented) -> NamedGraph
    {
        auto x = *bench.gamma(e.spec);
        nlohmann::json input = input_of({ e.spec }, { { "graph", complemented ? "complement of derangement graph" : "derangement graph" } });
        input["label"] = (complemented ? "co-Gamma " : "Gamma ") + e.name;
        return { input, complemented ? complement(x) : x, true };
    }

    auto shape_entry(const std::string & kind, std::size_t n) -> NamedGraph
    {
        Graph x;
        bool vt = true;
        if (kind == "path") {
            x = path_graph(n);
            vt = n <= 2;
        }
        else if (kind == "cycle")
            x = cycle_graph(n);
        else
            x = complete_graph(n);
        return { graph_input(kind + " " + std::to_string(n), { { "graph", kind }, { "n", n } }), x, vt };
    }

    auto small_corpus(Workbench & bench, std::size_t max_order) -> std::vector<CorpusEntry>
    {
        std::vector<CorpusEntry> result;
        for (auto & e : standard_corpus(bench))
            if (bench.group(e.spec)->order() <= max_order)
                result.push_back(e);
        return result;
    }

    auto alpha_of(const Graph & x, bool vertex_transitive, const SolverOptions & solver) -> std::size_t
    {
        return vertex_transitive ? vertex_transitive_independence_number(x, solver).size : independence_number(x, solver).size;
    }
}

auto ekr::check_intersecting_definitions(Workbench & bench) -> CheckResult
{
    auto rng = rng_for(bench, "intersecting-definitions");
    std::vector<Instance> out;
    for (auto & e : standard_corpus(bench))
        out.push_back(guarded(input_of({ e.spec }), [&] (Instance i) {
            auto g = bench.group(e.spec);
            auto x = bench.gamma(e.spec);
            std::size_t n = g->order();
            std::vector<std::string> problems;

            auto agree = [&] (ElementId a, ElementId b) {
                for (Point p = 0 ; p < g->degree() ; ++p)
                    if (g->element(a)(p) == g->element(b)(p))
                        return true;
                return false;
            };
            std::size_t definition_errors = 0;
            auto test_pair = [&] (ElementId a, ElementId b) {
                if (a != b && x->adjacent(a, b) == agree(a, b))
                    ++definition_errors;
            };
            if (n <= 200) {
                for (ElementId a = 0 ; a < n ; ++a)
                    for (ElementId b = a + 1 ; b < n ; ++b)
                        test_pair(a, b);
            }
            else {
                std::uniform_int_distribution<ElementId> pick(0, ElementId(n - 1));
                for (int k = 0 ; k < 20'000 ; ++k)
                    test_pair(pick(rng), pick(rng));
            }
            if (definition_errors)
                problems.push_back(std::to_string(definition_errors) + " pairs where adjacency is not disagreement everywhere");

            auto d = derangement_set(*g);
            std::set<ElementId> ds(d.begin(), d.end());
            if (ds.count(0))
                problems.push_back("identity counted as a derangement");
            for (auto id : d)
                if (! ds.count(g->id_of(inverse(g->element(id)))))
                    problems.push_back("derangement set not inverse-closed");
            if (x->degree(0) != d.size())
                problems.push_back("identity's degree differs from the number of derangements");

            // right translations are automorphisms
            std::vector<ElementId> shifts;
            if (n <= 200)
                for (ElementId a = 0 ; a < n ; ++a)
                    shifts.push_back(a);
            else {
                std::uniform_int_distribution<ElementId> pick(0, ElementId(n - 1));
                for (int k = 0 ; k < 8 ; ++k)
                    shifts.push_back(pick(rng));
            }
            for (auto a : shifts) {
                std::vector<Vertex> map(n);
                for (ElementId v = 0 ; v < n ; ++v)
                    map[v] = g->id_of(compose(g->element(v), g->element(a)));
                if (! equal_under_bijection(*x, *x, map).equal) {
                    problems.push_back("right translation by element " + std::to_string(a) + " is not an automorphism");
                    break;
                }
            }

            for (auto & orbit : g->orbits())
                for (auto v : orbit.members)
                    if (orbit.members.size() * point_stabilizer(*g, v).size() != n)
                        problems.push_back("orbit-stabilizer fails at point " + std::to_string(v));

            if (g->is_regular() && x->edge_count() != n * (n - 1) / 2)
                problems.push_back("regular group with incomplete derangement graph");

            auto alpha = bench.alpha(e.spec);
            auto stab = largest_stabilizer_order(*g);
            bool ekr = alpha <= stab;
            auto strict = bench.strict(e.spec);
            std::string rho_text = "n/a";
            if (g->is_transitive()) {
                auto rho = bench.rho(e.spec);
                rho_text = to_string(rho);
                if (rho < Rational(1))
                    problems.push_back("density below 1");
                if (ekr != (rho == Rational(1)))
                    problems.push_back("EKR does not coincide with density 1");
            }
            if (strict->strict && *strict->strict && ! ekr)
                problems.push_back("strict-EKR without EKR");

            std::string outcome = "alpha " + std::to_string(alpha) + ", largest stabilizer " + std::to_string(stab)
                + ", rho " + rho_text + ", EKR " + (ekr ? "yes" : "no") + ", strict-EKR " + verdict_string(strict->strict);
            if (! problems.empty())
                outcome += "; " + problems.front();
            return conclude(std::move(i), problems.empty(), outcome);
        }));
    return settled(std::move(out));
}

auto ekr::check_a4_ekr_not_strict(Workbench & bench) -> CheckResult
{
    auto s = spec::alternating(4);
    std::vector<Instance> out;
    out.push_back(guarded(input_of({ s }), [&] (Instance i) {
        auto g = bench.group(s);
        auto strict = bench.strict(s);
        auto rho = bench.rho(s);

        std::vector<ElementId> expected;
        for (auto c : { "()", "(1 3 2)", "(1 4 2)" })
            expected.push_back(g->id_of(parse_cycles(c, 4)));
        std::sort(expected.begin(), expected.end());

        bool listed = std::find(strict->non_cosets.begin(), strict->non_cosets.end(), expected) != strict->non_cosets.end();
        bool independent = is_independent_set(*bench.gamma(s), std::vector<Vertex>(expected.begin(), expected.end()));
        bool not_coset = ! is_coset_of_point_stabilizer(*g, expected);

        bool ok = rho == Rational(1) && strict->alpha == 3 && largest_stabilizer_order(*g) == 3
            && strict->strict && ! *strict->strict && listed && independent && not_coset;
        return conclude(std::move(i), ok,
                "rho " + to_string(rho) + ", alpha " + std::to_string(strict->alpha) + ", strict-EKR "
                + verdict_string(strict->strict) + ", " + std::to_string(strict->non_cosets.size())
                + " non-coset maximum sets through the identity; {(), (1 3 2), (1 4 2)} "
                + (listed ? "is" : "is not") + " among them",
                element_json(*g, expected));
    }));
    return settled(std::move(out));
}

auto ekr::check_a5_pairs_density_two(Workbench & bench) -> CheckResult
{
    auto s = spec::k_subsets(spec::alternating(5), 2);
    std::vector<Instance> out;
    out.push_back(guarded(input_of({ s }), [&] (Instance i) {
        auto g = bench.group(s);
        auto exact = independence_number(*bench.gamma(s), bench.solver());
        auto rho = bench.rho(s);
        auto stab = largest_stabilizer_order(*g);
        bool ok = g->degree() == 10 && g->order() == 60 && g->is_transitive()
            && exact.size == 12 && bench.alpha(s) == 12 && stab == 6 && rho == Rational(2);
        return conclude(std::move(i), ok,
                "alpha " + std::to_string(exact.size) + ", stabilizer order " + std::to_string(stab) + ", rho " + to_string(rho),
                element_json(*g, std::vector<ElementId>(exact.witness.begin(), exact.witness.end())));
    }));
    return settled(std::move(out));
}

auto ekr::check_symmetric_strict_ekr(Workbench & bench) -> CheckResult
{
    std::vector<Instance> out;
    for (std::size_t n = 2 ; n <= 5 ; ++n)
        out.push_back(strict_case_instance(bench, spec::symmetric(n), true));
    return settled(std::move(out));
}

auto ekr::check_clique_coclique_bound(Workbench & bench) -> CheckResult
{
    std::vector<NamedGraph> graphs;
    for (auto & e : standard_corpus(bench))
        graphs.push_back(gamma_entry(bench, e, false));
    for (std::size_t n : { 5, 7 })
        graphs.push_back(shape_entry("cycle", n));
    graphs.push_back(shape_entry("complete", 4));

    std::vector<Instance> out;
    for (auto & x : graphs)
        out.push_back(guarded(x.input, [&] (Instance i) {
            auto alpha = independence_number(x.graph, bench.solver());
            auto omega = max_clique(x.graph, bench.solver());
            bool ok = alpha.size * omega.size <= x.graph.size()
                && is_independent_set(x.graph, alpha.witness) && is_clique(x.graph, omega.witness);
            return conclude(std::move(i), ok,
                    "alpha " + std::to_string(alpha.size) + " * omega " + std::to_string(omega.size)
                    + " <= " + std::to_string(x.graph.size()),
                    { { "independent", alpha.witness }, { "clique", omega.witness } });
        }));
    return settled(std::move(out));
}

auto ekr::check_strong_product_cliques(Workbench & bench) -> CheckResult
{
    std::vector<NamedGraph> graphs;
    for (auto & e : small_corpus(bench, 12))
        if (e.name == "S3" || e.name == "A4" || e.name == "D4" || e.name == "D5" || e.name == "K") {
            graphs.push_back(gamma_entry(bench, e, false));
            graphs.push_back(gamma_entry(bench, e, true));
        }
    graphs.push_back(shape_entry("path", 3));
    graphs.push_back(shape_entry("cycle", 5));

    std::vector<Instance> out;
    for (std::size_t a = 0 ; a < graphs.size() ; ++a)
        for (std::size_t b = a ; b < graphs.size() ; ++b) {
            auto & x = graphs[a];
            auto & y = graphs[b];
            nlohmann::json input{ { "label", x.input["label"].get<std::string>() + " strong " + y.input["label"].get<std::string>() },
                { "left", x.input }, { "right", y.input } };
            out.push_back(guarded(input, [&] (Instance i) {
                auto s = strong_product(x.graph, y.graph, bench.options().vertex_cap);
                auto wx = max_clique(x.graph, bench.solver()).size;
                auto wy = max_clique(y.graph, bench.solver()).size;
                auto cliques = enumerate_maximum_cliques(s, bench.options().mis_cap, bench.solver());
                if (cliques.truncated)
                    return skip(std::move(i), "more than " + std::to_string(bench.options().mis_cap) + " maximum cliques");

                std::size_t ny = y.graph.size();
                for (auto & c : cliques.sets) {
                    std::set<Vertex> px, py;
                    for (auto v : c) {
                        px.insert(Vertex(v / ny));
                        py.insert(Vertex(v % ny));
                    }
                    bool product = c.size() == px.size() * py.size();
                    bool maximum = px.size() == wx && py.size() == wy
                        && is_clique(x.graph, std::vector<Vertex>(px.begin(), px.end()))
                        && is_clique(y.graph, std::vector<Vertex>(py.begin(), py.end()));
                    if (! product || ! maximum)
                        return conclude(std::move(i), false, "maximum clique that is not a product of maximum cliques", c);
                }
                bool ok = cliques.size == wx * wy;
                return conclude(std::move(i), ok,
                        std::to_string(cliques.sets.size()) + " maximum cliques of size " + std::to_string(cliques.size)
                        + " = " + std::to_string(wx) + " * " + std::to_string(wy) + ", all products");
            }));
        }
    return settled(std::move(out));
}

auto ekr::check_tensor_independence(Workbench & bench) -> CheckResult
{
    auto corpus = standard_corpus(bench);
    std::vector<Instance> out;
    for (auto & [g, h] : corpus_pairs(corpus, bench, 1500))
        out.push_back(guarded(input_of({ g.spec, h.spec }, { { "graph", "direct product of derangement graphs" } }), [&] (Instance i) {
            auto x = bench.gamma(g.spec), y = bench.gamma(h.spec);
            auto p = direct_product(*x, *y, bench.options().vertex_cap);
            auto alpha = vertex_transitive_independence_number(p, bench.solver()).size;
            auto expected = std::max(bench.alpha(g.spec) * y->size(), bench.alpha(h.spec) * x->size());
            return conclude(std::move(i), alpha == expected,
                    "alpha " + std::to_string(alpha) + ", formula " + std::to_string(expected));
        }));
    return settled(std::move(out));
}

auto ekr::check_direct_power_independence(Workbench & bench) -> CheckResult
{
    std::vector<Instance> out;
    for (auto & e : standard_corpus(bench)) {
        auto size = bench.group(e.spec)->order();
        for (std::size_t n : { 2, 3 }) {
            if (n == 3 && size > 8)
                continue;
            out.push_back(guarded(input_of({ e.spec }, { { "graph", "direct power of derangement graph" }, { "power", n } }), [&] (Instance i) {
                std::size_t vertices = 1;
                for (std::size_t k = 0 ; k < n ; ++k)
                    vertices *= size;
                if (vertices > bench.options().vertex_cap)
                    return skip(std::move(i), std::to_string(vertices) + " vertices exceeds the vertex cap");
                auto p = direct_power(*bench.gamma(e.spec), n, bench.options().vertex_cap);
                auto alpha = vertex_transitive_independence_number(p, bench.solver()).size;
                auto expected = bench.alpha(e.spec) * vertices / size;
                return conclude(std::move(i), alpha == expected,
                        "alpha " + std::to_string(alpha) + ", formula " + std::to_string(expected));
            }));
        }
    }
    return settled(std::move(out));
}

auto ekr::check_lexicographic_independence(Workbench & bench) -> CheckResult
{
    std::vector<NamedGraph> graphs;
    for (auto & e : small_corpus(bench, 24))
        graphs.push_back(gamma_entry(bench, e, false));
    graphs.push_back(gamma_entry(bench, standard_corpus(bench)[6], false));
    graphs.push_back(shape_entry("path", 3));
    graphs.push_back(shape_entry("path", 4));
    graphs.push_back(shape_entry("cycle", 5));

    std::vector<Instance> out;
    for (std::size_t a = 0 ; a < graphs.size() ; ++a)
        for (std::size_t b = 0 ; b < graphs.size() ; ++b) {
            auto & x = graphs[a];
            auto & y = graphs[b];
            // cliques of Gamma of A5{2} are hard to find inside big products,
            // and with a path or cycle factor alpha * omega = |V| rarely holds,
            // so only small products of those are attempted
            bool corpus_only = x.input.contains("groups") && y.input.contains("groups");
            if (x.graph.size() * y.graph.size() > (corpus_only ? 600 : 100))
                continue;
            bool vt = x.vertex_transitive && y.vertex_transitive;
            nlohmann::json input{ { "label", x.input["label"].get<std::string>() + " [ " + y.input["label"].get<std::string>() + " ]" },
                { "outer", x.input }, { "inner", y.input } };
            out.push_back(guarded(input, [&] (Instance i) {
                auto p = lexicographic(x.graph, y.graph, bench.options().vertex_cap);
                auto alpha = alpha_of(p, vt, bench.solver());
                auto expected = alpha_of(x.graph, x.vertex_transitive, bench.solver())
                    * alpha_of(y.graph, y.vertex_transitive, bench.solver());
                return conclude(std::move(i), alpha == expected,
                        "alpha " + std::to_string(alpha) + ", product of factors " + std::to_string(expected));
            }));
        }
    return settled(std::move(out));
}

auto ekr::check_density_monotone_subgroup(Workbench & bench) -> CheckResult
{
    auto corpus = transitive_corpus(bench);
    std::vector<Instance> out;
    for (auto & small : corpus)
        for (auto & large : corpus) {
            if (small.name == large.name)
                continue;
            auto h = bench.group(small.spec), g = bench.group(large.spec);
            if (h->degree() != g->degree() || h->order() > g->order() || ! is_subgroup(*h, *g))
                continue;
            out.push_back(guarded(input_of({ small.spec, large.spec }), [&] (Instance i) {
                auto rh = bench.rho(small.spec), rg = bench.rho(large.spec);
                return conclude(std::move(i), rg <= rh,
                        "rho(" + large.name + ") = " + to_string(rg) + " <= rho(" + small.name + ") = " + to_string(rh));
            }));
        }
    return settled(std::move(out));
}

auto ekr::check_regular_is_primitive(Workbench & bench) -> CheckResult
{
    std::vector<GroupSpec> specs;
    for (auto & e : regular_corpus(bench))
        specs.push_back(e.spec);
    for (auto & inner : { spec::symmetric(3), spec::alternating(4), spec::dihedral(4) })
        specs.push_back(spec::left_regular(inner));

    std::vector<Instance> out;
    for (auto & s : specs)
        out.push_back(guarded(input_of({ s }), [&] (Instance i) {
            auto g = bench.group(s);
            auto x = bench.gamma(s);
            bool complete = x->edge_count() == g->order() * (g->order() - 1) / 2;
            auto verdict = bench.primitivity(s);
            bool ok = g->is_regular() && complete && verdict->status == ISPrimitivity::primitive;
            return conclude(std::move(i), ok,
                    std::string(complete ? "complete" : "incomplete") + " derangement graph, " + to_string(verdict->status));
        }));
    return settled(std::move(out));
}

auto ekr::check_mis_normal_square(Workbench & bench) -> CheckResult
{
    std::vector<NamedGraph> graphs;
    for (auto & e : transitive_corpus(bench))
        if (bench.group(e.spec)->degree() >= 3)
            graphs.push_back(gamma_entry(bench, e, false));
    graphs.push_back(shape_entry("complete", 3));
    graphs.push_back(shape_entry("complete", 4));
    graphs.push_back(shape_entry("cycle", 5));
    graphs.push_back(shape_entry("cycle", 7));

    std::vector<Instance> out;
    for (auto & x : graphs)
        out.push_back(guarded(x.input, [&] (Instance i) {
            if (is_bipartite(x.graph).bipartite)
                return skip(std::move(i), "bipartite graph, outside the statement");
            auto prim = is_IS_primitive(x.graph, bench.options().node_budget, true, bench.solver(), bench.options().mis_cap);
            if (prim.status == ISPrimitivity::unknown)
                return skip(std::move(i), "IS-primitivity search ran out of budget");
            // enumerating a larger square takes hours; --extended lifts this
            auto square_cap = bench.options().extended ? bench.options().vertex_cap
                : std::min<std::size_t>(bench.options().vertex_cap, 1500);
            auto normal = is_MIS_normal_direct_square(x.graph, true, bench.solver(), bench.options().mis_cap, square_cap);
            if (! normal.normal)
                return skip(std::move(i), normal.reason);

            std::string prim_text = to_string(prim.status);
            nlohmann::json witness;
            if (prim.status == ISPrimitivity::not_primitive) {
                prim_text += " (|A| / |N[A]| = " + std::to_string(prim.witness.size()) + "/" + std::to_string(prim.neighbourhood)
                    + " = " + to_string(Rational(std::int64_t(prim.witness.size()), std::int64_t(prim.neighbourhood)))
                    + " = alpha / |V| = " + std::to_string(prim.alpha) + "/" + std::to_string(x.graph.size()) + ")";
                witness["ratio_set"] = prim.witness;
            }
            if (! *normal.normal)
                witness["non_preimage"] = normal.witness;
            bool ok = *normal.normal == (prim.status == ISPrimitivity::primitive);
            return conclude(std::move(i), ok,
                    std::string("square ") + (*normal.normal ? "MIS-normal" : "not MIS-normal") + ", graph " + prim_text
                    + (normal.reason.empty() ? "" : "; " + normal.reason),
                    witness);
        }));
    return settled(std::move(out));
}

auto ekr::check_transitive_derangement_triangle(Workbench & bench) -> CheckResult
{
    std::vector<GroupSpec> specs;
    for (auto & e : transitive_corpus(bench))
        if (bench.group(e.spec)->degree() >= 3)
            specs.push_back(e.spec);
    specs.push_back(spec::external(spec::symmetric(3), spec::symmetric(2)));
    specs.push_back(spec::external(spec::alternating(4), spec::cyclic(2)));
    specs.push_back(spec::wreath(spec::symmetric(3), spec::symmetric(2)));
    specs.push_back(spec::wreath(spec::symmetric(2), spec::symmetric(3)));

    std::vector<Instance> out;
    for (auto & s : specs)
        out.push_back(guarded(input_of({ s }), [&] (Instance i) {
            auto x = bench.gamma(s);
            auto triangle = find_triangle(*x);
            auto bipartite = is_bipartite(*x);
            bool ok = bench.group(s)->is_transitive() && triangle && ! bipartite.bipartite;
            return conclude(std::move(i), ok,
                    std::string(triangle ? "triangle found" : "no triangle") + ", " + (bipartite.bipartite ? "bipartite" : "not bipartite"),
                    triangle ? nlohmann::json(*triangle) : nlohmann::json(nullptr));
        }));
    return settled(std::move(out));
}

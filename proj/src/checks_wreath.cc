/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "check_support.hh"

#include <ekr/wreath.hh>

#include <algorithm>
#include <chrono>

using namespace ekr;
using namespace ekr::detail;

namespace
{
    auto identity_map(std::size_t n) -> std::vector<Vertex>
    {
        std::vector<Vertex> map(n);
        for (std::size_t v = 0 ; v < n ; ++v)
            map[v] = Vertex(v);
        return map;
    }

    /// |G|^n * |H|, saturating just above limit.
    auto wreath_order(std::size_t g, std::size_t n, std::size_t h, std::size_t limit) -> std::size_t
    {
        std::size_t result = h;
        for (std::size_t k = 0 ; k < n && result <= limit ; ++k)
            result *= g;
        return std::min(result, limit + 1);
    }

    struct WreathPair
    {
        CorpusEntry g, h;
    };

    /// Ordered transitive corpus pairs whose wreath product has at most limit elements.
    auto wreath_pairs(Workbench & bench, std::size_t limit) -> std::vector<WreathPair>
    {
        std::vector<WreathPair> result;
        auto corpus = transitive_corpus(bench);
        for (auto & g : corpus)
            for (auto & h : corpus) {
                auto hh = bench.group(h.spec);
                if (wreath_order(bench.group(g.spec)->order(), hh->degree(), hh->order(), limit) <= limit)
                    result.push_back({ g, h });
            }
        return result;
    }

    auto has_element_fixing_one_point(const GroupAction & g) -> bool
    {
        return std::any_of(g.elements().begin(), g.elements().end(), [] (auto & p) { return fixes_exactly_one(p); });
    }

    auto formulas_instance(Workbench & bench, const GroupSpec & g, const GroupSpec & h, std::size_t random_pairs) -> Instance
    {
        return guarded(input_of({ spec::wreath(g, h) }), [&] (Instance i) {
            auto p = bench.group(spec::wreath(g, h));
            std::size_t base = bench.group(g)->degree();
            std::vector<WreathElement> tuples;
            for (auto & e : p->elements())
                tuples.push_back(unflatten(e, base));

            std::size_t failures = 0, tested = 0;
            nlohmann::json witness;
            auto test = [&] (ElementId a, ElementId b) {
                ++tested;
                bool ok = flatten(wreath_multiply(tuples[a], tuples[b])) == compose(p->element(a), p->element(b))
                    && flatten(wreath_invert(tuples[a])) == inverse(p->element(a))
                    && flatten(tuples[a]) == p->element(a);
                if (! ok && failures++ == 0)
                    witness = element_json(*p, { a, b });
            };
            std::string mode;
            if (random_pairs == 0) {
                mode = "all ordered pairs";
                for (ElementId a = 0 ; a < p->order() ; ++a)
                    for (ElementId b = 0 ; b < p->order() ; ++b)
                        test(a, b);
            }
            else {
                mode = "random pairs";
                auto rng = rng_for(bench, "wreath-formulas" + describe(spec::wreath(g, h)));
                std::uniform_int_distribution<ElementId> pick(0, ElementId(p->order() - 1));
                for (std::size_t k = 0 ; k < random_pairs ; ++k)
                    test(pick(rng), pick(rng));
            }
            return conclude(std::move(i), failures == 0,
                    std::to_string(failures) + " failures over " + std::to_string(tested) + " " + mode, witness);
        });
    }

    auto density_table_row(Workbench & bench, const WreathPair & pair, const std::string & purpose) -> Instance
    {
        auto w = spec::wreath(pair.g.spec, pair.h.spec);
        return guarded(input_of({ w }, { { "purpose", purpose } }), [&] (Instance i) {
            auto rg = bench.rho(pair.g.spec), rh = bench.rho(pair.h.spec), rw = bench.rho(w);
            bool h_ekr = rh == Rational(1);
            std::string outcome = "rho(G) " + to_string(rg) + ", rho(H) " + to_string(rh) + ", rho(G wr H) " + to_string(rw);
            if (purpose == "bounds")
                return conclude(std::move(i), rg <= rw && rw <= rg * rh, outcome);
            if (purpose == "top")
                return h_ekr ? conclude(std::move(i), rw == rg, outcome)
                    : skip(std::move(i), "top group lacks EKR; " + outcome);
            bool finding = rw != rg;
            return conclude(std::move(i), true, outcome + (finding ? "; FINDING: rho(G wr H) differs from rho(G)" : "; equal"),
                    nlohmann::json{ { "finding", finding } });
        });
    }

    auto strict_limit(Workbench & bench) -> std::size_t
    {
        return bench.options().vertex_cap;
    }

    /// strict_case_instance after an order check against the enumeration cap.
    auto capped_strict(Workbench & bench, const GroupSpec & s, bool expected, const std::string & note) -> Instance
    {
        auto order = [&] () -> std::size_t {
            try {
                return bench.group(s)->order();
            }
            catch (const CapExceeded &) {
                return strict_limit(bench) + 1;
            }
        }();
        if (order > strict_limit(bench)) {
            Instance i;
            i.input = input_of({ s }, { { "expected", expected } });
            return skip(std::move(i), note + "order " + (order > bench.options().element_cap ? "above the element cap"
                        : std::to_string(order)) + " exceeds the strict-EKR enumeration cap of " + std::to_string(strict_limit(bench)));
        }
        auto r = strict_case_instance(bench, s, expected);
        r.outcome = note + r.outcome;
        return r;
    }

    auto vacuous(nlohmann::json input, const std::string & why) -> Instance
    {
        Instance i;
        i.input = std::move(input);
        return conclude(std::move(i), true, "vacuous: " + why);
    }

    auto factorial(std::size_t n) -> std::size_t
    {
        std::size_t r = 1;
        for (std::size_t k = 2 ; k <= n ; ++k)
            r *= k;
        return r;
    }
}

auto ekr::wreath_adjacency_instance(Workbench & bench, const GroupSpec & g, const GroupSpec & h, std::size_t random_pairs) -> Instance
{
    auto w = spec::wreath(g, h);
    return guarded(input_of({ w }), [&] (Instance i) {
        auto p = bench.group(w);
        auto x = bench.gamma(w);
        std::size_t base = bench.group(g)->degree();
        std::vector<WreathElement> tuples;
        for (auto & e : p->elements())
            tuples.push_back(unflatten(e, base));

        std::size_t disagreements = 0, tested = 0;
        nlohmann::json witness;
        auto test = [&] (ElementId a, ElementId b) {
            ++tested;
            bool flat = is_derangement(compose(p->element(a), inverse(p->element(b))));
            bool tuple = wreath_tuple_adjacent(tuples[a], tuples[b]);
            bool graph = a != b && x->adjacent(a, b);
            if ((flat != tuple || flat != graph) && disagreements++ == 0)
                witness = element_json(*p, { a, b });
        };
        std::string mode;
        if (random_pairs == 0) {
            mode = "all ordered pairs";
            for (ElementId a = 0 ; a < p->order() ; ++a)
                for (ElementId b = 0 ; b < p->order() ; ++b)
                    test(a, b);
        }
        else {
            mode = "random pairs";
            auto rng = rng_for(bench, "wreath-adjacency" + describe(w));
            std::uniform_int_distribution<ElementId> pick(0, ElementId(p->order() - 1));
            for (std::size_t k = 0 ; k < random_pairs ; ++k)
                test(pick(rng), pick(rng));
        }
        return conclude(std::move(i), disagreements == 0,
                std::to_string(disagreements) + " disagreements over " + std::to_string(tested) + " " + mode, witness);
    });
}

auto ekr::wreath_blocks_instance(Workbench & bench, const GroupSpec & g, const GroupSpec & h) -> Instance
{
    auto w = spec::wreath(g, h);
    return guarded(input_of({ w }), [&] (Instance i) {
        auto gg = bench.group(g), hh = bench.group(h);
        auto p = bench.group(w);
        auto x = bench.gamma(w);
        auto ids = wreath_tuple_ids(*p, *gg, *hh);
        std::size_t n = hh->degree(), m = hh->order(), q = gg->order();
        std::size_t layer_size = ids.size() / m;
        auto gamma_g = *bench.gamma(g);
        auto cap = bench.options().vertex_cap;

        auto layer = [&] (std::size_t t) {
            std::vector<Vertex> result;
            for (std::size_t r = 0 ; r < layer_size ; ++r)
                result.push_back(ids[r * m + t]);
            return result;
        };

        std::size_t same = 0, between = 0;
        auto power = direct_power(gamma_g, n, cap);
        for (std::size_t a = 0 ; a < m ; ++a) {
            auto la = layer(a);
            if (! equal_under_bijection(induced_subgraph(*x, la), power, identity_map(layer_size)).equal)
                return conclude(std::move(i), false, "layer " + std::to_string(a) + " differs from the direct power");
            ++same;
            for (std::size_t b = a + 1 ; b < m ; ++b) {
                auto lb = layer(b);
                Graph cross(2 * layer_size);
                for (std::size_t r = 0 ; r < layer_size ; ++r)
                    for (std::size_t s = 0 ; s < layer_size ; ++s)
                        if (x->adjacent(la[r], lb[s]))
                            cross.add_edge(Vertex(2 * r), Vertex(2 * s + 1));

                Graph expected;
                for (std::size_t k = 0 ; k < n ; ++k) {
                    Point kp = Point(k);
                    bool agree = hh->element(a)(kp) == hh->element(b)(kp);
                    Graph factor = agree ? gamma_g : loop_complete(q);
                    expected = k == 0 ? factor : direct_product(expected, factor, cap);
                }
                expected = direct_product(expected, complete_graph(2), cap);
                auto check = equal_under_bijection(cross, expected, identity_map(2 * layer_size));
                if (! check.equal)
                    return conclude(std::move(i), false, "between-layer graph for top elements "
                            + std::to_string(a) + ", " + std::to_string(b) + " differs from the product");
                ++between;
            }
        }
        return conclude(std::move(i), true, std::to_string(same) + " layers and " + std::to_string(between)
                + " layer pairs match their products");
    });
}

auto ekr::wreath_regular_instance(Workbench & bench, const GroupSpec & g, const GroupSpec & h) -> Instance
{
    auto w = spec::wreath(g, h);
    return guarded(input_of({ w }), [&] (Instance i) {
        auto gg = bench.group(g), hh = bench.group(h);
        if (! hh->is_regular())
            return skip(std::move(i), "top group is not regular");
        auto p = bench.group(w);
        auto ids = wreath_tuple_ids(*p, *gg, *hh);
        std::size_t m = hh->order(), layer_size = ids.size() / m;
        auto cap = bench.options().vertex_cap;
        auto lex = lexicographic(complete_graph(m), direct_power(*bench.gamma(g), hh->degree(), cap), cap);
        std::vector<Vertex> map(ids.size());
        for (std::size_t t = 0 ; t < m ; ++t)
            for (std::size_t r = 0 ; r < layer_size ; ++r)
                map[t * layer_size + r] = ids[r * m + t];
        auto check = equal_under_bijection(lex, *bench.gamma(w), map);
        nlohmann::json witness;
        if (check.mismatch)
            witness = { check.mismatch->first, check.mismatch->second };
        return conclude(std::move(i), check.equal,
                std::to_string(check.mismatches) + " mismatched pairs on " + std::to_string(ids.size()) + " vertices", witness);
    });
}

auto ekr::check_wreath_formulas(Workbench & bench) -> CheckResult
{
    auto s = spec::symmetric;
    std::vector<Instance> out;
    out.push_back(formulas_instance(bench, s(2), s(2), 0));
    out.push_back(formulas_instance(bench, s(3), s(2), 0));
    out.push_back(formulas_instance(bench, s(2), s(3), 0));
    out.push_back(formulas_instance(bench, s(3), s(3), 10'000));
    out.push_back(formulas_instance(bench, s(4), s(2), 10'000));
    return settled(std::move(out));
}

auto ekr::check_wreath_adjacency(Workbench & bench) -> CheckResult
{
    auto s = spec::symmetric;
    std::vector<Instance> out;
    out.push_back(wreath_adjacency_instance(bench, s(2), s(2), 0));
    out.push_back(wreath_adjacency_instance(bench, s(3), s(2), 0));
    out.push_back(wreath_adjacency_instance(bench, s(2), s(3), 0));
    out.push_back(wreath_adjacency_instance(bench, s(2), s(3), 100'000));
    out.push_back(wreath_adjacency_instance(bench, s(3), s(3), 100'000));
    out.push_back(wreath_adjacency_instance(bench, spec::cyclic(3), s(3), 100'000));

    auto w = spec::wreath(s(3), s(2));
    out.push_back(guarded(input_of({ w }, { { "pair", { "((), (), ())", "((1 2 3), (1 2), ())" } } }), [&] (Instance i) {
        WreathElement a = wreath_identity(3, 2);
        WreathElement b{ { parse_cycles("(1 2 3)", 3), parse_cycles("(1 2)", 3) }, parse_cycles("()", 2) };
        auto p = bench.group(w);
        auto ia = p->id_of(flatten(a)), ib = p->id_of(flatten(b));
        bool tuple = wreath_tuple_adjacent(a, b);
        bool graph = bench.gamma(w)->adjacent(ia, ib);
        return conclude(std::move(i), ! tuple && ! graph,
                std::string("tuple rule ") + (tuple ? "adjacent" : "non-adjacent") + ", derangement graph "
                + (graph ? "adjacent" : "non-adjacent"), element_json(*p, { ia, ib }));
    }));
    return settled(std::move(out));
}

auto ekr::check_wreath_layer_blocks(Workbench & bench) -> CheckResult
{
    auto s = spec::symmetric;
    auto c = spec::cyclic;
    std::vector<Instance> out;
    out.push_back(wreath_blocks_instance(bench, s(3), s(2)));
    out.push_back(wreath_blocks_instance(bench, s(2), s(2)));
    out.push_back(wreath_blocks_instance(bench, s(2), s(3)));
    out.push_back(wreath_blocks_instance(bench, c(3), s(3)));
    out.push_back(wreath_blocks_instance(bench, s(3), c(3)));
    return settled(std::move(out));
}

auto ekr::check_wreath_regular_lexicographic(Workbench & bench) -> CheckResult
{
    auto s = spec::symmetric;
    auto c = spec::cyclic;
    std::vector<Instance> out;
    out.push_back(wreath_regular_instance(bench, s(3), s(2)));
    out.push_back(wreath_regular_instance(bench, s(2), s(2)));
    out.push_back(wreath_regular_instance(bench, s(2), c(3)));
    out.push_back(wreath_regular_instance(bench, spec::alternating(4), c(2)));
    out.push_back(wreath_regular_instance(bench, s(3), c(3)));
    out.push_back(wreath_regular_instance(bench, c(3), c(4)));
    return settled(std::move(out));
}

auto ekr::check_wreath_density_bounds(Workbench & bench) -> CheckResult
{
    std::vector<Instance> out;
    for (auto & pair : wreath_pairs(bench, 5000))
        out.push_back(density_table_row(bench, pair, "bounds"));
    return settled(std::move(out));
}

auto ekr::check_wreath_ekr_top_density(Workbench & bench) -> CheckResult
{
    std::vector<Instance> out;
    for (auto & pair : wreath_pairs(bench, 5000))
        out.push_back(density_table_row(bench, pair, "top"));
    return settled(std::move(out));
}

auto ekr::explore_wreath_density_conjecture(Workbench & bench) -> CheckResult
{
    return explore_wreath_density_conjecture_within(bench, 0);
}

auto ekr::explore_wreath_density_conjecture_within(Workbench & bench, double seconds) -> CheckResult
{
    auto start = std::chrono::steady_clock::now();
    std::vector<Instance> out;
    for (auto & pair : wreath_pairs(bench, 5000)) {
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > 0 && elapsed > seconds) {
            Instance i;
            i.input = input_of({ spec::wreath(pair.g.spec, pair.h.spec) }, { { "purpose", "explore" } });
            out.push_back(skip(std::move(i), "time budget exhausted"));
        }
        else
            out.push_back(density_table_row(bench, pair, "explore"));
    }
    return settled(std::move(out));
}

auto ekr::check_s3_wr_s2_not_strict(Workbench & bench) -> CheckResult
{
    auto w = spec::wreath(spec::symmetric(3), spec::symmetric(2));
    std::vector<Instance> out;
    auto i = strict_case_instance(bench, w, false);
    if (i.status == Status::pass) {
        auto verdict = bench.strict(w);
        bool shape = bench.group(w)->order() == 72 && verdict->alpha == 12 && ! verdict->truncated
            && ! verdict->non_cosets.empty() && verdict->non_cosets.front().size() == 12;
        if (! shape)
            i = conclude(std::move(i), false, i.outcome + "; expected a complete enumeration and a size-12 witness in a group of order 72",
                    i.witness);
    }
    out.push_back(std::move(i));
    return settled(std::move(out));
}

auto ekr::check_wreath_regular_strict_ekr(Workbench & bench) -> CheckResult
{
    std::vector<Instance> out;
    for (std::size_t k : { 2, 3, 4 })
        for (auto & g : transitive_corpus(bench)) {
            auto h = spec::cyclic(k);
            auto w = spec::wreath(g.spec, h);
            auto gg = bench.group(g.spec);
            if (wreath_order(gg->order(), k, k, strict_limit(bench)) > strict_limit(bench)
                    || wreath_order(gg->order(), k, k, 1500) > 1500)
                continue;
            if (gg->degree() < 3) {
                out.push_back(vacuous(input_of({ w }), "G has degree below 3"));
                continue;
            }
            out.push_back(guarded(input_of({ w }), [&] (Instance i) {
                auto base = bench.strict(g.spec);
                auto prim = bench.primitivity(g.spec);
                if (! base->strict || prim->status == ISPrimitivity::unknown)
                    return skip(std::move(i), "factor verdicts not computable within budget");
                bool expected = *base->strict && prim->status == ISPrimitivity::primitive;
                auto r = strict_case_instance(bench, w, expected);
                r.input = i.input;
                r.outcome = "G strict-EKR " + verdict_string(base->strict) + ", graph " + to_string(prim->status) + "; " + r.outcome;
                return r;
            }));
        }
    return settled(std::move(out));
}

auto ekr::check_wreath_strict_from_internal(Workbench & bench) -> CheckResult
{
    auto s = spec::symmetric;
    auto c = spec::cyclic;
    std::vector<std::pair<GroupSpec, GroupSpec>> cases{
        { s(4), s(2) }, { c(3), s(3) }, { c(3), c(3) }, { c(3), spec::alternating(4) }, { c(4), s(3) },
        { c(5), s(2) }, { spec::dihedral(5), s(2) }, { s(3), s(2) }, { s(3), s(3) } };

    std::vector<Instance> out;
    for (auto & [g, h] : cases) {
        auto w = spec::wreath(g, h);
        out.push_back(guarded(input_of({ w }), [&] (Instance i) {
            auto gg = bench.group(g), hh = bench.group(h);
            if (! gg->is_transitive() || gg->degree() < 3 || ! hh->is_transitive())
                return conclude(std::move(i), true, "vacuous: factor hypotheses not met");
            std::vector<GroupSpec> copies(hh->degree(), g);
            auto power = spec::internal(copies);
            if (bench.group(power)->order() > strict_limit(bench))
                return skip(std::move(i), "internal power beyond the strict-EKR enumeration cap");
            auto power_strict = bench.strict(power);
            if (! power_strict->strict)
                return skip(std::move(i), "internal power enumeration truncated");
            bool h_ekr = bench.ekr(h);
            if (! *power_strict->strict || ! h_ekr)
                return conclude(std::move(i), true, std::string("vacuous: internal power strict-EKR ")
                        + verdict_string(power_strict->strict) + ", top EKR " + (h_ekr ? "true" : "false"));
            auto r = capped_strict(bench, w, true, "internal power strict-EKR, top EKR; ");
            r.input = i.input;
            return r;
        }));
    }
    return settled(std::move(out));
}

auto ekr::check_s2_wreath_strict(Workbench & bench) -> CheckResult
{
    auto s = spec::symmetric;
    std::vector<GroupSpec> tops{ s(3), s(4), s(5), spec::alternating(5), spec::dihedral(5), spec::alternating(4), spec::cyclic(3) };
    std::vector<Instance> out;
    for (auto & h : tops) {
        auto w = spec::wreath(s(2), h);
        out.push_back(guarded(input_of({ w }), [&] (Instance i) {
            auto hh = bench.group(h);
            auto hs = bench.strict(h);
            if (! hs->strict)
                return skip(std::move(i), "top group's strict-EKR enumeration truncated");
            bool premise = hh->is_transitive() && *hs->strict && has_element_fixing_one_point(*hh);
            if (! premise)
                return vacuous(i.input, std::string("top group strict-EKR ") + verdict_string(hs->strict)
                        + (has_element_fixing_one_point(*hh) ? "" : ", no element fixes exactly one point"));
            auto r = capped_strict(bench, w, true, "");
            r.input = i.input;
            return r;
        }));
    }
    return settled(std::move(out));
}

auto ekr::check_s3_wreath_strict(Workbench & bench) -> CheckResult
{
    auto s = spec::symmetric;
    std::vector<GroupSpec> tops{ s(3), s(4), spec::dihedral(5), spec::alternating(4) };
    std::vector<Instance> out;
    for (auto & h : tops) {
        auto w = spec::wreath(s(3), h);
        out.push_back(guarded(input_of({ w }), [&] (Instance i) {
            auto hh = bench.group(h);
            auto hs = bench.strict(h);
            if (! hs->strict)
                return skip(std::move(i), "top group's strict-EKR enumeration truncated");
            bool premise = hh->is_transitive() && hh->degree() >= 3 && *hs->strict && has_element_fixing_one_point(*hh);
            if (! premise)
                return vacuous(i.input, std::string("top group strict-EKR ") + verdict_string(hs->strict)
                        + (has_element_fixing_one_point(*hh) ? "" : ", no element fixes exactly one point"));
            auto r = capped_strict(bench, w, true, "");
            r.input = i.input;
            return r;
        }));
    }
    return settled(std::move(out));
}

auto ekr::check_symmetric_wreath_strict_table(Workbench & bench) -> CheckResult
{
    std::vector<std::pair<std::size_t, std::size_t>> table;
    for (std::size_t m = 1 ; m <= 4 ; ++m)
        for (std::size_t n = 1 ; n <= 4 ; ++n)
            table.emplace_back(m, n);
    table.emplace_back(5, 1);
    table.emplace_back(1, 5);
    table.emplace_back(2, 5);

    std::vector<Instance> out;
    for (auto [m, n] : table) {
        auto w = spec::wreath(spec::symmetric(m), spec::symmetric(n));
        bool expected = ! (m == 3 && n == 2);
        auto order = wreath_order(factorial(m), n, factorial(n), strict_limit(bench));
        if (order > strict_limit(bench)) {
            Instance i;
            i.input = input_of({ w }, { { "expected", expected } });
            out.push_back(skip(std::move(i), "order above the strict-EKR enumeration cap of " + std::to_string(strict_limit(bench))));
        }
        else
            out.push_back(strict_case_instance(bench, w, expected));
    }
    return settled(std::move(out));
}

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "check_support.hh"

#include <algorithm>

using namespace ekr;
using namespace ekr::detail;

namespace
{
    auto group_list(Workbench & bench, const std::vector<GroupSpec> & specs) -> std::vector<GroupAction>
    {
        std::vector<GroupAction> result;
        for (auto & s : specs)
            result.push_back(*bench.group(s));
        return result;
    }

    /// Why a set is not a maximum intersecting non-coset, or empty if it is one.
    auto non_coset_problem(Workbench & bench, const GroupSpec & s, const std::vector<ElementId> & set) -> std::string
    {
        auto g = bench.group(s);
        if (set.size() != bench.alpha(s))
            return "witness is not of maximum size";
        if (! is_independent_set(*bench.gamma(s), std::vector<Vertex>(set.begin(), set.end())))
            return "witness is not intersecting";
        if (is_coset_of_point_stabilizer(*g, set))
            return "witness is a coset";
        return "";
    }
}

auto ekr::strict_case_instance(Workbench & bench, const GroupSpec & s, bool expected) -> Instance
{
    return guarded(input_of({ s }, { { "expected", expected } }), [&] (Instance i) {
        auto verdict = bench.strict(s);
        if (! verdict->strict)
            return skip(std::move(i), "more than " + std::to_string(bench.options().mis_cap)
                    + " maximum intersecting sets through the identity");
        std::string outcome = std::string("strict-EKR ") + (*verdict->strict ? "true" : "false")
            + ", alpha " + std::to_string(verdict->alpha) + ", largest stabilizer " + std::to_string(verdict->max_stabilizer_order)
            + ", " + std::to_string(verdict->sets_through_identity) + " maximum sets through the identity";
        nlohmann::json witness;
        if (! *verdict->strict) {
            if (verdict->non_cosets.empty())
                return conclude(std::move(i), false, outcome + "; no witness recorded");
            auto problem = non_coset_problem(bench, s, verdict->non_cosets.front());
            if (! problem.empty())
                return conclude(std::move(i), false, outcome + "; " + problem);
            witness = element_json(*bench.group(s), verdict->non_cosets.front());
            outcome += ", " + std::to_string(verdict->non_cosets.size()) + " of them not cosets";
        }
        return conclude(std::move(i), *verdict->strict == expected, outcome, witness);
    });
}

auto ekr::direct_complement_instance(Workbench & bench, const GroupSpec & g, const GroupSpec & h) -> Instance
{
    return guarded(input_of({ g, h }), [&] (Instance i) {
        auto p = spec::external(g, h);
        auto ids = external_pair_ids(*bench.group(p), *bench.group(g), *bench.group(h));
        auto strong = strong_product(complement(*bench.gamma(g)), complement(*bench.gamma(h)), bench.options().vertex_cap);
        auto check = equal_under_bijection(strong, complement(*bench.gamma(p)), std::vector<Vertex>(ids.begin(), ids.end()));
        nlohmann::json witness;
        if (check.mismatch)
            witness = { check.mismatch->first, check.mismatch->second };
        return conclude(std::move(i), check.equal,
                std::to_string(check.mismatches) + " mismatched pairs on " + std::to_string(ids.size()) + " vertices", witness);
    });
}

auto ekr::regular_copies_instance(Workbench & bench, const GroupSpec & g, const GroupSpec & h) -> Instance
{
    return guarded(input_of({ g, h }), [&] (Instance i) {
        auto gg = bench.group(g), hh = bench.group(h);
        if (! hh->is_regular())
            return skip(std::move(i), "second factor is not regular");
        auto p = spec::external(g, h);
        auto ids = external_pair_ids(*bench.group(p), *gg, *hh);
        auto co = complement(*bench.gamma(p));
        auto co_g = complement(*bench.gamma(g));

        std::size_t n = gg->order(), m = hh->order();
        std::vector<std::size_t> layer(co.size());
        std::vector<std::vector<Vertex>> layers(m);
        for (std::size_t a = 0 ; a < n ; ++a)
            for (std::size_t b = 0 ; b < m ; ++b) {
                layer[ids[a * m + b]] = b;
                layers[b].push_back(ids[a * m + b]);
            }

        for (Vertex u = 0 ; u < co.size() ; ++u)
            for (auto v = co.row(u).first() ; v != Bitset::npos ; v = co.row(u).next(v))
                if (layer[u] != layer[v])
                    return conclude(std::move(i), false, "complement edge between copies", { u, v });

        std::vector<Vertex> identity(n);
        for (std::size_t a = 0 ; a < n ; ++a)
            identity[a] = Vertex(a);
        for (std::size_t b = 0 ; b < m ; ++b) {
            auto check = equal_under_bijection(induced_subgraph(co, layers[b]), co_g, identity);
            if (! check.equal)
                return conclude(std::move(i), false, "copy " + std::to_string(b) + " differs from the complement of the factor's graph");
        }
        return conclude(std::move(i), true,
                std::to_string(m) + " disjoint copies of a " + std::to_string(n) + "-vertex complement, no edges between them");
    });
}

auto ekr::regular_multipartite_instance(Workbench & bench, const GroupSpec & g, const GroupSpec & h) -> Instance
{
    return guarded(input_of({ g, h }), [&] (Instance i) {
        auto hh = bench.group(h);
        auto base = is_complete_multipartite(*bench.gamma(g));
        if (! hh->is_regular() || ! base)
            return skip(std::move(i), "hypotheses not met");
        std::size_t k = base->parts.size();
        auto product = is_complete_multipartite(*bench.gamma(spec::external(g, h)));
        std::size_t parts = product ? product->parts.size() : 0;
        return conclude(std::move(i), product && parts == k * hh->order(),
                product ? "complete multipartite with " + std::to_string(parts) + " parts, expected "
                    + std::to_string(k) + " * " + std::to_string(hh->order())
                    : std::string("product graph is not complete multipartite"));
    });
}

auto ekr::construct_conjecture_witness(Workbench & bench, std::size_t n) -> ConjectureWitness
{
    std::size_t a = 0, k = n;
    while (k != 0 && k % 2 == 0) {
        k /= 2;
        ++a;
    }
    if (n == 0 || a == 0 || k < 3)
        throw Error("degree " + std::to_string(n) + " is not of the form 2^a * k with a >= 1 and odd k >= 3");
    if (2 * k > max_search_degree)
        throw Error("degree " + std::to_string(n) + " needs a search at degree " + std::to_string(2 * k)
                + ", above the supported " + std::to_string(max_search_degree));

    auto search = bench.multipartite(2 * k, k);
    if (search->groups.empty())
        throw Error("no transitive group of degree " + std::to_string(2 * k) + " with a complete "
                + std::to_string(k) + "-partite derangement graph"
                + (search->exhausted ? " within the pair budget" : ""));

    auto result_spec = search->groups.front();
    if (a >= 2)
        result_spec = spec::external(result_spec, spec::cyclic(std::size_t(1) << (a - 1)));

    auto g = bench.group(result_spec);
    auto parts = is_complete_multipartite(*bench.gamma(result_spec));
    if (! g->is_transitive() || g->degree() != n || ! parts || parts->parts.size() != n / 2)
        throw Error("constructed group of degree " + std::to_string(n) + " failed certification");
    return { result_spec, g->degree(), parts->parts.size() };
}

auto ekr::density_product_instance(Workbench & bench, const GroupSpec & g, const GroupSpec & h) -> Instance
{
    return guarded(input_of({ g, h }), [&] (Instance i) {
        auto p = spec::external(g, h);
        auto rg = bench.rho(g), rh = bench.rho(h), rp = bench.rho(p);
        std::string outcome = "rho " + to_string(rp) + " = " + to_string(rg) + " * " + to_string(rh);
        if (rp != rg * rh)
            return conclude(std::move(i), false, outcome + " fails");

        auto sg = bench.strict(g), sh = bench.strict(h), sp = bench.strict(p);
        if (! sg->strict || ! sh->strict || ! sp->strict)
            return skip(std::move(i), outcome + "; a strict-EKR enumeration was truncated");
        bool expected = *sg->strict && *sh->strict;
        outcome += std::string("; strict-EKR ") + (*sp->strict ? "true" : "false") + ", factors "
            + (*sg->strict ? "true" : "false") + " and " + (*sh->strict ? "true" : "false");
        if (*sp->strict != expected)
            return conclude(std::move(i), false, outcome);
        if (*sp->strict)
            return conclude(std::move(i), true, outcome);

        // failing factor's witness times a maximum intersecting set of the
        // other: a point stabilizer under EKR, else its least maximum set
        auto gg = bench.group(g), hh = bench.group(h);
        auto maximum_set = [] (const GroupAction & x, const StrictEKRVerdict & v) {
            if (v.alpha == v.max_stabilizer_order)
                return point_stabilizer(x, 0);
            return v.non_cosets.empty() ? std::vector<ElementId>{ } : v.non_cosets.front();
        };
        std::vector<ElementId> left, right;
        if (! *sg->strict && ! sg->non_cosets.empty()) {
            left = sg->non_cosets.front();
            right = maximum_set(*hh, *sh);
        }
        else if (! sh->non_cosets.empty()) {
            left = maximum_set(*gg, *sg);
            right = sh->non_cosets.front();
        }
        if (left.empty() || right.empty())
            return conclude(std::move(i), false, outcome + "; factor witness missing");
        auto ids = external_pair_ids(*bench.group(p), *gg, *hh);
        std::vector<ElementId> inherited;
        for (auto x : left)
            for (auto y : right)
                inherited.push_back(ids[x * hh->order() + y]);
        std::sort(inherited.begin(), inherited.end());
        auto problem = non_coset_problem(bench, p, inherited);
        // without EKR only the least maximum set is recorded
        bool listed = sp->alpha != sp->max_stabilizer_order
            || std::binary_search(sp->non_cosets.begin(), sp->non_cosets.end(), inherited);
        if (! problem.empty() || ! listed)
            return conclude(std::move(i), false, outcome + "; inherited witness: " + (problem.empty() ? "not listed" : problem));
        return conclude(std::move(i), true, outcome + ", inherited non-coset witness of size " + std::to_string(inherited.size()),
                element_json(*bench.group(p), inherited));
    });
}

auto ekr::internal_graph_instance(Workbench & bench, const std::vector<GroupSpec> & factors) -> Instance
{
    return guarded(input_of(factors), [&] (Instance i) {
        auto p = spec::internal(factors);
        auto groups = group_list(bench, factors);
        auto ids = internal_tuple_ids(*bench.group(p), groups);
        Graph product = *bench.gamma(factors.front());
        for (std::size_t k = 1 ; k < factors.size() ; ++k)
            product = direct_product(product, *bench.gamma(factors[k]), bench.options().vertex_cap);
        auto check = equal_under_bijection(product, *bench.gamma(p), std::vector<Vertex>(ids.begin(), ids.end()));

        bool all_ekr = std::all_of(factors.begin(), factors.end(), [&] (auto & f) { return bench.ekr(f); });
        bool ekr = bench.ekr(p);
        std::string outcome = std::to_string(check.mismatches) + " mismatched pairs on " + std::to_string(ids.size())
            + " vertices; factors " + (all_ekr ? "all" : "not all") + " EKR, product " + (ekr ? "EKR" : "not EKR");
        nlohmann::json witness;
        if (check.mismatch)
            witness = { check.mismatch->first, check.mismatch->second };
        return conclude(std::move(i), check.equal && (! all_ekr || ekr), outcome, witness);
    });
}

auto ekr::check_external_complement_strong(Workbench & bench) -> CheckResult
{
    std::vector<Instance> out;
    for (auto & [g, h] : corpus_pairs(standard_corpus(bench), bench, 2000))
        out.push_back(direct_complement_instance(bench, g.spec, h.spec));
    out.push_back(direct_complement_instance(bench, spec::alternating(4), spec::symmetric(3)));
    return settled(std::move(out));
}

auto ekr::check_external_regular_copies(Workbench & bench) -> CheckResult
{
    std::vector<Instance> out;
    for (auto & g : standard_corpus(bench))
        for (auto & h : regular_corpus(bench))
            if (bench.group(g.spec)->order() * bench.group(h.spec)->order() <= 2000)
                out.push_back(regular_copies_instance(bench, g.spec, h.spec));
    return settled(std::move(out));
}

auto ekr::check_external_regular_multipartite(Workbench & bench) -> CheckResult
{
    std::vector<CorpusEntry> bases = regular_corpus(bench);
    bases.push_back(standard_corpus(bench).back());
    std::vector<Instance> out;
    for (auto & g : bases)
        for (auto & h : regular_corpus(bench))
            out.push_back(regular_multipartite_instance(bench, g.spec, h.spec));
    return settled(std::move(out));
}

auto ekr::check_multipartite_conjecture_witness(Workbench & bench) -> CheckResult
{
    std::vector<Instance> out;
    for (std::size_t n : { 6, 10, 12, 24, 48 })
        out.push_back(guarded(graph_input("degree " + std::to_string(n), { { "degree", n } }), [&] (Instance i) {
            if (n == 10)
                return skip(std::move(i), "needs a degree-10 subgroup search, beyond the supported degree "
                        + std::to_string(max_search_degree));
            auto w = construct_conjecture_witness(bench, n);
            i.input["groups"] = { w.spec };
            return conclude(std::move(i), w.degree == n && w.parts == n / 2,
                    describe(w.spec) + ": transitive of degree " + std::to_string(w.degree)
                    + ", derangement graph complete multipartite with " + std::to_string(w.parts) + " parts");
        }));
    return settled(std::move(out));
}

auto ekr::check_external_density_product(Workbench & bench) -> CheckResult
{
    std::vector<Instance> out;
    for (auto & [g, h] : corpus_pairs(transitive_corpus(bench), bench, 2000))
        out.push_back(density_product_instance(bench, g.spec, h.spec));
    out.push_back(density_product_instance(bench, spec::alternating(4), spec::symmetric(3)));
    return settled(std::move(out));
}

auto ekr::check_internal_tensor_graph(Workbench & bench) -> CheckResult
{
    auto s = spec::symmetric, a = spec::alternating, c = spec::cyclic, d = spec::dihedral;
    std::vector<std::vector<GroupSpec>> lists{
        { s(3) }, { s(3), s(3) }, { s(2), s(2), s(2) }, { a(4), s(3) }, { s(4), s(3) },
        { c(3), c(4), c(2) }, { d(4), s(3) }, { a(5), s(2) }, { spec::k_subsets(a(5), 2), s(2) } };
    std::vector<Instance> out;
    for (auto & l : lists)
        out.push_back(internal_graph_instance(bench, l));
    return settled(std::move(out));
}

auto ekr::check_internal_square_strict_ekr(Workbench & bench) -> CheckResult
{
    std::vector<Instance> out;
    for (auto & e : transitive_corpus(bench)) {
        auto g = bench.group(e.spec);
        if (g->degree() < 3)
            continue;
        auto square = spec::internal({ e.spec, e.spec });
        out.push_back(guarded(input_of({ square }), [&] (Instance i) {
            if (g->order() > 24)
                return skip(std::move(i), "square of order " + std::to_string(g->order() * g->order())
                        + " is beyond the strict-EKR enumeration budget");
            auto base = bench.strict(e.spec);
            auto prim = bench.primitivity(e.spec);
            if (! base->strict || prim->status == ISPrimitivity::unknown)
                return skip(std::move(i), "factor verdicts not computable within budget");
            bool expected = *base->strict && prim->status == ISPrimitivity::primitive;
            auto r = strict_case_instance(bench, square, expected);
            r.input = i.input;
            r.outcome = "factor strict-EKR " + verdict_string(base->strict) + ", factor graph " + to_string(prim->status)
                + "; square " + r.outcome;
            return r;
        }));
    }
    return settled(std::move(out));
}

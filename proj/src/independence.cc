/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ekr/independence.hh>
#include <ekr/graph_products.hh>
#include <ekr/errors.hh>

#include <algorithm>

using namespace ekr;

namespace
{
    auto all_vertices(std::size_t n) -> Bitset
    {
        Bitset all(n);
        all.set_all();
        return all;
    }

    /// Depth-first search for a ratio-attaining non-maximum independent set.
    class RatioSearch
    {
        private:
            const Graph & _x;
            std::size_t _n, _alpha;
            std::uint64_t _budget;
            std::vector<Bitset> _closed;

        public:
            std::uint64_t nodes = 0;
            bool exhausted = false;
            std::optional<std::vector<Vertex>> best;

            RatioSearch(const Graph & x, std::size_t alpha, std::uint64_t budget) :
                _x(x), _n(x.size()), _alpha(alpha), _budget(budget)
            {
                for (std::size_t v = 0 ; v < _n ; ++v) {
                    Bitset row = x.row(Vertex(v));
                    row.set(v);
                    _closed.push_back(std::move(row));
                }
            }

            auto closed(Vertex v) const -> const Bitset & { return _closed[v]; }

            auto better(const std::vector<Vertex> & a) const -> bool
            {
                if (! best)
                    return true;
                std::vector<Vertex> sorted = a;
                std::sort(sorted.begin(), sorted.end());
                return std::pair{ sorted.size(), sorted } < std::pair{ best->size(), *best };
            }

            /// Extends a using candidates[pos..] in order.
            auto search(std::vector<Vertex> & a, const Bitset & na, const std::vector<Vertex> & candidates, std::size_t pos) -> void
            {
                if (exhausted)
                    return;
                if (++nodes > _budget && _budget) {
                    exhausted = true;
                    return;
                }

                std::size_t size = a.size(), closed = na.count();
                if (size > 0 && size < _alpha && size * _n == _alpha * closed && better(a)) {
                    best = a;
                    std::sort(best->begin(), best->end());
                }

                if (size + 1 >= _alpha || (best && size >= best->size()))
                    return;

                // |N[A]| grows by at least one per added vertex, and the ratio
                // of the largest allowed extension is the best reachable
                std::size_t k = std::min(_alpha - 1 - size, candidates.size() - pos);
                if ((size + k) * _n < _alpha * (closed + k))
                    return;

                Bitset next(_n);
                for (std::size_t i = pos ; i < candidates.size() ; ++i) {
                    auto v = candidates[i];
                    if (na.test(v))
                        continue;
                    a.push_back(v);
                    next = na;
                    next |= _closed[v];
                    search(a, next, candidates, i + 1);
                    a.pop_back();
                    if (exhausted)
                        return;
                }
            }
    };
}

auto ekr::independence_number(const Graph & x, const SolverOptions & options) -> CliqueResult
{
    return max_clique(complement(x), options);
}

auto ekr::vertex_transitive_independence_number(const Graph & x, const SolverOptions & options) -> CliqueResult
{
    std::size_t n = x.size();
    if (n == 0)
        return CliqueResult{ };

    // any clique bounds alpha for a vertex-transitive graph; a cheap, possibly
    // non-maximum one is enough to stop the search early when it is tight
    SolverOptions quick = options;
    quick.node_budget = 20'000;
    auto clique = largest_clique_found(x, all_vertices(n), quick);
    std::size_t bound = n / std::max<std::size_t>(1, clique.size);

    auto comp = complement(x);
    CliqueResult rest;
    // alpha usually meets the bound, and a plain feasibility search proves that
    // far faster than maximising
    if (bound > 1) {
        if (auto hit = find_clique_within(comp, comp.row(0), bound - 1, options)) {
            rest.size = hit->size();
            rest.witness = std::move(*hit);
        }
        else
            rest = max_clique_within(comp, comp.row(0), options, bound - 1);
    }

    CliqueResult result;
    result.size = rest.size + 1;
    result.witness = rest.witness;
    result.witness.push_back(0);
    std::sort(result.witness.begin(), result.witness.end());
    result.nodes = clique.nodes + rest.nodes;
    return result;
}

auto ekr::enumerate_maximum_independent_sets(const Graph & x, std::size_t cap,
        const SolverOptions & options, std::optional<Vertex> anchor) -> SetEnumeration
{
    return enumerate_maximum_cliques(complement(x), cap, options, anchor);
}

auto ekr::clique_coclique_check(const Graph & x, const SolverOptions & options) -> bool
{
    auto omega = max_clique_within(x, all_vertices(x.size()), options).size;
    auto alpha = max_clique_within(complement(x), all_vertices(x.size()), options).size;
    return alpha * omega <= x.size();
}

auto ekr::to_string(ISPrimitivity s) -> std::string
{
    switch (s) {
        case ISPrimitivity::primitive: return "primitive";
        case ISPrimitivity::not_primitive: return "not_primitive";
        case ISPrimitivity::unknown: return "unknown";
    }
    return "unknown";
}

auto ekr::is_IS_primitive(const Graph & x, std::uint64_t budget, bool vertex_transitive,
        const SolverOptions & options, std::size_t mis_cap) -> ISPrimitivityVerdict
{
    ISPrimitivityVerdict verdict;
    std::size_t n = x.size();
    if (n == 0) {
        verdict.status = ISPrimitivity::primitive;
        return verdict;
    }

    if (vertex_transitive) {
        auto sets = enumerate_maximum_independent_sets(x, mis_cap, options, Vertex{ 0 });
        verdict.alpha = sets.size;
        verdict.budget_spent = sets.nodes;
        if (sets.truncated)
            return verdict;

        RatioSearch search(x, verdict.alpha, budget);
        for (auto & m : sets.sets) {
            std::vector<Vertex> candidates;
            for (auto v : m)
                if (v != 0)
                    candidates.push_back(v);
            std::vector<Vertex> a{ 0 };
            search.search(a, search.closed(0), candidates, 0);
            if (search.exhausted)
                break;
        }
        verdict.budget_spent += search.nodes;
        if (search.best)
            verdict.witness = *search.best;
        else if (search.exhausted)
            return verdict;
    }
    else {
        auto alpha = independence_number(x, options);
        verdict.alpha = alpha.size;
        verdict.budget_spent = alpha.nodes;

        std::vector<Vertex> candidates(n);
        for (std::size_t v = 0 ; v < n ; ++v)
            candidates[v] = Vertex(v);
        RatioSearch search(x, verdict.alpha, budget);
        std::vector<Vertex> a;
        search.search(a, Bitset(n), candidates, 0);
        verdict.budget_spent += search.nodes;
        if (search.best)
            verdict.witness = *search.best;
        else if (search.exhausted)
            return verdict;
    }

    if (verdict.witness.empty())
        verdict.status = ISPrimitivity::primitive;
    else {
        verdict.status = ISPrimitivity::not_primitive;
        verdict.neighbourhood = closed_neighborhood(x, verdict.witness).size();
    }
    return verdict;
}

auto ekr::is_MIS_normal_direct_square(const Graph & x, bool vertex_transitive,
        const SolverOptions & options, std::size_t mis_cap, std::size_t vertex_cap) -> MISNormalResult
{
    MISNormalResult result;
    std::size_t n = x.size();
    if (n * n > vertex_cap) {
        result.reason = "square has " + std::to_string(n * n) + " vertices, above the cap of " + std::to_string(vertex_cap);
        return result;
    }

    auto square = direct_power(x, 2, vertex_cap);
    auto sets = vertex_transitive
        ? enumerate_maximum_independent_sets(square, mis_cap, options, Vertex{ 0 })
        : enumerate_maximum_independent_sets(square, mis_cap, options);
    auto preimage = [&] (const std::vector<Vertex> & s, bool rows) {
        std::vector<std::size_t> count(n, 0);
        for (auto v : s)
            ++count[rows ? v / n : v % n];
        std::vector<Vertex> base;
        for (std::size_t i = 0 ; i < n ; ++i) {
            if (count[i] != 0 && count[i] != n)
                return false;
            if (count[i] == n)
                base.push_back(Vertex(i));
        }
        return is_independent_set(x, base);
    };

    // a non-preimage among a truncated enumeration still settles the question
    for (auto & s : sets.sets) {
        ++result.sets_checked;
        if (! preimage(s, true) && ! preimage(s, false)) {
            result.normal = false;
            result.witness = s;
            break;
        }
    }
    if (sets.truncated) {
        result.reason = "more than " + std::to_string(mis_cap) + " maximum independent sets in the square";
        if (result.normal)
            result.reason += "; witness is the least non-preimage among those enumerated";
    }
    else if (! result.normal)
        result.normal = true;
    return result;
}

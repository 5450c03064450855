/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ekr/clique.hh>
#include <ekr/errors.hh>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

using namespace ekr;

namespace
{
    enum class Mode { maximum, feasible, enumerate };

    struct Shared
    {
        Mode mode;
        std::uint64_t budget = 0;
        std::size_t target = 0;
        std::size_t upper = ~std::size_t{0};
        std::size_t cap = 0;

        std::atomic<std::uint64_t> nodes{ 0 };
        std::atomic<bool> stop{ false };
        std::atomic<bool> exhausted{ false };
        std::atomic<std::size_t> best{ 0 };

        std::mutex mutex;
        std::vector<int> best_clique;
        std::vector<std::vector<int>> found;
        bool truncated = false;
    };

    /// The candidate subgraph, renumbered by non-increasing degree (ties by
    /// original index) so that colouring meets high-degree vertices first.
    struct LocalGraph
    {
        std::vector<Vertex> original;
        std::vector<Bitset> adj;
    };

    auto make_local(const Graph & x, const Bitset & candidates) -> LocalGraph
    {
        LocalGraph g;
        g.original = to_vertices(candidates);
        std::vector<std::size_t> degree(x.size(), 0);
        for (auto v : g.original)
            degree[v] = x.row(v).intersection_count(candidates);
        std::stable_sort(g.original.begin(), g.original.end(), [&] (Vertex a, Vertex b) {
                return degree[a] > degree[b]; });

        std::size_t n = g.original.size();
        std::vector<int> local(x.size(), -1);
        for (std::size_t i = 0 ; i < n ; ++i)
            local[g.original[i]] = int(i);

        g.adj.assign(n, Bitset(n));
        for (std::size_t i = 0 ; i < n ; ++i) {
            const auto & row = x.row(g.original[i]);
            for (auto w = row.first() ; w != Bitset::npos ; w = row.next(w))
                if (local[w] >= 0 && w != g.original[i])
                    g.adj[i].set(std::size_t(local[w]));
        }
        return g;
    }

    class Engine
    {
        private:
            const LocalGraph & _g;
            Shared & _s;
            std::vector<int> _clique;
            std::vector<Bitset> _p;
            std::vector<std::vector<int>> _order, _bound;

            auto level(std::size_t depth) -> void
            {
                while (_p.size() <= depth) {
                    _p.emplace_back(_g.adj.size());
                    _order.emplace_back();
                    _bound.emplace_back();
                }
            }

            auto colour(const Bitset & p, std::vector<int> & order, std::vector<int> & bound) -> void
            {
                order.clear();
                bound.clear();
                Bitset uncoloured = p;
                int c = 0;
                while (uncoloured.any()) {
                    ++c;
                    Bitset q = uncoloured;
                    for (auto v = q.first() ; v != Bitset::npos ; v = q.first()) {
                        uncoloured.reset(v);
                        q.reset(v);
                        q.subtract(_g.adj[v]);
                        order.push_back(int(v));
                        bound.push_back(c);
                    }
                }
            }

            auto pruned(std::size_t size, int bound) const -> bool
            {
                if (_s.mode == Mode::maximum)
                    return size + std::size_t(bound) <= _s.best.load(std::memory_order_relaxed);
                return size + std::size_t(bound) < _s.target;
            }

            auto record() -> void
            {
                std::lock_guard<std::mutex> lock(_s.mutex);
                switch (_s.mode) {
                    case Mode::maximum:
                        if (_clique.size() > _s.best.load()) {
                            _s.best = _clique.size();
                            _s.best_clique = _clique;
                            if (_clique.size() >= _s.upper)
                                _s.stop = true;
                        }
                        break;
                    case Mode::feasible:
                        if (_s.best_clique.empty())
                            _s.best_clique = _clique;
                        _s.stop = true;
                        break;
                    case Mode::enumerate:
                        if (_s.found.size() >= _s.cap) {
                            _s.truncated = true;
                            _s.stop = true;
                        }
                        else
                            _s.found.push_back(_clique);
                        break;
                }
            }

            /// Branch on v with candidates already in _p[depth].
            auto branch(int v, std::size_t depth) -> void
            {
                _clique.push_back(v);
                if (_s.mode != Mode::maximum && _clique.size() == _s.target)
                    record();
                else if (_p[depth].none()) {
                    if (_s.mode == Mode::maximum)
                        record();
                }
                else
                    expand(depth);
                _clique.pop_back();
            }

            auto expand(std::size_t depth) -> void
            {
                if (_s.stop.load(std::memory_order_relaxed))
                    return;
                auto n = ++_s.nodes;
                if (_s.budget && n > _s.budget) {
                    _s.exhausted = true;
                    _s.stop = true;
                    return;
                }

                level(depth + 1);
                colour(_p[depth], _order[depth], _bound[depth]);
                for (std::size_t i = _order[depth].size() ; i-- > 0 ; ) {
                    if (_s.stop.load(std::memory_order_relaxed))
                        return;
                    if (pruned(_clique.size(), _bound[depth][i]))
                        return;
                    int v = _order[depth][i];
                    _p[depth + 1] = _p[depth];
                    _p[depth + 1] &= _g.adj[v];
                    branch(v, depth + 1);
                    _p[depth].reset(v);
                }
            }

        public:
            Engine(const LocalGraph & g, Shared & s) : _g(g), _s(s) { }

            /// One top-level subproblem: v with candidates restricted to earlier vertices.
            auto root_task(int v, const Bitset & earlier, int bound) -> void
            {
                if (_s.stop.load() || pruned(0, bound))
                    return;
                level(1);
                _p[1] = earlier;
                _p[1] &= _g.adj[v];
                branch(v, 1);
            }
    };

    auto run(const Graph & x, const Bitset & candidates, Shared & s, unsigned threads) -> LocalGraph
    {
        auto g = make_local(x, candidates);
        std::size_t n = g.original.size();
        if (n == 0)
            return g;

        if (s.mode != Mode::maximum && s.target == 0) {
            s.found.push_back({ });
            return g;
        }

        // colour the root once; its order and bounds define the task list
        std::vector<int> order, bound;
        {
            Bitset all(n);
            all.set_all();
            Bitset uncoloured = all;
            int c = 0;
            while (uncoloured.any()) {
                ++c;
                Bitset q = uncoloured;
                for (auto v = q.first() ; v != Bitset::npos ; v = q.first()) {
                    uncoloured.reset(v);
                    q.reset(v);
                    q.subtract(g.adj[v]);
                    order.push_back(int(v));
                    bound.push_back(c);
                }
            }
        }
        ++s.nodes;

        std::atomic<std::ptrdiff_t> next{ std::ptrdiff_t(order.size()) - 1 };
        auto worker = [&] {
            Engine engine(g, s);
            Bitset earlier(n);
            while (true) {
                auto i = next.fetch_sub(1);
                if (i < 0)
                    return;
                earlier.reset_all();
                for (std::ptrdiff_t j = 0 ; j < i ; ++j)
                    earlier.set(std::size_t(order[j]));
                engine.root_task(order[i], earlier, bound[i]);
                if (s.stop.load())
                    return;
            }
        };

        threads = std::max(1u, threads);
        if (threads == 1)
            worker();
        else {
            std::vector<std::thread> pool;
            for (unsigned t = 0 ; t < threads ; ++t)
                pool.emplace_back(worker);
            for (auto & t : pool)
                t.join();
        }

        return g;
    }

    auto check_budget(const Shared & s) -> void
    {
        if (s.exhausted)
            throw BudgetExceeded(s.nodes.load());
    }

    auto translate(const LocalGraph & g, const std::vector<int> & clique) -> std::vector<Vertex>
    {
        std::vector<Vertex> result;
        for (auto v : clique)
            result.push_back(g.original[v]);
        std::sort(result.begin(), result.end());
        return result;
    }

    auto reject_loops(const Graph & x) -> void
    {
        if (x.loops_allowed())
            throw Error("clique search needs a loop-free graph");
    }
}

auto ekr::max_clique_within(const Graph & x, const Bitset & candidates, const SolverOptions & options,
        std::size_t upper_bound) -> CliqueResult
{
    reject_loops(x);
    Shared s;
    s.mode = Mode::maximum;
    s.budget = options.node_budget;
    s.upper = upper_bound;
    auto g = run(x, candidates, s, options.threads);
    check_budget(s);
    return CliqueResult{ s.best.load(), translate(g, s.best_clique), s.nodes.load() };
}

auto ekr::largest_clique_found(const Graph & x, const Bitset & candidates, const SolverOptions & options) -> CliqueResult
{
    reject_loops(x);
    Shared s;
    s.mode = Mode::maximum;
    s.budget = options.node_budget;
    auto g = run(x, candidates, s, options.threads);
    CliqueResult result{ s.best.load(), translate(g, s.best_clique), s.nodes.load() };
    result.proven = ! s.exhausted;
    return result;
}

auto ekr::find_clique_within(const Graph & x, const Bitset & candidates, std::size_t k,
        const SolverOptions & options) -> std::optional<std::vector<Vertex>>
{
    reject_loops(x);
    if (k == 0)
        return std::vector<Vertex>{ };
    Shared s;
    s.mode = Mode::feasible;
    s.budget = options.node_budget;
    s.target = k;
    auto g = run(x, candidates, s, options.threads);
    if (s.best_clique.empty())
        check_budget(s);
    if (s.best_clique.empty())
        return std::nullopt;
    return translate(g, s.best_clique);
}

auto ekr::enumerate_cliques_within(const Graph & x, const Bitset & candidates, std::size_t k,
        std::size_t cap, const SolverOptions & options) -> SetEnumeration
{
    reject_loops(x);
    Shared s;
    s.mode = Mode::enumerate;
    s.budget = options.node_budget;
    s.target = k;
    s.cap = cap;
    auto g = run(x, candidates, s, options.threads);
    check_budget(s);

    SetEnumeration result;
    result.size = k;
    result.truncated = s.truncated;
    result.nodes = s.nodes.load();
    if (k == 0) {
        result.sets.push_back({ });
        return result;
    }
    for (auto & c : s.found)
        result.sets.push_back(translate(g, c));
    std::sort(result.sets.begin(), result.sets.end());
    return result;
}

auto ekr::lex_least_clique_within(const Graph & x, const Bitset & candidates, std::size_t k,
        const SolverOptions & options) -> std::vector<Vertex>
{
    std::vector<Vertex> chosen;
    Bitset remaining = candidates;
    while (chosen.size() < k) {
        bool extended = false;
        for (auto v = remaining.first() ; v != Bitset::npos ; v = remaining.next(v)) {
            // a lexicographically smaller choice would have been taken earlier,
            // so only later vertices can complete the clique
            Bitset rest = remaining;
            rest &= x.row(Vertex(v));
            for (auto u = rest.first() ; u != Bitset::npos && u < v ; u = rest.next(u))
                rest.reset(u);
            std::size_t need = k - chosen.size() - 1;
            if (need == 0 || rest.count() >= need)
                if (need == 0 || find_clique_within(x, rest, need, options)) {
                    chosen.push_back(Vertex(v));
                    remaining = std::move(rest);
                    extended = true;
                    break;
                }
        }
        if (! extended)
            throw Error("no clique of the requested size among the candidates");
    }
    return chosen;
}

auto ekr::max_clique(const Graph & x, const SolverOptions & options) -> CliqueResult
{
    Bitset all(x.size());
    all.set_all();
    auto result = max_clique_within(x, all, options);
    result.witness = lex_least_clique_within(x, all, result.size, options);
    return result;
}

auto ekr::enumerate_maximum_cliques(const Graph & x, std::size_t cap, const SolverOptions & options,
        std::optional<Vertex> anchor) -> SetEnumeration
{
    Bitset candidates(x.size());
    if (anchor)
        candidates = x.row(*anchor);
    else
        candidates.set_all();

    auto best = max_clique_within(x, candidates, options);
    auto result = enumerate_cliques_within(x, candidates, best.size, cap, options);
    result.nodes += best.nodes;
    if (anchor) {
        result.size += 1;
        for (auto & s : result.sets) {
            s.push_back(*anchor);
            std::sort(s.begin(), s.end());
        }
        std::sort(result.sets.begin(), result.sets.end());
    }
    return result;
}

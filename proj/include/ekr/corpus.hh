/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef EKR_GUARD_CORPUS_HH
#define EKR_GUARD_CORPUS_HH 1

#include <ekr/density.hh>
#include <ekr/group_spec.hh>
#include <ekr/search.hh>

#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace ekr
{
    struct VerifyOptions
    {
        /// Workers running checks side by side; each solver call is then
        /// single-threaded so that budgets are spent identically every run.
        unsigned threads = 1;
        std::size_t element_cap = default_element_cap;
        std::size_t mis_cap = default_mis_cap;
        std::size_t vertex_cap = default_vertex_cap;
        /// Per solver call.
        std::uint64_t node_budget = 20'000'000;
        std::uint64_t seed = 1;
        std::string cache_dir = ".ekr-cache";
        bool extended = false;
    };

    /// Thread-safe memo table; concurrent requests for one key compute once.
    template <typename T>
    class Memo
    {
        private:
            std::mutex _mutex;
            std::map<std::string, std::shared_future<std::shared_ptr<const T>>> _table;

        public:
            template <typename F>
            auto get(const std::string & key, F make) -> std::shared_ptr<const T>
            {
                std::promise<std::shared_ptr<const T>> promise;
                std::shared_future<std::shared_ptr<const T>> future;
                bool owner = false;
                {
                    std::lock_guard<std::mutex> lock(_mutex);
                    auto i = _table.find(key);
                    if (i == _table.end()) {
                        future = promise.get_future().share();
                        _table.emplace(key, future);
                        owner = true;
                    }
                    else
                        future = i->second;
                }
                if (owner) {
                    try {
                        promise.set_value(std::make_shared<const T>(make()));
                    }
                    catch (...) {
                        promise.set_exception(std::current_exception());
                    }
                }
                return future.get();
            }
    };

    struct MultipartiteSearch
    {
        std::size_t degree = 0, parts = 0;
        std::vector<GroupSpec> groups;
        bool exhausted = false;
        std::uint64_t pairs_examined = 0;
        std::uint64_t distinct_transitive = 0;
    };

    /// Transitive 2-generated groups of the given degree whose derangement
    /// graph is complete multipartite with exactly `parts` parts.
    auto search_multipartite(std::size_t degree, std::size_t parts, std::uint64_t pair_budget) -> MultipartiteSearch;

    /// As above, but read from and written to a JSON file in cache_dir. Cached
    /// groups are rebuilt and recertified before use; a cache entry that fails
    /// is discarded and the search rerun.
    auto cached_search_multipartite(std::size_t degree, std::size_t parts, std::uint64_t pair_budget,
            const std::string & cache_dir) -> MultipartiteSearch;

    auto to_json(const MultipartiteSearch & s) -> nlohmann::json;

    /**
     * Shared state for a verification run: options plus memoized groups,
     * derangement graphs and density computations keyed by group spec.
     */
    class Workbench
    {
        private:
            VerifyOptions _options;
            Memo<GroupAction> _groups;
            Memo<Graph> _gammas;
            Memo<std::size_t> _alphas;
            Memo<StrictEKRVerdict> _stricts;
            Memo<ISPrimitivityVerdict> _primitivity;
            Memo<MultipartiteSearch> _searches;

        public:
            explicit Workbench(VerifyOptions options) : _options(std::move(options)) { }

            auto options() const -> const VerifyOptions & { return _options; }
            auto solver() const -> SolverOptions;
            auto density_options() const -> DensityOptions;

            auto group(const GroupSpec & spec) -> std::shared_ptr<const GroupAction>;
            auto gamma(const GroupSpec & spec) -> std::shared_ptr<const Graph>;
            auto alpha(const GroupSpec & spec) -> std::size_t;
            auto strict(const GroupSpec & spec) -> std::shared_ptr<const StrictEKRVerdict>;
            /// Transitive groups only.
            auto rho(const GroupSpec & spec) -> Rational;
            auto ekr(const GroupSpec & spec) -> bool;
            auto primitivity(const GroupSpec & spec) -> std::shared_ptr<const ISPrimitivityVerdict>;
            auto multipartite(std::size_t degree, std::size_t parts) -> std::shared_ptr<const MultipartiteSearch>;

            /// The first degree-6 group with a complete 3-partite derangement graph.
            auto multipartite_witness() -> GroupSpec;
    };

    struct CorpusEntry
    {
        std::string name;
        GroupSpec spec;
    };

    /// S2..S5, A4, A5, A5 on 2-subsets, C2..C6, D4..D6 and the degree-6
    /// multipartite witness, in that order.
    auto standard_corpus(Workbench & bench) -> std::vector<CorpusEntry>;

    /// Unordered pairs (i <= j) from the corpus whose order product is at most limit.
    auto corpus_pairs(const std::vector<CorpusEntry> & corpus, Workbench & bench, std::size_t limit)
        -> std::vector<std::pair<CorpusEntry, CorpusEntry>>;
}

#endif

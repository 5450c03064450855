/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef EKR_GUARD_CLIQUE_HH
#define EKR_GUARD_CLIQUE_HH 1

#include <ekr/graph.hh>

#include <cstdint>
#include <optional>
#include <vector>

namespace ekr
{
    struct SolverOptions
    {
        /// Search nodes allowed per solver call; 0 means unlimited. Running out
        /// throws BudgetExceeded.
        std::uint64_t node_budget = 0;

        /// Workers splitting the top level of the branch tree. Results never
        /// depend on this.
        unsigned threads = 1;
    };

    struct CliqueResult
    {
        std::size_t size = 0;
        /// The lexicographically least maximum clique, sorted.
        std::vector<Vertex> witness;
        std::uint64_t nodes = 0;
        /// False only from largest_clique_found when the budget ran out.
        bool proven = true;
    };

    struct SetEnumeration
    {
        std::size_t size = 0;
        /// Sorted sets in lexicographic order; complete unless truncated.
        std::vector<std::vector<Vertex>> sets;
        bool truncated = false;
        std::uint64_t nodes = 0;
    };

    inline constexpr std::size_t default_mis_cap = 1'000'000;

    /// Exact clique number with canonical witness. Loop-free graphs only.
    auto max_clique(const Graph & x, const SolverOptions & options = { }) -> CliqueResult;

    /// Largest clique inside candidates. Stops early once upper_bound is
    /// reached. The returned clique is whichever the search met first.
    auto max_clique_within(const Graph & x, const Bitset & candidates, const SolverOptions & options,
            std::size_t upper_bound = ~std::size_t{0}) -> CliqueResult;

    /// Like max_clique_within, but returns the best clique seen instead of
    /// throwing when the budget runs out.
    auto largest_clique_found(const Graph & x, const Bitset & candidates, const SolverOptions & options) -> CliqueResult;

    /// Any clique of exactly k vertices inside candidates.
    auto find_clique_within(const Graph & x, const Bitset & candidates, std::size_t k,
            const SolverOptions & options) -> std::optional<std::vector<Vertex>>;

    /// Every clique of exactly k vertices inside candidates (k must be the
    /// clique number of the candidate subgraph for "every" to mean maximal).
    auto enumerate_cliques_within(const Graph & x, const Bitset & candidates, std::size_t k,
            std::size_t cap, const SolverOptions & options) -> SetEnumeration;

    /// The lexicographically least k-clique inside candidates, given that one exists.
    auto lex_least_clique_within(const Graph & x, const Bitset & candidates, std::size_t k,
            const SolverOptions & options) -> std::vector<Vertex>;

    /// Every maximum clique; with an anchor, only those containing it (and
    /// "maximum" then means maximum among cliques through the anchor).
    auto enumerate_maximum_cliques(const Graph & x, std::size_t cap = default_mis_cap,
            const SolverOptions & options = { }, std::optional<Vertex> anchor = std::nullopt) -> SetEnumeration;
}

#endif

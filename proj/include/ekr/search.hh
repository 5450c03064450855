/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef EKR_GUARD_SEARCH_HH
#define EKR_GUARD_SEARCH_HH 1

#include <ekr/group_action.hh>

#include <cstdint>
#include <functional>
#include <vector>

namespace ekr
{
    using GroupPredicate = std::function<bool (const GroupAction &)>;

    struct SearchResult
    {
        /// Distinct groups, ordered by order and then by sorted element list.
        std::vector<GroupAction> groups;
        /// True when the pair budget ran out before every pair was seen; the
        /// groups found so far are still valid.
        bool exhausted = false;
        std::uint64_t pairs_examined = 0;
        std::uint64_t distinct_transitive = 0;
    };

    inline constexpr std::size_t max_search_degree = 8;

    /**
     * Every transitive subgroup <a, b> of S_n, a <= b in lexicographic order,
     * that satisfies the predicate. Conjugate copies are kept: groups are
     * distinct as element sets. A budget of 0 means every pair.
     */
    auto search_transitive_2generated(std::size_t n, const GroupPredicate & predicate,
            std::uint64_t pair_budget = 0) -> SearchResult;
}

#endif

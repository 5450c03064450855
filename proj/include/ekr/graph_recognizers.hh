/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef EKR_GUARD_GRAPH_RECOGNIZERS_HH
#define EKR_GUARD_GRAPH_RECOGNIZERS_HH 1

#include <ekr/graph.hh>

#include <optional>
#include <utility>
#include <vector>

namespace ekr
{
    /// Parts partition V, are sorted internally and ordered by least member.
    struct MultipartiteCertificate
    {
        std::vector<std::vector<Vertex>> parts;
    };

    /// Succeeds iff non-adjacency (with equality) is an equivalence relation.
    auto is_complete_multipartite(const Graph & x) -> std::optional<MultipartiteCertificate>;

    /// Succeeds iff adjacency (with equality) is an equivalence relation.
    auto is_disjoint_union_of_cliques(const Graph & x) -> std::optional<std::vector<std::vector<Vertex>>>;

    struct BipartiteResult
    {
        bool bipartite = true;
        /// When not bipartite: an odd cycle, consecutive entries adjacent and
        /// the last adjacent to the first.
        std::vector<Vertex> odd_cycle;
    };

    auto is_bipartite(const Graph & x) -> BipartiteResult;

    /// Lexicographically least triangle, if there is one.
    auto find_triangle(const Graph & x) -> std::optional<std::vector<Vertex>>;

    auto connected_components(const Graph & x) -> std::vector<std::vector<Vertex>>;

    struct BijectionCheck
    {
        bool equal = true;
        /// First pair (u, v) of X, u <= v, whose adjacency differs from its image.
        std::optional<std::pair<Vertex, Vertex>> mismatch;
        std::size_t mismatches = 0;
    };

    /// Does map (X's vertex i goes to map[i]) carry E(X) exactly onto E(Y)?
    /// Throws if map is not a bijection between the vertex sets.
    auto equal_under_bijection(const Graph & x, const Graph & y, std::span<const Vertex> map) -> BijectionCheck;
}

#endif

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef EKR_GUARD_GRAPH_PRODUCTS_HH
#define EKR_GUARD_GRAPH_PRODUCTS_HH 1

#include <ekr/graph.hh>

namespace ekr
{
    // All products index vertex (x, y) as x * |V(Y)| + y.

    /// Loop-free factors only.
    auto strong_product(const Graph & x, const Graph & y, std::size_t cap = default_vertex_cap) -> Graph;

    /// Tensor product. A loop at x counts as x ~ x, so K*_m is a neutral-ish
    /// factor and a single looped vertex is the identity.
    auto direct_product(const Graph & x, const Graph & y, std::size_t cap = default_vertex_cap) -> Graph;

    /// X[Y]: adjacent iff x1 ~ x2, or x1 == x2 and y1 ~ y2. Loop-free factors only.
    auto lexicographic(const Graph & x, const Graph & y, std::size_t cap = default_vertex_cap) -> Graph;

    auto direct_power(const Graph & x, std::size_t n, std::size_t cap = default_vertex_cap) -> Graph;
}

#endif

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef EKR_GUARD_WREATH_HH
#define EKR_GUARD_WREATH_HH 1

#include <ekr/permutation.hh>

#include <vector>

namespace ekr
{
    /**
     * ((g_1, ..., g_n), h) acting on V x N by (a, i) -> (g_i(a), h(i)).
     * Flattened onto points i * |V| + a.
     */
    struct WreathElement
    {
        std::vector<Permutation> inner;
        Permutation outer;

        auto operator== (const WreathElement &) const -> bool = default;
    };

    auto wreath_identity(std::size_t base_degree, std::size_t n) -> WreathElement;

    /// ((g), h) . ((g'), h') = ((g_{h'(1)} g'_1, ..., g_{h'(n)} g'_n), h h')
    auto wreath_multiply(const WreathElement & a, const WreathElement & b) -> WreathElement;

    /// ((g), h)^-1 = ((g_{h^-1(1)}^-1, ..., g_{h^-1(n)}^-1), h^-1)
    auto wreath_invert(const WreathElement & a) -> WreathElement;

    auto flatten(const WreathElement & a) -> Permutation;

    /// Throws if p does not preserve the block system {V x {i}}.
    auto unflatten(const Permutation & p, std::size_t base_degree) -> WreathElement;

    /// The tuple-level adjacency rule for derangement graphs of wreath
    /// products: adjacent iff g_i g'_i^-1 is a derangement at every i with
    /// h(i) == h'(i).
    auto wreath_tuple_adjacent(const WreathElement & a, const WreathElement & b) -> bool;
}

#endif

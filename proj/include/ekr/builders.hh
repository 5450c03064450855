/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef EKR_GUARD_BUILDERS_HH
#define EKR_GUARD_BUILDERS_HH 1

#include <ekr/group_action.hh>

#include <span>
#include <vector>

namespace ekr
{
    auto symmetric_natural(std::size_t n, std::size_t cap = default_element_cap) -> GroupAction;
    auto alternating_natural(std::size_t n, std::size_t cap = default_element_cap) -> GroupAction;

    /// The cyclic group generated by (0 1 ... n-1); regular on n points.
    auto cyclic_regular(std::size_t n) -> GroupAction;

    /// Symmetries of the n-gon, order 2n. Needs n >= 3.
    auto dihedral_natural(std::size_t n) -> GroupAction;

    /// The abstract group of g acting on itself by left multiplication; point
    /// i is element id i of g.
    auto left_regular(const GroupAction & g) -> GroupAction;

    /// Induced action on sorted k-subsets, in lexicographic order. Throws if the
    /// induced action is not faithful.
    auto action_on_k_subsets(const GroupAction & g, std::size_t k) -> GroupAction;

    /// G x H on V x W, with (v, w) encoded as v * |W| + w.
    auto external_direct_product(const GroupAction & g, const GroupAction & h,
            std::size_t cap = default_element_cap) -> GroupAction;

    /// G_1 x ... x G_n on the disjoint union of the domains, factors laid out
    /// left to right.
    auto internal_direct_product(std::span<const GroupAction> factors,
            std::size_t cap = default_element_cap) -> GroupAction;

    /// G wr H on V x N, with (a, i) encoded as i * |V| + a.
    auto wreath_product(const GroupAction & g, const GroupAction & h,
            std::size_t cap = default_element_cap) -> GroupAction;

    /**
     * Canonical correspondences between products and tuples of factor
     * elements. Entry r of the returned vector is the product's element id
     * for the tuple whose row-major index is r.
     */
    auto external_pair_ids(const GroupAction & product, const GroupAction & g, const GroupAction & h) -> std::vector<ElementId>;

    auto internal_tuple_ids(const GroupAction & product, std::span<const GroupAction> factors) -> std::vector<ElementId>;

    /// Row-major over (g_1, ..., g_n, h): index ((t_1 * |G| + t_2) ... ) * |H| + t_h.
    auto wreath_tuple_ids(const GroupAction & product, const GroupAction & g, const GroupAction & h) -> std::vector<ElementId>;
}

#endif

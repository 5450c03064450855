/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef EKR_GUARD_GROUP_ACTION_HH
#define EKR_GUARD_GROUP_ACTION_HH 1

#include <ekr/permutation.hh>

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ekr
{
    using ElementId = std::uint32_t;

    inline constexpr std::size_t default_element_cap = 250'000;

    struct Orbit
    {
        Point representative;
        std::vector<Point> members;

        auto operator== (const Orbit &) const -> bool = default;
    };

    /**
     * A finite permutation group on {0, ..., degree - 1}, fully enumerated.
     *
     * Elements are kept sorted by image array, so an element's index is a
     * stable identifier and the identity always has id 0. Immutable once
     * built.
     */
    class GroupAction
    {
        private:
            std::size_t _degree = 0;
            std::vector<Permutation> _generators;
            std::vector<Permutation> _elements;
            std::vector<Orbit> _orbits;
            bool _transitive = false;
            bool _regular = false;
            std::vector<std::string> _labels;

            GroupAction() = default;
            auto finish() -> void;

        public:
            /// Breadth-first closure of the generators. Throws CapExceeded if the
            /// group has more than cap elements, DegreeMismatch on mixed degrees.
            static auto closure(std::vector<Permutation> generators, std::size_t cap = default_element_cap) -> GroupAction;

            /// Adopts an element list the caller knows to be a group. Sorted and
            /// deduplicated here; closure is not re-checked.
            static auto from_elements(std::size_t degree, std::vector<Permutation> generators,
                    std::vector<Permutation> elements) -> GroupAction;

            auto degree() const -> std::size_t { return _degree; }
            auto order() const -> std::size_t { return _elements.size(); }
            auto generators() const -> const std::vector<Permutation> & { return _generators; }
            auto elements() const -> const std::vector<Permutation> & { return _elements; }
            auto element(ElementId id) const -> const Permutation & { return _elements[id]; }
            auto is_transitive() const -> bool { return _transitive; }
            auto is_regular() const -> bool { return _regular; }
            auto orbits() const -> const std::vector<Orbit> & { return _orbits; }

            auto index_of(const Permutation & p) const -> std::optional<ElementId>;

            /// Like index_of, but throws if p is not an element.
            auto id_of(const Permutation & p) const -> ElementId;

            /// Human-readable names for points (k-subsets, product pairs); empty
            /// when the points are just integers.
            auto point_labels() const -> const std::vector<std::string> & { return _labels; }
            auto with_point_labels(std::vector<std::string> labels) && -> GroupAction;

            /// Checks every structural invariant exhaustively. For tests.
            auto validate() const -> void;
    };

    auto orbits(const GroupAction & g) -> std::vector<Orbit>;

    auto point_stabilizer(const GroupAction & g, Point v) -> std::vector<ElementId>;

    /// {g : g(v) = w}
    auto coset_of_point_map(const GroupAction & g, Point v, Point w) -> std::vector<ElementId>;

    /// The lexicographically least (v, w) with s == {g : g(v) = w}, if any.
    auto is_coset_of_point_stabilizer(const GroupAction & g, std::span<const ElementId> s) -> std::optional<std::pair<Point, Point>>;

    auto derangement_set(const GroupAction & g) -> std::vector<ElementId>;

    auto largest_stabilizer_order(const GroupAction & g) -> std::size_t;

    /// Is every element of h also an element of g (same degree)?
    auto is_subgroup(const GroupAction & h, const GroupAction & g) -> bool;
}

#endif

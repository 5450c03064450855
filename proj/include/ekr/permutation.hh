/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef EKR_GUARD_PERMUTATION_HH
#define EKR_GUARD_PERMUTATION_HH 1

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ekr
{
    using Point = std::uint32_t;

    /**
     * A bijection on {0, ..., degree - 1}, stored as its image array.
     *
     * Products are read right to left everywhere: compose(p, q) applies q
     * first, so compose(p, q)(x) == p(q(x)).
     */
    class Permutation
    {
        private:
            std::vector<Point> _images;

            struct Unchecked { };
            Permutation(std::vector<Point> && images, Unchecked) : _images(std::move(images)) { }

        public:
            Permutation() = default;

            /// Throws ekr::Error unless images is a bijection on its index range.
            explicit Permutation(std::vector<Point> images);

            static auto identity(std::size_t degree) -> Permutation;

            /// For callers that have already established the bijection invariant.
            static auto from_trusted(std::vector<Point> images) -> Permutation
            {
                return Permutation{ std::move(images), Unchecked{ } };
            }

            auto degree() const -> std::size_t { return _images.size(); }

            auto operator() (Point x) const -> Point { return _images[x]; }

            auto images() const -> std::span<const Point> { return _images; }

            auto is_identity() const -> bool;

            auto operator== (const Permutation &) const -> bool = default;
            auto operator<=> (const Permutation &) const = default;
    };

    auto compose(const Permutation & p, const Permutation & q) -> Permutation;

    auto inverse(const Permutation & p) -> Permutation;

    auto fixed_points(const Permutation & p) -> std::vector<Point>;

    auto is_derangement(const Permutation & p) -> bool;

    /// Exactly one fixed point.
    auto fixes_exactly_one(const Permutation & p) -> bool;

    /// Parses "(1 3 2)(4 5)" with 1-based points; "()" or "" is the identity.
    auto parse_cycles(std::string_view text, std::size_t degree) -> Permutation;

    /// Prints disjoint cycles with 1-based points, identity as "()".
    auto to_cycle_string(const Permutation & p) -> std::string;

    struct PermutationHash
    {
        auto operator() (const Permutation & p) const -> std::size_t;
    };
}

#endif

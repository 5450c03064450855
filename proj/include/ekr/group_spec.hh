/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef EKR_GUARD_GROUP_SPEC_HH
#define EKR_GUARD_GROUP_SPEC_HH 1

#include <ekr/group_action.hh>

#include <json.hpp>

#include <string>
#include <vector>

namespace ekr
{
    /**
     * Group specifications are JSON trees. A node is either
     *
     *   {"constructor": "symmetric" | "alternating" | "cyclic" | "dihedral", "n": N}
     *   {"constructor": "left_regular", "inner": SPEC}
     *   {"constructor": "k_subsets", "inner": SPEC, "k": K}
     *   {"constructor": "external", "factors": [SPEC, SPEC]}
     *   {"constructor": "internal", "factors": [SPEC, ...]}
     *   {"constructor": "wreath", "inner": SPEC, "outer": SPEC}
     *
     * or explicit generators, {"degree": D, "generators": ["(1 2 3)", ...]},
     * with 1-based cycle notation.
     */
    using GroupSpec = nlohmann::json;

    auto build_group(const GroupSpec & spec, std::size_t element_cap = default_element_cap) -> GroupAction;

    /// Throws ekr::Error describing the first problem found.
    auto validate_group_spec(const GroupSpec & spec) -> void;

    auto load_group_spec(const std::string & path) -> GroupSpec;

    /// Short display name, e.g. "S3 wr S2" or "A5{2}".
    auto describe(const GroupSpec & spec) -> std::string;

    namespace spec
    {
        auto symmetric(std::size_t n) -> GroupSpec;
        auto alternating(std::size_t n) -> GroupSpec;
        auto cyclic(std::size_t n) -> GroupSpec;
        auto dihedral(std::size_t n) -> GroupSpec;
        auto left_regular(const GroupSpec & inner) -> GroupSpec;
        auto k_subsets(const GroupSpec & inner, std::size_t k) -> GroupSpec;
        auto external(const GroupSpec & a, const GroupSpec & b) -> GroupSpec;
        auto internal(const std::vector<GroupSpec> & factors) -> GroupSpec;
        auto wreath(const GroupSpec & inner, const GroupSpec & outer) -> GroupSpec;
        auto generators(std::size_t degree, const std::vector<std::string> & cycles) -> GroupSpec;

        /// Explicit-generator spec reproducing g's generators.
        auto from_group(const GroupAction & g) -> GroupSpec;
    }
}

#endif

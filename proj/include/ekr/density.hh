/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef EKR_GUARD_DENSITY_HH
#define EKR_GUARD_DENSITY_HH 1

#include <ekr/independence.hh>

#include <boost/rational.hpp>
#include <json.hpp>

#include <optional>
#include <string>

namespace ekr
{
    using Rational = boost::rational<std::int64_t>;

    auto to_string(const Rational & r) -> std::string;

    struct DensityOptions
    {
        SolverOptions solver;
        std::size_t mis_cap = default_mis_cap;
        std::size_t vertex_cap = default_vertex_cap;
    };

    /// Size of the largest intersecting set, i.e. alpha of the derangement graph.
    auto max_intersecting_size(const GroupAction & g, const DensityOptions & options = { }) -> std::size_t;

    /// alpha(Gamma_G) * degree / |G|. Throws for intransitive g.
    auto intersection_density(const GroupAction & g, const DensityOptions & options = { }) -> Rational;

    /// No intersecting set is larger than the largest point stabilizer.
    auto has_EKR(const GroupAction & g, const DensityOptions & options = { }) -> bool;

    struct StrictEKRVerdict
    {
        /// Absent only when the enumeration was truncated.
        std::optional<bool> strict;
        std::size_t alpha = 0;
        std::size_t max_stabilizer_order = 0;
        /// Maximum intersecting sets containing the identity; every maximum
        /// intersecting set is a right translate of one of these.
        std::size_t sets_through_identity = 0;
        /// Those sets (or, without EKR, the least one) that are not cosets
        /// {g : g(v) = w}, in lexicographic order.
        std::vector<std::vector<ElementId>> non_cosets;
        bool truncated = false;
        std::uint64_t nodes = 0;
    };

    /**
     * EKR holds and every maximum intersecting set is a coset {g : g(v) = w}.
     * Since right multiplication is an automorphism of the derangement graph
     * carrying cosets to cosets, only sets through the identity are examined.
     */
    auto has_strict_EKR(const GroupAction & g, const DensityOptions & options = { }) -> StrictEKRVerdict;

    struct DensityReport
    {
        std::size_t order = 0;
        std::size_t degree = 0;
        bool transitive = false;
        std::size_t alpha = 0;
        std::size_t max_stabilizer_order = 0;
        /// Transitive actions only.
        std::optional<Rational> rho;
        bool ekr = false;
        std::optional<StrictEKRVerdict> strict;
    };

    auto density_report(const GroupAction & g, const DensityOptions & options = { }, bool strict = true) -> DensityReport;

    /// Witness sets are written as element ids together with cycle notation.
    auto to_json(const DensityReport & report, const GroupAction & g, std::size_t witness_limit = 10) -> nlohmann::json;
}

#endif

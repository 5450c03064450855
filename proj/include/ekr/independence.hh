/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef EKR_GUARD_INDEPENDENCE_HH
#define EKR_GUARD_INDEPENDENCE_HH 1

#include <ekr/clique.hh>

#include <optional>
#include <string>

namespace ekr
{
    /// alpha as the clique number of the complement, with the least witness.
    auto independence_number(const Graph & x, const SolverOptions & options = { }) -> CliqueResult;

    /**
     * alpha of a vertex-transitive graph. Searches only through vertex 0 and
     * stops as soon as an independent set meets the clique-coclique bound for
     * some clique found along the way. The witness contains vertex 0 but is
     * not canonical.
     */
    auto vertex_transitive_independence_number(const Graph & x, const SolverOptions & options = { }) -> CliqueResult;

    /// Every maximum independent set (through the anchor, if given).
    auto enumerate_maximum_independent_sets(const Graph & x, std::size_t cap = default_mis_cap,
            const SolverOptions & options = { }, std::optional<Vertex> anchor = std::nullopt) -> SetEnumeration;

    /// alpha * omega <= |V|, both computed exactly.
    auto clique_coclique_check(const Graph & x, const SolverOptions & options = { }) -> bool;

    enum class ISPrimitivity { primitive, not_primitive, unknown };

    auto to_string(ISPrimitivity s) -> std::string;

    struct ISPrimitivityVerdict
    {
        ISPrimitivity status = ISPrimitivity::unknown;
        /// A non-maximum independent set with |A| / |N[A]| = alpha / |V|.
        std::vector<Vertex> witness;
        std::size_t alpha = 0;
        std::size_t neighbourhood = 0;
        std::uint64_t budget_spent = 0;
    };

    /**
     * Searches independent sets for one that is not maximum yet attains the
     * ratio alpha / |V|. For vertex-transitive graphs such a set always lies
     * inside a maximum independent set through vertex 0 (up to an
     * automorphism), which is all that gets searched; the witness is then the
     * smallest such set through 0, least lexicographically among those. The
     * budget counts search nodes; running out gives unknown.
     */
    auto is_IS_primitive(const Graph & x, std::uint64_t budget, bool vertex_transitive,
            const SolverOptions & options = { }, std::size_t mis_cap = default_mis_cap) -> ISPrimitivityVerdict;

    struct MISNormalResult
    {
        /// Absent when the square is too big, or its enumeration was cut short
        /// before a non-preimage turned up.
        std::optional<bool> normal;
        /// A maximum independent set of the square that is not a preimage,
        /// vertices in row-major encoding.
        std::vector<Vertex> witness;
        std::size_t sets_checked = 0;
        std::string reason;
    };

    /// Every maximum independent set of x * x has the form A * V or V * A.
    /// Vertex-transitive inputs only enumerate sets through (0, 0).
    auto is_MIS_normal_direct_square(const Graph & x, bool vertex_transitive,
            const SolverOptions & options = { }, std::size_t mis_cap = default_mis_cap,
            std::size_t vertex_cap = default_vertex_cap) -> MISNormalResult;
}

#endif

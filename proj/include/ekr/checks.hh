/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef EKR_GUARD_CHECKS_HH
#define EKR_GUARD_CHECKS_HH 1

#include <ekr/check_result.hh>
#include <ekr/corpus.hh>

namespace ekr
{
    /*
     * One function per verified statement. Each runs its instance corpus and
     * returns a settled CheckResult; check_id and statement_ref are filled in
     * by the suite. The per-instance functions are exposed for direct use.
     */

    // definitions and worked examples
    auto check_intersecting_definitions(Workbench &) -> CheckResult;
    auto check_a4_ekr_not_strict(Workbench &) -> CheckResult;
    auto check_a5_pairs_density_two(Workbench &) -> CheckResult;
    auto check_symmetric_strict_ekr(Workbench &) -> CheckResult;

    // graph toolbox
    auto check_clique_coclique_bound(Workbench &) -> CheckResult;
    auto check_strong_product_cliques(Workbench &) -> CheckResult;
    auto check_tensor_independence(Workbench &) -> CheckResult;
    auto check_direct_power_independence(Workbench &) -> CheckResult;
    auto check_lexicographic_independence(Workbench &) -> CheckResult;
    auto check_density_monotone_subgroup(Workbench &) -> CheckResult;

    // direct products
    auto check_external_complement_strong(Workbench &) -> CheckResult;
    auto check_external_regular_copies(Workbench &) -> CheckResult;
    auto check_external_regular_multipartite(Workbench &) -> CheckResult;
    auto check_multipartite_conjecture_witness(Workbench &) -> CheckResult;
    auto check_external_density_product(Workbench &) -> CheckResult;
    auto check_internal_tensor_graph(Workbench &) -> CheckResult;
    auto check_regular_is_primitive(Workbench &) -> CheckResult;
    auto check_mis_normal_square(Workbench &) -> CheckResult;
    auto check_internal_square_strict_ekr(Workbench &) -> CheckResult;

    // wreath products
    auto check_wreath_formulas(Workbench &) -> CheckResult;
    auto check_wreath_adjacency(Workbench &) -> CheckResult;
    auto check_wreath_layer_blocks(Workbench &) -> CheckResult;
    auto check_wreath_regular_lexicographic(Workbench &) -> CheckResult;
    auto check_wreath_density_bounds(Workbench &) -> CheckResult;
    auto check_wreath_ekr_top_density(Workbench &) -> CheckResult;
    auto check_s3_wr_s2_not_strict(Workbench &) -> CheckResult;
    auto check_wreath_regular_strict_ekr(Workbench &) -> CheckResult;
    auto check_wreath_strict_from_internal(Workbench &) -> CheckResult;
    auto check_s2_wreath_strict(Workbench &) -> CheckResult;
    auto check_s3_wreath_strict(Workbench &) -> CheckResult;
    auto check_symmetric_wreath_strict_table(Workbench &) -> CheckResult;

    // background facts and exploration
    auto check_transitive_derangement_triangle(Workbench &) -> CheckResult;
    auto explore_wreath_density_conjecture(Workbench &) -> CheckResult;
    /// Rows reached after the time budget (seconds, 0 for none) are skipped.
    auto explore_wreath_density_conjecture_within(Workbench &, double seconds) -> CheckResult;

    // instance level
    auto direct_complement_instance(Workbench &, const GroupSpec & g, const GroupSpec & h) -> Instance;
    auto regular_copies_instance(Workbench &, const GroupSpec & g, const GroupSpec & h) -> Instance;
    auto regular_multipartite_instance(Workbench &, const GroupSpec & g, const GroupSpec & h) -> Instance;
    auto density_product_instance(Workbench &, const GroupSpec & g, const GroupSpec & h) -> Instance;
    auto internal_graph_instance(Workbench &, const std::vector<GroupSpec> & factors) -> Instance;
    /// All ordered pairs when random_pairs is 0, otherwise that many sampled pairs.
    auto wreath_adjacency_instance(Workbench &, const GroupSpec & g, const GroupSpec & h,
            std::size_t random_pairs) -> Instance;
    auto wreath_regular_instance(Workbench &, const GroupSpec & g, const GroupSpec & h) -> Instance;
    auto wreath_blocks_instance(Workbench &, const GroupSpec & g, const GroupSpec & h) -> Instance;
    /// Compares the strict-EKR verdict with the expected value; a false
    /// verdict must come with a certified witness.
    auto strict_case_instance(Workbench &, const GroupSpec & g, bool expected) -> Instance;

    struct ConjectureWitness
    {
        GroupSpec spec;
        std::size_t degree = 0;
        std::size_t parts = 0;
    };

    /**
     * A transitive group of degree n = 3 * 2^a whose derangement graph is
     * complete multipartite with n / 2 parts: the degree-6 search witness,
     * times a regular cyclic group of order 2^(a-1) when a >= 2. The result
     * is certified before it is returned; other n throw.
     */
    auto construct_conjecture_witness(Workbench &, std::size_t n) -> ConjectureWitness;
}

#endif

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ekr/suite.hh>
#include <ekr/errors.hh>

#include <atomic>
#include <chrono>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

using namespace ekr;

auto ekr::verification_suite() -> const std::vector<SuiteEntry> &
{
    static const std::vector<SuiteEntry> suite{
        { "intersecting-definitions", "intersecting sets are independent sets of the derangement graph, which is vertex-transitive; rho >= 1 with equality exactly under EKR", check_intersecting_definitions },
        { "a4-ekr-not-strict", "A4 has EKR but not strict-EKR; {(), (1 3 2), (1 4 2)} is a maximum intersecting non-coset", check_a4_ekr_not_strict },
        { "a5-pairs-density-two", "A5 acting on 2-subsets has intersection density 2", check_a5_pairs_density_two },
        { "symmetric-strict-ekr", "Sn in its natural action has strict-EKR", check_symmetric_strict_ekr },
        { "clique-coclique-bound", "for vertex-transitive graphs alpha * omega <= |V|", check_clique_coclique_bound },
        { "strong-product-cliques", "every maximum clique of a strong product is the product of its projections, both maximum cliques", check_strong_product_cliques },
        { "tensor-independence", "for vertex-transitive X, Y: alpha(X x Y) = max(alpha(X)|V(Y)|, alpha(Y)|V(X)|)", check_tensor_independence },
        { "direct-power-independence", "alpha of the n-th direct power of X is alpha(X)|V(X)|^(n-1)", check_direct_power_independence },
        { "lexicographic-independence", "alpha(X[Y]) = alpha(X) alpha(Y)", check_lexicographic_independence },
        { "density-monotone-subgroup", "a transitive subgroup H of G on the same domain has rho(G) <= rho(H)", check_density_monotone_subgroup },
        { "external-complement-strong", "the complement of the product action's derangement graph is the strong product of the factor complements", check_external_complement_strong },
        { "external-regular-copies", "with H regular, that complement is |H| disjoint copies of the complement for G", check_external_regular_copies },
        { "external-regular-multipartite", "with H regular and G's graph complete k-partite, the product graph is complete multipartite with k|H| parts", check_external_regular_multipartite },
        { "multipartite-conjecture-witness", "for n = 3 * 2^a there is a transitive group of degree n whose derangement graph is complete multipartite with n/2 parts", check_multipartite_conjecture_witness },
        { "external-density-product", "rho(G x H) = rho(G) rho(H), and G x H has strict-EKR iff both factors do", check_external_density_product },
        { "internal-tensor-graph", "the derangement graph of an internal direct product is the direct product of the factor graphs; EKR factors give an EKR product", check_internal_tensor_graph },
        { "regular-is-primitive", "regular groups have complete derangement graphs, which are IS-primitive", check_regular_is_primitive },
        { "mis-normal-square", "a non-bipartite vertex-transitive X has an MIS-normal square iff X is IS-primitive", check_mis_normal_square },
        { "internal-square-strict-ekr", "G x G (internal) has strict-EKR iff G has strict-EKR and its derangement graph is IS-primitive", check_internal_square_strict_ekr },
        { "wreath-formulas", "wreath multiplication and inversion formulas agree with the flattened permutations", check_wreath_formulas },
        { "wreath-adjacency", "wreath elements are adjacent iff their base coordinates are adjacent wherever the top parts agree", check_wreath_adjacency },
        { "wreath-layer-blocks", "layers of the wreath derangement graph are direct powers, and layer pairs are products with loop-complete factors and K2", check_wreath_layer_blocks },
        { "wreath-regular-lexicographic", "with H regular of degree n, the wreath derangement graph is K_n[Gamma_G^n]", check_wreath_regular_lexicographic },
        { "wreath-density-bounds", "rho(G) <= rho(G wr H) <= rho(G) rho(H)", check_wreath_density_bounds },
        { "wreath-ekr-top-density", "if H has EKR then rho(G wr H) = rho(G)", check_wreath_ekr_top_density },
        { "s3-wr-s2-not-strict", "S3 wr S2 does not have strict-EKR", check_s3_wr_s2_not_strict },
        { "wreath-regular-strict-ekr", "with H regular, G wr H has strict-EKR iff G has strict-EKR and its derangement graph is IS-primitive", check_wreath_regular_strict_ekr },
        { "wreath-strict-from-internal", "if the internal power G^n has strict-EKR and H has EKR then G wr H has strict-EKR", check_wreath_strict_from_internal },
        { "s2-wreath-strict", "S2 wr H has strict-EKR when H has strict-EKR and an element fixing exactly one point", check_s2_wreath_strict },
        { "s3-wreath-strict", "S3 wr H has strict-EKR when H has degree >= 3, strict-EKR and an element fixing exactly one point", check_s3_wreath_strict },
        { "symmetric-wreath-strict-table", "Sm wr Sn has strict-EKR iff (m, n) != (3, 2)", check_symmetric_wreath_strict_table },
        { "transitive-derangement-triangle", "derangement graphs of transitive groups of degree >= 3 contain a triangle and are not bipartite", check_transitive_derangement_triangle },
        { "wreath-density-conjecture", "exploration: compares rho(G wr H) with rho(G), flagging any difference as a finding", explore_wreath_density_conjecture },
    };
    return suite;
}

auto ekr::select_checks(const std::string & selection) -> std::vector<SuiteEntry>
{
    auto & suite = verification_suite();
    if (selection.empty() || selection == "all")
        return suite;

    std::vector<bool> wanted(suite.size(), false);
    std::istringstream in(selection);
    std::string id;
    while (std::getline(in, id, ',')) {
        if (id.empty())
            continue;
        bool found = false;
        for (std::size_t k = 0 ; k < suite.size() ; ++k)
            if (suite[k].check_id == id) {
                wanted[k] = true;
                found = true;
            }
        if (! found)
            throw Error("unknown check id '" + id + "'");
    }

    std::vector<SuiteEntry> result;
    for (std::size_t k = 0 ; k < suite.size() ; ++k)
        if (wanted[k])
            result.push_back(suite[k]);
    return result;
}

auto ekr::run_suite(Workbench & bench, const std::vector<SuiteEntry> & entries,
        const std::function<void (const CheckResult &)> & on_done) -> std::vector<CheckResult>
{
    std::mutex report_mutex;
    std::vector<CheckResult> results(entries.size());
    std::atomic<std::size_t> next{ 0 };
    std::vector<std::exception_ptr> errors(entries.size());

    auto worker = [&] {
        for (std::size_t k ; (k = next++) < entries.size() ; ) {
            auto start = std::chrono::steady_clock::now();
            try {
                results[k] = entries[k].run(bench);
            }
            catch (...) {
                errors[k] = std::current_exception();
            }
            results[k].check_id = entries[k].check_id;
            results[k].statement_ref = entries[k].statement_ref;
            results[k].runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start).count();
            if (on_done && ! errors[k]) {
                std::lock_guard<std::mutex> lock(report_mutex);
                on_done(results[k]);
            }
        }
    };

    unsigned threads = std::max(1u, std::min<unsigned>(bench.options().threads, unsigned(entries.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1 ; t < threads ; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto & t : pool)
        t.join();

    for (auto & e : errors)
        if (e)
            std::rethrow_exception(e);
    return results;
}

auto ekr::suite_report(const std::vector<CheckResult> & results) -> nlohmann::json
{
    auto checks = nlohmann::json::array();
    std::size_t pass = 0, fail = 0, skip = 0;
    for (auto & r : results) {
        checks.push_back(to_json(r));
        (r.status == Status::pass ? pass : r.status == Status::fail ? fail : skip)++;
    }
    return { { "checks", checks },
        { "summary", { { "total", results.size() }, { "pass", pass }, { "fail", fail }, { "skip", skip } } } };
}

auto ekr::write_csv(std::ostream & out, const std::vector<CheckResult> & results) -> void
{
    out << csv_header << '\n';
    for (auto & r : results)
        out << to_csv_row(r) << '\n';
}

auto ekr::without_runtimes(nlohmann::json report) -> nlohmann::json
{
    if (report.contains("checks"))
        for (auto & c : report["checks"])
            c.erase("runtime_ms");
    return report;
}

auto ekr::any_failed(const std::vector<CheckResult> & results) -> bool
{
    for (auto & r : results)
        if (r.status == Status::fail)
            return true;
    return false;
}

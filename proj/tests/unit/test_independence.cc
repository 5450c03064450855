/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "support.hh"

#include <ekr/graph_products.hh>
#include <ekr/independence.hh>

#include <doctest.h>

using namespace ekr;

namespace
{
    // is there a non-maximum independent set with |A| * |V| == alpha * |N[A]|?
    auto oracle_is_primitive(const oracle::Adjacency & a) -> bool
    {
        std::size_t n = a.size();
        auto alpha = oracle::independence_number(a);
        for (std::uint32_t s = 1 ; s < (std::uint32_t(1) << n) ; ++s) {
            std::size_t size = std::size_t(__builtin_popcount(s));
            if (size >= alpha)
                continue;
            bool independent = true;
            std::uint32_t closed = s;
            for (std::size_t i = 0 ; i < n ; ++i)
                if (s >> i & 1)
                    for (std::size_t j = 0 ; j < n ; ++j)
                        if (a[i][j]) {
                            closed |= std::uint32_t(1) << j;
                            independent = independent && ! (s >> j & 1);
                        }
            if (independent && size * n == alpha * std::size_t(__builtin_popcount(closed)))
                return false;
        }
        return true;
    }

    // every maximum independent set of the square is A x V or V x A
    auto oracle_square_normal(const oracle::Adjacency & a) -> bool
    {
        std::size_t n = a.size();
        oracle::Adjacency sq(n * n, std::vector<bool>(n * n, false));
        for (std::size_t u = 0 ; u < n * n ; ++u)
            for (std::size_t v = 0 ; v < n * n ; ++v)
                sq[u][v] = a[u / n][v / n] && a[u % n][v % n];
        for (auto & s : oracle::maximum_independent_sets(sq)) {
            std::set<int> rows, cols;
            for (auto v : s) {
                rows.insert(v / int(n));
                cols.insert(v % int(n));
            }
            bool row_form = s.size() == rows.size() * n, col_form = s.size() == cols.size() * n;
            if (! row_form && ! col_form)
                return false;
        }
        return true;
    }
}

TEST_CASE("independence numbers match brute force")
{
    std::mt19937_64 rng(99);
    for (int trial = 0 ; trial < 200 ; ++trial) {
        auto a = oracle::random_graph(1 + trial % 18, 0.4, rng);
        auto r = independence_number(test::graph(a));
        CHECK(r.size == oracle::independence_number(a));
        CHECK(is_independent_set(test::graph(a), r.witness));
    }
}

TEST_CASE("vertex-transitive independence numbers")
{
    for (auto & g : { symmetric_natural(3), symmetric_natural(4), alternating_natural(4), dihedral_natural(5),
            dihedral_natural(6), cyclic_regular(5) }) {
        auto x = derangement_graph(g);
        auto expected = g.order() <= 20 ? oracle::independence_number(test::adjacency(x)) : independence_number(x).size;
        CHECK(vertex_transitive_independence_number(x).size == expected);
    }
    CHECK(vertex_transitive_independence_number(cycle_graph(7)).size == 3);
    CHECK(vertex_transitive_independence_number(derangement_graph(symmetric_natural(5))).size == 24);
}

TEST_CASE("maximum independent set enumeration")
{
    auto x = derangement_graph(alternating_natural(4));
    auto e = enumerate_maximum_independent_sets(x);
    auto expected = oracle::maximum_independent_sets(test::adjacency(x));
    REQUIRE(e.sets.size() == expected.size());
    for (std::size_t k = 0 ; k < expected.size() ; ++k)
        CHECK(std::vector<int>(e.sets[k].begin(), e.sets[k].end()) == expected[k]);
}

TEST_CASE("clique-coclique bound holds on vertex-transitive graphs")
{
    for (auto & x : { cycle_graph(5), cycle_graph(8), derangement_graph(symmetric_natural(4)), complete_graph(4) })
        CHECK(clique_coclique_check(x));
}

TEST_CASE("IS-primitivity agrees with brute force")
{
    std::vector<Graph> graphs{ complete_graph(3), complete_graph(5), cycle_graph(5), cycle_graph(6), cycle_graph(7),
        derangement_graph(symmetric_natural(3)), derangement_graph(alternating_natural(4)), derangement_graph(dihedral_natural(5)),
        derangement_graph(dihedral_natural(4)) };
    for (auto & x : graphs) {
        auto v = is_IS_primitive(x, 0, true);
        REQUIRE(v.status != ISPrimitivity::unknown);
        CHECK((v.status == ISPrimitivity::primitive) == oracle_is_primitive(test::adjacency(x)));
        auto general = is_IS_primitive(x, 0, false);
        CHECK(general.status == v.status);
    }
}

TEST_CASE("Gamma S3 is not IS-primitive with ratio 1/3")
{
    auto x = derangement_graph(symmetric_natural(3));
    auto v = is_IS_primitive(x, 0, true);
    REQUIRE(v.status == ISPrimitivity::not_primitive);
    CHECK(v.alpha == 2);
    CHECK(v.witness.size() * x.size() == v.alpha * v.neighbourhood);
    CHECK(v.witness == std::vector<Vertex>{ 0 });
    CHECK(v.neighbourhood == 3);
}

TEST_CASE("complete graphs are IS-primitive")
{
    for (std::size_t n = 2 ; n <= 8 ; ++n)
        CHECK(is_IS_primitive(complete_graph(n), 0, true).status == ISPrimitivity::primitive);
}

TEST_CASE("budget exhaustion gives unknown")
{
    auto v = is_IS_primitive(derangement_graph(symmetric_natural(5)), 3, true);
    CHECK(v.status == ISPrimitivity::unknown);
}

TEST_CASE("MIS-normal squares agree with brute force")
{
    for (auto & x : { complete_graph(3), complete_graph(4), cycle_graph(5) }) {
        auto r = is_MIS_normal_direct_square(x, true);
        REQUIRE(r.normal);
        CHECK(*r.normal == oracle_square_normal(test::adjacency(x)));
        auto general = is_MIS_normal_direct_square(x, false);
        CHECK(general.normal == r.normal);
    }
}

TEST_CASE("Gamma S3 square is not MIS-normal")
{
    auto x = derangement_graph(symmetric_natural(3));
    auto r = is_MIS_normal_direct_square(x, true);
    REQUIRE(r.normal);
    CHECK(! *r.normal);
    CHECK(r.witness.size() == 12);
    CHECK(is_independent_set(direct_power(x, 2), r.witness));
}

TEST_CASE("oversized squares have no verdict")
{
    auto r = is_MIS_normal_direct_square(complete_graph(80), true, { }, default_mis_cap, 5000);
    CHECK(! r.normal);
    CHECK(! r.reason.empty());
}

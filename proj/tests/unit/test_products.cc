/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "support.hh"

#include <ekr/errors.hh>
#include <ekr/graph_products.hh>

#include <doctest.h>

using namespace ekr;

namespace
{
    using Rule = bool (*)(bool, bool, bool, bool);

    // (x1, y1) ~ (x2, y2) given equality and adjacency in each coordinate
    auto oracle_product(const oracle::Adjacency & x, const oracle::Adjacency & y,
            const std::function<bool (bool, bool, bool, bool)> & rule) -> oracle::Adjacency
    {
        std::size_t n = x.size(), m = y.size();
        oracle::Adjacency a(n * m, std::vector<bool>(n * m, false));
        for (std::size_t x1 = 0 ; x1 < n ; ++x1)
            for (std::size_t y1 = 0 ; y1 < m ; ++y1)
                for (std::size_t x2 = 0 ; x2 < n ; ++x2)
                    for (std::size_t y2 = 0 ; y2 < m ; ++y2)
                        a[x1 * m + y1][x2 * m + y2] = rule(x1 == x2, x[x1][x2], y1 == y2, y[y1][y2]);
        return a;
    }

    auto samples() -> std::vector<Graph>
    {
        return { path_graph(3), cycle_graph(4), cycle_graph(5), complete_graph(3), empty_graph(2),
            derangement_graph(symmetric_natural(3)) };
    }
}

TEST_CASE("strong, direct and lexicographic products match their definitions")
{
    for (auto & gx : samples())
        for (auto & gy : samples()) {
            auto x = test::adjacency(gx), y = test::adjacency(gy);
            CHECK(test::adjacency(strong_product(gx, gy)) == oracle_product(x, y, [] (bool ex, bool ax, bool ey, bool ay) {
                return ! (ex && ey) && (ex || ax) && (ey || ay); }));
            CHECK(test::adjacency(direct_product(gx, gy)) == oracle_product(x, y, [] (bool, bool ax, bool, bool ay) {
                return ax && ay; }));
            CHECK(test::adjacency(lexicographic(gx, gy)) == oracle_product(x, y, [] (bool ex, bool ax, bool, bool ay) {
                return ax || (ex && ay); }));
        }
}

TEST_CASE("direct powers are iterated direct products")
{
    auto x = cycle_graph(3);
    CHECK(direct_power(x, 1) == x);
    CHECK(direct_power(x, 3) == direct_product(direct_product(x, x), x));
}

TEST_CASE("loop-complete factors")
{
    // K*_2 x X is two copies of X joined as in X, plus cross edges
    auto p = direct_product(loop_complete(2), cycle_graph(4));
    CHECK(test::adjacency(p) == oracle_product(test::adjacency(loop_complete(2)), test::adjacency(cycle_graph(4)),
                [] (bool, bool ax, bool, bool ay) { return ax && ay; }));
    auto with_k2 = direct_product(p, complete_graph(2));
    CHECK(! with_k2.has_loops());
    CHECK_THROWS_AS(strong_product(loop_complete(2), path_graph(2)), Error);
    CHECK_THROWS_AS(lexicographic(loop_complete(2), path_graph(2)), Error);
}

TEST_CASE("product size cap")
{
    CHECK_THROWS_AS(direct_product(complete_graph(100), complete_graph(100), 5000), CapExceeded);
}

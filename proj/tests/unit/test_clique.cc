/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "support.hh"

#include <ekr/clique.hh>
#include <ekr/errors.hh>
#include <ekr/graph_products.hh>

#include <doctest.h>

using namespace ekr;

namespace
{
    auto all_of(std::size_t n) -> Bitset
    {
        Bitset b(n);
        b.set_all();
        return b;
    }
}

TEST_CASE("maximum cliques of random graphs match brute force")
{
    std::mt19937_64 rng(20240917);
    std::uniform_int_distribution<std::size_t> size(1, 20);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    for (int trial = 0 ; trial < 500 ; ++trial) {
        auto a = oracle::random_graph(size(rng), density(rng), rng);
        auto x = test::graph(a);
        auto r = max_clique(x);
        CHECK(r.size == oracle::clique_number(a));
        CHECK(is_clique(x, r.witness));
        CHECK(r.witness.size() == r.size);

        // the witness is the lexicographically least maximum clique
        auto all = oracle::maximum_independent_sets(oracle::complement(a));
        CHECK(std::vector<int>(r.witness.begin(), r.witness.end()) == all.front());
    }
}

TEST_CASE("enumeration of maximum cliques matches brute force")
{
    std::mt19937_64 rng(7);
    for (int trial = 0 ; trial < 100 ; ++trial) {
        auto a = oracle::random_graph(12, 0.6, rng);
        auto x = test::graph(a);
        auto e = enumerate_maximum_cliques(x);
        CHECK(! e.truncated);
        auto expected = oracle::maximum_independent_sets(oracle::complement(a));
        REQUIRE(e.sets.size() == expected.size());
        for (std::size_t k = 0 ; k < expected.size() ; ++k)
            CHECK(std::vector<int>(e.sets[k].begin(), e.sets[k].end()) == expected[k]);
    }
}

TEST_CASE("anchored enumeration keeps only sets through the anchor")
{
    std::mt19937_64 rng(11);
    auto a = oracle::random_graph(14, 0.5, rng);
    auto x = test::graph(a);
    auto all = enumerate_maximum_cliques(x);
    auto through = enumerate_maximum_cliques(x, default_mis_cap, { }, Vertex{ 3 });
    std::vector<std::vector<Vertex>> expected;
    for (auto & s : all.sets)
        if (std::find(s.begin(), s.end(), Vertex{ 3 }) != s.end())
            expected.push_back(s);
    if (! expected.empty())
        CHECK(through.sets == expected);
}

TEST_CASE("thread count does not change answers")
{
    auto x = complement(derangement_graph(symmetric_natural(4)));
    SolverOptions one, four;
    four.threads = 4;
    auto a = max_clique(x, one), b = max_clique(x, four);
    CHECK(a.size == b.size);
    CHECK(a.witness == b.witness);
    auto ea = enumerate_maximum_cliques(x, default_mis_cap, one), eb = enumerate_maximum_cliques(x, default_mis_cap, four);
    CHECK(ea.sets == eb.sets);
}

TEST_CASE("restricted searches")
{
    auto x = complete_graph(6);
    Bitset cand(6);
    cand.set(1);
    cand.set(4);
    CHECK(max_clique_within(x, cand, { }).size == 2);
    CHECK(find_clique_within(x, all_of(6), 6, { }));
    CHECK(! find_clique_within(cycle_graph(6), all_of(6), 3, { }));
    auto e = enumerate_cliques_within(cycle_graph(5), all_of(5), 2, default_mis_cap, { });
    CHECK(e.sets.size() == 5);
    auto least = lex_least_clique_within(cycle_graph(5), all_of(5), 2, { });
    CHECK(least == std::vector<Vertex>{ 0, 1 });
}

TEST_CASE("budgets and caps")
{
    auto x = complement(derangement_graph(symmetric_natural(5)));
    SolverOptions tiny;
    tiny.node_budget = 5;
    CHECK_THROWS_AS(max_clique(x, tiny), BudgetExceeded);
    auto partial = largest_clique_found(x, all_of(x.size()), tiny);
    CHECK(! partial.proven);
    CHECK(is_clique(x, partial.witness));

    auto e = enumerate_maximum_cliques(empty_graph(10), 3);
    CHECK(e.truncated);
    CHECK(e.sets.size() <= 3);
}

TEST_CASE("loops are rejected")
{
    CHECK_THROWS_AS(max_clique(loop_complete(3)), Error);
}

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "support.hh"

#include <ekr/errors.hh>
#include <ekr/graph.hh>

#include <doctest.h>

using namespace ekr;

TEST_CASE("derangement graphs match the oracle")
{
    for (auto & g : { symmetric_natural(3), symmetric_natural(4), alternating_natural(4), dihedral_natural(5), cyclic_regular(5) })
        CHECK(test::adjacency(derangement_graph(g)) == oracle::derangement_adjacency(test::elements(g)));
}

TEST_CASE("regular groups give complete graphs")
{
    auto x = derangement_graph(cyclic_regular(6));
    CHECK(x.edge_count() == 15);
}

TEST_CASE("basic graph families")
{
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(empty_graph(5).edge_count() == 0);
    CHECK(path_graph(4).edge_count() == 3);
    CHECK(cycle_graph(5).edge_count() == 5);
    auto k = loop_complete(3);
    CHECK(k.has_loops());
    CHECK(k.adjacent(1, 1));
    CHECK(k.edge_count() == 6);
}

TEST_CASE("complement and induced subgraphs")
{
    auto c = complement(cycle_graph(5));
    CHECK(test::adjacency(c) == oracle::complement(test::adjacency(cycle_graph(5))));
    std::vector<Vertex> keep{ 3, 0, 1 };
    auto sub = induced_subgraph(cycle_graph(5), keep);
    CHECK(sub.size() == 3);
    CHECK(sub.adjacent(1, 2));
    CHECK(! sub.adjacent(0, 1));
    CHECK(! sub.adjacent(0, 2));
}

TEST_CASE("set predicates")
{
    auto x = cycle_graph(6);
    std::vector<Vertex> even{ 0, 2, 4 }, pair{ 0, 1 };
    CHECK(is_independent_set(x, even));
    CHECK(! is_independent_set(x, pair));
    CHECK(is_clique(x, pair));
    CHECK(! is_clique(x, even));
    std::vector<Vertex> a{ 0 };
    CHECK(closed_neighborhood(x, a) == std::vector<Vertex>{ 0, 1, 5 });
    CHECK(to_vertices(to_bitset(6, even)) == even);
}

TEST_CASE("vertex cap")
{
    CHECK_THROWS_AS(derangement_graph(symmetric_natural(5), 100), CapExceeded);
}

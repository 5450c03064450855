/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "support.hh"

#include <ekr/errors.hh>
#include <ekr/graph_io.hh>

#include <doctest.h>

#include <sstream>

using namespace ekr;

TEST_CASE("adjacency lists round-trip")
{
    for (auto & x : { cycle_graph(5), derangement_graph(alternating_natural(4)), loop_complete(3), empty_graph(3) }) {
        std::stringstream s;
        write_adjacency_list(s, x);
        CHECK(read_adjacency_list(s) == x);
    }
}

TEST_CASE("malformed adjacency lists are rejected")
{
    std::istringstream bad("graph 2 loops 0\n0: 5\n1:\n");
    CHECK_THROWS_AS(read_adjacency_list(bad), Error);
    std::istringstream asymmetric("graph 2 loops 0\n0: 1\n1:\n");
    CHECK_THROWS_AS(read_adjacency_list(asymmetric), Error);
}

TEST_CASE("dot output")
{
    auto g = symmetric_natural(3);
    auto x = derangement_graph(g);
    std::ostringstream s;
    write_dot(s, x, element_labels(g));
    auto text = s.str();
    CHECK(text.find("graph") != std::string::npos);
    CHECK(text.find("(1 2 3)") != std::string::npos);
    std::size_t edges = 0;
    for (std::size_t p = text.find("--") ; p != std::string::npos ; p = text.find("--", p + 2))
        ++edges;
    CHECK(edges == x.edge_count());
}

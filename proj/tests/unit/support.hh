/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef EKR_GUARD_TESTS_SUPPORT_HH
#define EKR_GUARD_TESTS_SUPPORT_HH 1

#include "oracles.hh"

#include <ekr/builders.hh>
#include <ekr/graph.hh>

namespace test
{
    inline auto perm(const ekr::Permutation & p) -> oracle::Perm
    {
        return oracle::Perm(p.images().begin(), p.images().end());
    }

    inline auto elements(const ekr::GroupAction & g) -> std::vector<oracle::Perm>
    {
        std::vector<oracle::Perm> result;
        for (auto & e : g.elements())
            result.push_back(perm(e));
        return result;
    }

    inline auto adjacency(const ekr::Graph & x) -> oracle::Adjacency
    {
        oracle::Adjacency a(x.size(), std::vector<bool>(x.size(), false));
        for (ekr::Vertex u = 0 ; u < x.size() ; ++u)
            for (ekr::Vertex v = 0 ; v < x.size() ; ++v)
                a[u][v] = x.adjacent(u, v);
        return a;
    }

    inline auto graph(const oracle::Adjacency & a) -> ekr::Graph
    {
        ekr::Graph x(a.size());
        for (std::size_t u = 0 ; u < a.size() ; ++u)
            for (std::size_t v = u + 1 ; v < a.size() ; ++v)
                if (a[u][v])
                    x.add_edge(ekr::Vertex(u), ekr::Vertex(v));
        return x;
    }
}

#endif

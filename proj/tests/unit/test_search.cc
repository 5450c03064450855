/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "support.hh"

#include <ekr/graph_recognizers.hh>
#include <ekr/search.hh>

#include <doctest.h>

using namespace ekr;

namespace
{
    auto always(const GroupAction &) -> bool
    {
        return true;
    }

    // every transitive subgroup generated by two elements, by direct closure
    auto oracle_transitive_2generated(std::size_t n) -> std::set<std::set<oracle::Perm>>
    {
        auto all = oracle::all_permutations(n);
        std::vector<oracle::Perm> list(all.begin(), all.end());
        std::set<std::set<oracle::Perm>> result;
        for (std::size_t i = 0 ; i < list.size() ; ++i)
            for (std::size_t j = i ; j < list.size() ; ++j) {
                auto g = oracle::closure({ list[i], list[j] }, n);
                std::set<int> orbit{ 0 };
                for (auto & p : g)
                    orbit.insert(p[0]);
                if (orbit.size() == n)
                    result.insert(g);
            }
        return result;
    }
}

TEST_CASE("degree 3 has exactly two transitive groups")
{
    auto r = search_transitive_2generated(3, always);
    CHECK(r.groups.size() == 2);
    CHECK(r.groups[0].order() == 3);
    CHECK(r.groups[1].order() == 6);
    CHECK(! r.exhausted);
}

TEST_CASE("search agrees with the closure oracle at degree 4")
{
    auto r = search_transitive_2generated(4, always);
    std::set<std::set<oracle::Perm>> found;
    for (auto & g : r.groups) {
        auto e = test::elements(g);
        found.insert({ e.begin(), e.end() });
    }
    CHECK(found == oracle_transitive_2generated(4));
    CHECK(r.distinct_transitive == found.size());
}

TEST_CASE("regular groups of degree 4 include C4 and V4")
{
    auto r = search_transitive_2generated(4, [] (const GroupAction & g) { return g.is_regular(); });
    bool cyclic = false, klein = false;
    for (auto & g : r.groups) {
        bool has_4_cycle = false;
        for (auto & e : g.elements())
            has_4_cycle |= fixed_points(compose(e, e)).empty();
        (has_4_cycle ? cyclic : klein) = true;
    }
    CHECK(cyclic);
    CHECK(klein);
}

TEST_CASE("pair budget marks the result exhausted")
{
    auto r = search_transitive_2generated(5, always, 10);
    CHECK(r.exhausted);
    CHECK(r.pairs_examined <= 10);
}

TEST_CASE("a degree-6 group with a complete 3-partite derangement graph exists")
{
    auto r = search_transitive_2generated(6, [] (const GroupAction & g) {
        auto c = is_complete_multipartite(derangement_graph(g));
        return c && c->parts.size() == 3;
    });
    REQUIRE(! r.groups.empty());
    for (auto & g : r.groups) {
        CHECK(g.is_transitive());
        auto c = is_complete_multipartite(derangement_graph(g));
        REQUIRE(c);
        CHECK(c->parts.size() == 3);
    }
}

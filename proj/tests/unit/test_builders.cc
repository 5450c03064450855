/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "support.hh"

#include <ekr/builders.hh>
#include <ekr/errors.hh>
#include <ekr/group_spec.hh>

#include <doctest.h>

using namespace ekr;

namespace
{
    auto as_set(const GroupAction & g) -> std::set<oracle::Perm>
    {
        auto e = test::elements(g);
        return { e.begin(), e.end() };
    }
}

TEST_CASE("symmetric and alternating groups match the brute-force lists")
{
    for (std::size_t n = 1 ; n <= 6 ; ++n) {
        auto all = oracle::all_permutations(n);
        CHECK(as_set(symmetric_natural(n)) == all);
        if (n >= 3) {
            std::set<oracle::Perm> even;
            for (auto & p : all)
                if (oracle::sign(p) == 1)
                    even.insert(p);
            CHECK(as_set(alternating_natural(n)) == even);
        }
    }
}

TEST_CASE("elements are sorted with the identity first")
{
    auto g = symmetric_natural(4);
    CHECK(g.element(0).is_identity());
    CHECK(std::is_sorted(g.elements().begin(), g.elements().end()));
    for (ElementId i = 0 ; i < g.order() ; ++i)
        CHECK(g.id_of(g.element(i)) == i);
}

TEST_CASE("cyclic, dihedral and regular actions")
{
    for (std::size_t n = 2 ; n <= 7 ; ++n) {
        auto c = cyclic_regular(n);
        CHECK(c.order() == n);
        CHECK(c.is_regular());
        if (n >= 3) {
            auto d = dihedral_natural(n);
            CHECK(d.order() == 2 * n);
            CHECK(d.is_transitive());
            CHECK(! d.is_regular());
        }
    }
    auto s3 = symmetric_natural(3);
    auto l = left_regular(s3);
    CHECK(l.degree() == 6);
    CHECK(l.order() == 6);
    CHECK(l.is_regular());
}

TEST_CASE("closure agrees with the naive oracle")
{
    std::vector<std::vector<std::string>> generator_sets{ { "(1 2 3 4)", "(1 3)" }, { "(1 2)(3 4)", "(1 3)(2 4)" },
        { "(1 2 3)", "(4 5)" }, { "(1 2 3 4 5)", "(1 2 3)" } };
    for (auto & gens : generator_sets) {
        std::vector<Permutation> ps;
        std::vector<oracle::Perm> os;
        for (auto & c : gens) {
            ps.push_back(parse_cycles(c, 5));
            os.push_back(test::perm(ps.back()));
        }
        CHECK(as_set(GroupAction::closure(ps)) == oracle::closure(os, 5));
    }
}

TEST_CASE("orbits, stabilizers and cosets")
{
    auto g = GroupAction::closure({ parse_cycles("(1 2 3)", 5), parse_cycles("(4 5)", 5) });
    CHECK(g.orbits().size() == 2);
    CHECK(! g.is_transitive());
    CHECK(point_stabilizer(g, 0).size() == 2);
    CHECK(point_stabilizer(g, 3).size() == 3);
    CHECK(largest_stabilizer_order(g) == 3);

    auto s4 = symmetric_natural(4);
    auto coset = coset_of_point_map(s4, 0, 2);
    CHECK(coset.size() == 6);
    for (auto id : coset)
        CHECK(s4.element(id)(0) == 2);
    CHECK(is_coset_of_point_stabilizer(s4, coset) == std::pair<Point, Point>{ 0, 2 });
    std::vector<ElementId> not_coset{ 0, 1, 2 };
    CHECK(! is_coset_of_point_stabilizer(s4, not_coset));
}

TEST_CASE("derangement sets")
{
    for (std::size_t n = 2 ; n <= 6 ; ++n) {
        auto g = symmetric_natural(n);
        std::size_t expected = 0;
        for (auto & p : oracle::all_permutations(n))
            expected += oracle::is_derangement(p);
        CHECK(derangement_set(g).size() == expected);
    }
}

TEST_CASE("subgroup test")
{
    CHECK(is_subgroup(alternating_natural(4), symmetric_natural(4)));
    CHECK(is_subgroup(dihedral_natural(4), symmetric_natural(4)));
    CHECK(! is_subgroup(symmetric_natural(4), alternating_natural(4)));
    CHECK(! is_subgroup(dihedral_natural(4), alternating_natural(4)));
}

TEST_CASE("action on 2-subsets of A5")
{
    auto g = action_on_k_subsets(alternating_natural(5), 2);
    CHECK(g.degree() == 10);
    CHECK(g.order() == 60);
    CHECK(g.is_transitive());
    CHECK(largest_stabilizer_order(g) == 6);
    CHECK(g.point_labels().size() == 10);
}

TEST_CASE("external direct product acts on pairs")
{
    auto g = symmetric_natural(3), h = cyclic_regular(2);
    auto p = external_direct_product(g, h);
    CHECK(p.degree() == 6);
    CHECK(p.order() == 12);
    CHECK(p.is_transitive());
    auto ids = external_pair_ids(p, g, h);
    for (ElementId a = 0 ; a < g.order() ; ++a)
        for (ElementId b = 0 ; b < h.order() ; ++b) {
            auto & e = p.element(ids[a * h.order() + b]);
            for (Point v = 0 ; v < 3 ; ++v)
                for (Point w = 0 ; w < 2 ; ++w)
                    CHECK(e(v * 2 + w) == g.element(a)(v) * 2 + h.element(b)(w));
        }
}

TEST_CASE("internal direct product acts on the disjoint union")
{
    std::vector<GroupAction> f{ symmetric_natural(3), cyclic_regular(2) };
    auto p = internal_direct_product(f);
    CHECK(p.degree() == 5);
    CHECK(p.order() == 12);
    CHECK(p.orbits().size() == 2);
    auto ids = internal_tuple_ids(p, f);
    for (ElementId a = 0 ; a < 6 ; ++a)
        for (ElementId b = 0 ; b < 2 ; ++b) {
            auto & e = p.element(ids[a * 2 + b]);
            for (Point v = 0 ; v < 3 ; ++v)
                CHECK(e(v) == f[0].element(a)(v));
            for (Point w = 0 ; w < 2 ; ++w)
                CHECK(e(3 + w) == 3 + f[1].element(b)(w));
        }
}

TEST_CASE("element cap")
{
    CHECK_THROWS_AS(symmetric_natural(6, 100), CapExceeded);
}

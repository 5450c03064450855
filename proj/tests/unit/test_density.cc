/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "support.hh"

#include <ekr/density.hh>
#include <ekr/errors.hh>
#include <ekr/group_spec.hh>

#include <doctest.h>

using namespace ekr;

namespace
{
    // maximum intersecting sets by brute force: maximum independent sets of
    // the oracle derangement graph, and whether each is a coset g(v) = w
    struct OracleEKR
    {
        std::size_t alpha;
        std::size_t stabilizer;
        bool strict;
    };

    auto oracle_ekr(const GroupAction & g) -> OracleEKR
    {
        auto elements = test::elements(g);
        auto sets = oracle::maximum_independent_sets(oracle::derangement_adjacency(elements));
        std::size_t n = g.degree(), stabilizer = 0;
        for (std::size_t v = 0 ; v < n ; ++v) {
            std::size_t count = 0;
            for (auto & e : elements)
                count += e[v] == int(v);
            stabilizer = std::max(stabilizer, count);
        }
        bool strict = sets.front().size() <= stabilizer;
        for (auto & s : sets) {
            bool coset = false;
            for (std::size_t v = 0 ; v < n && ! coset ; ++v)
                for (std::size_t w = 0 ; w < n && ! coset ; ++w) {
                    std::vector<int> c;
                    for (std::size_t k = 0 ; k < elements.size() ; ++k)
                        if (elements[k][v] == int(w))
                            c.push_back(int(k));
                    coset = c == s;
                }
            strict = strict && coset;
        }
        return { sets.front().size(), stabilizer, strict };
    }
}

TEST_CASE("EKR and strict-EKR verdicts match brute force on small groups")
{
    std::vector<GroupAction> groups{ symmetric_natural(2), symmetric_natural(3), symmetric_natural(4), alternating_natural(4),
        cyclic_regular(4), cyclic_regular(5), dihedral_natural(4), dihedral_natural(5), dihedral_natural(6),
        build_group(spec::internal({ spec::symmetric(3), spec::symmetric(2) })),
        build_group(spec::external(spec::symmetric(2), spec::symmetric(2))),
        build_group(spec::wreath(spec::symmetric(2), spec::symmetric(2))) };
    for (auto & g : groups) {
        auto o = oracle_ekr(g);
        CHECK(max_intersecting_size(g) == o.alpha);
        CHECK(has_EKR(g) == (o.alpha <= o.stabilizer));
        auto s = has_strict_EKR(g);
        REQUIRE(s.strict);
        CHECK(*s.strict == o.strict);
        CHECK(s.alpha == o.alpha);
        CHECK(s.max_stabilizer_order == o.stabilizer);
    }
}

TEST_CASE("intersection densities")
{
    CHECK(intersection_density(cyclic_regular(7)) == Rational(1));
    CHECK(intersection_density(alternating_natural(4)) == Rational(1));
    CHECK(intersection_density(symmetric_natural(5)) == Rational(1));
    CHECK(intersection_density(action_on_k_subsets(alternating_natural(5), 2)) == Rational(2));
    CHECK(to_string(Rational(3, 2)) == "3/2");
    CHECK(to_string(Rational(2)) == "2");
    CHECK_THROWS_AS(intersection_density(build_group(spec::internal({ spec::symmetric(3), spec::symmetric(3) }))), Error);
}

TEST_CASE("A4: EKR but not strict, with the listed witness")
{
    auto g = alternating_natural(4);
    auto s = has_strict_EKR(g);
    REQUIRE(s.strict);
    CHECK(! *s.strict);
    CHECK(s.alpha == 3);
    std::vector<ElementId> w;
    for (auto c : { "()", "(1 3 2)", "(1 4 2)" })
        w.push_back(g.id_of(parse_cycles(c, 4)));
    std::sort(w.begin(), w.end());
    CHECK(std::find(s.non_cosets.begin(), s.non_cosets.end(), w) != s.non_cosets.end());
    CHECK(std::is_sorted(s.non_cosets.begin(), s.non_cosets.end()));
}

TEST_CASE("S3 wr S2 is not strict-EKR")
{
    auto g = build_group(spec::wreath(spec::symmetric(3), spec::symmetric(2)));
    auto s = has_strict_EKR(g);
    REQUIRE(s.strict);
    CHECK(! *s.strict);
    CHECK(s.alpha == 12);
    CHECK(! s.truncated);
    REQUIRE(! s.non_cosets.empty());
    CHECK(s.non_cosets.front().size() == 12);
    CHECK(! is_coset_of_point_stabilizer(g, s.non_cosets.front()));
}

TEST_CASE("groups without EKR report the least maximum set through the identity")
{
    auto g = action_on_k_subsets(alternating_natural(5), 2);
    auto s = has_strict_EKR(g);
    REQUIRE(s.strict);
    CHECK(! *s.strict);
    REQUIRE(s.non_cosets.size() == 1);
    CHECK(s.non_cosets.front().size() == 12);
    CHECK(s.non_cosets.front().front() == 0);
}

TEST_CASE("truncation leaves the verdict absent")
{
    DensityOptions tight;
    tight.mis_cap = 2;
    auto s = has_strict_EKR(alternating_natural(4), tight);
    CHECK(s.truncated);
    CHECK(! s.strict);
}

TEST_CASE("density reports serialize")
{
    auto g = alternating_natural(4);
    auto r = density_report(g);
    CHECK(r.alpha == 3);
    CHECK(r.max_stabilizer_order == 3);
    REQUIRE(r.rho);
    CHECK(*r.rho == Rational(1));
    CHECK(r.ekr);
    auto j = to_json(r, g);
    CHECK(j["rho"] == "1");
    CHECK(j["ekr"] == true);
    CHECK(j.contains("strict_ekr"));

    auto c5 = density_report(cyclic_regular(5));
    CHECK(c5.alpha == 1);
    REQUIRE(c5.strict);
    CHECK(*c5.strict->strict);
}

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "support.hh"

#include <ekr/errors.hh>
#include <ekr/permutation.hh>

#include <doctest.h>

using namespace ekr;

TEST_CASE("composition applies the right factor first")
{
    auto p = parse_cycles("(1 2 3)", 3);
    auto q = parse_cycles("(1 2)", 3);
    CHECK(test::perm(compose(p, q)) == oracle::compose(test::perm(p), test::perm(q)));
    CHECK(compose(p, q)(0) == p(q(0)));
    CHECK(to_cycle_string(compose(p, q)) == "(1 3)");
}

TEST_CASE("composition and inversion agree with the oracle on all of S4")
{
    auto all = oracle::all_permutations(4);
    for (auto & a : all) {
        Permutation pa{ std::vector<Point>(a.begin(), a.end()) };
        CHECK(test::perm(inverse(pa)) == oracle::inverse(a));
        CHECK(is_derangement(pa) == oracle::is_derangement(a));
        for (auto & b : all) {
            Permutation pb{ std::vector<Point>(b.begin(), b.end()) };
            CHECK(test::perm(compose(pa, pb)) == oracle::compose(a, b));
        }
    }
}

TEST_CASE("cycle notation round-trips")
{
    for (auto & text : { "()", "(1 2)", "(1 2 3)(4 5)", "(1 4 2)" }) {
        auto p = parse_cycles(text, 5);
        CHECK(to_cycle_string(p) == text);
    }
    CHECK(to_cycle_string(parse_cycles("(2 1)", 2)) == "(1 2)");
    CHECK(parse_cycles("(1 2)(3 4)", 4).images()[2] == 3);
}

TEST_CASE("malformed cycles are rejected")
{
    CHECK_THROWS_AS(parse_cycles("(1 1)", 3), Error);
    CHECK_THROWS_AS(parse_cycles("(1 4)", 3), Error);
    CHECK_THROWS_AS(parse_cycles("(0 1)", 3), Error);
    CHECK_THROWS_AS(parse_cycles("(1 2", 3), Error);
    CHECK_THROWS_AS(Permutation(std::vector<Point>{ 0, 0 }), Error);
    CHECK_THROWS_AS(compose(Permutation::identity(2), Permutation::identity(3)), DegreeMismatch);
}

TEST_CASE("fixed points")
{
    auto p = parse_cycles("(1 2)", 4);
    CHECK(fixed_points(p) == std::vector<Point>{ 2, 3 });
    CHECK(! is_derangement(p));
    CHECK(! fixes_exactly_one(p));
    CHECK(fixes_exactly_one(parse_cycles("(1 2 3)", 4)));
    CHECK(is_derangement(parse_cycles("(1 2)(3 4)", 4)));
    CHECK(Permutation::identity(3).is_identity());
}

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ekr/checks.hh>
#include <ekr/errors.hh>

#include <doctest.h>

#include <filesystem>

using namespace ekr;

namespace
{
    auto bench_options() -> VerifyOptions
    {
        VerifyOptions o;
        o.cache_dir = (std::filesystem::temp_directory_path() / "ekr-unit-cache").string();
        return o;
    }
}

TEST_CASE("instance functions pass on true statements")
{
    Workbench bench(bench_options());
    auto s = spec::symmetric, c = spec::cyclic;
    CHECK(direct_complement_instance(bench, s(3), s(2)).status == Status::pass);
    CHECK(direct_complement_instance(bench, spec::alternating(4), s(3)).status == Status::pass);
    CHECK(regular_copies_instance(bench, s(3), c(2)).status == Status::pass);
    CHECK(regular_copies_instance(bench, spec::alternating(4), c(3)).status == Status::pass);
    CHECK(regular_multipartite_instance(bench, c(3), c(2)).status == Status::pass);
    CHECK(density_product_instance(bench, s(3), s(4)).status == Status::pass);
    CHECK(internal_graph_instance(bench, { s(2), s(2), s(2) }).status == Status::pass);
    CHECK(wreath_adjacency_instance(bench, s(3), s(2), 0).status == Status::pass);
    CHECK(wreath_blocks_instance(bench, s(2), s(3)).status == Status::pass);
    CHECK(wreath_regular_instance(bench, s(2), c(3)).status == Status::pass);
    CHECK(strict_case_instance(bench, spec::wreath(s(2), s(2)), true).status == Status::pass);
}

TEST_CASE("a wrong expectation fails with a witness")
{
    Workbench bench(bench_options());
    auto i = strict_case_instance(bench, spec::alternating(4), true);
    CHECK(i.status == Status::fail);
    CHECK(i.witness.contains("cycles"));
    CHECK(strict_case_instance(bench, spec::alternating(4), false).status == Status::pass);
}

TEST_CASE("unmet hypotheses skip")
{
    Workbench bench(bench_options());
    auto i = regular_copies_instance(bench, spec::symmetric(3), spec::symmetric(3));
    CHECK(i.status == Status::skip);
    CHECK(! i.outcome.empty());
}

TEST_CASE("negative density-product instances carry an inherited witness")
{
    Workbench bench(bench_options());
    auto i = density_product_instance(bench, spec::alternating(4), spec::symmetric(3));
    CHECK(i.status == Status::pass);
    CHECK(i.outcome.find("inherited") != std::string::npos);
    CHECK(i.witness["ids"].size() == 6);
}

TEST_CASE("inherited witnesses use a maximum set of a factor without EKR")
{
    Workbench bench(bench_options());
    auto i = density_product_instance(bench, spec::alternating(4), spec::k_subsets(spec::alternating(5), 2));
    CHECK(i.status == Status::pass);
    CHECK(i.witness["ids"].size() == 3 * 12);
}

TEST_CASE("conjecture witnesses")
{
    Workbench bench(bench_options());
    for (std::size_t n : { 6, 12, 24 }) {
        auto w = construct_conjecture_witness(bench, n);
        CHECK(w.degree == n);
        CHECK(w.parts == n / 2);
    }
    CHECK_THROWS_AS(construct_conjecture_witness(bench, 8), Error);
    CHECK_THROWS_AS(construct_conjecture_witness(bench, 9), Error);
    CHECK_THROWS_AS(construct_conjecture_witness(bench, 10), Error);
}

TEST_CASE("check results settle")
{
    CheckResult r;
    r.instances.resize(2);
    r.instances[0].status = Status::skip;
    r.instances[1].status = Status::pass;
    r.settle();
    CHECK(r.status == Status::pass);
    r.instances[0].status = Status::fail;
    r.settle();
    CHECK(r.status == Status::fail);
    r.instances = { Instance{ } };
    r.instances[0].status = Status::skip;
    r.settle();
    CHECK(r.status == Status::skip);
}

TEST_CASE("guarded turns budgets into skips")
{
    auto i = guarded({ { "label", "x" } }, [] (Instance) -> Instance { throw BudgetExceeded(42); });
    CHECK(i.status == Status::skip);
    CHECK(i.outcome.find("42") != std::string::npos);
    CHECK(i.input["label"] == "x");
}

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef EKR_GUARD_SRC_CHECK_SUPPORT_HH
#define EKR_GUARD_SRC_CHECK_SUPPORT_HH 1

#include <ekr/checks.hh>
#include <ekr/builders.hh>
#include <ekr/graph_products.hh>
#include <ekr/graph_recognizers.hh>
#include <ekr/errors.hh>

#include <random>
#include <string_view>

namespace ekr::detail
{
    inline auto input_of(const std::vector<GroupSpec> & specs, nlohmann::json extra = nlohmann::json::object()) -> nlohmann::json
    {
        std::string label;
        for (auto & s : specs)
            label += (label.empty() ? "" : " ; ") + describe(s);
        extra["label"] = label;
        extra["groups"] = specs;
        return extra;
    }

    inline auto graph_input(const std::string & label, nlohmann::json extra = nlohmann::json::object()) -> nlohmann::json
    {
        extra["label"] = label;
        return extra;
    }

    inline auto conclude(Instance i, bool ok, std::string outcome, nlohmann::json witness = nullptr) -> Instance
    {
        i.status = ok ? Status::pass : Status::fail;
        i.outcome = std::move(outcome);
        i.witness = std::move(witness);
        return i;
    }

    inline auto skip(Instance i, std::string reason) -> Instance
    {
        i.status = Status::skip;
        i.outcome = std::move(reason);
        return i;
    }

    inline auto settled(std::vector<Instance> instances) -> CheckResult
    {
        CheckResult r;
        r.instances = std::move(instances);
        r.settle();
        return r;
    }

    inline auto element_json(const GroupAction & g, const std::vector<ElementId> & ids) -> nlohmann::json
    {
        auto cycles = nlohmann::json::array();
        for (auto id : ids)
            cycles.push_back(to_cycle_string(g.element(id)));
        return { { "ids", ids }, { "cycles", cycles } };
    }

    inline auto vertices_json(const std::vector<Vertex> & v) -> nlohmann::json
    {
        return nlohmann::json(v);
    }

    /// Sampling stream for one check; verdicts never depend on it.
    inline auto rng_for(const Workbench & bench, std::string_view id) -> std::mt19937_64
    {
        std::seed_seq seq(id.begin(), id.end());
        std::mt19937_64 base(seq);
        return std::mt19937_64(bench.options().seed ^ base());
    }

    inline auto transitive_corpus(Workbench & bench) -> std::vector<CorpusEntry>
    {
        std::vector<CorpusEntry> result;
        for (auto & e : standard_corpus(bench))
            if (bench.group(e.spec)->is_transitive())
                result.push_back(e);
        return result;
    }

    inline auto regular_corpus(Workbench & bench) -> std::vector<CorpusEntry>
    {
        std::vector<CorpusEntry> result;
        for (auto & e : standard_corpus(bench))
            if (bench.group(e.spec)->is_regular())
                result.push_back(e);
        return result;
    }

    inline auto verdict_string(const std::optional<bool> & b) -> std::string
    {
        return b ? (*b ? "true" : "false") : "unknown";
    }

    inline auto all_vertices(std::size_t n) -> Bitset
    {
        Bitset b(n);
        b.set_all();
        return b;
    }
}

#endif

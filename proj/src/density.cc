/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ekr/density.hh>
#include <ekr/errors.hh>

#include <algorithm>

using namespace ekr;

auto ekr::to_string(const Rational & r) -> std::string
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

auto ekr::max_intersecting_size(const GroupAction & g, const DensityOptions & options) -> std::size_t
{
    auto gamma = derangement_graph(g, options.vertex_cap);
    return vertex_transitive_independence_number(gamma, options.solver).size;
}

auto ekr::intersection_density(const GroupAction & g, const DensityOptions & options) -> Rational
{
    if (! g.is_transitive())
        throw Error("intersection density needs a transitive action");
    return Rational(std::int64_t(max_intersecting_size(g, options) * g.degree()), std::int64_t(g.order()));
}

auto ekr::has_EKR(const GroupAction & g, const DensityOptions & options) -> bool
{
    return max_intersecting_size(g, options) <= largest_stabilizer_order(g);
}

auto ekr::has_strict_EKR(const GroupAction & g, const DensityOptions & options) -> StrictEKRVerdict
{
    StrictEKRVerdict verdict;
    auto gamma = derangement_graph(g, options.vertex_cap);
    auto comp = complement(gamma);
    verdict.max_stabilizer_order = largest_stabilizer_order(g);

    auto alpha = vertex_transitive_independence_number(gamma, options.solver);
    verdict.alpha = alpha.size;
    verdict.nodes = alpha.nodes;

    auto through_identity = [] (std::vector<Vertex> rest) {
        rest.push_back(0);
        std::sort(rest.begin(), rest.end());
        return std::vector<ElementId>(rest.begin(), rest.end());
    };

    if (verdict.alpha > verdict.max_stabilizer_order) {
        // every coset is too small, so any maximum set is a witness
        verdict.strict = false;
        verdict.non_cosets.push_back(through_identity(
                    lex_least_clique_within(comp, comp.row(0), verdict.alpha - 1, options.solver)));
        return verdict;
    }

    auto sets = enumerate_cliques_within(comp, comp.row(0), verdict.alpha - 1, options.mis_cap, options.solver);
    verdict.nodes += sets.nodes;
    verdict.truncated = sets.truncated;
    verdict.sets_through_identity = sets.sets.size();
    if (sets.truncated)
        return verdict;

    for (auto & s : sets.sets) {
        auto set = through_identity(s);
        if (! is_coset_of_point_stabilizer(g, set))
            verdict.non_cosets.push_back(std::move(set));
    }
    std::sort(verdict.non_cosets.begin(), verdict.non_cosets.end());
    verdict.strict = verdict.non_cosets.empty();
    return verdict;
}

auto ekr::density_report(const GroupAction & g, const DensityOptions & options, bool strict) -> DensityReport
{
    DensityReport report;
    report.order = g.order();
    report.degree = g.degree();
    report.transitive = g.is_transitive();
    report.max_stabilizer_order = largest_stabilizer_order(g);

    if (strict) {
        auto verdict = has_strict_EKR(g, options);
        report.alpha = verdict.alpha;
        report.strict = std::move(verdict);
    }
    else
        report.alpha = max_intersecting_size(g, options);

    report.ekr = report.alpha <= report.max_stabilizer_order;
    if (report.transitive)
        report.rho = Rational(std::int64_t(report.alpha * report.degree), std::int64_t(report.order));
    return report;
}

auto ekr::to_json(const DensityReport & report, const GroupAction & g, std::size_t witness_limit) -> nlohmann::json
{
    nlohmann::json j;
    j["order"] = report.order;
    j["degree"] = report.degree;
    j["transitive"] = report.transitive;
    j["alpha"] = report.alpha;
    j["max_stabilizer_order"] = report.max_stabilizer_order;
    j["rho"] = report.rho ? nlohmann::json(to_string(*report.rho)) : nlohmann::json(nullptr);
    j["ekr"] = report.ekr;

    if (report.strict) {
        const auto & s = *report.strict;
        j["strict_ekr"] = s.strict ? nlohmann::json(*s.strict) : nlohmann::json(nullptr);
        j["truncated"] = s.truncated;
        j["sets_through_identity"] = s.sets_through_identity;
        j["non_coset_count"] = s.non_cosets.size();
        auto witnesses = nlohmann::json::array();
        for (std::size_t i = 0 ; i < s.non_cosets.size() && i < witness_limit ; ++i) {
            nlohmann::json w;
            w["ids"] = s.non_cosets[i];
            auto cycles = nlohmann::json::array();
            for (auto id : s.non_cosets[i])
                cycles.push_back(to_cycle_string(g.element(id)));
            w["cycles"] = cycles;
            witnesses.push_back(w);
        }
        j["non_coset_witnesses"] = witnesses;
        if (! g.is_transitive())
            j["note"] = "intransitive action: cosets range over the whole domain, sizes compared with the largest stabilizer";
    }
    return j;
}

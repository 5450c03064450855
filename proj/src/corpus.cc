/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ekr/corpus.hh>
#include <ekr/builders.hh>
#include <ekr/graph_recognizers.hh>
#include <ekr/errors.hh>

#include <filesystem>
#include <fstream>

using namespace ekr;

namespace
{
    auto certified_multipartite(const GroupAction & g, std::size_t degree, std::size_t parts) -> bool
    {
        if (g.degree() != degree || ! g.is_transitive())
            return false;
        auto c = is_complete_multipartite(derangement_graph(g, g.order()));
        return c && c->parts.size() == parts;
    }

    auto cache_path(const std::string & dir, std::size_t degree, std::size_t parts, std::uint64_t budget) -> std::filesystem::path
    {
        return std::filesystem::path(dir) / ("multipartite-d" + std::to_string(degree) + "-p" + std::to_string(parts)
                + "-b" + std::to_string(budget) + ".json");
    }

    auto from_json(const nlohmann::json & j) -> MultipartiteSearch
    {
        MultipartiteSearch s;
        s.degree = j.at("degree").get<std::size_t>();
        s.parts = j.at("parts").get<std::size_t>();
        for (auto & g : j.at("groups"))
            s.groups.push_back(g);
        s.exhausted = j.at("exhausted").get<bool>();
        s.pairs_examined = j.at("pairs_examined").get<std::uint64_t>();
        s.distinct_transitive = j.at("distinct_transitive").get<std::uint64_t>();
        return s;
    }
}

auto ekr::to_json(const MultipartiteSearch & s) -> nlohmann::json
{
    nlohmann::json j;
    j["degree"] = s.degree;
    j["parts"] = s.parts;
    j["groups"] = s.groups;
    j["exhausted"] = s.exhausted;
    j["pairs_examined"] = s.pairs_examined;
    j["distinct_transitive"] = s.distinct_transitive;
    return j;
}

auto ekr::search_multipartite(std::size_t degree, std::size_t parts, std::uint64_t pair_budget) -> MultipartiteSearch
{
    auto found = search_transitive_2generated(degree, [&] (const GroupAction & g) {
            return certified_multipartite(g, degree, parts); }, pair_budget);

    MultipartiteSearch s;
    s.degree = degree;
    s.parts = parts;
    for (auto & g : found.groups)
        s.groups.push_back(spec::from_group(g));
    s.exhausted = found.exhausted;
    s.pairs_examined = found.pairs_examined;
    s.distinct_transitive = found.distinct_transitive;
    return s;
}

auto ekr::cached_search_multipartite(std::size_t degree, std::size_t parts, std::uint64_t pair_budget,
        const std::string & cache_dir) -> MultipartiteSearch
{
    auto path = cache_path(cache_dir, degree, parts, pair_budget);

    try {
        std::ifstream in(path);
        if (in) {
            auto cached = from_json(nlohmann::json::parse(in));
            bool valid = cached.degree == degree && cached.parts == parts;
            for (auto & g : cached.groups)
                valid = valid && certified_multipartite(build_group(g), degree, parts);
            if (valid)
                return cached;
        }
    }
    catch (const std::exception &) {
        // unreadable or stale cache entries are simply recomputed
    }

    auto result = search_multipartite(degree, parts, pair_budget);
    try {
        std::filesystem::create_directories(cache_dir);
        auto temporary = path;
        temporary += ".tmp";
        {
            std::ofstream out(temporary);
            out << to_json(result).dump(2) << '\n';
        }
        std::filesystem::rename(temporary, path);
    }
    catch (const std::exception &) {
        // the cache is an optimisation only
    }
    return result;
}

auto Workbench::solver() const -> SolverOptions
{
    return SolverOptions{ _options.node_budget, 1 };
}

auto Workbench::density_options() const -> DensityOptions
{
    return DensityOptions{ solver(), _options.mis_cap, _options.vertex_cap };
}

auto Workbench::group(const GroupSpec & spec) -> std::shared_ptr<const GroupAction>
{
    return _groups.get(spec.dump(), [&] { return build_group(spec, _options.element_cap); });
}

auto Workbench::gamma(const GroupSpec & spec) -> std::shared_ptr<const Graph>
{
    return _gammas.get(spec.dump(), [&] { return derangement_graph(*group(spec), _options.vertex_cap); });
}

auto Workbench::alpha(const GroupSpec & spec) -> std::size_t
{
    return *_alphas.get(spec.dump(), [&] {
            return vertex_transitive_independence_number(*gamma(spec), solver()).size; });
}

auto Workbench::strict(const GroupSpec & spec) -> std::shared_ptr<const StrictEKRVerdict>
{
    return _stricts.get(spec.dump(), [&] { return has_strict_EKR(*group(spec), density_options()); });
}

auto Workbench::rho(const GroupSpec & spec) -> Rational
{
    auto g = group(spec);
    if (! g->is_transitive())
        throw Error("intersection density needs a transitive action");
    return Rational(std::int64_t(alpha(spec) * g->degree()), std::int64_t(g->order()));
}

auto Workbench::ekr(const GroupSpec & spec) -> bool
{
    return alpha(spec) <= largest_stabilizer_order(*group(spec));
}

auto Workbench::primitivity(const GroupSpec & spec) -> std::shared_ptr<const ISPrimitivityVerdict>
{
    return _primitivity.get(spec.dump(), [&] {
            return is_IS_primitive(*gamma(spec), _options.node_budget, true, solver(), _options.mis_cap); });
}

auto Workbench::multipartite(std::size_t degree, std::size_t parts) -> std::shared_ptr<const MultipartiteSearch>
{
    return _searches.get(std::to_string(degree) + "/" + std::to_string(parts), [&] {
            return cached_search_multipartite(degree, parts, 0, _options.cache_dir); });
}

auto Workbench::multipartite_witness() -> GroupSpec
{
    auto s = multipartite(6, 3);
    if (s->groups.empty())
        throw Error("no degree-6 group with a complete 3-partite derangement graph was found");
    return s->groups.front();
}

auto ekr::standard_corpus(Workbench & bench) -> std::vector<CorpusEntry>
{
    std::vector<CorpusEntry> corpus;
    for (std::size_t n = 2 ; n <= 5 ; ++n)
        corpus.push_back({ "S" + std::to_string(n), spec::symmetric(n) });
    corpus.push_back({ "A4", spec::alternating(4) });
    corpus.push_back({ "A5", spec::alternating(5) });
    corpus.push_back({ "A5{2}", spec::k_subsets(spec::alternating(5), 2) });
    for (std::size_t n = 2 ; n <= 6 ; ++n)
        corpus.push_back({ "C" + std::to_string(n), spec::cyclic(n) });
    for (std::size_t n = 4 ; n <= 6 ; ++n)
        corpus.push_back({ "D" + std::to_string(n), spec::dihedral(n) });
    corpus.push_back({ "K", bench.multipartite_witness() });
    return corpus;
}

auto ekr::corpus_pairs(const std::vector<CorpusEntry> & corpus, Workbench & bench, std::size_t limit)
    -> std::vector<std::pair<CorpusEntry, CorpusEntry>>
{
    std::vector<std::pair<CorpusEntry, CorpusEntry>> result;
    for (std::size_t i = 0 ; i < corpus.size() ; ++i)
        for (std::size_t j = i ; j < corpus.size() ; ++j)
            if (bench.group(corpus[i].spec)->order() * bench.group(corpus[j].spec)->order() <= limit)
                result.emplace_back(corpus[i], corpus[j]);
    return result;
}

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ekr/graph_recognizers.hh>
#include <ekr/errors.hh>

#include <algorithm>
#include <deque>

using namespace ekr;

namespace
{
    /// Classes of the relation "u == v or related(u, v)", provided it is an
    /// equivalence; related_row(v) gives the relation row for v.
    template <typename RowFn_>
    auto equivalence_classes(std::size_t n, RowFn_ related_row) -> std::optional<std::vector<std::vector<Vertex>>>
    {
        std::vector<std::vector<Vertex>> classes;
        Bitset assigned(n);
        for (Vertex v = 0 ; v < n ; ++v) {
            if (assigned.test(v))
                continue;
            Bitset cls = related_row(v);
            cls.set(v);
            if (cls.intersects(assigned))
                return std::nullopt;
            for (auto u = cls.first() ; u != Bitset::npos ; u = cls.next(u)) {
                Bitset other = related_row(Vertex(u));
                other.set(u);
                if (! (other == cls))
                    return std::nullopt;
            }
            assigned |= cls;
            classes.push_back(to_vertices(cls));
        }
        return classes;
    }
}

auto ekr::is_complete_multipartite(const Graph & x) -> std::optional<MultipartiteCertificate>
{
    if (x.loops_allowed())
        throw Error("multipartite recognition needs a loop-free graph");
    auto classes = equivalence_classes(x.size(), [&] (Vertex v) {
            Bitset r = x.row(v);
            r.flip();
            return r;
        });
    if (! classes)
        return std::nullopt;
    return MultipartiteCertificate{ std::move(*classes) };
}

auto ekr::is_disjoint_union_of_cliques(const Graph & x) -> std::optional<std::vector<std::vector<Vertex>>>
{
    if (x.loops_allowed())
        throw Error("clique-union recognition needs a loop-free graph");
    return equivalence_classes(x.size(), [&] (Vertex v) { return x.row(v); });
}

auto ekr::is_bipartite(const Graph & x) -> BipartiteResult
{
    std::size_t n = x.size();
    std::vector<int> colour(n, -1);
    std::vector<Vertex> parent(n, 0);
    std::vector<std::size_t> depth(n, 0);

    for (Vertex start = 0 ; start < n ; ++start) {
        if (colour[start] != -1)
            continue;
        colour[start] = 0;
        parent[start] = start;
        std::deque<Vertex> queue{ start };
        while (! queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            const auto & row = x.row(u);
            for (auto w = row.first() ; w != Bitset::npos ; w = row.next(w)) {
                Vertex v = Vertex(w);
                if (colour[v] == -1) {
                    colour[v] = 1 - colour[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                }
                else if (colour[v] == colour[u]) {
                    // walk both tree paths up to their meeting point
                    std::vector<Vertex> left{ u }, right{ v };
                    Vertex a = u, b = v;
                    while (depth[a] > depth[b]) { a = parent[a]; left.push_back(a); }
                    while (depth[b] > depth[a]) { b = parent[b]; right.push_back(b); }
                    while (a != b) {
                        a = parent[a]; left.push_back(a);
                        b = parent[b]; right.push_back(b);
                    }
                    // cycle u ... lca ... v, closed by the edge v-u
                    right.pop_back();
                    std::reverse(right.begin(), right.end());
                    BipartiteResult result;
                    result.bipartite = false;
                    result.odd_cycle = std::move(left);
                    result.odd_cycle.insert(result.odd_cycle.end(), right.begin(), right.end());
                    return result;
                }
            }
        }
    }
    return BipartiteResult{};
}

auto ekr::find_triangle(const Graph & x) -> std::optional<std::vector<Vertex>>
{
    for (Vertex u = 0 ; u < x.size() ; ++u) {
        const auto & ru = x.row(u);
        for (auto v = ru.next(u) ; v != Bitset::npos ; v = ru.next(v)) {
            Bitset common = ru;
            common &= x.row(Vertex(v));
            auto w = common.next(v);
            if (w != Bitset::npos)
                return std::vector<Vertex>{ u, Vertex(v), Vertex(w) };
        }
    }
    return std::nullopt;
}

auto ekr::connected_components(const Graph & x) -> std::vector<std::vector<Vertex>>
{
    std::vector<std::vector<Vertex>> result;
    Bitset seen(x.size());
    for (Vertex s = 0 ; s < x.size() ; ++s) {
        if (seen.test(s))
            continue;
        Bitset component(x.size()), frontier(x.size());
        frontier.set(s);
        while (frontier.any()) {
            component |= frontier;
            Bitset next(x.size());
            for (auto v = frontier.first() ; v != Bitset::npos ; v = frontier.next(v))
                next |= x.row(Vertex(v));
            next.subtract(component);
            frontier = std::move(next);
        }
        seen |= component;
        result.push_back(to_vertices(component));
    }
    return result;
}

auto ekr::equal_under_bijection(const Graph & x, const Graph & y, std::span<const Vertex> map) -> BijectionCheck
{
    if (x.size() != y.size() || map.size() != x.size())
        throw Error("bijection check: vertex counts differ");
    Bitset hit(y.size());
    for (auto v : map) {
        if (v >= y.size() || hit.test(v))
            throw Error("bijection check: map is not a bijection");
        hit.set(v);
    }

    BijectionCheck result;
    for (Vertex u = 0 ; u < x.size() ; ++u)
        for (Vertex v = u ; v < x.size() ; ++v)
            if (x.adjacent(u, v) != y.adjacent(map[u], map[v])) {
                if (result.equal)
                    result.mismatch = std::pair{ u, v };
                result.equal = false;
                ++result.mismatches;
            }
    return result;
}

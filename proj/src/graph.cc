/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ekr/graph.hh>
#include <ekr/errors.hh>

#include <algorithm>

using namespace ekr;

Graph::Graph(std::size_t size, bool loops_allowed) :
    _size(size),
    _loops_allowed(loops_allowed),
    _rows(size, Bitset(size))
{
}

auto Graph::add_edge(Vertex u, Vertex v) -> void
{
    if (u == v && ! _loops_allowed)
        throw Error("loop added to a graph without loops");
    _rows[u].set(v);
    _rows[v].set(u);
}

auto Graph::remove_edge(Vertex u, Vertex v) -> void
{
    _rows[u].reset(v);
    _rows[v].reset(u);
}

auto Graph::set_row(Vertex u, Bitset row) -> void
{
    if (row.size() != _size)
        throw Error("row size mismatch");
    if (row.test(u) && ! _loops_allowed)
        throw Error("loop added to a graph without loops");
    _rows[u] = std::move(row);
}

auto Graph::edge_count() const -> std::size_t
{
    std::size_t twice = 0, loops = 0;
    for (Vertex v = 0 ; v < _size ; ++v) {
        twice += _rows[v].count();
        if (_rows[v].test(v))
            ++loops;
    }
    return (twice - loops) / 2 + loops;
}

auto Graph::has_loops() const -> bool
{
    for (Vertex v = 0 ; v < _size ; ++v)
        if (_rows[v].test(v))
            return true;
    return false;
}

auto ekr::complete_graph(std::size_t n) -> Graph
{
    Graph result(n);
    for (Vertex v = 0 ; v < n ; ++v) {
        Bitset row(n);
        row.set_all();
        row.reset(v);
        result.set_row(v, std::move(row));
    }
    return result;
}

auto ekr::empty_graph(std::size_t n) -> Graph
{
    return Graph(n);
}

auto ekr::path_graph(std::size_t n) -> Graph
{
    Graph result(n);
    for (Vertex v = 0 ; v + 1 < n ; ++v)
        result.add_edge(v, v + 1);
    return result;
}

auto ekr::cycle_graph(std::size_t n) -> Graph
{
    if (n < 3)
        throw Error("cycle needs at least 3 vertices");
    auto result = path_graph(n);
    result.add_edge(n - 1, 0);
    return result;
}

auto ekr::loop_complete(std::size_t m) -> Graph
{
    if (m < 1)
        throw Error("K* needs at least one vertex");
    Graph result(m, true);
    for (Vertex v = 0 ; v < m ; ++v) {
        Bitset row(m);
        row.set_all();
        result.set_row(v, std::move(row));
    }
    return result;
}

auto ekr::derangement_graph(const GroupAction & g, std::size_t cap) -> Graph
{
    std::size_t n = g.order(), d = g.degree();
    if (n > cap)
        throw CapExceeded("derangement graph", n);

    // agrees[x * d + y] holds the elements mapping x to y; g h^-1 fixes h(x)
    // exactly when g(x) == h(x), so non-neighbours of g are the union of
    // agrees[x * d + g(x)] over x
    std::vector<Bitset> agrees(d * d, Bitset(n));
    for (ElementId e = 0 ; e < n ; ++e)
        for (Point x = 0 ; x < d ; ++x)
            agrees[x * d + g.element(e)(x)].set(e);

    Graph result(n);
    for (ElementId e = 0 ; e < n ; ++e) {
        Bitset row(n);
        for (Point x = 0 ; x < d ; ++x)
            row |= agrees[x * d + g.element(e)(x)];
        row.flip();
        result.set_row(e, std::move(row));
    }
    return result;
}

auto ekr::complement(const Graph & x) -> Graph
{
    if (x.loops_allowed())
        throw Error("complement is only defined here for loop-free graphs");
    Graph result(x.size());
    for (Vertex v = 0 ; v < x.size() ; ++v) {
        Bitset row = x.row(v);
        row.flip();
        row.reset(v);
        result.set_row(v, std::move(row));
    }
    return result;
}

auto ekr::induced_subgraph(const Graph & x, std::span<const Vertex> vertices) -> Graph
{
    Graph result(vertices.size(), x.loops_allowed());
    for (Vertex i = 0 ; i < vertices.size() ; ++i)
        for (Vertex j = i ; j < vertices.size() ; ++j)
            if (x.adjacent(vertices[i], vertices[j]))
                result.add_edge(i, j);
    return result;
}

auto ekr::closed_neighborhood(const Graph & x, std::span<const Vertex> a) -> std::vector<Vertex>
{
    Bitset n(x.size());
    for (auto v : a) {
        n.set(v);
        n |= x.row(v);
    }
    return to_vertices(n);
}

auto ekr::is_independent_set(const Graph & x, std::span<const Vertex> s) -> bool
{
    for (std::size_t i = 0 ; i < s.size() ; ++i)
        for (std::size_t j = i ; j < s.size() ; ++j)
            if (x.adjacent(s[i], s[j]))
                return false;
    return true;
}

auto ekr::is_clique(const Graph & x, std::span<const Vertex> s) -> bool
{
    for (std::size_t i = 0 ; i < s.size() ; ++i)
        for (std::size_t j = i + 1 ; j < s.size() ; ++j)
            if (s[i] == s[j] || ! x.adjacent(s[i], s[j]))
                return false;
    return true;
}

auto ekr::to_bitset(std::size_t n, std::span<const Vertex> s) -> Bitset
{
    Bitset result(n);
    for (auto v : s)
        result.set(v);
    return result;
}

auto ekr::to_vertices(const Bitset & s) -> std::vector<Vertex>
{
    std::vector<Vertex> result;
    for (auto i = s.first() ; i != Bitset::npos ; i = s.next(i))
        result.push_back(Vertex(i));
    return result;
}

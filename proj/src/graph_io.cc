/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ekr/graph_io.hh>
#include <ekr/errors.hh>

#include <istream>
#include <ostream>
#include <sstream>

using namespace ekr;

auto ekr::write_dot(std::ostream & out, const Graph & x, const std::vector<std::string> & labels) -> void
{
    if (! labels.empty() && labels.size() != x.size())
        throw Error("dot export: label count does not match vertex count");

    out << "graph G {\n";
    for (Vertex v = 0 ; v < x.size() ; ++v) {
        out << "  " << v;
        if (! labels.empty())
            out << " [label=\"" << labels[v] << "\"]";
        out << ";\n";
    }
    for (Vertex u = 0 ; u < x.size() ; ++u) {
        const auto & row = x.row(u);
        for (auto v = row.first() ; v != Bitset::npos ; v = row.next(v))
            if (v >= u)
                out << "  " << u << " -- " << v << ";\n";
    }
    out << "}\n";
}

auto ekr::element_labels(const GroupAction & g) -> std::vector<std::string>
{
    std::vector<std::string> result;
    for (ElementId i = 0 ; i < g.order() ; ++i)
        result.push_back(std::to_string(i) + ": " + to_cycle_string(g.element(i)));
    return result;
}

auto ekr::write_adjacency_list(std::ostream & out, const Graph & x) -> void
{
    out << "graph " << x.size() << " loops " << (x.loops_allowed() ? 1 : 0) << '\n';
    for (Vertex u = 0 ; u < x.size() ; ++u) {
        out << u << ':';
        const auto & row = x.row(u);
        for (auto v = row.first() ; v != Bitset::npos ; v = row.next(v))
            out << ' ' << v;
        out << '\n';
    }
}

auto ekr::read_adjacency_list(std::istream & in) -> Graph
{
    std::string keyword, loops_keyword;
    std::size_t n = 0;
    int loops = 0;
    if (! (in >> keyword >> n >> loops_keyword >> loops) || keyword != "graph" || loops_keyword != "loops")
        throw Error("adjacency list: bad header");

    Graph result(n, loops != 0);
    std::vector<Bitset> declared(n, Bitset(n));
    std::string line;
    std::getline(in, line);
    for (Vertex u = 0 ; u < n ; ++u) {
        if (! std::getline(in, line))
            throw Error("adjacency list: missing row " + std::to_string(u));
        std::istringstream row(line);
        std::size_t label = 0;
        char colon = 0;
        if (! (row >> label >> colon) || colon != ':' || label != u)
            throw Error("adjacency list: malformed row " + std::to_string(u));
        std::size_t v;
        while (row >> v) {
            if (v >= n)
                throw Error("adjacency list: neighbour out of range in row " + std::to_string(u));
            declared[u].set(v);
            result.add_edge(u, Vertex(v));
        }
    }
    for (Vertex u = 0 ; u < n ; ++u)
        for (Vertex v = 0 ; v < n ; ++v)
            if (declared[u].test(v) != declared[v].test(u))
                throw Error("adjacency list: not symmetric");
    return result;
}

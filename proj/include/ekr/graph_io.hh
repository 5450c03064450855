/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef EKR_GUARD_GRAPH_IO_HH
#define EKR_GUARD_GRAPH_IO_HH 1

#include <ekr/graph.hh>

#include <iosfwd>
#include <string>
#include <vector>

namespace ekr
{
    /// Graphviz output; labels, when given, must have one entry per vertex.
    auto write_dot(std::ostream & out, const Graph & x, const std::vector<std::string> & labels = { }) -> void;

    /// Labels "id: cycles" for a derangement graph of g.
    auto element_labels(const GroupAction & g) -> std::vector<std::string>;

    /**
     * Plain adjacency lists:
     *
     *   graph <n> loops <0|1>
     *   <v>: <neighbour> <neighbour> ...
     *
     * one line per vertex, neighbours ascending.
     */
    auto write_adjacency_list(std::ostream & out, const Graph & x) -> void;
    auto read_adjacency_list(std::istream & in) -> Graph;
}

#endif

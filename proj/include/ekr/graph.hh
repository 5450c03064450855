/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef EKR_GUARD_GRAPH_HH
#define EKR_GUARD_GRAPH_HH 1

#include <ekr/bitset.hh>
#include <ekr/group_action.hh>

#include <cstdint>
#include <span>
#include <vector>

namespace ekr
{
    using Vertex = std::uint32_t;

    inline constexpr std::size_t default_vertex_cap = 5'000;

    /**
     * A finite simple graph with bit-vector adjacency rows. Loops are only
     * permitted when the graph is constructed with loops_allowed; they exist
     * to express K*_m as a factor of direct products.
     */
    class Graph
    {
        private:
            std::size_t _size = 0;
            bool _loops_allowed = false;
            std::vector<Bitset> _rows;

        public:
            Graph() = default;
            explicit Graph(std::size_t size, bool loops_allowed = false);

            auto size() const -> std::size_t { return _size; }
            auto loops_allowed() const -> bool { return _loops_allowed; }

            auto adjacent(Vertex u, Vertex v) const -> bool { return _rows[u].test(v); }
            auto add_edge(Vertex u, Vertex v) -> void;
            auto remove_edge(Vertex u, Vertex v) -> void;

            auto row(Vertex u) const -> const Bitset & { return _rows[u]; }

            /// Replaces a whole row; the caller keeps the matrix symmetric.
            auto set_row(Vertex u, Bitset row) -> void;

            auto degree(Vertex u) const -> std::size_t { return _rows[u].count(); }

            /// Undirected edges, a loop counting once.
            auto edge_count() const -> std::size_t;

            auto has_loops() const -> bool;

            auto operator== (const Graph &) const -> bool = default;
    };

    auto complete_graph(std::size_t n) -> Graph;
    auto empty_graph(std::size_t n) -> Graph;
    auto path_graph(std::size_t n) -> Graph;
    auto cycle_graph(std::size_t n) -> Graph;

    /// K*_m: every pair adjacent, loops included.
    auto loop_complete(std::size_t m) -> Graph;

    /// Vertex i is element id i; {g, h} is an edge iff g h^-1 is a derangement.
    auto derangement_graph(const GroupAction & g, std::size_t cap = default_vertex_cap) -> Graph;

    /// Edge iff distinct and not adjacent. Rejects graphs with loops allowed.
    auto complement(const Graph & x) -> Graph;

    auto induced_subgraph(const Graph & x, std::span<const Vertex> vertices) -> Graph;

    /// A together with every neighbour of A, sorted.
    auto closed_neighborhood(const Graph & x, std::span<const Vertex> a) -> std::vector<Vertex>;

    auto is_independent_set(const Graph & x, std::span<const Vertex> s) -> bool;
    auto is_clique(const Graph & x, std::span<const Vertex> s) -> bool;

    auto to_bitset(std::size_t n, std::span<const Vertex> s) -> Bitset;
    auto to_vertices(const Bitset & s) -> std::vector<Vertex>;
}

#endif

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ekr/graph_products.hh>
#include <ekr/errors.hh>

using namespace ekr;

namespace
{
    auto product_size(const Graph & x, const Graph & y, std::size_t cap) -> std::size_t
    {
        if (x.size() && y.size() > cap / x.size())
            throw CapExceeded("graph product", cap);
        if (x.size() * y.size() > cap)
            throw CapExceeded("graph product", cap);
        return x.size() * y.size();
    }

    auto reject_loops(const Graph & x, const char * what) -> void
    {
        if (x.loops_allowed())
            throw Error(std::string(what) + " is only defined here for loop-free graphs");
    }

    template <typename Rule_>
    auto build(const Graph & x, const Graph & y, std::size_t cap, bool loops, Rule_ rule) -> Graph
    {
        std::size_t ny = y.size();
        Graph result(product_size(x, y, cap), loops);
        for (Vertex x1 = 0 ; x1 < x.size() ; ++x1)
            for (Vertex y1 = 0 ; y1 < ny ; ++y1) {
                Bitset row(result.size());
                for (Vertex x2 = 0 ; x2 < x.size() ; ++x2)
                    for (Vertex y2 = 0 ; y2 < ny ; ++y2)
                        if (rule(x1, y1, x2, y2))
                            row.set(x2 * ny + y2);
                result.set_row(x1 * ny + y1, std::move(row));
            }
        return result;
    }
}

auto ekr::strong_product(const Graph & x, const Graph & y, std::size_t cap) -> Graph
{
    reject_loops(x, "strong product");
    reject_loops(y, "strong product");
    return build(x, y, cap, false, [&] (Vertex x1, Vertex y1, Vertex x2, Vertex y2) {
            bool ex = x.adjacent(x1, x2), ey = y.adjacent(y1, y2);
            return (x1 == x2 && ey) || (y1 == y2 && ex) || (ex && ey);
        });
}

auto ekr::direct_product(const Graph & x, const Graph & y, std::size_t cap) -> Graph
{
    bool loops = x.loops_allowed() || y.loops_allowed();
    return build(x, y, cap, loops, [&] (Vertex x1, Vertex y1, Vertex x2, Vertex y2) {
            return x.adjacent(x1, x2) && y.adjacent(y1, y2);
        });
}

auto ekr::lexicographic(const Graph & x, const Graph & y, std::size_t cap) -> Graph
{
    reject_loops(x, "lexicographic product");
    reject_loops(y, "lexicographic product");
    return build(x, y, cap, false, [&] (Vertex x1, Vertex y1, Vertex x2, Vertex y2) {
            return x.adjacent(x1, x2) || (x1 == x2 && y.adjacent(y1, y2));
        });
}

auto ekr::direct_power(const Graph & x, std::size_t n, std::size_t cap) -> Graph
{
    if (n < 1)
        throw Error("direct power needs n >= 1");
    Graph result = x;
    for (std::size_t i = 1 ; i < n ; ++i)
        result = direct_product(result, x, cap);
    return result;
}

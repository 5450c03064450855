/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ekr/wreath.hh>
#include <ekr/errors.hh>

using namespace ekr;

namespace
{
    auto check_shape(const WreathElement & a, const WreathElement & b) -> void
    {
        if (a.outer.degree() != b.outer.degree() || a.inner.size() != b.inner.size())
            throw DegreeMismatch(a.outer.degree(), b.outer.degree());
        if (! a.inner.empty() && a.inner.front().degree() != b.inner.front().degree())
            throw DegreeMismatch(a.inner.front().degree(), b.inner.front().degree());
    }
}

auto ekr::wreath_identity(std::size_t base_degree, std::size_t n) -> WreathElement
{
    return WreathElement{ std::vector<Permutation>(n, Permutation::identity(base_degree)), Permutation::identity(n) };
}

auto ekr::wreath_multiply(const WreathElement & a, const WreathElement & b) -> WreathElement
{
    check_shape(a, b);
    WreathElement result;
    result.inner.reserve(a.inner.size());
    for (std::size_t i = 0 ; i < a.inner.size() ; ++i)
        result.inner.push_back(compose(a.inner[b.outer(i)], b.inner[i]));
    result.outer = compose(a.outer, b.outer);
    return result;
}

auto ekr::wreath_invert(const WreathElement & a) -> WreathElement
{
    auto outer_inverse = inverse(a.outer);
    WreathElement result;
    result.inner.reserve(a.inner.size());
    for (std::size_t i = 0 ; i < a.inner.size() ; ++i)
        result.inner.push_back(inverse(a.inner[outer_inverse(i)]));
    result.outer = std::move(outer_inverse);
    return result;
}

auto ekr::flatten(const WreathElement & a) -> Permutation
{
    std::size_t n = a.inner.size();
    std::size_t base = n ? a.inner.front().degree() : 0;
    if (a.outer.degree() != n)
        throw DegreeMismatch(a.outer.degree(), n);
    std::vector<Point> images(base * n);
    for (Point i = 0 ; i < n ; ++i) {
        if (a.inner[i].degree() != base)
            throw DegreeMismatch(base, a.inner[i].degree());
        for (Point x = 0 ; x < base ; ++x)
            images[i * base + x] = a.outer(i) * base + a.inner[i](x);
    }
    return Permutation::from_trusted(std::move(images));
}

auto ekr::unflatten(const Permutation & p, std::size_t base_degree) -> WreathElement
{
    if (base_degree == 0 || p.degree() % base_degree)
        throw Error("degree is not a multiple of the base degree");
    std::size_t n = p.degree() / base_degree;

    WreathElement result;
    std::vector<Point> outer(n);
    for (Point i = 0 ; i < n ; ++i) {
        Point block = p(i * base_degree) / base_degree;
        std::vector<Point> inner(base_degree);
        for (Point x = 0 ; x < base_degree ; ++x) {
            Point y = p(i * base_degree + x);
            if (y / base_degree != block)
                throw Error("permutation does not preserve the wreath block system");
            inner[x] = y % base_degree;
        }
        outer[i] = block;
        result.inner.push_back(Permutation::from_trusted(std::move(inner)));
    }
    result.outer = Permutation(std::move(outer));
    return result;
}

auto ekr::wreath_tuple_adjacent(const WreathElement & a, const WreathElement & b) -> bool
{
    check_shape(a, b);
    for (std::size_t i = 0 ; i < a.inner.size() ; ++i)
        if (a.outer(i) == b.outer(i) && ! is_derangement(compose(a.inner[i], inverse(b.inner[i]))))
            return false;
    return true;
}

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ekr/builders.hh>
#include <ekr/errors.hh>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

using namespace ekr;

namespace
{
    auto checked_product(std::size_t a, std::size_t b, std::size_t cap, const char * what) -> std::size_t
    {
        if (a != 0 && b > cap / a)
            throw CapExceeded(what, cap);
        if (a * b > cap)
            throw CapExceeded(what, cap);
        return a * b;
    }

    auto cycle_of(std::size_t degree, std::vector<Point> points) -> Permutation
    {
        std::vector<Point> result(degree);
        std::iota(result.begin(), result.end(), Point{0});
        for (std::size_t i = 0 ; i < points.size() ; ++i)
            result[points[i]] = points[(i + 1) % points.size()];
        return Permutation(std::move(result));
    }

    auto is_even(const std::vector<Point> & images) -> bool
    {
        std::vector<bool> seen(images.size(), false);
        std::size_t transpositions = 0;
        for (std::size_t s = 0 ; s < images.size() ; ++s) {
            if (seen[s])
                continue;
            std::size_t length = 0;
            for (Point x = s ; ! seen[x] ; x = images[x]) {
                seen[x] = true;
                ++length;
            }
            transpositions += length - 1;
        }
        return transpositions % 2 == 0;
    }

    auto all_permutations(std::size_t n, std::size_t cap, bool even_only) -> std::vector<Permutation>
    {
        std::size_t count = 1;
        for (std::size_t i = 2 ; i <= n ; ++i)
            count = checked_product(count, i, even_only ? 2 * cap : cap, "symmetric group");
        if (even_only && count / 2 > cap)
            throw CapExceeded("alternating group", cap);

        std::vector<Point> images(n);
        std::iota(images.begin(), images.end(), Point{0});
        std::vector<Permutation> result;
        do {
            if (! even_only || is_even(images))
                result.push_back(Permutation::from_trusted(images));
        } while (std::next_permutation(images.begin(), images.end()));
        return result;
    }

    auto label_of(const GroupAction & g, Point p) -> std::string
    {
        if (g.point_labels().empty())
            return std::to_string(p + 1);
        return g.point_labels()[p];
    }

    auto pair_permutation(const Permutation & a, const Permutation & b) -> Permutation
    {
        std::size_t w = b.degree();
        std::vector<Point> images(a.degree() * w);
        for (Point v = 0 ; v < a.degree() ; ++v)
            for (Point x = 0 ; x < w ; ++x)
                images[v * w + x] = a(v) * w + b(x);
        return Permutation::from_trusted(std::move(images));
    }

    auto tuple_permutation(std::span<const GroupAction> factors, std::span<const Permutation * const> parts) -> Permutation
    {
        std::vector<Point> images;
        Point offset = 0;
        for (std::size_t f = 0 ; f < factors.size() ; ++f) {
            for (Point x = 0 ; x < factors[f].degree() ; ++x)
                images.push_back(offset + (*parts[f])(x));
            offset += factors[f].degree();
        }
        return Permutation::from_trusted(std::move(images));
    }

    auto wreath_permutation(std::span<const Permutation * const> inner, const Permutation & outer, std::size_t base) -> Permutation
    {
        std::vector<Point> images(base * inner.size());
        for (Point i = 0 ; i < inner.size() ; ++i)
            for (Point a = 0 ; a < base ; ++a)
                images[i * base + a] = outer(i) * base + (*inner[i])(a);
        return Permutation::from_trusted(std::move(images));
    }

    /// Odometer over tuples of indices into sizes[], last position fastest.
    auto advance(std::vector<std::size_t> & tuple, std::size_t radix) -> bool
    {
        for (std::size_t i = tuple.size() ; i-- > 0 ; ) {
            if (++tuple[i] < radix)
                return true;
            tuple[i] = 0;
        }
        return false;
    }
}

auto ekr::symmetric_natural(std::size_t n, std::size_t cap) -> GroupAction
{
    if (n < 1)
        throw Error("symmetric group needs n >= 1");
    std::vector<Permutation> generators;
    if (n >= 2)
        generators.push_back(cycle_of(n, { 0, 1 }));
    if (n >= 3) {
        std::vector<Point> all(n);
        std::iota(all.begin(), all.end(), Point{0});
        generators.push_back(cycle_of(n, all));
    }
    if (generators.empty())
        generators.push_back(Permutation::identity(n));
    return GroupAction::from_elements(n, std::move(generators), all_permutations(n, cap, false));
}

auto ekr::alternating_natural(std::size_t n, std::size_t cap) -> GroupAction
{
    if (n < 1)
        throw Error("alternating group needs n >= 1");
    std::vector<Permutation> generators;
    for (Point i = 2 ; i < n ; ++i)
        generators.push_back(cycle_of(n, { 0, 1, i }));
    if (generators.empty())
        generators.push_back(Permutation::identity(n));
    return GroupAction::from_elements(n, std::move(generators), all_permutations(n, cap, true));
}

auto ekr::cyclic_regular(std::size_t n) -> GroupAction
{
    if (n < 1)
        throw Error("cyclic group needs n >= 1");
    std::vector<Permutation> elements;
    for (std::size_t k = 0 ; k < n ; ++k) {
        std::vector<Point> images(n);
        for (std::size_t x = 0 ; x < n ; ++x)
            images[x] = (x + k) % n;
        elements.push_back(Permutation::from_trusted(std::move(images)));
    }
    auto generator = n > 1 ? elements[1] : elements[0];
    return GroupAction::from_elements(n, { generator }, std::move(elements));
}

auto ekr::dihedral_natural(std::size_t n) -> GroupAction
{
    if (n < 3)
        throw Error("dihedral group needs n >= 3");
    std::vector<Permutation> elements;
    for (std::size_t k = 0 ; k < n ; ++k) {
        std::vector<Point> rotation(n), reflection(n);
        for (std::size_t x = 0 ; x < n ; ++x) {
            rotation[x] = (x + k) % n;
            reflection[x] = (k + n - x) % n;
        }
        elements.push_back(Permutation::from_trusted(std::move(rotation)));
        elements.push_back(Permutation::from_trusted(std::move(reflection)));
    }
    std::vector<Permutation> generators{ elements[2], elements[1] };
    return GroupAction::from_elements(n, std::move(generators), std::move(elements));
}

auto ekr::left_regular(const GroupAction & g) -> GroupAction
{
    auto as_left_multiplication = [&] (const Permutation & a) {
        std::vector<Point> images(g.order());
        for (ElementId i = 0 ; i < g.order() ; ++i)
            images[i] = g.id_of(compose(a, g.element(i)));
        return Permutation::from_trusted(std::move(images));
    };

    std::vector<Permutation> generators, elements;
    for (auto & s : g.generators())
        generators.push_back(as_left_multiplication(s));
    for (auto & e : g.elements())
        elements.push_back(as_left_multiplication(e));

    std::vector<std::string> labels;
    for (auto & e : g.elements())
        labels.push_back(to_cycle_string(e));

    return GroupAction::from_elements(g.order(), std::move(generators), std::move(elements))
        .with_point_labels(std::move(labels));
}

auto ekr::action_on_k_subsets(const GroupAction & g, std::size_t k) -> GroupAction
{
    std::size_t n = g.degree();
    if (k < 1 || k > n)
        throw Error("k-subset action needs 1 <= k <= degree");

    std::vector<std::vector<Point>> subsets;
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + k, true);
    do {
        std::vector<Point> s;
        for (Point i = 0 ; i < n ; ++i)
            if (mask[i])
                s.push_back(i);
        subsets.push_back(std::move(s));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    std::sort(subsets.begin(), subsets.end());

    std::map<std::vector<Point>, Point> index;
    for (Point i = 0 ; i < subsets.size() ; ++i)
        index.emplace(subsets[i], i);

    auto induce = [&] (const Permutation & p) {
        std::vector<Point> images(subsets.size());
        for (Point i = 0 ; i < subsets.size() ; ++i) {
            std::vector<Point> image;
            for (auto x : subsets[i])
                image.push_back(p(x));
            std::sort(image.begin(), image.end());
            images[i] = index.at(image);
        }
        return Permutation::from_trusted(std::move(images));
    };

    std::vector<Permutation> generators, elements;
    for (auto & s : g.generators())
        generators.push_back(induce(s));
    std::set<Permutation> distinct;
    for (auto & e : g.elements()) {
        elements.push_back(induce(e));
        distinct.insert(elements.back());
    }
    if (distinct.size() != g.order())
        throw Error("induced action on " + std::to_string(k) + "-subsets is not faithful");

    std::vector<std::string> labels;
    for (auto & s : subsets) {
        std::ostringstream out;
        out << '{';
        for (std::size_t i = 0 ; i < s.size() ; ++i)
            out << (i ? "," : "") << label_of(g, s[i]);
        out << '}';
        labels.push_back(out.str());
    }

    return GroupAction::from_elements(subsets.size(), std::move(generators), std::move(elements))
        .with_point_labels(std::move(labels));
}

auto ekr::external_direct_product(const GroupAction & g, const GroupAction & h, std::size_t cap) -> GroupAction
{
    if (h.degree() == 1)
        return g;
    checked_product(g.order(), h.order(), cap, "external direct product");

    auto id_g = Permutation::identity(g.degree()), id_h = Permutation::identity(h.degree());
    std::vector<Permutation> generators, elements;
    for (auto & s : g.generators())
        generators.push_back(pair_permutation(s, id_h));
    for (auto & s : h.generators())
        generators.push_back(pair_permutation(id_g, s));
    elements.reserve(g.order() * h.order());
    for (auto & a : g.elements())
        for (auto & b : h.elements())
            elements.push_back(pair_permutation(a, b));

    std::vector<std::string> labels;
    for (Point v = 0 ; v < g.degree() ; ++v)
        for (Point w = 0 ; w < h.degree() ; ++w)
            labels.push_back("(" + label_of(g, v) + "," + label_of(h, w) + ")");

    return GroupAction::from_elements(g.degree() * h.degree(), std::move(generators), std::move(elements))
        .with_point_labels(std::move(labels));
}

auto ekr::internal_direct_product(std::span<const GroupAction> factors, std::size_t cap) -> GroupAction
{
    if (factors.empty())
        throw Error("internal direct product needs at least one factor");
    if (factors.size() == 1)
        return factors.front();

    std::size_t order = 1, degree = 0;
    for (auto & f : factors) {
        order = checked_product(order, f.order(), cap, "internal direct product");
        degree += f.degree();
    }

    std::vector<Permutation> identities;
    for (auto & f : factors)
        identities.push_back(Permutation::identity(f.degree()));

    std::vector<const Permutation *> parts;
    for (auto & p : identities)
        parts.push_back(&p);

    std::vector<Permutation> generators;
    for (std::size_t f = 0 ; f < factors.size() ; ++f)
        for (auto & s : factors[f].generators()) {
            auto saved = parts[f];
            parts[f] = &s;
            generators.push_back(tuple_permutation(factors, parts));
            parts[f] = saved;
        }

    std::vector<Permutation> elements;
    elements.reserve(order);
    std::vector<std::size_t> tuple(factors.size(), 0);
    while (true) {
        for (std::size_t f = 0 ; f < factors.size() ; ++f)
            parts[f] = &factors[f].element(tuple[f]);
        elements.push_back(tuple_permutation(factors, parts));

        std::size_t i = factors.size();
        while (i-- > 0) {
            if (++tuple[i] < factors[i].order())
                break;
            tuple[i] = 0;
        }
        if (i == std::size_t(-1))
            break;
    }

    return GroupAction::from_elements(degree, std::move(generators), std::move(elements));
}

auto ekr::wreath_product(const GroupAction & g, const GroupAction & h, std::size_t cap) -> GroupAction
{
    if (h.degree() == 1)
        return g;

    std::size_t n = h.degree(), base = g.degree();
    std::size_t order = h.order();
    for (std::size_t i = 0 ; i < n ; ++i)
        order = checked_product(order, g.order(), cap, "wreath product");

    auto id_g = Permutation::identity(base), id_h = Permutation::identity(n);
    std::vector<const Permutation *> inner(n, &id_g);

    std::vector<Permutation> generators;
    for (std::size_t i = 0 ; i < n ; ++i)
        for (auto & s : g.generators()) {
            inner[i] = &s;
            generators.push_back(wreath_permutation(inner, id_h, base));
            inner[i] = &id_g;
        }
    for (auto & s : h.generators())
        generators.push_back(wreath_permutation(inner, s, base));

    std::vector<Permutation> elements;
    elements.reserve(order);
    std::vector<std::size_t> tuple(n, 0);
    do {
        for (std::size_t i = 0 ; i < n ; ++i)
            inner[i] = &g.element(tuple[i]);
        for (auto & top : h.elements())
            elements.push_back(wreath_permutation(inner, top, base));
    } while (advance(tuple, g.order()));

    std::vector<std::string> labels;
    for (Point i = 0 ; i < n ; ++i)
        for (Point a = 0 ; a < base ; ++a)
            labels.push_back("(" + label_of(g, a) + "," + label_of(h, i) + ")");

    return GroupAction::from_elements(base * n, std::move(generators), std::move(elements))
        .with_point_labels(std::move(labels));
}

auto ekr::external_pair_ids(const GroupAction & product, const GroupAction & g, const GroupAction & h) -> std::vector<ElementId>
{
    std::vector<ElementId> result;
    result.reserve(g.order() * h.order());
    for (auto & a : g.elements())
        for (auto & b : h.elements())
            result.push_back(product.id_of(h.degree() == 1 ? a : pair_permutation(a, b)));
    return result;
}

auto ekr::internal_tuple_ids(const GroupAction & product, std::span<const GroupAction> factors) -> std::vector<ElementId>
{
    std::vector<ElementId> result;
    std::vector<const Permutation *> parts(factors.size());
    std::vector<std::size_t> tuple(factors.size(), 0);
    while (true) {
        for (std::size_t f = 0 ; f < factors.size() ; ++f)
            parts[f] = &factors[f].element(tuple[f]);
        result.push_back(product.id_of(tuple_permutation(factors, parts)));

        std::size_t i = factors.size();
        while (i-- > 0) {
            if (++tuple[i] < factors[i].order())
                break;
            tuple[i] = 0;
        }
        if (i == std::size_t(-1))
            break;
    }
    return result;
}

auto ekr::wreath_tuple_ids(const GroupAction & product, const GroupAction & g, const GroupAction & h) -> std::vector<ElementId>
{
    std::size_t n = h.degree(), base = g.degree();
    std::vector<const Permutation *> inner(n);
    std::vector<ElementId> result;
    std::vector<std::size_t> tuple(n, 0);
    do {
        for (std::size_t i = 0 ; i < n ; ++i)
            inner[i] = &g.element(tuple[i]);
        for (auto & top : h.elements())
            result.push_back(product.id_of(n == 1 ? *inner[0] : wreath_permutation(inner, top, base)));
    } while (advance(tuple, g.order()));
    return result;
}

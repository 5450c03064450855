/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ekr/group_action.hh>
#include <ekr/errors.hh>

#include <algorithm>
#include <deque>
#include <unordered_set>

using namespace ekr;

auto GroupAction::closure(std::vector<Permutation> generators, std::size_t cap) -> GroupAction
{
    if (generators.empty())
        throw Error("closure needs at least one generator");
    std::size_t degree = generators.front().degree();
    for (auto & g : generators)
        if (g.degree() != degree)
            throw DegreeMismatch(degree, g.degree());

    std::unordered_set<Permutation, PermutationHash> seen;
    std::vector<Permutation> elements;
    std::deque<std::size_t> queue;

    auto id = Permutation::identity(degree);
    seen.insert(id);
    elements.push_back(id);
    queue.push_back(0);

    while (! queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        for (auto & s : generators) {
            auto y = compose(s, elements[x]);
            if (seen.insert(y).second) {
                if (elements.size() >= cap)
                    throw CapExceeded("group closure", elements.size());
                elements.push_back(std::move(y));
                queue.push_back(elements.size() - 1);
            }
        }
    }

    GroupAction result;
    result._degree = degree;
    result._generators = std::move(generators);
    result._elements = std::move(elements);
    result.finish();
    return result;
}

auto GroupAction::from_elements(std::size_t degree, std::vector<Permutation> generators,
        std::vector<Permutation> elements) -> GroupAction
{
    for (auto & e : elements)
        if (e.degree() != degree)
            throw DegreeMismatch(degree, e.degree());
    for (auto & g : generators)
        if (g.degree() != degree)
            throw DegreeMismatch(degree, g.degree());

    GroupAction result;
    result._degree = degree;
    result._generators = std::move(generators);
    result._elements = std::move(elements);
    result.finish();
    return result;
}

auto GroupAction::finish() -> void
{
    std::sort(_elements.begin(), _elements.end());
    _elements.erase(std::unique(_elements.begin(), _elements.end()), _elements.end());

    // orbits from generators; a group with no generators listed falls back to
    // using every element
    const auto & movers = _generators.empty() ? _elements : _generators;
    std::vector<bool> seen(_degree, false);
    _orbits.clear();
    for (Point start = 0 ; start < _degree ; ++start) {
        if (seen[start])
            continue;
        Orbit orbit{ start, { start } };
        seen[start] = true;
        for (std::size_t i = 0 ; i < orbit.members.size() ; ++i)
            for (auto & g : movers) {
                auto y = g(orbit.members[i]);
                if (! seen[y]) {
                    seen[y] = true;
                    orbit.members.push_back(y);
                }
            }
        std::sort(orbit.members.begin(), orbit.members.end());
        _orbits.push_back(std::move(orbit));
    }

    _transitive = _orbits.size() == 1;
    _regular = _transitive && _elements.size() == _degree;
}

auto GroupAction::index_of(const Permutation & p) const -> std::optional<ElementId>
{
    auto it = std::lower_bound(_elements.begin(), _elements.end(), p);
    if (it == _elements.end() || *it != p)
        return std::nullopt;
    return ElementId(it - _elements.begin());
}

auto GroupAction::id_of(const Permutation & p) const -> ElementId
{
    auto id = index_of(p);
    if (! id)
        throw Error("permutation " + to_cycle_string(p) + " is not in the group");
    return *id;
}

auto GroupAction::with_point_labels(std::vector<std::string> labels) && -> GroupAction
{
    if (labels.size() != _degree)
        throw Error("point label count does not match degree");
    _labels = std::move(labels);
    return std::move(*this);
}

auto GroupAction::validate() const -> void
{
    if (_elements.empty() || ! _elements.front().is_identity())
        throw Error("identity missing or not first");
    for (std::size_t i = 1 ; i < _elements.size() ; ++i)
        if (! (_elements[i - 1] < _elements[i]))
            throw Error("elements not strictly sorted");
    for (auto & a : _elements) {
        if (a.degree() != _degree)
            throw DegreeMismatch(_degree, a.degree());
        if (! index_of(inverse(a)))
            throw Error("not closed under inversion");
        for (auto & b : _elements)
            if (! index_of(compose(a, b)))
                throw Error("not closed under composition");
    }
    for (auto & g : _generators)
        if (! index_of(g))
            throw Error("generator outside the element list");
}

auto ekr::orbits(const GroupAction & g) -> std::vector<Orbit>
{
    return g.orbits();
}

auto ekr::point_stabilizer(const GroupAction & g, Point v) -> std::vector<ElementId>
{
    return coset_of_point_map(g, v, v);
}

auto ekr::coset_of_point_map(const GroupAction & g, Point v, Point w) -> std::vector<ElementId>
{
    if (v >= g.degree() || w >= g.degree())
        throw Error("point out of range");
    std::vector<ElementId> result;
    for (ElementId i = 0 ; i < g.order() ; ++i)
        if (g.element(i)(v) == w)
            result.push_back(i);
    return result;
}

auto ekr::is_coset_of_point_stabilizer(const GroupAction & g, std::span<const ElementId> s) -> std::optional<std::pair<Point, Point>>
{
    if (s.empty())
        throw Error("empty set is not a coset");

    const auto & first = g.element(s.front());
    for (Point v = 0 ; v < g.degree() ; ++v) {
        Point w = first(v);
        bool all = std::all_of(s.begin(), s.end(), [&] (ElementId e) { return g.element(e)(v) == w; });
        if (! all)
            continue;
        std::size_t coset_size = 0;
        for (auto & e : g.elements())
            if (e(v) == w)
                ++coset_size;
        // s has distinct members all inside the coset, so equal sizes mean equality
        std::vector<ElementId> sorted(s.begin(), s.end());
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        if (coset_size == sorted.size())
            return std::pair{ v, w };
    }
    return std::nullopt;
}

auto ekr::derangement_set(const GroupAction & g) -> std::vector<ElementId>
{
    std::vector<ElementId> result;
    for (ElementId i = 0 ; i < g.order() ; ++i)
        if (is_derangement(g.element(i)))
            result.push_back(i);
    return result;
}

auto ekr::largest_stabilizer_order(const GroupAction & g) -> std::size_t
{
    std::vector<std::size_t> counts(g.degree(), 0);
    for (auto & e : g.elements())
        for (Point v = 0 ; v < g.degree() ; ++v)
            if (e(v) == v)
                ++counts[v];
    return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

auto ekr::is_subgroup(const GroupAction & h, const GroupAction & g) -> bool
{
    if (h.degree() != g.degree())
        return false;
    return std::all_of(h.elements().begin(), h.elements().end(), [&] (const Permutation & p) {
            return g.index_of(p).has_value(); });
}

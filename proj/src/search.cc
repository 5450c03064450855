/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ekr/search.hh>
#include <ekr/errors.hh>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

using namespace ekr;

namespace
{
    using Images = std::array<std::uint8_t, max_search_degree>;

    /// All of S_n in lexicographic order, so that a permutation's index is its
    /// Lehmer rank and sorting by index sorts by image array.
    class SymmetricTable
    {
        private:
            std::size_t _n;
            std::vector<Images> _perms;
            std::vector<std::uint32_t> _factorial;
            std::vector<std::uint16_t> _product;

        public:
            explicit SymmetricTable(std::size_t n) : _n(n), _factorial(n + 1, 1)
            {
                for (std::size_t i = 1 ; i <= n ; ++i)
                    _factorial[i] = _factorial[i - 1] * std::uint32_t(i);

                Images p{ };
                std::iota(p.begin(), p.begin() + n, 0);
                do
                    _perms.push_back(p);
                while (std::next_permutation(p.begin(), p.begin() + n));

                // a full product table is affordable up to S_6
                if (n <= 6) {
                    std::size_t size = _perms.size();
                    _product.resize(size * size);
                    for (std::size_t x = 0 ; x < size ; ++x)
                        for (std::size_t y = 0 ; y < size ; ++y)
                            _product[x * size + y] = std::uint16_t(compose_slow(std::uint32_t(x), std::uint32_t(y)));
                }
            }

            auto size() const -> std::size_t { return _perms.size(); }
            auto images(std::uint32_t r) const -> const Images & { return _perms[r]; }

            auto rank(const Images & p) const -> std::uint32_t
            {
                std::uint32_t result = 0;
                for (std::size_t i = 0 ; i < _n ; ++i) {
                    std::uint32_t smaller = 0;
                    for (std::size_t j = i + 1 ; j < _n ; ++j)
                        smaller += p[j] < p[i];
                    result += smaller * _factorial[_n - 1 - i];
                }
                return result;
            }

            auto compose_slow(std::uint32_t x, std::uint32_t y) const -> std::uint32_t
            {
                Images r{ };
                for (std::size_t i = 0 ; i < _n ; ++i)
                    r[i] = _perms[x][_perms[y][i]];
                return rank(r);
            }

            auto compose(std::uint32_t x, std::uint32_t y) const -> std::uint32_t
            {
                if (! _product.empty())
                    return _product[x * _perms.size() + y];
                return compose_slow(x, y);
            }

            auto transitive_pair(std::uint32_t a, std::uint32_t b) const -> bool
            {
                std::array<std::uint8_t, max_search_degree> parent{ };
                std::iota(parent.begin(), parent.begin() + _n, 0);
                auto find = [&] (std::uint8_t x) {
                    while (parent[x] != x)
                        x = parent[x] = parent[parent[x]];
                    return x;
                };
                std::size_t components = _n;
                for (auto g : { a, b })
                    for (std::size_t i = 0 ; i < _n ; ++i) {
                        auto u = find(std::uint8_t(i)), v = find(_perms[g][i]);
                        if (u != v) {
                            parent[u] = v;
                            --components;
                        }
                    }
                return components == 1;
            }

            auto to_permutation(std::uint32_t r) const -> Permutation
            {
                return Permutation::from_trusted(std::vector<Point>(_perms[r].begin(), _perms[r].begin() + _n));
            }
    };
}

auto ekr::search_transitive_2generated(std::size_t n, const GroupPredicate & predicate,
        std::uint64_t pair_budget) -> SearchResult
{
    if (n < 1 || n > max_search_degree)
        throw Error("subgroup search supports degrees 1 to " + std::to_string(max_search_degree));

    SymmetricTable table(n);
    std::size_t size = table.size();

    SearchResult result;
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<std::pair<std::vector<std::uint32_t>, std::pair<std::uint32_t, std::uint32_t>>> accepted;

    std::vector<std::uint32_t> mark(size, 0);
    std::uint32_t epoch = 0;
    std::vector<std::uint32_t> members;

    for (std::uint32_t a = 0 ; a < size && ! result.exhausted ; ++a)
        for (std::uint32_t b = a ; b < size ; ++b) {
            if (pair_budget && result.pairs_examined >= pair_budget) {
                result.exhausted = true;
                break;
            }
            ++result.pairs_examined;
            if (! table.transitive_pair(a, b))
                continue;

            ++epoch;
            members.assign(1, 0);
            mark[0] = epoch;
            for (std::size_t i = 0 ; i < members.size() ; ++i)
                for (auto g : { a, b }) {
                    auto y = table.compose(members[i], g);
                    if (mark[y] != epoch) {
                        mark[y] = epoch;
                        members.push_back(y);
                    }
                }
            std::sort(members.begin(), members.end());
            if (! seen.insert(members).second)
                continue;
            ++result.distinct_transitive;

            std::vector<Permutation> elements, generators;
            for (auto m : members)
                elements.push_back(table.to_permutation(m));
            for (auto g : { a, b })
                if (g != 0 && (generators.empty() || g != a))
                    generators.push_back(table.to_permutation(g));
            auto group = GroupAction::from_elements(n, std::move(generators), std::move(elements));
            if (predicate(group))
                accepted.emplace_back(members, std::pair{ a, b });
        }

    std::sort(accepted.begin(), accepted.end(), [] (const auto & x, const auto & y) {
            return std::pair{ x.first.size(), x.first } < std::pair{ y.first.size(), y.first }; });

    for (auto & [members, gens] : accepted) {
        std::vector<Permutation> elements, generators;
        for (auto m : members)
            elements.push_back(table.to_permutation(m));
        for (auto g : { gens.first, gens.second })
            if (g != 0 && (generators.empty() || g != gens.first))
                generators.push_back(table.to_permutation(g));
        result.groups.push_back(GroupAction::from_elements(n, std::move(generators), std::move(elements)));
    }
    return result;
}

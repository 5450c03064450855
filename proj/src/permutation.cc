/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ekr/permutation.hh>
#include <ekr/errors.hh>

#include <boost/functional/hash.hpp>

#include <cctype>
#include <numeric>
#include <sstream>

using namespace ekr;

Permutation::Permutation(std::vector<Point> images) :
    _images(std::move(images))
{
    std::vector<bool> seen(_images.size(), false);
    for (auto x : _images) {
        if (x >= _images.size() || seen[x])
            throw Error("image array is not a bijection");
        seen[x] = true;
    }
}

auto Permutation::identity(std::size_t degree) -> Permutation
{
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    return from_trusted(std::move(images));
}

auto Permutation::is_identity() const -> bool
{
    for (std::size_t i = 0 ; i < _images.size() ; ++i)
        if (_images[i] != i)
            return false;
    return true;
}

auto ekr::compose(const Permutation & p, const Permutation & q) -> Permutation
{
    if (p.degree() != q.degree())
        throw DegreeMismatch(p.degree(), q.degree());

    std::vector<Point> images(p.degree());
    for (std::size_t x = 0 ; x < images.size() ; ++x)
        images[x] = p(q(x));
    return Permutation::from_trusted(std::move(images));
}

auto ekr::inverse(const Permutation & p) -> Permutation
{
    std::vector<Point> images(p.degree());
    for (std::size_t x = 0 ; x < images.size() ; ++x)
        images[p(x)] = x;
    return Permutation::from_trusted(std::move(images));
}

auto ekr::fixed_points(const Permutation & p) -> std::vector<Point>
{
    std::vector<Point> result;
    for (std::size_t x = 0 ; x < p.degree() ; ++x)
        if (p(x) == x)
            result.push_back(x);
    return result;
}

auto ekr::is_derangement(const Permutation & p) -> bool
{
    for (std::size_t x = 0 ; x < p.degree() ; ++x)
        if (p(x) == x)
            return false;
    return true;
}

auto ekr::fixes_exactly_one(const Permutation & p) -> bool
{
    std::size_t count = 0;
    for (std::size_t x = 0 ; x < p.degree() ; ++x)
        if (p(x) == x)
            ++count;
    return count == 1;
}

auto ekr::parse_cycles(std::string_view text, std::size_t degree) -> Permutation
{
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    std::vector<bool> used(degree, false);

    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };

    while (true) {
        skip_space();
        if (pos >= text.size())
            break;
        if (text[pos] != '(')
            throw Error("cycle notation: expected '(' in \"" + std::string(text) + "\"");
        ++pos;

        std::vector<Point> cycle;
        while (true) {
            skip_space();
            if (pos >= text.size())
                throw Error("cycle notation: unterminated cycle in \"" + std::string(text) + "\"");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (text[pos] == ',') {
                ++pos;
                continue;
            }
            if (! std::isdigit(static_cast<unsigned char>(text[pos])))
                throw Error("cycle notation: unexpected character in \"" + std::string(text) + "\"");
            std::size_t value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                value = value * 10 + (text[pos++] - '0');
            if (value < 1 || value > degree)
                throw Error("cycle notation: point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
            if (used[value - 1])
                throw Error("cycle notation: point " + std::to_string(value) + " repeated");
            used[value - 1] = true;
            cycle.push_back(value - 1);
        }

        for (std::size_t i = 0 ; i < cycle.size() ; ++i)
            images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }

    return Permutation::from_trusted(std::move(images));
}

auto ekr::to_cycle_string(const Permutation & p) -> std::string
{
    std::ostringstream out;
    std::vector<bool> seen(p.degree(), false);
    for (std::size_t start = 0 ; start < p.degree() ; ++start) {
        if (seen[start] || p(start) == start)
            continue;
        out << '(';
        Point x = start;
        bool first = true;
        do {
            if (! first)
                out << ' ';
            first = false;
            out << (x + 1);
            seen[x] = true;
            x = p(x);
        } while (x != start);
        out << ')';
    }
    auto result = out.str();
    return result.empty() ? "()" : result;
}

auto PermutationHash::operator() (const Permutation & p) const -> std::size_t
{
    return boost::hash_range(p.images().begin(), p.images().end());
}

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef EKR_GUARD_BITSET_HH
#define EKR_GUARD_BITSET_HH 1

#include <bit>
#include <cstdint>
#include <vector>

namespace ekr
{
    /**
     * A fixed-size bit vector backed by 64-bit words. Only what the graph
     * code and the clique solver need: set operations in place, popcount,
     * and first-bit iteration.
     */
    class Bitset
    {
        private:
            std::size_t _size = 0;
            std::vector<std::uint64_t> _words;

        public:
            static constexpr std::size_t npos = ~std::size_t{0};

            Bitset() = default;

            explicit Bitset(std::size_t size) :
                _size(size),
                _words((size + 63) / 64, 0)
            {
            }

            auto size() const -> std::size_t { return _size; }

            auto test(std::size_t i) const -> bool
            {
                return (_words[i / 64] >> (i % 64)) & 1;
            }

            auto set(std::size_t i) -> void
            {
                _words[i / 64] |= std::uint64_t{1} << (i % 64);
            }

            auto reset(std::size_t i) -> void
            {
                _words[i / 64] &= ~(std::uint64_t{1} << (i % 64));
            }

            auto set_all() -> void
            {
                for (auto & w : _words)
                    w = ~std::uint64_t{0};
                trim();
            }

            auto reset_all() -> void
            {
                for (auto & w : _words)
                    w = 0;
            }

            auto count() const -> std::size_t
            {
                std::size_t result = 0;
                for (auto w : _words)
                    result += std::popcount(w);
                return result;
            }

            auto none() const -> bool
            {
                for (auto w : _words)
                    if (w)
                        return false;
                return true;
            }

            auto any() const -> bool { return ! none(); }

            auto first() const -> std::size_t
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (_words[i])
                        return i * 64 + std::countr_zero(_words[i]);
                return npos;
            }

            /// Smallest set bit strictly greater than i.
            auto next(std::size_t i) const -> std::size_t
            {
                ++i;
                if (i >= _size)
                    return npos;
                std::size_t w = i / 64;
                std::uint64_t bits = _words[w] & (~std::uint64_t{0} << (i % 64));
                while (true) {
                    if (bits)
                        return w * 64 + std::countr_zero(bits);
                    if (++w >= _words.size())
                        return npos;
                    bits = _words[w];
                }
            }

            auto operator&= (const Bitset & other) -> Bitset &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= other._words[i];
                return *this;
            }

            auto operator|= (const Bitset & other) -> Bitset &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] |= other._words[i];
                return *this;
            }

            /// this &= ~other
            auto subtract(const Bitset & other) -> Bitset &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= ~other._words[i];
                return *this;
            }

            auto flip() -> Bitset &
            {
                for (auto & w : _words)
                    w = ~w;
                trim();
                return *this;
            }

            auto intersects(const Bitset & other) const -> bool
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (_words[i] & other._words[i])
                        return true;
                return false;
            }

            auto intersection_count(const Bitset & other) const -> std::size_t
            {
                std::size_t result = 0;
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    result += std::popcount(_words[i] & other._words[i]);
                return result;
            }

            auto words() const -> const std::vector<std::uint64_t> & { return _words; }

            auto to_vector() const -> std::vector<std::size_t>
            {
                std::vector<std::size_t> result;
                for (auto i = first() ; i != npos ; i = next(i))
                    result.push_back(i);
                return result;
            }

            auto operator== (const Bitset &) const -> bool = default;

        private:
            auto trim() -> void
            {
                if (_size % 64 && ! _words.empty())
                    _words.back() &= (std::uint64_t{1} << (_size % 64)) - 1;
            }
    };
}

#endif

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef EKR_GUARD_ERRORS_HH
#define EKR_GUARD_ERRORS_HH 1

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ekr
{
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    class DegreeMismatch : public Error
    {
        public:
            DegreeMismatch(std::size_t a, std::size_t b) :
                Error("degree mismatch: " + std::to_string(a) + " vs " + std::to_string(b))
            {
            }
    };

    /// A construction would have produced more elements (or vertices) than allowed.
    class CapExceeded : public Error
    {
        private:
            std::size_t _partial;

        public:
            CapExceeded(const std::string & what, std::size_t partial) :
                Error(what + " (cap exceeded after " + std::to_string(partial) + ")"),
                _partial(partial)
            {
            }

            auto partial_count() const -> std::size_t { return _partial; }
    };

    /// A search ran out of its node budget before it could prove its answer.
    class BudgetExceeded : public Error
    {
        private:
            std::uint64_t _nodes;

        public:
            explicit BudgetExceeded(std::uint64_t nodes) :
                Error("search budget exhausted after " + std::to_string(nodes) + " nodes"),
                _nodes(nodes)
            {
            }

            auto nodes() const -> std::uint64_t { return _nodes; }
    };
}

#endif

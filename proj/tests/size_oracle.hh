/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PEBBLE_GUARD_TESTS_SIZE_ORACLE_HH
#define PEBBLE_GUARD_TESTS_SIZE_ORACLE_HH 1

// Vertex counts derived by hand from the gadget set definitions. Nothing here looks at a builder.

#include <cstddef>

namespace oracle
{
    struct Counts
    {
        std::size_t spoiler, duplicator;
    };

    /// The a- and b-blocks of one switch.
    inline auto switch_inner(std::size_t k, std::size_t n) -> std::size_t
    {
        return k * (n * k + 1) + k * (n + k);
    }

    inline auto switch_counts(std::size_t k, std::size_t n) -> Counts
    {
        return { 4 * k, k * (n * k + 3 * n + k + 3) };
    }

    inline auto rule_counts(std::size_t k, std::size_t n) -> Counts
    {
        return { 2 * k, 2 * k * (n + 1) };
    }

    inline auto init_counts(std::size_t k, std::size_t n) -> Counts
    {
        return { 1 + 2 * 4 * k + k, 2 + 2 * switch_counts(k, n).duplicator + k * (n + 1) };
    }

    inline auto choice_counts(std::size_t k, std::size_t n, std::size_t m) -> Counts
    {
        return { 2 * k + k * m, k * (n + 1) + k * (n * m + 1) + k * m * (n + 1) };
    }

    /// The glued pair for m rules: shared x and y rows, INIT, the choice gadget, and per rule the
    /// rule gadgets' fresh output rows, two switch interiors and one choice output row.
    inline auto reduction_counts(std::size_t k, std::size_t n, std::size_t m) -> Counts
    {
        std::size_t row = k * (n + 1);
        if (m == 0)
            return { k + 8 * k + 1, row + 2 + 4 * row + 2 * switch_inner(k, n) };
        std::size_t spoiler = 2 * k + (8 * k + 1) + k + m * (k + 2 * k + k + 2 * k + k);
        std::size_t duplicator = 2 * row + 2 + 4 * row + 2 * switch_inner(k, n) + k * (n * m + 1)
            + m * (3 * row + 2 * switch_inner(k, n));
        return { spoiler, duplicator };
    }
}

#endif

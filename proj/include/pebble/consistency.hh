/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PEBBLE_GUARD_CONSISTENCY_HH
#define PEBBLE_GUARD_CONSISTENCY_HH 1

#include <pebble/strategy.hh>
#include <pebble/structure.hh>

#include <cstdint>
#include <vector>

namespace pebble
{
    /// The allowed images of one exact domain set.
    struct ScopeRelation
    {
        std::vector<Element> scope;
        std::vector<Tuple> allowed;

        auto operator== (const ScopeRelation &) const -> bool = default;
    };

    struct ConsistencyResult
    {
        bool establishable = false;

        /// Downward closed, every member of size at most k-2 extends inside the family and every
        /// member of size k-1 extends to a legal map whose restrictions all lie in the family.
        StrategyFamily established_family;

        std::uint64_t initial_size = 0;
    };

    /// One relation per domain set occurring in the family, scopes in (size, lexicographic) order.
    auto scope_relations(const StrategyFamily &) -> std::vector<ScopeRelation>;

    /// Direct check of the definition. When constraints are given, a map only counts as a partial
    /// homomorphism if each restriction to a constrained scope is allowed.
    auto is_strongly_k_consistent(const Structure & a, const Structure & b, std::size_t k,
            const std::vector<ScopeRelation> & constraints = {}, std::uint64_t budget = 100'000'000) -> bool;

    auto establish_strong_k_consistency(const Structure & a, const Structure & b, std::size_t k,
            std::uint64_t budget = 100'000'000) -> ConsistencyResult;
}

#endif

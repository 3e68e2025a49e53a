/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PEBBLE_GUARD_STRATEGY_HH
#define PEBBLE_GUARD_STRATEGY_HH 1

#include <pebble/structure.hh>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace pebble
{
    inline constexpr std::size_t unbounded = std::numeric_limits<std::size_t>::max();

    /// An explicit set of partial maps, some of them marked critical. Members are kept unique and in
    /// canonical order (smaller domains first, then lexicographic) once normalise() has run.
    struct StrategyFamily
    {
        std::vector<PartialHom> members;
        std::vector<std::uint8_t> critical;

        /// Fixed values on the gadget's glued vertices, when the family belongs to a gadget.
        std::optional<PartialHom> boundary;

        /// Spoiler-side vertices of the gadget the family lives on, sorted. Empty when not tracked.
        std::vector<Element> scope;

        auto size() const -> std::size_t { return members.size(); }
        auto empty() const -> bool { return members.empty(); }

        /// Sorts, deduplicates (a duplicate is critical if any copy was), and fills missing flags.
        auto normalise() -> void;

        auto find(const PartialHom &) const -> std::optional<std::size_t>;
        auto contains(const PartialHom & h) const -> bool { return find(h).has_value(); }
        auto is_critical(const PartialHom & h) const -> bool;
        auto critical_members() const -> std::vector<PartialHom>;
        auto critical_count() const -> std::size_t;

        /// Restriction of every member to the given vertices, deduplicated; critical flags dropped.
        auto restricted_to(const std::vector<Element> & vertices) const -> StrategyFamily;
    };

    /// All subfunctions of the generators with at most max_size pairs.
    auto closure(const std::vector<PartialHom> & generators, std::size_t max_size = unbounded) -> StrategyFamily;

    /// Does every member agree with the declared boundary on its domain? Returns the first offender.
    auto boundary_violation(const StrategyFamily &) -> std::optional<PartialHom>;

    /// {g ∪ h} restricted to at most max_size pairs. A union is critical iff it is a critical member of
    /// either side. Throws PreconditionError naming the first shared boundary vertex where the
    /// declared boundaries disagree.
    auto compose(const StrategyFamily & g, const StrategyFamily & h, std::size_t max_size = unbounded) -> StrategyFamily;

    /// The same for many families at once, without materialising intermediate compositions. Inputs
    /// must be closed under subfunctions.
    auto compose_all(const std::vector<const StrategyFamily *> & families, std::size_t max_size = unbounded) -> StrategyFamily;

    struct UnionResult
    {
        StrategyFamily family;

        /// Critical members of some input that are not a non-critical member of any input. These stay
        /// critical in the union.
        std::vector<PartialHom> uncovered;
    };

    auto union_critical(const std::vector<StrategyFamily> & families) -> UnionResult;
    auto union_critical(const std::vector<const StrategyFamily *> & families) -> UnionResult;
}

#endif

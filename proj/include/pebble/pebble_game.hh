/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PEBBLE_GUARD_PEBBLE_GAME_HH
#define PEBBLE_GUARD_PEBBLE_GAME_HH 1

#include <pebble/strategy.hh>
#include <pebble/structure.hh>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pebble
{
    inline constexpr std::uint64_t default_config_budget = 100'000'000;

    enum class Winner
    {
        Spoiler,
        Duplicator
    };

    auto to_string(Winner) -> std::string;

    struct GameConfig
    {
        PartialHom pebbles;
        std::size_t capacity;
    };

    struct SolveOptions
    {
        std::uint64_t budget = default_config_budget;

        /// Materialise the greatest Duplicator family (including the full-size members).
        bool witness = false;

        /// Look for a total homomorphism first and answer Duplicator without building the
        /// configuration space when one exists.
        bool homomorphism_shortcut = false;
    };

    struct SolveResult
    {
        Winner winner;
        std::optional<StrategyFamily> witness;
        std::uint64_t configurations = 0;
        bool decided_by_homomorphism = false;
    };

    /// The existential game with k pebbles.
    auto solve_game(const Structure & a, const Structure & b, std::size_t k, const SolveOptions & = {}) -> SolveResult;

    /// Can Spoiler, starting from start, force either a win or a configuration containing one of the
    /// targets? Spoiler may lift any set of pebbles and then place one per round.
    auto spoiler_reach(const Structure & a, const Structure & b, std::size_t k, const PartialHom & start,
            const std::vector<PartialHom> & targets, std::uint64_t budget = default_config_budget) -> bool;

    /// The same for many start positions against one fixed target set.
    class ReachabilityOracle
    {
        private:
            struct Impl;
            std::unique_ptr<Impl> _imp;

        public:
            ReachabilityOracle(const Structure & a, const Structure & b, std::size_t k,
                    const std::vector<PartialHom> & targets, std::uint64_t budget = default_config_budget);
            ~ReachabilityOracle();

            auto reaches(const PartialHom & start) const -> bool;
            auto configurations() const -> std::uint64_t;
    };

    struct Violation
    {
        PartialHom member;
        std::optional<Element> element;
        std::string kind;
        bool exempt_if_critical = false;
    };

    struct StrategyReport
    {
        bool is_winning = false;
        bool is_critical = false;
        std::vector<Violation> violations;

        /// Violations beyond the stored ones are only counted.
        std::size_t violation_count = 0;
    };

    auto verify_strategy(const Structure & a, const Structure & b, std::size_t k, const StrategyFamily & h,
            std::size_t max_reported = 10'000) -> StrategyReport;
}

#endif

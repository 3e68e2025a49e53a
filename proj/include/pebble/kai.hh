/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PEBBLE_GUARD_KAI_HH
#define PEBBLE_GUARD_KAI_HH 1

#include <pebble/errors.hh>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pebble
{
    /// Move pebble c from u to w, provided pebble d sits on v and w is free. Nodes are 1..n, pebbles 1..k.
    struct KaiRule
    {
        unsigned u, v, w, c, d;

        auto operator<=> (const KaiRule &) const = default;
    };

    /// position[i - 1] is the node carrying pebble i.
    using KaiPosition = std::vector<unsigned>;

    struct KaiInstance
    {
        unsigned k = 0;
        unsigned nodes = 0;
        std::vector<KaiRule> rules;
        KaiPosition start;
        unsigned goal = 0;
    };

    enum class KaiWinner
    {
        Player1,
        Player2
    };

    auto to_string(KaiWinner) -> std::string;
    auto to_string(const KaiRule &) -> std::string;
    auto to_string(const KaiPosition &) -> std::string;

    /// Player 2's winning strategy: Player 1 moves from positions in k1, Player 2 from positions in k2
    /// using rule kappa (an index into the instance's rules).
    struct KaiStrategy
    {
        std::vector<KaiPosition> k1, k2;
        std::map<KaiPosition, std::size_t> kappa;
    };

    struct KaiMove
    {
        KaiPosition from;
        std::size_t rule;
        KaiPosition to;
    };

    struct KaiSolution
    {
        KaiWinner winner;
        std::optional<KaiStrategy> strategy;

        /// A principal variation when Player 1 wins, alternating Player 1 / Player 2 moves.
        std::vector<KaiMove> line;

        std::uint64_t positions = 0;
    };

    /// Pebbles that witness why r cannot be applied at p, 1-based and sorted. Empty iff applicable.
    auto blocking_set(const KaiRule & r, const KaiPosition & p) -> std::vector<unsigned>;
    auto applicable(const KaiRule & r, const KaiPosition & p) -> bool;

    /// Throws PreconditionError with the blocking set when r is not applicable.
    auto apply_rule(const KaiRule & r, const KaiPosition & p) -> KaiPosition;

    /// p with pebble c moved to w, whether or not that is a legal move.
    auto apply_formally(const KaiRule & r, const KaiPosition & p) -> KaiPosition;

    /// Every triple with every ordered pair of distinct pebbles, triples in the given order.
    auto expand_rule_triples(const std::vector<std::array<unsigned, 3> > & triples, unsigned k) -> std::vector<KaiRule>;

    auto validate_kai(const KaiInstance &) -> std::vector<std::string>;

    auto solve_kai(const KaiInstance &, std::uint64_t budget = 50'000'000) -> KaiSolution;

    /// The three conditions of a Player 2 winning strategy. Returns the failures, empty if it is one.
    auto check_kai_strategy(const KaiInstance &, const KaiStrategy &) -> std::vector<std::string>;
}

#endif

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PEBBLE_GUARD_CROSSVALIDATE_HH
#define PEBBLE_GUARD_CROSSVALIDATE_HH 1

#include <pebble/gadgets.hh>
#include <pebble/kai.hh>
#include <pebble/pebble_game.hh>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace pebble
{
    /// Every ordered triple of distinct nodes in 1..n.
    auto all_rule_triples(unsigned n) -> std::vector<std::array<unsigned, 3> >;

    /// Every set of at most max_triples triples (including the empty set), every injective start and
    /// every goal off the start. Sets are taken in lexicographic order of triple indices, smallest first.
    auto enumerate_kai_instances(unsigned k, unsigned n, unsigned max_triples) -> std::vector<KaiInstance>;

    /// A random valid instance with the given number of triples.
    auto random_kai_instance(std::mt19937_64 &, unsigned k, unsigned n, unsigned triples) -> KaiInstance;

    struct CrossCase
    {
        KaiInstance instance;
        std::optional<KaiWinner> kai;
        std::optional<Winner> colored, plain;
        std::size_t spoiler_vertices = 0, duplicator_vertices = 0;
        std::uint64_t configurations = 0;
        double seconds = 0;

        /// Non-empty when the case was not decided, e.g. a budget ran out.
        std::string skipped;

        auto agrees() const -> bool;
    };

    struct CrossOptions
    {
        std::uint64_t budget = default_config_budget;
        std::optional<Orientation> decolor;
        unsigned jobs = 1;
    };

    struct CrossSummary
    {
        std::vector<CrossCase> cases;

        auto agreements() const -> std::size_t;
        auto disagreements() const -> std::size_t;
        auto skipped() const -> std::size_t;
    };

    /// Player 1 winning must coincide with Spoiler winning, on the colored pair and, when asked, on
    /// the decolored one. Results are in input order whatever the number of jobs.
    auto crossvalidate(const std::vector<KaiInstance> &, const CrossOptions & = {}) -> CrossSummary;
}

#endif

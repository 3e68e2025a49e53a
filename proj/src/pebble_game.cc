/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pebble/pebble_game.hh>
#include <pebble/legality.hh>

#include "game_engine.hh"

#include <algorithm>

using std::optional;
using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace pebble
{
    auto to_string(Winner w) -> string
    {
        return w == Winner::Spoiler ? "Spoiler" : "Duplicator";
    }

    auto solve_game(const Structure & a, const Structure & b, size_t k, const SolveOptions & options) -> SolveResult
    {
        if (k < 1)
            throw PreconditionError("the existential game needs at least one pebble");

        SolveResult result;
        if (options.homomorphism_shortcut) {
            if (auto h = find_homomorphism(a, b)) {
                result.winner = Winner::Duplicator;
                result.decided_by_homomorphism = true;
                if (options.witness)
                    result.witness = closure({ *h }, k);
                return result;
            }
        }

        GameEngine engine(a, b, k, {}, options.budget);
        result.configurations = engine.configurations();
        result.winner = engine.alive(PartialHom{}) ? Winner::Duplicator : Winner::Spoiler;
        if (options.witness) {
            StrategyFamily w;
            if (result.winner == Winner::Duplicator)
                engine.for_each_alive([&] (const PartialHom & h) { w.members.push_back(h); });
            w.normalise();
            result.witness = std::move(w);
        }
        return result;
    }

    struct ReachabilityOracle::Impl
    {
        vector<PartialHom> targets;
        size_t capacity;
        GameEngine engine;

        Impl(const Structure & a, const Structure & b, size_t k, const vector<PartialHom> & t, uint64_t budget) :
            targets(t),
            capacity(k),
            engine(a, b, k, t, budget)
        {
        }
    };

    ReachabilityOracle::ReachabilityOracle(const Structure & a, const Structure & b, size_t k,
            const vector<PartialHom> & targets, uint64_t budget) :
        _imp(std::make_unique<Impl>(a, b, k, targets, budget))
    {
    }

    ReachabilityOracle::~ReachabilityOracle() = default;

    auto ReachabilityOracle::reaches(const PartialHom & start) const -> bool
    {
        if (start.size() > _imp->capacity)
            throw PreconditionError("start configuration " + start.to_string() + " uses more than "
                    + std::to_string(_imp->capacity) + " pebbles");
        return ! _imp->engine.alive(start);
    }

    auto ReachabilityOracle::configurations() const -> uint64_t
    {
        return _imp->engine.configurations();
    }

    auto spoiler_reach(const Structure & a, const Structure & b, size_t k, const PartialHom & start,
            const vector<PartialHom> & targets, uint64_t budget) -> bool
    {
        return ReachabilityOracle(a, b, k, targets, budget).reaches(start);
    }

    auto verify_strategy(const Structure & a, const Structure & b, size_t k, const StrategyFamily & input,
            size_t max_reported) -> StrategyReport
    {
        StrategyReport report;

        const StrategyFamily * family = &input;
        StrategyFamily sorted;
        bool canonical = input.critical.size() == input.members.size();
        for (size_t i = 1 ; canonical && i < input.members.size() ; ++i)
            if (! canonical_less(input.members[i - 1], input.members[i]))
                canonical = false;
        if (! canonical) {
            sorted = input;
            sorted.normalise();
            family = &sorted;
        }
        auto & members = family->members;
        auto & critical = family->critical;

        bool winning = ! members.empty(), crit_ok = ! members.empty();
        auto add = [&] (const PartialHom & h, optional<Element> z, const string & kind, bool exempt) {
            ++report.violation_count;
            if (report.violations.size() < max_reported)
                report.violations.push_back(Violation{ h, z, kind, exempt });
        };
        if (members.empty())
            add(PartialHom{}, std::nullopt, "empty family", false);

        LegalityChecker checker(a, b);
        size_t words = (a.size() + 63) / 64;
        size_t prefix = 0;
        while (prefix < members.size() && members[prefix].size() + 1 <= k)
            ++prefix;
        vector<uint64_t> extended(prefix * words, 0);

        for (size_t i = 0 ; i < members.size() ; ++i) {
            auto & h = members[i];
            bool in_range = true;
            for (auto & p : h)
                if (p.from >= a.size() || p.to >= b.size())
                    in_range = false;
            if (! in_range || ! checker.legal(h)) {
                add(h, std::nullopt, "illegal", false);
                winning = crit_ok = false;
                continue;
            }
            if (h.size() > k) {
                add(h, std::nullopt, "oversized", false);
                winning = crit_ok = false;
            }
            if (critical[i] && h.size() + 1 != k) {
                add(h, std::nullopt, "critical member of wrong size", false);
                crit_ok = false;
            }
            for (auto & p : h) {
                auto g = h.without(p.from);
                auto j = family->find(g);
                if (! j) {
                    add(h, p.from, "not closed", false);
                    winning = crit_ok = false;
                }
                else if (*j < prefix)
                    extended[*j * words + p.from / 64] |= uint64_t(1) << (p.from % 64);
            }
        }

        for (size_t i = 0 ; i < prefix ; ++i) {
            auto & h = members[i];
            for (auto & p : h)
                extended[i * words + p.from / 64] |= uint64_t(1) << (p.from % 64);
            for (Element z = 0 ; z < a.size() ; ++z)
                if (! (extended[i * words + z / 64] >> (z % 64) & 1)) {
                    add(h, z, "no extension", critical[i]);
                    winning = false;
                    if (! critical[i])
                        crit_ok = false;
                }
        }

        report.is_winning = winning;
        report.is_critical = crit_ok;
        return report;
    }
}

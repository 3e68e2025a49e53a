/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PEBBLE_GUARD_GADGET_STRATEGIES_HH
#define PEBBLE_GUARD_GADGET_STRATEGIES_HH 1

#include <pebble/gadgets.hh>
#include <pebble/kai.hh>
#include <pebble/strategy.hh>

#include <optional>
#include <string>
#include <vector>

namespace pebble
{
    /// Positions p are maps [k] -> [n] (1-based values, not necessarily injective), and T is a bit
    /// mask over pebbles; (p,T) is overwrite(p, T). Every family is closed at size k+1, carries the
    /// boundary function restricted to the gadget's boundary rows, and has the gadget's Spoiler
    /// vertices as scope.

    auto permutations(unsigned k) -> std::vector<std::vector<unsigned> >;

    /// cl(generators) at size k+1 with boundary and scope filled in from the gadget.
    auto gadget_family(const Gadget &, const std::vector<PartialHom> & generators) -> StrategyFamily;

    // switch
    auto switch_h_out(const Gadget &, const KaiPosition & p, const std::vector<unsigned> & sigma) -> PartialHom;

    /// Total homomorphism with x on 0 and (p,T) on y. Sends a^1 to a^1_0, a^j to a^j_{1,j} for j > 1
    /// and every b^i to b^i_{0,1}.
    auto switch_h_out_invalid(const Gadget &, const KaiPosition & p, unsigned T) -> PartialHom;

    auto switch_h_in(const Gadget &, const KaiPosition & p, const std::vector<unsigned> & sigma) -> PartialHom;
    auto switch_h_in(const Gadget &, const KaiPosition & p, const std::vector<unsigned> & sigma, unsigned l) -> PartialHom;
    auto switch_out_crit(const Gadget &, const KaiPosition & p, const std::vector<unsigned> & sigma) -> PartialHom;
    auto switch_restart_crit(const Gadget &, const KaiPosition & p, const std::vector<unsigned> & sigma,
            unsigned j, unsigned t) -> PartialHom;

    auto switch_out(const Gadget &, const KaiPosition & p, unsigned T) -> StrategyFamily;
    auto switch_restart(const Gadget &, const KaiPosition & p, unsigned T) -> StrategyFamily;
    auto switch_in(const Gadget &, const KaiPosition & p) -> StrategyFamily;
    auto switch_out_crit_set(const Gadget &, const KaiPosition & p) -> std::vector<PartialHom>;
    auto switch_restart_crit_set(const Gadget &, const KaiPosition & p, unsigned t) -> std::vector<PartialHom>;

    // rule gadgets: cl of the boundary map, which is total on RS and RD
    auto rule_boundary(const Gadget &, const KaiPosition & p, unsigned T) -> PartialHom;
    auto rule_strategy(const Gadget &, const KaiPosition & p, unsigned T) -> StrategyFamily;

    // choice gadget
    auto choice_hom(const Gadget &, unsigned l, const KaiPosition & p, unsigned T) -> PartialHom;
    auto choice_strategy(const Gadget &, unsigned l, const KaiPosition & p, unsigned T) -> StrategyFamily;

    // initialisation gadget; side 1 or 2 names the switch M1 or M2
    auto init_switch_family(const Gadget & init, unsigned side, const StrategyFamily & on_switch, const Gadget & sw) -> StrategyFamily;
    auto init_top(const Gadget &, unsigned side, unsigned R) -> StrategyFamily;
    auto init_bottom(const Gadget &, const KaiPosition & p, unsigned T) -> StrategyFamily;
    auto init_bottom_out(const Gadget &, unsigned side) -> StrategyFamily;
    auto init_in(const Gadget &, unsigned side, unsigned R, const KaiPosition & p, unsigned T) -> StrategyFamily;
    auto init_at(const Gadget &, const KaiPosition & p, unsigned T) -> UnionResult;
    auto init_out(const Gadget &, unsigned side) -> StrategyFamily;
    auto init_winning(const Gadget &) -> UnionResult;

    /// A local family moved into the glued pair.
    auto place(const StrategyFamily &, const Placement &) -> StrategyFamily;

    struct StrategyParams
    {
        std::optional<KaiPosition> p;
        unsigned T = 0;
        unsigned l = 1;
        unsigned side = 1;
        unsigned R = 0;
    };

    /// Dispatch by name: out, restart, in, rule, choice, init-top, init-bottom, init-bottom-out,
    /// init-in, init-at, init-out, init.
    auto build_gadget_strategy(const Gadget &, const std::string & kind, const StrategyParams &) -> StrategyFamily;

    struct GlobalStrategy
    {
        StrategyFamily family;

        /// Critical members of some part that no part holds non-critically.
        std::vector<PartialHom> uncovered;

        std::size_t parts = 0;
    };

    /// Duplicator's strategy on the glued pair simulating a Player 2 winning strategy.
    auto build_global_strategy(const ReductionOutput &, const KaiStrategy &) -> GlobalStrategy;
}

#endif

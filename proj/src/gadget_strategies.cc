/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pebble/gadget_strategies.hh>
#include <pebble/errors.hh>

#include <algorithm>
#include <map>
#include <numeric>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace pebble
{
    using std::to_string;

    namespace
    {
        using Sigma = vector<unsigned>;

        /// Name-based construction of maps on one gadget.
        struct Names
        {
            const GamePair & pair;

            auto set(PartialHom & h, const string & s, const string & d) const -> void
            {
                h.set(pair.spoiler_vertex(s), pair.duplicator_vertex(d));
            }
        };

        auto N(unsigned i) -> string
        {
            return to_string(i);
        }

        auto NN(unsigned a, unsigned b) -> string
        {
            return to_string(a) + "," + to_string(b);
        }

        auto check_position(const Gadget & g, const KaiPosition & p) -> void
        {
            if (p.size() != g.k)
                throw PreconditionError("position " + to_string(p) + " does not have " + to_string(g.k) + " entries");
            for (auto x : p)
                if (x < 1 || x > g.n)
                    throw PreconditionError("position " + to_string(p) + " leaves 1.." + to_string(g.n));
        }

        auto check_kind(const Gadget & g, const string & kind) -> void
        {
            if (g.kind != kind)
                throw PreconditionError("expected a " + kind + " gadget, got " + g.kind);
        }

        auto in(unsigned T, unsigned i) -> bool
        {
            return T >> (i - 1) & 1;
        }

        /// The gadget's boundary part of h.
        auto boundary_part(const Gadget & g, const PartialHom & h) -> PartialHom
        {
            auto bd = g.boundary();
            return h.restricted_to([&] (Element e) { return std::binary_search(bd.begin(), bd.end(), e); });
        }

        auto all_spoiler(const Gadget & g) -> vector<Element>
        {
            vector<Element> result(g.pair.spoiler.size());
            std::iota(result.begin(), result.end(), 0);
            return result;
        }

        auto mark_critical(StrategyFamily & f, const vector<PartialHom> & crit) -> void
        {
            for (auto & c : crit) {
                auto i = f.find(c);
                if (! i)
                    throw PreconditionError("critical position " + c.to_string() + " is not a member");
                f.critical[*i] = 1;
            }
        }
    }

    auto permutations(unsigned k) -> vector<vector<unsigned> >
    {
        vector<unsigned> sigma(k);
        std::iota(sigma.begin(), sigma.end(), 1);
        vector<vector<unsigned> > result;
        do
            result.push_back(sigma);
        while (std::next_permutation(sigma.begin(), sigma.end()));
        return result;
    }

    auto gadget_family(const Gadget & g, const vector<PartialHom> & generators) -> StrategyFamily
    {
        auto result = closure(generators, g.k + 1);
        PartialHom beta;
        for (auto & h : generators)
            beta = join(beta, boundary_part(g, h));
        result.boundary = beta;
        result.scope = all_spoiler(g);
        return result;
    }

    auto switch_h_out(const Gadget & g, const KaiPosition & p, const Sigma & sigma) -> PartialHom
    {
        check_kind(g, "switch");
        check_position(g, p);
        Names n{ g.pair };
        PartialHom h;
        for (unsigned i = 1 ; i <= g.k ; ++i) {
            n.set(h, "x" + N(i), "x" + N(i) + "_0");
            n.set(h, "a" + N(i), "a" + N(i) + "_" + NN(p[i - 1], sigma[i - 1]));
            n.set(h, "b" + N(i), "b" + N(i) + "_" + N(p[i - 1]));
            n.set(h, "y" + N(i), "y" + N(i) + "_" + N(p[i - 1]));
        }
        return h;
    }

    auto switch_h_out_invalid(const Gadget & g, const KaiPosition & p, unsigned T) -> PartialHom
    {
        check_kind(g, "switch");
        check_position(g, p);
        auto e = overwrite(p, T);
        Names n{ g.pair };
        PartialHom h;
        for (unsigned i = 1 ; i <= g.k ; ++i) {
            n.set(h, "x" + N(i), "x" + N(i) + "_0");
            n.set(h, "a" + N(i), "a" + N(i) + "_" + (i == 1 ? string("0") : NN(1, i)));
            n.set(h, "b" + N(i), "b" + N(i) + "_" + NN(0, 1));
            n.set(h, "y" + N(i), "y" + N(i) + "_" + N(e[i - 1]));
        }
        return h;
    }

    auto switch_h_in(const Gadget & g, const KaiPosition & p, const Sigma & sigma) -> PartialHom
    {
        check_kind(g, "switch");
        check_position(g, p);
        Names n{ g.pair };
        PartialHom h;
        for (unsigned i = 1 ; i <= g.k ; ++i) {
            n.set(h, "x" + N(i), "x" + N(i) + "_" + N(p[i - 1]));
            n.set(h, "a" + N(i), "a" + N(i) + "_" + NN(p[i - 1], sigma[i - 1]));
            n.set(h, "y" + N(i), "y" + N(i) + "_0");
        }
        return h;
    }

    auto switch_h_in(const Gadget & g, const KaiPosition & p, const Sigma & sigma, unsigned l) -> PartialHom
    {
        check_kind(g, "switch");
        check_position(g, p);
        Names n{ g.pair };
        PartialHom h;
        for (unsigned i = 1 ; i <= g.k ; ++i) {
            n.set(h, "x" + N(i), "x" + N(i) + "_" + N(p[i - 1]));
            if (sigma[i - 1] != l)
                n.set(h, "a" + N(i), "a" + N(i) + "_" + NN(p[i - 1], sigma[i - 1]));
            n.set(h, "b" + N(i), "b" + N(i) + "_" + NN(0, l));
            n.set(h, "y" + N(i), "y" + N(i) + "_0");
        }
        return h;
    }

    auto switch_out_crit(const Gadget & g, const KaiPosition & p, const Sigma & sigma) -> PartialHom
    {
        check_kind(g, "switch");
        check_position(g, p);
        Names n{ g.pair };
        PartialHom h;
        for (unsigned i = 1 ; i <= g.k ; ++i)
            n.set(h, "a" + N(i), "a" + N(i) + "_" + NN(p[i - 1], sigma[i - 1]));
        return h;
    }

    auto switch_restart_crit(const Gadget & g, const KaiPosition & p, const Sigma & sigma, unsigned j, unsigned t) -> PartialHom
    {
        check_kind(g, "switch");
        check_position(g, p);
        Names n{ g.pair };
        PartialHom h;
        for (unsigned i = 1 ; i <= g.k ; ++i)
            if (i != t)
                n.set(h, "a" + N(i), "a" + N(i) + "_" + NN(p[i - 1], sigma[i - 1]));
        n.set(h, "b" + N(j), "b" + N(j) + "_" + NN(0, sigma[t - 1]));
        return h;
    }

    auto switch_out(const Gadget & g, const KaiPosition & p, unsigned T) -> StrategyFamily
    {
        vector<PartialHom> generators{ switch_h_out_invalid(g, p, T) };
        if (T == 0)
            for (auto & sigma : permutations(g.k))
                generators.push_back(switch_h_out(g, p, sigma));
        return gadget_family(g, generators);
    }

    auto switch_restart(const Gadget & g, const KaiPosition & p, unsigned T) -> StrategyFamily
    {
        check_kind(g, "switch");
        check_position(g, p);
        if (T == 0)
            throw PreconditionError("restart strategies need a nonempty T");
        auto e = overwrite(p, T);
        Names n{ g.pair };
        PartialHom pinned;
        for (unsigned i = 1 ; i <= g.k ; ++i) {
            n.set(pinned, "x" + N(i), "x" + N(i) + "_" + N(e[i - 1]));
            n.set(pinned, "y" + N(i), "y" + N(i) + "_0");
        }
        vector<PartialHom> generators;
        all_homomorphisms(g.pair.spoiler, g.pair.duplicator, pinned, [&] (const PartialHom & h) { generators.push_back(h); });
        auto result = gadget_family(g, generators);
        result.boundary = pinned;
        return result;
    }

    auto switch_out_crit_set(const Gadget & g, const KaiPosition & p) -> vector<PartialHom>
    {
        vector<PartialHom> result;
        for (auto & sigma : permutations(g.k))
            result.push_back(switch_out_crit(g, p, sigma));
        return result;
    }

    auto switch_restart_crit_set(const Gadget & g, const KaiPosition & p, unsigned t) -> vector<PartialHom>
    {
        vector<PartialHom> result;
        for (auto & sigma : permutations(g.k))
            for (unsigned j = 1 ; j <= g.k ; ++j)
                result.push_back(switch_restart_crit(g, p, sigma, j, t));
        std::sort(result.begin(), result.end());
        result.erase(std::unique(result.begin(), result.end()), result.end());
        return result;
    }

    auto switch_in(const Gadget & g, const KaiPosition & p) -> StrategyFamily
    {
        vector<PartialHom> generators;
        for (auto & sigma : permutations(g.k)) {
            generators.push_back(switch_h_in(g, p, sigma));
            for (unsigned l = 1 ; l <= g.k ; ++l)
                generators.push_back(switch_h_in(g, p, sigma, l));
        }
        auto result = gadget_family(g, generators);
        mark_critical(result, switch_out_crit_set(g, p));
        for (unsigned t = 1 ; t <= g.k ; ++t)
            mark_critical(result, switch_restart_crit_set(g, p, t));
        return result;
    }

    auto rule_boundary(const Gadget & g, const KaiPosition & p, unsigned T) -> PartialHom
    {
        if (g.kind != "RS" && g.kind != "RD")
            throw PreconditionError("expected a rule gadget, got " + g.kind);
        check_position(g, p);
        auto & r = *g.rule;
        unsigned out_mask = T;
        if (g.kind == "RS")
            for (auto i : blocking_set(r, p))
                out_mask |= 1u << (i - 1);
        auto x = overwrite(p, T), y = overwrite(apply_formally(r, p), out_mask);
        Names n{ g.pair };
        PartialHom h;
        for (unsigned i = 1 ; i <= g.k ; ++i) {
            n.set(h, "x" + N(i), "x" + N(i) + "_" + N(x[i - 1]));
            n.set(h, "y" + N(i), "y" + N(i) + "_" + N(y[i - 1]));
        }
        return h;
    }

    auto rule_strategy(const Gadget & g, const KaiPosition & p, unsigned T) -> StrategyFamily
    {
        return gadget_family(g, { rule_boundary(g, p, T) });
    }

    auto choice_hom(const Gadget & g, unsigned l, const KaiPosition & p, unsigned T) -> PartialHom
    {
        check_kind(g, "choice");
        check_position(g, p);
        if (l < 1 || l > g.m)
            throw PreconditionError("choice output " + to_string(l) + " outside 1.." + to_string(g.m));
        auto e = overwrite(p, T);
        Names n{ g.pair };
        PartialHom h;
        for (unsigned i = 1 ; i <= g.k ; ++i) {
            n.set(h, "x" + N(i), "x" + N(i) + "_" + N(e[i - 1]));
            n.set(h, "a" + N(i), "a" + N(i) + "_" + (in(T, i) ? string("0") : NN(p[i - 1], l)));
            for (unsigned q = 1 ; q <= g.m ; ++q) {
                auto y = "y" + N(q) + "." + N(i);
                n.set(h, y, y + "_" + (q == l ? N(e[i - 1]) : string("0")));
            }
        }
        return h;
    }

    auto choice_strategy(const Gadget & g, unsigned l, const KaiPosition & p, unsigned T) -> StrategyFamily
    {
        return gadget_family(g, { choice_hom(g, l, p, T) });
    }

    namespace
    {
        auto init_start(const Gadget & g) -> const KaiPosition &
        {
            check_kind(g, "init");
            return *g.start;
        }

        auto check_side(unsigned side) -> void
        {
            if (side != 1 && side != 2)
                throw PreconditionError("the initialisation gadget has switches 1 and 2, not " + to_string(side));
        }

        /// Name of a switch vertex inside the initialisation gadget.
        auto switch_rename(unsigned side, const string & v) -> string
        {
            if (v[0] == 'x')
                return (side == 1 ? "a" : "b") + v.substr(1);
            if (v[0] == 'y')
                return (side == 1 ? "c" : "d") + v.substr(1);
            return "M" + N(side) + "/" + v;
        }

        auto x_row_boundary(const Gadget & g, StrategyFamily & f) -> void
        {
            if (f.boundary)
                f.boundary = boundary_part(g, *f.boundary);
        }

        auto switch_copy(const Gadget & g) -> Gadget
        {
            return build_switch(g.k, g.n);
        }
    }

    auto init_switch_family(const Gadget & init, unsigned side, const StrategyFamily & f, const Gadget & sw) -> StrategyFamily
    {
        check_side(side);
        vector<Element> spoiler(sw.pair.spoiler.size()), duplicator(sw.pair.duplicator.size());
        for (Element v = 0 ; v < spoiler.size() ; ++v)
            spoiler[v] = init.pair.spoiler_vertex(switch_rename(side, sw.pair.spoiler_names[v]));
        for (Element u = 0 ; u < duplicator.size() ; ++u) {
            auto & d = sw.pair.duplicator_names[u];
            duplicator[u] = init.pair.duplicator_vertex(switch_rename(side, block_of(d)) + "_" + suffix_of(d));
        }
        auto map = [&] (const PartialHom & h) {
            PartialHom result;
            for (auto & p : h)
                result.set(spoiler[p.from], duplicator[p.to]);
            return result;
        };

        StrategyFamily result;
        for (size_t i = 0 ; i < f.members.size() ; ++i) {
            result.members.push_back(map(f.members[i]));
            result.critical.push_back(f.critical[i]);
        }
        if (f.boundary)
            result.boundary = map(*f.boundary);
        for (auto v : f.scope)
            result.scope.push_back(spoiler[v]);
        std::sort(result.scope.begin(), result.scope.end());
        result.normalise();
        return result;
    }

    auto init_top(const Gadget & g, unsigned side, unsigned R) -> StrategyFamily
    {
        auto & s = init_start(g);
        check_side(side);
        auto sr = overwrite(s, R);
        Names n{ g.pair };
        PartialHom h;
        n.set(h, "y", side == 1 ? "y_1" : "y_2");
        for (unsigned i = 1 ; i <= g.k ; ++i) {
            auto exact = N(s[i - 1]), restarted = N(sr[i - 1]);
            n.set(h, "a" + N(i), "a" + N(i) + "_" + (side == 1 ? exact : restarted));
            n.set(h, "b" + N(i), "b" + N(i) + "_" + (side == 1 ? restarted : exact));
        }
        auto result = closure({ h }, g.k + 1);
        result.boundary = h;
        result.scope = { };
        for (auto & p : h)
            result.scope.push_back(p.from);
        std::sort(result.scope.begin(), result.scope.end());
        return result;
    }

    namespace
    {
        auto bottom(const Gadget & g, const Encoded & c, const Encoded & d, const Encoded & x) -> StrategyFamily
        {
            Names n{ g.pair };
            PartialHom h;
            for (unsigned i = 1 ; i <= g.k ; ++i) {
                n.set(h, "c" + N(i), "c" + N(i) + "_" + N(c[i - 1]));
                n.set(h, "d" + N(i), "d" + N(i) + "_" + N(d[i - 1]));
                n.set(h, "x" + N(i), "x" + N(i) + "_" + N(x[i - 1]));
            }
            auto result = closure({ h }, g.k + 1);
            result.boundary = h;
            for (auto & p : h)
                result.scope.push_back(p.from);
            std::sort(result.scope.begin(), result.scope.end());
            return result;
        }
    }

    auto init_bottom(const Gadget & g, const KaiPosition & p, unsigned T) -> StrategyFamily
    {
        init_start(g);
        check_position(g, p);
        return bottom(g, zero_position(g.k), zero_position(g.k), overwrite(p, T));
    }

    auto init_bottom_out(const Gadget & g, unsigned side) -> StrategyFamily
    {
        auto & s = init_start(g);
        check_side(side);
        return side == 1 ? bottom(g, s, zero_position(g.k), s) : bottom(g, zero_position(g.k), s, s);
    }

    auto init_in(const Gadget & g, unsigned side, unsigned R, const KaiPosition & p, unsigned T) -> StrategyFamily
    {
        auto & s = init_start(g);
        check_side(side);
        auto sw = switch_copy(g);
        auto in = init_switch_family(g, side, switch_in(sw, s), sw);
        auto restart = init_switch_family(g, 3 - side, switch_restart(sw, s, R), sw);
        auto top = init_top(g, side, R);
        auto bot = init_bottom(g, p, T);
        auto result = compose_all({ &top, &in, &restart, &bot }, g.k + 1);
        x_row_boundary(g, result);
        return result;
    }

    auto init_at(const Gadget & g, const KaiPosition & p, unsigned T) -> UnionResult
    {
        vector<StrategyFamily> parts;
        for (unsigned t = 1 ; t <= g.k ; ++t)
            for (unsigned side = 1 ; side <= 2 ; ++side)
                parts.push_back(init_in(g, side, 1u << (t - 1), p, T));
        return union_critical(parts);
    }

    auto init_out(const Gadget & g, unsigned side) -> StrategyFamily
    {
        auto & s = init_start(g);
        check_side(side);
        auto sw = switch_copy(g);
        auto out = init_switch_family(g, side, switch_out(sw, s, 0), sw);
        auto in = init_switch_family(g, 3 - side, switch_in(sw, s), sw);
        auto top = init_top(g, 3 - side, full_mask(g.k));
        auto bot = init_bottom_out(g, side);
        auto result = compose_all({ &top, &out, &in, &bot }, g.k + 1);
        x_row_boundary(g, result);
        return result;
    }

    auto init_winning(const Gadget & g) -> UnionResult
    {
        auto & s = init_start(g);
        auto at = init_at(g, s, 0).family;
        vector<StrategyFamily> parts{ init_out(g, 1), init_out(g, 2), std::move(at) };
        return union_critical(parts);
    }

    auto place(const StrategyFamily & f, const Placement & p) -> StrategyFamily
    {
        auto map = [&] (const PartialHom & h) {
            PartialHom result;
            for (auto & q : h)
                result.set(p.spoiler_map[q.from], p.duplicator_map[q.to]);
            return result;
        };
        StrategyFamily result;
        result.members.reserve(f.members.size());
        for (size_t i = 0 ; i < f.members.size() ; ++i) {
            result.members.push_back(map(f.members[i]));
            result.critical.push_back(f.critical[i]);
        }
        if (f.boundary)
            result.boundary = map(*f.boundary);
        for (auto v : f.scope)
            result.scope.push_back(p.spoiler_map[v]);
        std::sort(result.scope.begin(), result.scope.end());
        result.normalise();
        return result;
    }

    auto build_gadget_strategy(const Gadget & g, const string & kind, const StrategyParams & params) -> StrategyFamily
    {
        auto need_p = [&] () -> const KaiPosition & {
            if (! params.p)
                throw PreconditionError("strategy kind '" + kind + "' needs a position");
            return *params.p;
        };
        if (kind == "out")
            return switch_out(g, need_p(), params.T);
        if (kind == "restart")
            return switch_restart(g, need_p(), params.T);
        if (kind == "in")
            return switch_in(g, need_p());
        if (kind == "rule")
            return rule_strategy(g, need_p(), params.T);
        if (kind == "choice")
            return choice_strategy(g, params.l, need_p(), params.T);
        if (kind == "init-top")
            return init_top(g, params.side, params.R);
        if (kind == "init-bottom")
            return init_bottom(g, need_p(), params.T);
        if (kind == "init-bottom-out")
            return init_bottom_out(g, params.side);
        if (kind == "init-in")
            return init_in(g, params.side, params.R, need_p(), params.T);
        if (kind == "init-at")
            return init_at(g, need_p(), params.T).family;
        if (kind == "init-out")
            return init_out(g, params.side);
        if (kind == "init")
            return init_winning(g).family;
        throw PreconditionError("unknown strategy kind '" + kind + "'");
    }

    namespace
    {
        class GlobalBuilder
        {
            private:
                const ReductionOutput & _red;
                unsigned _k, _m;
                std::map<string, StrategyFamily> _cache;

                auto gadget(const string & id) const -> const Gadget &
                {
                    return _red.gadgets.at(_red.placement(id).gadget);
                }

                template <typename F_>
                auto cached(const string & key, const string & id, F_ && make) -> const StrategyFamily *
                {
                    auto it = _cache.find(key);
                    if (it == _cache.end())
                        it = _cache.emplace(key, place(make(gadget(id)), _red.placement(id))).first;
                    return &it->second;
                }

                static auto key(const string & what, const KaiPosition & p, unsigned T) -> string
                {
                    return what + "|" + to_string(p) + "|" + to_string(T);
                }

            public:
                GlobalBuilder(const ReductionOutput & red) :
                    _red(red),
                    _k(red.instance.k),
                    _m(red.instance.rules.size())
                {
                }

                auto zero() const -> KaiPosition
                {
                    return KaiPosition(_k, 1);
                }

                auto init_at(const KaiPosition & p, unsigned T) -> const StrategyFamily *
                {
                    return cached(key("init-at", p, T), "INIT", [&] (const Gadget & g) { return pebble::init_at(g, p, T).family; });
                }

                auto init_winning() -> const StrategyFamily *
                {
                    return cached("init", "INIT", [&] (const Gadget & g) { return pebble::init_winning(g).family; });
                }

                auto choice(unsigned l, const KaiPosition & p, unsigned T) -> const StrategyFamily *
                {
                    return cached(key("C" + N(l), p, T), "C", [&] (const Gadget & g) { return choice_strategy(g, l, p, T); });
                }

                auto rule(const string & id, const KaiPosition & p, unsigned T) -> const StrategyFamily *
                {
                    return cached(key(id, p, T), id, [&] (const Gadget & g) { return rule_strategy(g, p, T); });
                }

                auto out(const string & id, const KaiPosition & p, unsigned T) -> const StrategyFamily *
                {
                    return cached(key(id + "out", p, T), id, [&] (const Gadget & g) { return switch_out(g, p, T); });
                }

                auto restart(const string & id, const KaiPosition & p, unsigned T) -> const StrategyFamily *
                {
                    return cached(key(id + "restart", p, T), id, [&] (const Gadget & g) { return switch_restart(g, p, T); });
                }

                auto in(const string & id, const KaiPosition & p) -> const StrategyFamily *
                {
                    return cached(key(id + "in", p, 0), id, [&] (const Gadget & g) { return switch_in(g, p); });
                }

                auto compose(const vector<const StrategyFamily *> & parts) const -> StrategyFamily
                {
                    return compose_all(parts, _k + 1);
                }

                auto rules() const -> const vector<KaiRule> &
                {
                    return _red.instance.rules;
                }

                auto m() const -> unsigned
                {
                    return _m;
                }

                auto k() const -> unsigned
                {
                    return _k;
                }
        };

        auto L(size_t l) -> string
        {
            return N(l + 1);
        }
    }

    auto build_global_strategy(const ReductionOutput & red, const KaiStrategy & strategy) -> GlobalStrategy
    {
        auto problems = check_kai_strategy(red.instance, strategy);
        if (! problems.empty())
            throw PreconditionError("not a Player 2 winning strategy: " + problems.front());

        GlobalBuilder b(red);
        unsigned k = b.k(), m = b.m(), all = full_mask(k);
        auto zero = b.zero();
        auto & s = red.instance.start;
        auto & rules = b.rules();

        auto t_r = [&] (const KaiRule & r, const KaiPosition & p) {
            unsigned mask = 0;
            for (auto i : blocking_set(r, p))
                mask |= 1u << (i - 1);
            return mask;
        };

        // Player 1 to move at p (the "S" strategies); S^init is the case p = s with I^init on INIT
        auto player1 = [&] (const KaiPosition & p, bool at_start) {
            vector<const StrategyFamily *> parts{ at_start ? b.init_winning() : b.init_at(p, 0) };
            if (m > 0)
                parts.push_back(b.choice(1, zero, all));
            for (size_t l = 0 ; l < m ; ++l) {
                parts.push_back(b.rule("RS" + L(l), p, 0));
                auto tr = t_r(rules[l], p);
                auto next = apply_formally(rules[l], p);
                parts.push_back(tr == 0 ? b.in("MS" + L(l), next) : b.restart("MS" + L(l), next, tr));
                parts.push_back(b.rule("RD" + L(l), zero, all));
                parts.push_back(b.out("MD" + L(l), p, 0));
            }
            return b.compose(parts);
        };

        auto player1_restart = [&] (const KaiPosition & p, unsigned T) {
            vector<const StrategyFamily *> parts{ b.init_at(p, T) };
            if (m > 0)
                parts.push_back(b.choice(1, zero, all));
            for (size_t l = 0 ; l < m ; ++l) {
                parts.push_back(b.rule("RS" + L(l), p, T));
                parts.push_back(b.restart("MS" + L(l), apply_formally(rules[l], p), T | t_r(rules[l], p)));
                parts.push_back(b.rule("RD" + L(l), zero, all));
                parts.push_back(b.out("MD" + L(l), p, T));
            }
            return b.compose(parts);
        };

        auto player2 = [&] (const KaiPosition & p, unsigned T) {
            size_t kappa = strategy.kappa.at(p);
            vector<const StrategyFamily *> parts{ b.init_at(zero, all), b.choice(kappa + 1, p, T) };
            for (size_t l = 0 ; l < m ; ++l) {
                parts.push_back(b.rule("RS" + L(l), zero, all));
                parts.push_back(b.out("MS" + L(l), p, T));
                if (l != kappa) {
                    parts.push_back(b.rule("RD" + L(l), zero, all));
                    parts.push_back(b.restart("MD" + L(l), zero, all));
                }
            }
            parts.push_back(b.rule("RD" + L(kappa), p, T));
            auto next = apply_formally(rules[kappa], p);
            parts.push_back(T == 0 ? b.in("MD" + L(kappa), next) : b.restart("MD" + L(kappa), next, T));
            return b.compose(parts);
        };

        vector<StrategyFamily> parts;
        parts.push_back(player1(s, true));
        for (auto & p : strategy.k1) {
            parts.push_back(player1(p, false));
            for (unsigned T = 1 ; T <= all ; ++T)
                parts.push_back(player1_restart(p, T));
        }
        for (auto & p : strategy.k2) {
            parts.push_back(player2(p, 0));
            for (unsigned T = 1 ; T <= all ; ++T)
                parts.push_back(player2(p, T));
        }

        GlobalStrategy result;
        result.parts = parts.size();
        auto u = union_critical(parts);
        result.family = std::move(u.family);
        result.uncovered = std::move(u.uncovered);
        return result;
    }
}

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pebble/gadget_strategies.hh>
#include <pebble/lemmas.hh>
#include <pebble/pebble_game.hh>

#include "oracles.hh"

#include <doctest.h>

#include <map>

using namespace pebble;
using std::string;
using std::vector;

namespace
{
    auto kai(unsigned k, unsigned n, vector<std::array<unsigned, 3> > triples, KaiPosition start, unsigned goal) -> KaiInstance
    {
        KaiInstance inst;
        inst.k = k;
        inst.nodes = n;
        inst.rules = expand_rule_triples(triples, k);
        inst.start = std::move(start);
        inst.goal = goal;
        return inst;
    }

    auto summarise(const LemmaReport & r) -> string
    {
        std::map<string, std::pair<int, int> > counts;
        for (auto & c : r.checks) {
            auto & [all, bad] = counts[c.gadget + " " + c.clause];
            ++all;
            if (! c.passed)
                ++bad;
        }
        string s;
        for (auto & [name, c] : counts)
            s += name + ": " + std::to_string(c.second) + "/" + std::to_string(c.first) + " failed\n";
        return s;
    }

    /// The local gadget's vertices in a glued pair, via the names PairBuilder::add handed back.
    auto placement_from(const GamePair & glued, const std::pair<vector<string>, vector<string> > & names) -> Placement
    {
        Placement p;
        for (auto & n : names.first)
            p.spoiler_map.push_back(glued.spoiler_vertex(n));
        for (auto & n : names.second)
            p.duplicator_map.push_back(glued.duplicator_vertex(n));
        return p;
    }
}

TEST_CASE("closure examples")
{
    PartialHom h{ { 0, 1 }, { 1, 0 } };
    auto c = closure({ h });
    CHECK(c.size() == 4);
    CHECK(c.contains(PartialHom{}));
    CHECK(c.contains(PartialHom{ { 1, 0 } }));
    CHECK(closure({ }).empty());

    PartialHom g{ { 0, 1 }, { 2, 2 }, { 3, 0 } };
    auto once = closure({ h, g });
    CHECK(closure(once.members).members == once.members);
    CHECK(closure({ g }, 2).size() == 7);
}

TEST_CASE("compose examples")
{
    auto a = oracle::undirected(4, { { 0, 1 }, { 2, 3 } });
    auto b = oracle::clique(2);
    PartialHom g{ { 0, 0 }, { 1, 1 } }, h{ { 1, 1 }, { 2, 0 }, { 3, 1 } };

    auto G = closure({ g }), H = closure({ h });
    G.boundary = PartialHom{ { 1, 1 } };
    H.boundary = PartialHom{ { 1, 1 } };
    auto composed = compose(G, H);
    auto expected = closure({ join(g, h) });
    CHECK(composed.members == expected.members);
    CHECK(verify_strategy(a, b, 3, compose(G, H, 3)).is_winning);

    H.boundary = PartialHom{ { 1, 0 } };
    CHECK_THROWS_AS(compose(G, H), PreconditionError);

    // a union is critical exactly when it is a critical member of one side
    StrategyFamily one = closure({ PartialHom{ { 0, 0 } } }), two = closure({ PartialHom{ { 2, 0 } } });
    one.critical[*one.find(PartialHom{ { 0, 0 } })] = 1;
    auto c = compose(one, two);
    CHECK(c.is_critical(PartialHom{ { 0, 0 } }));
    CHECK(! c.is_critical(PartialHom{ { 0, 0 }, { 2, 0 } }));
    CHECK(! c.is_critical(PartialHom{ { 2, 0 } }));
}

TEST_CASE("union_critical examples")
{
    auto a = oracle::cycle(4), b = oracle::clique(2);
    auto h = find_homomorphism(a, b);
    REQUIRE(h);
    auto w = closure({ *h }, 2);
    auto twice = union_critical(vector<StrategyFamily>{ w, w });
    CHECK(twice.uncovered.empty());
    CHECK(verify_strategy(a, b, 2, twice.family).is_winning);

    auto crit = w;
    PartialHom pos{ { 0, 0 } };
    crit.critical[*crit.find(pos)] = 1;
    auto alone = union_critical(vector<StrategyFamily>{ crit });
    CHECK(alone.uncovered == vector<PartialHom>{ pos });
    CHECK(alone.family.is_critical(pos));

    auto covered = union_critical(vector<StrategyFamily>{ crit, w });
    CHECK(covered.uncovered.empty());
    CHECK(! covered.family.is_critical(pos));
    CHECK(verify_strategy(a, b, 2, covered.family).is_winning);
}

TEST_CASE("switch families on the smallest switch")
{
    auto g = build_switch(2, 2);
    auto x = row("x", 2), y = row("y", 2);
    for (auto & p : all_positions(2, 2)) {
        auto out = build_gadget_strategy(g, "out", StrategyParams{ .p = p });
        auto expected = join(position_on(g.pair, x, zero_position(2)), position_on(g.pair, y, p));
        REQUIRE(out.boundary);
        CHECK(*out.boundary == expected);
        CHECK(! boundary_violation(out));
        CHECK(verify_strategy(g.pair.spoiler, g.pair.duplicator, 3, out).is_winning);

        auto in = build_gadget_strategy(g, "in", StrategyParams{ .p = p });
        auto report = verify_strategy(g.pair.spoiler, g.pair.duplicator, 3, in);
        CHECK(report.is_critical);
        CHECK(! report.is_winning);
        for (unsigned t = 1 ; t <= 2 ; ++t) {
            auto restart = switch_restart(g, p, 1u << (t - 1));
            for (auto & c : switch_restart_crit_set(g, p, t))
                CHECK(restart.contains(c));
        }
        for (auto & sigma : permutations(2)) {
            CHECK(switch_out_crit(g, p, sigma).subset_of(switch_h_out(g, p, sigma)));
            CHECK(switch_out_crit(g, p, sigma) != switch_h_out(g, p, sigma));
            for (unsigned j = 1 ; j <= 2 ; ++j)
                for (unsigned t = 1 ; t <= 2 ; ++t)
                    CHECK(switch_restart_crit(g, p, sigma, j, t).subset_of(switch_h_in(g, p, sigma, sigma[t - 1])));
        }
    }
}

TEST_CASE("choice families are the closure of one total homomorphism")
{
    auto g = build_choice(2, 3, 2);
    for (unsigned l = 1 ; l <= 2 ; ++l)
        for (unsigned T = 0 ; T <= full_mask(2) ; ++T) {
            KaiPosition p{ 2, 3 };
            auto h = choice_hom(g, l, p, T);
            CHECK(h.size() == g.pair.spoiler.size());
            auto f = choice_strategy(g, l, p, T);
            CHECK(f.members == closure({ h }, 3).members);
            CHECK(verify_strategy(g.pair.spoiler, g.pair.duplicator, 3, f).is_winning);
        }
}

TEST_CASE("the choice gadget as drawn has no total homomorphism once a pebble is invalid")
{
    auto g = build_choice(2, 3, 2, ChoiceEdges::Literal);
    CHECK(is_partial_hom(g.pair.spoiler, g.pair.duplicator, choice_hom(g, 1, { 1, 2 }, 0)));
    auto h = choice_hom(g, 1, { 1, 2 }, 1);
    CHECK(! is_partial_hom(g.pair.spoiler, g.pair.duplicator, h));
    LemmaOptions o;
    o.choice = ChoiceEdges::Literal;
    LemmaReport r;
    verify_choice_lemma(o, r);
    CHECK(r.failures() > 0);
}

TEST_CASE("composition lemma: input strategy on a switch after a rule gadget")
{
    unsigned k = 2, n = 3;
    auto rules = expand_rule_triples({ { 1, 3, 2 } }, k);
    auto r = rules.front();
    KaiPosition before{ 1, 3 };
    REQUIRE(applicable(r, before));
    auto after = apply_rule(r, before);

    auto [rs, rd] = build_rule_gadgets(r, k, n);
    auto sw = build_switch(k, n);
    PairBuilder builder;
    auto rs_names = builder.add(rs.pair, [] (const string & s) {
            if (s[0] == 'x') return "X" + s.substr(1);
            if (s[0] == 'y') return "Z" + s.substr(1);
            return "R/" + s; });
    auto sw_names = builder.add(sw.pair, [] (const string & s) {
            if (s[0] == 'x') return "Z" + s.substr(1);
            if (s[0] == 'y') return "W" + s.substr(1);
            return "M/" + s; });
    auto glued = builder.finish();

    auto f = place(rule_strategy(rs, before, 0), placement_from(glued, rs_names));
    auto h = place(switch_in(sw, after), placement_from(glued, sw_names));
    auto both = compose(f, h, k + 1);
    auto report = verify_strategy(glued.spoiler, glued.duplicator, k + 1, both);
    CHECK(report.is_critical);
    CHECK(both.critical_count() == h.critical_count());

    // the same switch entered from a different position does not connect
    auto other = place(switch_in(sw, KaiPosition{ 3, 1 }), placement_from(glued, sw_names));
    CHECK_THROWS_AS(compose(f, other, k + 1), PreconditionError);
}

TEST_CASE("gadget lemmas at k = 2")
{
    for (unsigned n : { 2u, 3u })
        for (unsigned m : { 1u, 2u }) {
            LemmaOptions o;
            o.k = 2;
            o.n = n;
            o.m = m;
            LemmaReport r;
            verify_rule_lemmas(o, r);
            verify_switch_lemma(o, r);
            verify_choice_lemma(o, r);
            CAPTURE(summarise(r));
            CHECK(r.passed());
        }

    LemmaOptions o;
    o.k = 2;
    o.n = 2;
    LemmaReport r;
    verify_init_lemma(o, r);
    CAPTURE(summarise(r));
    CHECK(r.passed());
}

TEST_CASE("strategy dispatch rejects unknown kinds and bad parameters")
{
    auto g = build_switch(2, 2);
    CHECK_THROWS_AS(build_gadget_strategy(g, "sideways", StrategyParams{ .p = KaiPosition{ 1, 1 } }), PreconditionError);
    CHECK_THROWS_AS(build_gadget_strategy(g, "out", StrategyParams{ }), PreconditionError);
    CHECK_THROWS_AS(build_gadget_strategy(g, "out", StrategyParams{ .p = KaiPosition{ 1, 5 } }), PreconditionError);
}

TEST_CASE("global strategy on a Player 2 instance")
{
    auto inst = kai(2, 3, { { 1, 3, 2 }, { 2, 3, 1 } }, { 1, 2 }, 3);
    auto sol = solve_kai(inst);
    REQUIRE(sol.winner == KaiWinner::Player2);
    REQUIRE(sol.strategy);
    auto red = assemble_reduction(inst);
    auto global = build_global_strategy(red, *sol.strategy);
    CHECK(global.uncovered.empty());
    CHECK(! boundary_violation(global.family));
    CHECK(verify_strategy(red.colored.spoiler, red.colored.duplicator, red.pebbles(), global.family, 5).is_winning);

    auto broken = *sol.strategy;
    broken.k1.clear();
    broken.k2.clear();
    CHECK_THROWS_AS(build_global_strategy(red, broken), PreconditionError);
}

TEST_CASE("Player 1 instances are settled by the game solver instead")
{
    auto inst = kai(2, 3, { { 1, 2, 3 } }, { 1, 2 }, 3);
    REQUIRE(solve_kai(inst).winner == KaiWinner::Player1);
    auto red = assemble_reduction(inst);
    CHECK(solve_game(red.colored.spoiler, red.colored.duplicator, red.pebbles()).winner == Winner::Spoiler);
}

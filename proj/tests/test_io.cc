/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pebble/gadgets.hh>
#include <pebble/io.hh>
#include <pebble/pebble_game.hh>

#include "oracles.hh"

#include <doctest.h>

#include <random>
#include <regex>

using namespace pebble;
using std::string;

namespace
{
    auto count(const string & text, const std::regex & re) -> std::size_t
    {
        return std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator());
    }
}

TEST_CASE("structure round trip")
{
    std::mt19937_64 rng(5);
    for (int round = 0 ; round < 50 ; ++round) {
        auto s = oracle::random_graph(rng, round % 6, 0.4, round % 2, round % 3 == 0);
        if (round % 4 == 0) {
            std::vector<int> colors(s.size());
            for (auto & c : colors)
                c = rng() % 3;
            s.set_colors(colors);
        }
        auto text = to_json(s).dump();
        CHECK(structure_from_json(parse_json(text)) == s);
    }

    auto j = parse_json(R"({"universe": 2, "relations": {"E": {"arity": 2, "tuples": [[0, 1]]}}})");
    auto s = structure_from_json(j);
    CHECK(s.has_edge(0, 1));
    CHECK(! s.colored());
}

TEST_CASE("structure input errors")
{
    CHECK_THROWS_AS(structure_from_json(parse_json(R"({"relations": {}})")), InputError);
    CHECK_THROWS_AS(structure_from_json(parse_json(R"({"universe": 2, "relations": {"E": {"arity": 2, "tuples": [[0, 5]]}}})")), InputError);
    CHECK_THROWS_AS(structure_from_json(parse_json(R"({"universe": "two"})")), InputError);
    CHECK_THROWS_AS(parse_json("{ not json"), InputError);
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("KAI instance round trip and both rule forms")
{
    auto triples = kai_from_json(parse_json(R"({"k": 2, "nodes": 4, "rule_triples": [[1, 2, 3]], "start": [1, 2], "goal": 4})"));
    CHECK(triples.rules.size() == 2);
    CHECK(triples.rules[0] == KaiRule{ 1, 2, 3, 1, 2 });
    auto again = kai_from_json(to_json(triples));
    CHECK(again.rules == triples.rules);
    CHECK(again.start == triples.start);
    CHECK(again.goal == 4);
    CHECK(again.k == 2);
    CHECK(again.nodes == 4);

    auto rules = kai_from_json(parse_json(R"({"k": 2, "nodes": 4, "rules": [[1, 2, 3, 1, 2]], "start": [1, 2], "goal": 4})"));
    CHECK(rules.rules == std::vector<KaiRule>{ KaiRule{ 1, 2, 3, 1, 2 } });

    CHECK_THROWS_AS(kai_from_json(parse_json(R"({"k": 2, "nodes": 4, "start": [1, 2], "goal": 4})")), InputError);
    CHECK_THROWS_AS(kai_from_json(parse_json(R"({"k": 2, "nodes": 4, "rules": [], "rule_triples": [], "start": [1, 2], "goal": 4})")), InputError);
    CHECK_THROWS_AS(kai_from_json(parse_json(R"({"k": 2, "nodes": 4, "rules": [[1, 2, 3]], "start": [1, 2], "goal": 4})")), InputError);
    CHECK_THROWS_AS(kai_from_json(parse_json(R"({"k": 2, "nodes": 4, "rule_triples": [[1, 1, 3]], "start": [1, 2], "goal": 4})")), InputError);
}

TEST_CASE("family round trip")
{
    StrategyFamily f = closure({ PartialHom{ { 0, 1 }, { 2, 3 } }, PartialHom{ { 1, 1 } } });
    f.critical[*f.find(PartialHom{ { 2, 3 } })] = 1;
    f.boundary = PartialHom{ { 0, 1 } };
    f.scope = { 0, 1, 2 };
    auto back = family_from_json(parse_json(to_json(f).dump()));
    CHECK(back.members == f.members);
    CHECK(back.critical == f.critical);
    CHECK(back.boundary == f.boundary);
    CHECK(back.scope == f.scope);

    CHECK_THROWS_AS(family_from_json(parse_json(R"({"members": [{"map": [[0, 1], [0, 2]]}]})")), InputError);
}

TEST_CASE("game pair round trip")
{
    auto g = build_switch(2, 2);
    auto back = game_pair_from_json(parse_json(to_json(g.pair).dump()));
    CHECK(back == g.pair);
    CHECK(back.duplicator_vertex("x1_0") == g.pair.duplicator_vertex("x1_0"));
    CHECK(back.block("x1") == g.pair.block("x1"));
}

TEST_CASE("DOT export")
{
    auto empty = export_dot(Structure(0));
    CHECK(empty == "graph \"structure\" {\n}\n");

    auto g = build_switch(2, 2);
    auto d = export_dot(g.pair, Side::Duplicator);
    CHECK(count(d, std::regex("subgraph \"cluster_")) == 8);
    CHECK(count(d, std::regex("^        \"[^\"]+\";$", std::regex::multiline)) == 30);
    CHECK(d.rfind("graph \"duplicator\"", 0) == 0);
    CHECK(d == export_dot(build_switch(2, 2).pair, Side::Duplicator));

    Structure arrow(2);
    arrow.add_edge(0, 1);
    arrow.normalise();
    CHECK(export_dot(arrow).rfind("digraph", 0) == 0);
    CHECK_THROWS_AS(side_from_string("referee"), InputError);
    CHECK(side_from_string("spoiler") == Side::Spoiler);
}

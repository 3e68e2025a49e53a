/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pebble/consistency.hh>
#include <pebble/pebble_game.hh>

#include "oracles.hh"

#include <doctest.h>

using namespace pebble;

namespace
{
    auto edge() -> Structure
    {
        return oracle::undirected(2, { { 0, 1 } });
    }

    auto loop_and_isolated() -> Structure
    {
        Structure s(2);
        s.add_relation("E", 2);
        s.add_edge(0, 0);
        s.normalise();
        return s;
    }

    // Add every legal map of size k whose restrictions all lie in the family.
    auto reclose(const Structure & a, const Structure & b, std::size_t k, const StrategyFamily & f) -> StrategyFamily
    {
        StrategyFamily result = f;
        for (auto & h : enumerate_partial_homs(a, b, k))
            if (h.size() == k) {
                bool inside = true;
                for (auto & p : h)
                    if (! f.contains(h.without(p.from)))
                        inside = false;
                if (inside)
                    result.members.push_back(h);
            }
        result.normalise();
        return result;
    }
}

TEST_CASE("is_strongly_k_consistent examples")
{
    Structure loop(1);
    loop.add_relation("E", 2);
    loop.add_edge(0, 0);
    CHECK(is_strongly_k_consistent(edge(), loop, 2));

    Structure isolated(2);
    isolated.add_relation("E", 2);
    CHECK(! is_strongly_k_consistent(edge(), isolated, 2));

    // k = 1 asks for a singleton image of every element, which always exists without unary relations
    CHECK(is_strongly_k_consistent(oracle::clique(3), isolated, 1));
    Structure self(1);
    self.add_relation("E", 2);
    self.add_edge(0, 0);
    CHECK(! is_strongly_k_consistent(self, isolated, 1));
    CHECK(is_strongly_k_consistent(self, loop, 1));
}

TEST_CASE("establish examples")
{
    CHECK(! establish_strong_k_consistency(oracle::clique(3), oracle::cycle(5), 3).establishable);
    CHECK(establish_strong_k_consistency(oracle::clique(3), oracle::cycle(5), 2).establishable);

    // a total homomorphism makes establishment succeed for every k
    for (std::size_t k = 1 ; k <= 4 ; ++k) {
        CHECK(establish_strong_k_consistency(oracle::cycle(6), edge(), k).establishable);
        CHECK(establish_strong_k_consistency(oracle::cycle(5), oracle::clique(3), k).establishable);
    }
}

TEST_CASE("degenerate universes")
{
    Structure empty(0);
    empty.add_relation("E", 2);
    auto r = establish_strong_k_consistency(empty, edge(), 2);
    CHECK(r.establishable);
    CHECK(r.established_family.size() == 1);
    CHECK(establish_strong_k_consistency(empty, empty, 3).establishable);
    CHECK(! establish_strong_k_consistency(edge(), empty, 1).establishable);
    CHECK(! establish_strong_k_consistency(edge(), empty, 3).establishable);
    CHECK_THROWS_AS(establish_strong_k_consistency(edge(), edge(), 0), PreconditionError);
}

TEST_CASE("scope relations group by exact domain")
{
    auto r = establish_strong_k_consistency(edge(), edge(), 3);
    auto rel = scope_relations(r.established_family);
    REQUIRE(rel.size() == 4);
    CHECK(rel[0].scope.empty());
    CHECK(rel[0].allowed == std::vector<Tuple>{ Tuple{} });
    CHECK(rel[1].scope == std::vector<Element>{ 0 });
    CHECK(rel[3].scope == std::vector<Element>{ 0, 1 });
    CHECK(rel[3].allowed == std::vector<Tuple>{ { 0, 1 }, { 1, 0 } });
}

TEST_CASE("checking differs from establishing")
{
    // {0 -> 1} is a partial homomorphism into the isolated vertex that cannot be extended, yet the
    // constant map onto the loop is a homomorphism
    CHECK(! is_strongly_k_consistent(edge(), loop_and_isolated(), 2));
    CHECK(establish_strong_k_consistency(edge(), loop_and_isolated(), 2).establishable);

    // the path 0 - 1 - 2 into a triangle with a pendant vertex, k = 3
    auto path = oracle::undirected(3, { { 0, 1 }, { 1, 2 } });
    auto pendant = oracle::undirected(4, { { 0, 1 }, { 1, 2 }, { 0, 2 }, { 2, 3 } });
    CHECK(! is_strongly_k_consistent(path, pendant, 3));
    CHECK(establish_strong_k_consistency(path, pendant, 3).establishable);
}

TEST_CASE("random sweep: establishing agrees with the game, family properties hold")
{
    std::mt19937_64 rng(7);
    int differ = 0, establishable = 0;
    for (int round = 0 ; round < 300 ; ++round) {
        std::size_t na = 1 + round % 4, nb = 1 + (round / 4) % 4, k = 2 + round % 2;
        auto a = oracle::random_graph(rng, na, 0.5, true, round % 3 == 0);
        auto b = oracle::random_graph(rng, nb, 0.5, true, round % 5 == 0);

        auto r = establish_strong_k_consistency(a, b, k);
        bool duplicator = solve_game(a, b, k).winner == Winner::Duplicator;
        CHECK(r.establishable == duplicator);
        CHECK(r.establishable == ! oracle::spoiler_wins(a, b, k));
        bool consistent = is_strongly_k_consistent(a, b, k);
        if (consistent)
            CHECK(r.establishable);
        if (consistent != r.establishable)
            ++differ;

        if (r.establishable) {
            ++establishable;
            auto full = reclose(a, b, k, r.established_family);
            CHECK(verify_strategy(a, b, k, full).is_winning);
            CHECK(is_strongly_k_consistent(a, b, k, scope_relations(r.established_family)));
        }
        else
            CHECK(r.established_family.empty());
    }
    CHECK(differ > 0);
    CHECK(establishable > 50);
}

TEST_CASE("budget guard")
{
    auto big = oracle::clique(30);
    CHECK_THROWS_AS(establish_strong_k_consistency(big, big, 5, 1000), ResourceError);
    CHECK_THROWS_AS(is_strongly_k_consistent(big, big, 5, {}, 1000), ResourceError);
}

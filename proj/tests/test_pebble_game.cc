/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pebble/pebble_game.hh>

#include "oracles.hh"

#include <doctest.h>

#include <random>

using namespace pebble;

TEST_CASE("solve_game examples")
{
    for (std::size_t k = 1 ; k <= 4 ; ++k) {
        // K_k into K_5 minus one edge still contains a k-clique for k <= 4
        auto b = oracle::clique(5);
        Structure host(5);
        for (auto & t : b.relations().at("E").tuples)
            if (! ((t[0] == 3 && t[1] == 4) || (t[0] == 4 && t[1] == 3)))
                host.add_tuple("E", t);
        host.normalise();
        CHECK(solve_game(oracle::clique(k), host, k).winner == Winner::Duplicator);
    }

    CHECK(solve_game(oracle::clique(3), oracle::cycle(5), 3).winner == Winner::Spoiler);
    CHECK(solve_game(oracle::clique(3), oracle::cycle(5), 2).winner == Winner::Duplicator);

    // C_6 maps onto an edge
    for (std::size_t k = 1 ; k <= 4 ; ++k)
        CHECK(solve_game(oracle::cycle(6), oracle::clique(2), k).winner == Winner::Duplicator);
}

TEST_CASE("homomorphism shortcut")
{
    auto r = solve_game(oracle::cycle(6), oracle::clique(2), 3, SolveOptions{ .homomorphism_shortcut = true });
    CHECK(r.winner == Winner::Duplicator);
    CHECK(r.decided_by_homomorphism);
    auto s = solve_game(oracle::clique(3), oracle::cycle(5), 3, SolveOptions{ .homomorphism_shortcut = true });
    CHECK(s.winner == Winner::Spoiler);
    CHECK(! s.decided_by_homomorphism);
}

TEST_CASE("empty structures")
{
    Structure empty(0), one(1);
    CHECK(solve_game(empty, one, 2).winner == Winner::Duplicator);
    CHECK(solve_game(empty, empty, 2).winner == Winner::Duplicator);
    CHECK(solve_game(one, empty, 1).winner == Winner::Spoiler);
}

TEST_CASE("budget guard")
{
    CHECK_THROWS_AS(solve_game(oracle::clique(8), oracle::clique(8), 4, SolveOptions{ .budget = 1000 }), ResourceError);
}

TEST_CASE("fixpoint agrees with explicit game search on random digraphs")
{
    std::mt19937_64 rng(2024);
    for (int round = 0 ; round < 300 ; ++round) {
        auto a = oracle::random_graph(rng, 1 + round % 4, 0.45, true, round % 5 == 0);
        auto b = oracle::random_graph(rng, 1 + (round / 4) % 4, 0.5, true, round % 7 == 0);
        for (std::size_t k = 1 ; k <= 3 ; ++k) {
            bool spoiler = solve_game(a, b, k).winner == Winner::Spoiler;
            CHECK(spoiler == oracle::spoiler_wins(a, b, k));
        }
    }
}

TEST_CASE("witness passes the verifier, and Spoiler wins leave no winning subfamily")
{
    std::mt19937_64 rng(99);
    int spoiler_cases = 0;
    for (int round = 0 ; round < 150 ; ++round) {
        std::size_t na = 1 + round % 3, nb = 1 + (round / 3) % 3;
        if (na * nb > 9)
            continue;
        auto a = oracle::random_graph(rng, na, 0.6, true);
        auto b = oracle::random_graph(rng, nb, 0.4, true);
        auto r = solve_game(a, b, 2, SolveOptions{ .witness = true });
        if (r.winner == Winner::Duplicator) {
            REQUIRE(r.witness);
            CHECK(verify_strategy(a, b, 2, *r.witness).is_winning);
        }
        else {
            ++spoiler_cases;
            // every nonempty subset of the legal maps fails; the greatest candidate is the union of
            // all winning families, so it is enough that no subset of the legal maps is winning,
            // which we check exhaustively when small
            auto all = enumerate_partial_homs(a, b, 2);
            if (all.size() <= 16) {
                for (unsigned mask = 1 ; mask < (1u << all.size()) ; ++mask) {
                    StrategyFamily f;
                    for (unsigned i = 0 ; i < all.size() ; ++i)
                        if (mask >> i & 1)
                            f.members.push_back(all[i]);
                    f.normalise();
                    CHECK(! verify_strategy(a, b, 2, f).is_winning);
                }
            }
        }
    }
    CHECK(spoiler_cases > 0);
}

TEST_CASE("more pebbles never help Duplicator")
{
    std::mt19937_64 rng(5);
    for (int round = 0 ; round < 200 ; ++round) {
        auto a = oracle::random_graph(rng, 2 + round % 4, 0.5);
        auto b = oracle::random_graph(rng, 2 + round % 3, 0.5);
        for (std::size_t k = 1 ; k <= 3 ; ++k)
            if (solve_game(a, b, k).winner == Winner::Spoiler)
                CHECK(solve_game(a, b, k + 1).winner == Winner::Spoiler);
    }
}

TEST_CASE("a total homomorphism means Duplicator wins with any number of pebbles")
{
    std::mt19937_64 rng(17);
    for (int round = 0 ; round < 200 ; ++round) {
        auto a = oracle::random_graph(rng, 1 + round % 5, 0.4);
        auto b = oracle::random_graph(rng, 1 + round % 4, 0.6, false, round % 4 == 0);
        if (! oracle::has_homomorphism(a, b))
            continue;
        for (std::size_t k = 1 ; k <= a.size() ; ++k)
            CHECK(solve_game(a, b, k).winner == Winner::Duplicator);
    }
}

TEST_CASE("spoiler_reach basics")
{
    auto a = oracle::clique(3), b = oracle::cycle(5);
    PartialHom start{ { 0, 0 } };
    CHECK(spoiler_reach(a, b, 3, start, { start }));
    CHECK(spoiler_reach(a, b, 3, {}, {}));
    CHECK(! spoiler_reach(a, b, 2, {}, {}));

    // illegal start means the game is already over
    CHECK(spoiler_reach(a, b, 3, { { 0, 0 }, { 1, 0 } }, {}));
    CHECK_THROWS_AS(spoiler_reach(a, b, 1, { { 0, 0 }, { 1, 1 } }, {}), PreconditionError);
}

TEST_CASE("spoiler_reach on a path: Spoiler walks two pebbles along the edges")
{
    // A is a directed path 0 -> 1 -> 2, B has two directed paths 0 -> 1 -> 2 and 3 -> 4 -> 5
    Structure a(3), b(6);
    a.add_edge(0, 1);
    a.add_edge(1, 2);
    b.add_edge(0, 1);
    b.add_edge(1, 2);
    b.add_edge(3, 4);
    b.add_edge(4, 5);
    a.normalise();
    b.normalise();
    CHECK(spoiler_reach(a, b, 2, { { 0, 0 } }, { { { 2, 2 } } }));
    CHECK(! spoiler_reach(a, b, 2, { { 0, 0 } }, { { { 2, 5 } } }));
    CHECK(! spoiler_reach(a, b, 2, {}, { { { 2, 2 } } }));
}

TEST_CASE("spoiler_reach is transitive")
{
    std::mt19937_64 rng(3);
    int checked = 0;
    for (int round = 0 ; round < 60 ; ++round) {
        auto a = oracle::random_graph(rng, 3, 0.5, true);
        auto b = oracle::random_graph(rng, 3, 0.6, true, true);
        auto homs = enumerate_partial_homs(a, b, 1);
        for (auto & p : homs)
            for (auto & q : homs)
                for (auto & r : homs)
                    if (spoiler_reach(a, b, 2, p, { q }) && spoiler_reach(a, b, 2, q, { r })) {
                        CHECK(spoiler_reach(a, b, 2, p, { r }));
                        ++checked;
                    }
    }
    CHECK(checked > 0);
}

TEST_CASE("verify_strategy examples")
{
    auto a = oracle::cycle(4), b = oracle::clique(2);
    auto h = find_homomorphism(a, b);
    REQUIRE(h);
    for (std::size_t k = 1 ; k <= 4 ; ++k)
        CHECK(verify_strategy(a, b, k, closure({ *h }, k)).is_winning);

    CHECK(! verify_strategy(a, b, 2, StrategyFamily{}).is_winning);

    StrategyFamily partial;
    partial.members = { PartialHom{}, PartialHom{ { 0, 0 } } };
    partial.normalise();
    auto report = verify_strategy(a, b, 2, partial);
    CHECK(! report.is_winning);
    bool saw = false;
    for (auto & v : report.violations)
        if (v.kind == "no extension" && v.member.empty() && v.element == 1u)
            saw = true;
    CHECK(saw);
}

TEST_CASE("critical members are exempt from extension but must have k-1 pairs")
{
    // A = edge 0-1, B = edge 0-1 plus isolated 2; k = 2
    auto a = oracle::undirected(2, { { 0, 1 } });
    auto b = oracle::undirected(3, { { 0, 1 } });
    StrategyFamily f;
    f.members = { PartialHom{}, PartialHom{ { 0, 0 } }, PartialHom{ { 1, 1 } }, PartialHom{ { 0, 0 }, { 1, 1 } }, PartialHom{ { 0, 2 } } };
    f.critical = { 0, 0, 0, 0, 1 };
    f.normalise();
    auto r = verify_strategy(a, b, 2, f);
    CHECK(! r.is_winning);
    CHECK(r.is_critical);

    f.critical.assign(f.members.size(), 0);
    f.critical[f.find(PartialHom{ { 0, 0 }, { 1, 1 } }).value()] = 1;
    f.critical[f.find(PartialHom{ { 0, 2 } }).value()] = 1;
    CHECK(! verify_strategy(a, b, 2, f).is_critical);
}

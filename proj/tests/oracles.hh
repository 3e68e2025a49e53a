/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PEBBLE_GUARD_TESTS_ORACLES_HH
#define PEBBLE_GUARD_TESTS_ORACLES_HH 1

// Deliberately naive reference implementations. They share no code with the library beyond the
// Structure container.

#include <pebble/structure.hh>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle
{
    using pebble::Element;
    using pebble::Structure;
    using Map = std::map<Element, Element>;

    inline auto undirected(std::size_t n, const std::vector<std::pair<Element, Element> > & edges) -> Structure
    {
        Structure s(n);
        s.add_relation("E", 2);
        for (auto [u, v] : edges) {
            s.add_edge(u, v);
            s.add_edge(v, u);
        }
        s.normalise();
        return s;
    }

    inline auto clique(std::size_t n) -> Structure
    {
        std::vector<std::pair<Element, Element> > edges;
        for (Element i = 0 ; i < n ; ++i)
            for (Element j = i + 1 ; j < n ; ++j)
                edges.emplace_back(i, j);
        return undirected(n, edges);
    }

    inline auto cycle(std::size_t n) -> Structure
    {
        std::vector<std::pair<Element, Element> > edges;
        for (Element i = 0 ; i < n ; ++i)
            edges.emplace_back(i, (i + 1) % n);
        return undirected(n, edges);
    }

    /// Every tuple of a inside the domain must land in b, and colors must match when both are colored.
    inline auto legal(const Structure & a, const Structure & b, const Map & h) -> bool
    {
        if (a.colored() && b.colored())
            for (auto [x, y] : h)
                if ((*a.colors())[x] != (*b.colors())[y])
                    return false;
        for (auto & [name, r] : a.relations()) {
            auto target = b.relations().find(name);
            for (auto & t : r.tuples) {
                std::vector<Element> image;
                for (auto e : t) {
                    auto it = h.find(e);
                    if (it == h.end())
                        break;
                    image.push_back(it->second);
                }
                if (image.size() != t.size())
                    continue;
                if (target == b.relations().end())
                    return false;
                auto & tt = target->second.tuples;
                if (std::find(tt.begin(), tt.end(), image) == tt.end())
                    return false;
            }
        }
        return true;
    }

    /// Explicit alternating reachability: the least set of configurations from which Spoiler wins,
    /// grown until stable. Spoiler keeps any subset of at most k-1 pebbles and places one more.
    inline auto spoiler_wins(const Structure & a, const Structure & b, std::size_t k) -> bool
    {
        std::vector<Map> configs;
        std::function<void (Map &, Element)> grow = [&] (Map & m, Element next) {
            configs.push_back(m);
            if (m.size() == k)
                return;
            for (Element x = next ; x < a.size() ; ++x)
                for (Element y = 0 ; y < b.size() ; ++y) {
                    m[x] = y;
                    if (legal(a, b, m))
                        grow(m, x + 1);
                    m.erase(x);
                }
        };
        Map empty;
        grow(empty, 0);

        std::set<Map> won;
        auto lost_for_duplicator = [&] (const Map & c) {
            return ! legal(a, b, c) || won.count(c);
        };

        bool changed = true;
        while (changed) {
            changed = false;
            for (auto & c : configs) {
                if (won.count(c))
                    continue;
                std::vector<std::pair<Element, Element> > pairs(c.begin(), c.end());
                bool spoiler_has_move = false;
                for (unsigned mask = 0 ; mask < (1u << pairs.size()) && ! spoiler_has_move ; ++mask) {
                    Map kept;
                    for (unsigned i = 0 ; i < pairs.size() ; ++i)
                        if (mask >> i & 1)
                            kept.insert(pairs[i]);
                    if (kept.size() + 1 > k)
                        continue;
                    for (Element z = 0 ; z < a.size() && ! spoiler_has_move ; ++z) {
                        if (kept.count(z))
                            continue;
                        bool all_lose = true;
                        for (Element y = 0 ; y < b.size() && all_lose ; ++y) {
                            Map next = kept;
                            next[z] = y;
                            if (! lost_for_duplicator(next))
                                all_lose = false;
                        }
                        if (all_lose)
                            spoiler_has_move = true;
                    }
                }
                if (spoiler_has_move) {
                    won.insert(c);
                    changed = true;
                }
            }
        }
        return won.count(Map{}) > 0;
    }

    inline auto has_clique(const Structure & g, std::size_t k) -> bool
    {
        std::size_t n = g.size();
        auto adjacent = [&] (Element u, Element v) { return g.has_edge(u, v); };
        std::vector<Element> chosen;
        std::function<bool (Element)> search = [&] (Element next) {
            if (chosen.size() == k)
                return true;
            for (Element v = next ; v < n ; ++v) {
                bool ok = true;
                for (auto u : chosen)
                    if (! adjacent(u, v))
                        ok = false;
                if (ok) {
                    chosen.push_back(v);
                    if (search(v + 1))
                        return true;
                    chosen.pop_back();
                }
            }
            return false;
        };
        return search(0);
    }

    /// Try every total map.
    inline auto has_homomorphism(const Structure & a, const Structure & b) -> bool
    {
        Map m;
        std::function<bool (Element)> search = [&] (Element x) {
            if (x == a.size())
                return true;
            for (Element y = 0 ; y < b.size() ; ++y) {
                m[x] = y;
                if (legal(a, b, m) && search(x + 1))
                    return true;
                m.erase(x);
            }
            return false;
        };
        return search(0);
    }

    inline auto random_graph(std::mt19937_64 & rng, std::size_t n, double p, bool directed = false, bool loops = false) -> Structure
    {
        std::bernoulli_distribution coin(p);
        Structure s(n);
        s.add_relation("E", 2);
        for (Element u = 0 ; u < n ; ++u)
            for (Element v = directed ? 0 : u ; v < n ; ++v) {
                if (u == v && ! loops)
                    continue;
                if (coin(rng)) {
                    s.add_edge(u, v);
                    if (! directed)
                        s.add_edge(v, u);
                }
            }
        s.normalise();
        return s;
    }

    /// All labelled simple undirected graphs on n vertices.
    inline auto all_graphs(std::size_t n) -> std::vector<Structure>
    {
        std::vector<std::pair<Element, Element> > slots;
        for (Element i = 0 ; i < n ; ++i)
            for (Element j = i + 1 ; j < n ; ++j)
                slots.emplace_back(i, j);
        std::vector<Structure> result;
        for (unsigned mask = 0 ; mask < (1u << slots.size()) ; ++mask) {
            std::vector<std::pair<Element, Element> > edges;
            for (unsigned i = 0 ; i < slots.size() ; ++i)
                if (mask >> i & 1)
                    edges.push_back(slots[i]);
            result.push_back(undirected(n, edges));
        }
        return result;
    }
}

#endif

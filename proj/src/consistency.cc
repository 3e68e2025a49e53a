/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pebble/consistency.hh>

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

using std::size_t;
using std::uint64_t;
using std::vector;

namespace pebble
{
    auto scope_relations(const StrategyFamily & family) -> vector<ScopeRelation>
    {
        std::map<std::pair<size_t, vector<Element> >, vector<Tuple> > grouped;
        for (auto & h : family.members) {
            Tuple image;
            for (auto & p : h)
                image.push_back(p.to);
            grouped[{ h.size(), h.domain() }].push_back(std::move(image));
        }
        vector<ScopeRelation> result;
        for (auto & [key, allowed] : grouped) {
            std::sort(allowed.begin(), allowed.end());
            result.push_back(ScopeRelation{ key.second, std::move(allowed) });
        }
        return result;
    }

    namespace
    {
        struct Constraints
        {
            std::map<vector<Element>, std::set<Tuple> > by_scope;

            explicit Constraints(const vector<ScopeRelation> & relations)
            {
                for (auto & r : relations)
                    by_scope[r.scope].insert(r.allowed.begin(), r.allowed.end());
            }

            auto allows(const PartialHom & h) const -> bool
            {
                if (by_scope.empty())
                    return true;
                // every sub-map, by subset mask over the domain
                size_t n = h.size();
                if (n > 20)
                    throw PreconditionError("constraint check on a map with more than 20 pairs");
                for (uint64_t mask = 0 ; mask < (uint64_t(1) << n) ; ++mask) {
                    vector<Element> scope;
                    Tuple image;
                    for (size_t i = 0 ; i < n ; ++i)
                        if (mask >> i & 1) {
                            scope.push_back(h[i].from);
                            image.push_back(h[i].to);
                        }
                    auto it = by_scope.find(scope);
                    if (it != by_scope.end() && ! it->second.count(image))
                        return false;
                }
                return true;
            }
        };
    }

    auto is_strongly_k_consistent(const Structure & a, const Structure & b, size_t k,
            const vector<ScopeRelation> & constraints, uint64_t budget) -> bool
    {
        if (k == 0)
            return true;
        Constraints c(constraints);
        auto ok = [&] (const PartialHom & h) { return is_partial_hom(a, b, h) && c.allows(h); };

        for (auto & h : enumerate_partial_homs(a, b, k - 1, budget)) {
            if (! c.allows(h))
                continue;
            for (Element x = 0 ; x < a.size() ; ++x) {
                if (h.defined_on(x))
                    continue;
                bool found = false;
                for (Element y = 0 ; y < b.size() && ! found ; ++y)
                    found = ok(h.with(x, y));
                if (! found)
                    return false;
            }
        }
        return true;
    }

    auto establish_strong_k_consistency(const Structure & a, const Structure & b, size_t k,
            uint64_t budget) -> ConsistencyResult
    {
        if (k < 1)
            throw PreconditionError("strong k-consistency needs k at least 1");

        ConsistencyResult result;
        auto initial = enumerate_partial_homs(a, b, k - 1, budget);
        result.initial_size = initial.size();
        std::unordered_set<PartialHom, PartialHomHash> alive(initial.begin(), initial.end());

        auto extends = [&] (const PartialHom & h, Element x) {
            for (Element y = 0 ; y < b.size() ; ++y) {
                auto g = h.with(x, y);
                if (g.size() + 1 <= k) {
                    if (alive.count(g))
                        return true;
                }
                else if (is_partial_hom(a, b, g)) {
                    bool inside = true;
                    for (auto & p : g)
                        if (p.from != x && ! alive.count(g.without(p.from)))
                            inside = false;
                    if (inside)
                        return true;
                }
            }
            return false;
        };

        bool changed = true;
        while (changed) {
            changed = false;
            for (auto & h : initial) {
                if (! alive.count(h))
                    continue;
                bool keep = true;
                for (auto & p : h)
                    if (! alive.count(h.without(p.from)))
                        keep = false;
                for (Element x = 0 ; keep && x < a.size() ; ++x)
                    if (! h.defined_on(x) && ! extends(h, x))
                        keep = false;
                if (! keep) {
                    alive.erase(h);
                    changed = true;
                }
            }
        }

        for (auto & h : initial)
            if (alive.count(h))
                result.established_family.members.push_back(h);
        result.established_family.normalise();
        result.establishable = ! result.established_family.empty();
        return result;
    }
}

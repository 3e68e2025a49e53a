/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pebble/strategy.hh>

#include <algorithm>
#include <functional>
#include <numeric>

using std::optional;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace pebble
{
    auto StrategyFamily::normalise() -> void
    {
        critical.resize(members.size(), 0);
        vector<size_t> order(members.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&] (size_t i, size_t j) { return canonical_less(members[i], members[j]); });

        vector<PartialHom> new_members;
        vector<std::uint8_t> new_critical;
        new_members.reserve(members.size());
        new_critical.reserve(members.size());
        for (auto i : order) {
            if (! new_members.empty() && new_members.back() == members[i])
                new_critical.back() |= critical[i];
            else {
                new_members.push_back(std::move(members[i]));
                new_critical.push_back(critical[i]);
            }
        }
        members = std::move(new_members);
        critical = std::move(new_critical);
    }

    auto StrategyFamily::find(const PartialHom & h) const -> optional<size_t>
    {
        auto it = std::lower_bound(members.begin(), members.end(), h, canonical_less);
        if (it != members.end() && *it == h)
            return it - members.begin();
        return std::nullopt;
    }

    auto StrategyFamily::is_critical(const PartialHom & h) const -> bool
    {
        auto i = find(h);
        return i && critical[*i];
    }

    auto StrategyFamily::critical_members() const -> vector<PartialHom>
    {
        vector<PartialHom> result;
        for (size_t i = 0 ; i < members.size() ; ++i)
            if (critical[i])
                result.push_back(members[i]);
        return result;
    }

    auto StrategyFamily::critical_count() const -> size_t
    {
        return std::count(critical.begin(), critical.end(), 1);
    }

    auto StrategyFamily::restricted_to(const vector<Element> & vertices) const -> StrategyFamily
    {
        vector<Element> sorted = vertices;
        std::sort(sorted.begin(), sorted.end());
        auto keep = [&] (Element e) { return std::binary_search(sorted.begin(), sorted.end(), e); };

        StrategyFamily result;
        for (auto & m : members)
            result.members.push_back(m.restricted_to(keep));
        if (boundary)
            result.boundary = boundary->restricted_to(keep);
        result.scope = sorted;
        result.normalise();
        return result;
    }

    auto closure(const vector<PartialHom> & generators, size_t max_size) -> StrategyFamily
    {
        StrategyFamily result;
        vector<Pair> current;
        for (auto & g : generators) {
            vector<Pair> pairs(g.begin(), g.end());
            std::function<void (size_t)> choose = [&] (size_t next) {
                result.members.emplace_back(current.begin(), current.end());
                if (current.size() == max_size)
                    return;
                for (size_t i = next ; i < pairs.size() ; ++i) {
                    current.push_back(pairs[i]);
                    choose(i + 1);
                    current.pop_back();
                }
            };
            choose(0);
        }
        result.normalise();
        return result;
    }

    auto boundary_violation(const StrategyFamily & f) -> optional<PartialHom>
    {
        if (! f.boundary)
            return std::nullopt;
        for (auto & m : f.members)
            if (! m.compatible_with(*f.boundary))
                return m;
        return std::nullopt;
    }

    auto compose(const StrategyFamily & g, const StrategyFamily & h, size_t max_size) -> StrategyFamily
    {
        return compose_all({ &g, &h }, max_size);
    }

    auto compose_all(const vector<const StrategyFamily *> & families, size_t max_size) -> StrategyFamily
    {
        StrategyFamily result;
        PartialHom beta;
        bool any_boundary = false;
        for (auto f : families) {
            if (! f->boundary)
                continue;
            any_boundary = true;
            for (auto & p : *f->boundary) {
                auto q = beta.find(p.from);
                if (q && *q != p.to)
                    throw PreconditionError("strategies are not connectable: boundary vertex " + to_string(p.from)
                            + " goes to " + to_string(*q) + " on one side and " + to_string(p.to) + " on the other");
                beta.set(p.from, p.to);
            }
        }
        if (any_boundary)
            result.boundary = beta;
        for (auto f : families) {
            vector<Element> merged;
            std::set_union(result.scope.begin(), result.scope.end(), f->scope.begin(), f->scope.end(), std::back_inserter(merged));
            result.scope = std::move(merged);
        }
        for (auto f : families)
            if (f->members.empty())
                return result;

        // every union g ∪ h of closed families is also a union of parts with disjoint domains, so pick at
        // most one nonempty part per family, in family order
        vector<Pair> current;
        std::function<void (size_t)> extend = [&] (size_t first) {
            result.members.emplace_back(current.begin(), current.end());
            result.critical.push_back(0);
            for (size_t j = first ; j < families.size() ; ++j) {
                auto & f = *families[j];
                for (size_t i = 0 ; i < f.members.size() ; ++i) {
                    auto & part = f.members[i];
                    if (part.size() + current.size() > max_size)
                        break;
                    if (part.empty())
                        continue;
                    bool disjoint = true;
                    for (auto & p : part)
                        for (auto & q : current)
                            if (p.from == q.from)
                                disjoint = false;
                    if (! disjoint)
                        continue;
                    auto mark = current.size();
                    current.insert(current.end(), part.begin(), part.end());
                    if (mark == 0 && f.critical[i]) {
                        result.members.emplace_back(current.begin(), current.end());
                        result.critical.push_back(1);
                    }
                    extend(j + 1);
                    current.resize(mark);
                }
            }
        };
        extend(0);
        result.normalise();
        return result;
    }

    auto union_critical(const vector<StrategyFamily> & families) -> UnionResult
    {
        vector<const StrategyFamily *> pointers;
        for (auto & f : families)
            pointers.push_back(&f);
        return union_critical(pointers);
    }

    auto union_critical(const vector<const StrategyFamily *> & family_pointers) -> UnionResult
    {
        UnionResult result;
        auto & u = result.family;
        size_t total = 0;
        for (auto f : family_pointers)
            total += f->members.size();
        u.members.reserve(total);

        // collect everything, then a member is critical in the union only if no input has it non-critically
        vector<std::uint8_t> non_critical_somewhere;
        for (auto f : family_pointers)
            for (size_t i = 0 ; i < f->members.size() ; ++i) {
                u.members.push_back(f->members[i]);
                non_critical_somewhere.push_back(! f->critical[i]);
            }

        vector<size_t> order(u.members.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&] (size_t i, size_t j) { return canonical_less(u.members[i], u.members[j]); });

        vector<PartialHom> members;
        vector<std::uint8_t> critical;
        members.reserve(order.size());
        for (auto i : order) {
            if (! members.empty() && members.back() == u.members[i]) {
                if (non_critical_somewhere[i])
                    critical.back() = 0;
            }
            else {
                members.push_back(std::move(u.members[i]));
                critical.push_back(! non_critical_somewhere[i]);
            }
        }
        u.members = std::move(members);
        u.critical = std::move(critical);

        for (size_t i = 0 ; i < u.members.size() ; ++i)
            if (u.critical[i])
                result.uncovered.push_back(u.members[i]);

        bool same_boundary = ! family_pointers.empty();
        for (auto f : family_pointers)
            if (f->boundary != family_pointers.front()->boundary)
                same_boundary = false;
        if (same_boundary)
            u.boundary = family_pointers.front()->boundary;

        for (auto f : family_pointers) {
            vector<Element> merged;
            std::set_union(u.scope.begin(), u.scope.end(), f->scope.begin(), f->scope.end(), std::back_inserter(merged));
            u.scope = std::move(merged);
        }
        return result;
    }
}

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pebble/legality.hh>

#include <algorithm>

using std::size_t;
using std::vector;

namespace pebble
{
    namespace
    {
        constexpr size_t dense_limit = size_t(1) << 26;
    }

    LegalityChecker::LegalityChecker(const Structure & a, const Structure & b) :
        _a(a),
        _b(b),
        _incidence(a.size())
    {
        for (auto & [name, r] : a.relations()) {
            auto target = b.relations().find(name);
            TargetRelation t{ r.arity, nullptr, {} };
            if (target != b.relations().end()) {
                t.relation = &target->second;
                auto n = b.size();
                if (r.arity == 1 || (r.arity == 2 && n * n <= dense_limit)) {
                    t.dense.assign(r.arity == 1 ? n : n * n, false);
                    for (auto & u : target->second.tuples) {
                        if (u.size() != r.arity)
                            continue;
                        if (r.arity == 1 && u[0] < n)
                            t.dense[u[0]] = true;
                        else if (r.arity == 2 && u[0] < n && u[1] < n)
                            t.dense[u[0] * n + u[1]] = true;
                    }
                }
            }

            unsigned index = _targets.size();
            _targets.push_back(std::move(t));
            for (auto & tuple : r.tuples) {
                auto entries = tuple;
                std::sort(entries.begin(), entries.end());
                entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
                for (auto e : entries)
                    if (e < a.size())
                        _incidence[e].push_back(Incidence{ index, &tuple });
            }
        }

        _candidates.resize(a.size());
        for (Element x = 0 ; x < a.size() ; ++x)
            for (Element y = 0 ; y < b.size() ; ++y)
                if (extends(nullptr, 0, x, y))
                    _candidates[x].push_back(y);
    }

    auto LegalityChecker::target_has(const TargetRelation & t, const Tuple & image) const -> bool
    {
        if (! t.relation)
            return false;
        if (! t.dense.empty()) {
            if (t.arity == 1)
                return t.dense[image[0]];
            return t.dense[image[0] * _b.size() + image[1]];
        }
        return t.relation->contains(image);
    }

    auto LegalityChecker::extends(const Pair * pairs, size_t n, Element a, Element b) const -> bool
    {
        if (_a.colored() && _b.colored() && _a.color(a) != _b.color(b))
            return false;

        Tuple image;
        for (auto & inc : _incidence[a]) {
            image.clear();
            bool inside = true;
            for (auto e : *inc.tuple) {
                if (e == a) {
                    image.push_back(b);
                    continue;
                }
                const Pair * p = std::find_if(pairs, pairs + n, [&] (const Pair & q) { return q.from == e; });
                if (p == pairs + n) {
                    inside = false;
                    break;
                }
                image.push_back(p->to);
            }
            if (inside && ! target_has(_targets[inc.relation], image))
                return false;
        }
        return true;
    }

    auto LegalityChecker::legal(const PartialHom & h) const -> bool
    {
        vector<Pair> prefix;
        for (auto & p : h) {
            if (p.from >= _a.size() || p.to >= _b.size())
                return false;
            if (! extends(prefix.data(), prefix.size(), p.from, p.to))
                return false;
            prefix.push_back(p);
        }
        return true;
    }
}

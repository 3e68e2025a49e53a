/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pebble/structure.hh>
#include <pebble/legality.hh>

#include <algorithm>
#include <sstream>

using std::function;
using std::map;
using std::optional;
using std::size_t;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace pebble
{
    auto Relation::contains(const Tuple & t) const -> bool
    {
        if (sorted)
            return std::binary_search(tuples.begin(), tuples.end(), t);
        return std::find(tuples.begin(), tuples.end(), t) != tuples.end();
    }

    Structure::Structure(size_t universe_size) :
        _size(universe_size)
    {
    }

    auto Structure::add_relation(const string & name, unsigned arity) -> void
    {
        auto [it, inserted] = _relations.try_emplace(name);
        if (inserted)
            it->second.arity = arity;
        else if (it->second.arity != arity)
            throw InputError("relation '" + name + "' redeclared with arity " + to_string(arity)
                    + " (was " + to_string(it->second.arity) + ")");
    }

    auto Structure::add_tuple(const string & name, Tuple t) -> void
    {
        auto it = _relations.find(name);
        if (it == _relations.end()) {
            add_relation(name, t.size());
            it = _relations.find(name);
        }
        auto & r = it->second;
        if (! r.tuples.empty() && ! (r.tuples.back() < t))
            r.sorted = false;
        r.tuples.push_back(std::move(t));
    }

    auto Structure::normalise() -> void
    {
        for (auto & [_, r] : _relations) {
            std::sort(r.tuples.begin(), r.tuples.end());
            r.tuples.erase(std::unique(r.tuples.begin(), r.tuples.end()), r.tuples.end());
            r.sorted = true;
        }
    }

    auto Structure::has_tuple(const string & name, const Tuple & t) const -> bool
    {
        auto it = _relations.find(name);
        return it != _relations.end() && it->second.contains(t);
    }

    auto validate_structure(const Structure & s) -> ValidationReport
    {
        ValidationReport report;
        for (auto & [name, r] : s.relations()) {
            for (auto & t : r.tuples) {
                std::ostringstream where;
                where << name << "(";
                for (size_t i = 0 ; i < t.size() ; ++i)
                    where << (i ? "," : "") << t[i];
                where << ")";

                if (t.size() != r.arity)
                    report.problems.push_back("bad arity: " + where.str() + " has " + to_string(t.size())
                            + " entries, relation declared with arity " + to_string(r.arity));
                for (auto e : t)
                    if (e >= s.size()) {
                        report.problems.push_back("out-of-range element " + to_string(e) + " in " + where.str()
                                + ", universe size " + to_string(s.size()));
                        break;
                    }
            }
        }

        if (s.colors() && s.colors()->size() != s.size())
            report.problems.push_back("partial coloring: " + to_string(s.colors()->size()) + " colors for "
                    + to_string(s.size()) + " elements");

        return report;
    }

    PartialHom::PartialHom(std::initializer_list<Pair> pairs)
    {
        for (auto & p : pairs)
            set(p.from, p.to);
    }

    auto PartialHom::find(Element a) const -> optional<Element>
    {
        for (auto & p : _pairs) {
            if (p.from == a)
                return p.to;
            if (p.from > a)
                break;
        }
        return std::nullopt;
    }

    auto PartialHom::set(Element a, Element b) -> void
    {
        auto it = std::lower_bound(_pairs.begin(), _pairs.end(), a, [] (const Pair & p, Element x) { return p.from < x; });
        if (it != _pairs.end() && it->from == a) {
            if (it->to != b)
                throw PreconditionError("partial map would send " + std::to_string(a) + " to both "
                        + std::to_string(it->to) + " and " + std::to_string(b));
            return;
        }
        _pairs.insert(it, Pair{ a, b });
    }

    auto PartialHom::erase(Element a) -> void
    {
        auto it = std::find_if(_pairs.begin(), _pairs.end(), [&] (const Pair & p) { return p.from == a; });
        if (it != _pairs.end())
            _pairs.erase(it);
    }

    auto PartialHom::with(Element a, Element b) const -> PartialHom
    {
        PartialHom result = *this;
        result.set(a, b);
        return result;
    }

    auto PartialHom::without(Element a) const -> PartialHom
    {
        PartialHom result = *this;
        result.erase(a);
        return result;
    }

    auto PartialHom::subset_of(const PartialHom & other) const -> bool
    {
        return std::includes(other._pairs.begin(), other._pairs.end(), _pairs.begin(), _pairs.end());
    }

    auto PartialHom::compatible_with(const PartialHom & other) const -> bool
    {
        auto i = _pairs.begin(), j = other._pairs.begin();
        while (i != _pairs.end() && j != other._pairs.end()) {
            if (i->from < j->from)
                ++i;
            else if (j->from < i->from)
                ++j;
            else if (i->to != j->to)
                return false;
            else
                ++i, ++j;
        }
        return true;
    }

    auto PartialHom::restricted_to(const function<bool (Element)> & keep) const -> PartialHom
    {
        PartialHom result;
        for (auto & p : _pairs)
            if (keep(p.from))
                result._pairs.push_back(p);
        return result;
    }

    auto PartialHom::domain() const -> vector<Element>
    {
        vector<Element> result;
        for (auto & p : _pairs)
            result.push_back(p.from);
        return result;
    }

    auto PartialHom::operator<=> (const PartialHom & other) const -> std::strong_ordering
    {
        return std::lexicographical_compare_three_way(_pairs.begin(), _pairs.end(), other._pairs.begin(), other._pairs.end());
    }

    auto PartialHom::operator== (const PartialHom & other) const -> bool
    {
        return _pairs.size() == other._pairs.size() && std::equal(_pairs.begin(), _pairs.end(), other._pairs.begin());
    }

    auto PartialHom::to_string() const -> string
    {
        string result = "{";
        for (size_t i = 0 ; i < _pairs.size() ; ++i)
            result += (i ? ", " : "") + std::to_string(_pairs[i].from) + "->" + std::to_string(_pairs[i].to);
        return result + "}";
    }

    auto PartialHomHash::operator() (const PartialHom & h) const -> size_t
    {
        uint64_t x = 0x9e3779b97f4a7c15ULL;
        for (auto & p : h) {
            x ^= (uint64_t(p.from) << 32 | p.to) + 0x9e3779b97f4a7c15ULL + (x << 6) + (x >> 2);
            x *= 0xff51afd7ed558ccdULL;
        }
        return x ^ (x >> 29);
    }

    auto join(const PartialHom & g, const PartialHom & h) -> PartialHom
    {
        PartialHom result = g;
        for (auto & p : h)
            result.set(p.from, p.to);
        return result;
    }

    auto canonical_less(const PartialHom & g, const PartialHom & h) -> bool
    {
        if (g.size() != h.size())
            return g.size() < h.size();
        return g < h;
    }

    namespace
    {
        auto check_range(const Structure & a, const Structure & b, const PartialHom & h) -> void
        {
            for (auto & p : h) {
                if (p.from >= a.size())
                    throw InputError("element " + to_string(p.from) + " is outside the source universe of size " + to_string(a.size()));
                if (p.to >= b.size())
                    throw InputError("element " + to_string(p.to) + " is outside the target universe of size " + to_string(b.size()));
            }
        }
    }

    auto is_partial_hom(const Structure & a, const Structure & b, const PartialHom & h) -> bool
    {
        check_range(a, b, h);

        if (a.colored() && b.colored())
            for (auto & p : h)
                if (a.color(p.from) != b.color(p.to))
                    return false;

        for (auto & [name, r] : a.relations()) {
            auto target = b.relations().find(name);
            for (auto & t : r.tuples) {
                Tuple image;
                image.reserve(t.size());
                bool inside = true;
                for (auto e : t) {
                    auto v = h.find(e);
                    if (! v) {
                        inside = false;
                        break;
                    }
                    image.push_back(*v);
                }
                if (! inside)
                    continue;
                if (target == b.relations().end() || ! target->second.contains(image))
                    return false;
            }
        }
        return true;
    }

    auto enumerate_partial_homs(const Structure & a, const Structure & b, size_t max_domain, uint64_t budget) -> vector<PartialHom>
    {
        // guard: sum over domain sizes of C(|A|,s)·|B|^s, computed with saturation
        double estimate = 0, choose = 1, images = 1;
        for (size_t s = 0 ; s <= max_domain && s <= a.size() ; ++s) {
            estimate += choose * images;
            choose = choose * double(a.size() - s) / double(s + 1);
            images *= double(b.size());
        }
        if (estimate > double(budget))
            throw ResourceError("enumerating partial homomorphisms with domain size <= " + to_string(max_domain)
                    + " needs about " + to_string(uint64_t(estimate)) + " candidate maps, budget is " + to_string(budget));

        LegalityChecker checker(a, b);
        vector<PartialHom> result;
        vector<Pair> current;

        function<void (Element)> extend = [&] (Element next) {
            result.emplace_back(current.begin(), current.end());
            if (current.size() == max_domain)
                return;
            for (Element x = next ; x < a.size() ; ++x)
                for (auto y : checker.candidates(x))
                    if (checker.extends(current.data(), current.size(), x, y)) {
                        current.push_back(Pair{ x, y });
                        extend(x + 1);
                        current.pop_back();
                    }
        };
        extend(0);

        std::sort(result.begin(), result.end(), canonical_less);
        return result;
    }

    auto all_homomorphisms(const Structure & a, const Structure & b, const PartialHom & pinned,
            const function<void (const PartialHom &)> & callback, uint64_t limit) -> void
    {
        check_range(a, b, pinned);
        LegalityChecker checker(a, b);
        if (! checker.legal(pinned))
            return;

        // forward checking: every unassigned neighbour of a new assignment keeps only the values
        // that stay legal with everything assigned so far; the smallest domain is branched on next
        vector<vector<Element> > neighbours(a.size());
        for (auto & [_, r] : a.relations())
            for (auto & t : r.tuples)
                for (auto e : t)
                    for (auto f : t)
                        if (e != f)
                            neighbours[e].push_back(f);
        for (auto & n : neighbours) {
            std::sort(n.begin(), n.end());
            n.erase(std::unique(n.begin(), n.end()), n.end());
        }

        vector<Pair> current(pinned.begin(), pinned.end());
        vector<bool> assigned(a.size(), false);
        for (auto & p : pinned)
            assigned[p.from] = true;
        vector<vector<Element> > domains(a.size());
        for (Element x = 0 ; x < a.size() ; ++x)
            if (! assigned[x])
                for (auto y : checker.candidates(x))
                    if (checker.extends(current.data(), current.size(), x, y))
                        domains[x].push_back(y);

        uint64_t produced = 0;
        bool stop = false;
        size_t remaining = a.size() - pinned.size();

        function<void ()> search = [&] () {
            if (stop)
                return;
            if (remaining == 0) {
                callback(PartialHom(current.begin(), current.end()));
                if (++produced >= limit)
                    stop = true;
                return;
            }
            Element x = 0;
            bool have = false;
            for (Element z = 0 ; z < a.size() ; ++z)
                if (! assigned[z] && (! have || domains[z].size() < domains[x].size()
                            || (domains[z].size() == domains[x].size() && neighbours[z].size() > neighbours[x].size()))) {
                    x = z;
                    have = true;
                }

            auto values = domains[x];
            for (auto y : values) {
                current.push_back(Pair{ x, y });
                assigned[x] = true;
                --remaining;

                vector<std::pair<Element, vector<Element> > > saved;
                bool wiped = false;
                for (auto z : neighbours[x]) {
                    if (assigned[z])
                        continue;
                    vector<Element> kept;
                    for (auto v : domains[z])
                        if (checker.extends(current.data(), current.size(), z, v))
                            kept.push_back(v);
                    if (kept.size() != domains[z].size()) {
                        saved.emplace_back(z, std::move(domains[z]));
                        domains[z] = std::move(kept);
                        if (domains[z].empty()) {
                            wiped = true;
                            break;
                        }
                    }
                }
                if (! wiped)
                    search();

                for (auto & [z, d] : saved)
                    domains[z] = std::move(d);
                ++remaining;
                assigned[x] = false;
                current.pop_back();
                if (stop)
                    return;
            }
        };
        search();
    }

    auto find_homomorphism(const Structure & a, const Structure & b, const PartialHom & pinned) -> optional<PartialHom>
    {
        optional<PartialHom> result;
        all_homomorphisms(a, b, pinned, [&] (const PartialHom & h) { result = h; }, 1);
        return result;
    }
}

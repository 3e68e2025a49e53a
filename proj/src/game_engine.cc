/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "game_engine.hh"

#include <algorithm>
#include <string>

using std::size_t;
using std::string;
using std::to_string;
using std::uint16_t;
using std::uint64_t;
using std::vector;

namespace pebble
{
    namespace
    {
        constexpr uint64_t residual_memory_limit = uint64_t(2500) << 20;
    }

    auto GameEngine::Config::insert(Element a, Element b) const -> Config
    {
        Config result;
        unsigned i = 0;
        while (i < size && pairs[i].from < a)
            result.pairs[result.size++] = pairs[i++];
        result.pairs[result.size++] = Pair{ a, b };
        while (i < size)
            result.pairs[result.size++] = pairs[i++];
        return result;
    }

    auto GameEngine::Config::erase_at(unsigned skip) const -> Config
    {
        Config result;
        for (unsigned i = 0 ; i < size ; ++i)
            if (i != skip)
                result.pairs[result.size++] = pairs[i];
        return result;
    }

    auto GameEngine::Config::has(Element a) const -> bool
    {
        for (unsigned i = 0 ; i < size ; ++i)
            if (pairs[i].from == a)
                return true;
        return false;
    }

    GameEngine::GameEngine(const Structure & a, const Structure & b, unsigned capacity,
            vector<PartialHom> targets, uint64_t budget) :
        _a(a),
        _b(b),
        _checker(a, b),
        _capacity(capacity),
        _explicit(capacity - 1),
        _targets(std::move(targets))
    {
        if (capacity < 1)
            throw PreconditionError("the game needs at least one pebble");
        if (capacity > max_pairs)
            throw ResourceError("at most " + to_string(max_pairs) + " pebbles are supported, asked for " + to_string(capacity));

        std::sort(_targets.begin(), _targets.end(), canonical_less);
        _targets.erase(std::unique(_targets.begin(), _targets.end()), _targets.end());

        size_t n = a.size(), m = b.size();
        _binomial.assign(n + 1, vector<uint64_t>(_explicit + 2, 0));
        for (size_t i = 0 ; i <= n ; ++i) {
            _binomial[i][0] = 1;
            for (size_t r = 1 ; r <= _explicit + 1 && r <= i ; ++r)
                _binomial[i][r] = _binomial[i - 1][r - 1] + (r <= i - 1 ? _binomial[i - 1][r] : 0);
        }

        _cand_pos.assign(n * m, -1);
        for (Element x = 0 ; x < n ; ++x) {
            auto & c = _checker.candidates(x);
            if (c.size() > 65535)
                throw ResourceError("more than 65535 candidate images for one element");
            for (size_t j = 0 ; j < c.size() ; ++j)
                _cand_pos[x * m + c[j]] = j;
        }

        // domain subsets of each size in colex order, and the offset of each subset's block of configurations
        _subsets.resize(_explicit + 1);
        _base.resize(_explicit + 1);
        double estimate = 0;
        for (unsigned s = 0 ; s <= _explicit ; ++s) {
            auto & subsets = _subsets[s];
            auto & base = _base[s];
            base.push_back(_total);
            if (s > n)
                continue;
            vector<Element> current(s);
            for (unsigned i = 0 ; i < s ; ++i)
                current[i] = i;
            while (true) {
                uint64_t product = 1;
                double product_estimate = 1;
                for (auto x : current) {
                    product *= _checker.candidates(x).size();
                    product_estimate *= double(_checker.candidates(x).size());
                }
                estimate += product_estimate;
                if (estimate > double(budget))
                    throw ResourceError("configuration budget exceeded: more than " + to_string(budget)
                            + " configurations with at most " + to_string(_explicit) + " pebbles");
                subsets.insert(subsets.end(), current.begin(), current.end());
                _total += product;
                base.push_back(_total);

                // next combination in colex order
                unsigned i = 0;
                while (i < s && ((i + 1 < s && current[i] + 1 == current[i + 1]) || (i + 1 == s && current[i] + 1 == n)))
                    ++i;
                if (i == s)
                    break;
                ++current[i];
                for (unsigned j = 0 ; j < i ; ++j)
                    current[j] = j;
            }
        }

        if (double(_total) * double(n) * 2 > double(residual_memory_limit))
            throw ResourceError("support table for " + to_string(_total) + " configurations over " + to_string(n)
                    + " elements exceeds the memory limit");

        _alive.assign(_total, 0);
        _residual.assign(_total * n, 0);

        // legality first (bit 1), then drop the maps that hit a target; legality is inherited from the
        // map minus its last pair, which has a smaller index
        for (unsigned s = 0 ; s <= _explicit ; ++s)
            for (uint64_t r = 0 ; r + 1 < _base[s].size() ; ++r)
                for (uint64_t l = 0 ; l < _base[s][r + 1] - _base[s][r] ; ++l) {
                    auto g = decode(s, r, l);
                    bool legal = true;
                    if (g.size > 0) {
                        auto rest = g.erase_at(g.size - 1);
                        legal = (_alive[index(rest)] & 2) && _checker.extends(rest.pairs, rest.size, g.pairs[g.size - 1].from, g.pairs[g.size - 1].to);
                    }
                    _alive[_base[s][r] + l] = legal ? 2 : 0;
                }
        for (uint64_t id = 0 ; id < _total ; ++id)
            if (_alive[id])
                _alive[id] = hits_target(config_of(id)) ? 0 : 1;

        for (unsigned s = 0 ; s <= _explicit ; ++s)
            for (uint64_t r = 0 ; r + 1 < _base[s].size() ; ++r)
                for (uint64_t l = 0 ; l < _base[s][r + 1] - _base[s][r] ; ++l) {
                    uint64_t id = _base[s][r] + l;
                    if (! _alive[id])
                        continue;
                    auto g = decode(s, r, l);
                    for (Element z = 0 ; z < n ; ++z)
                        if (! g.has(z) && ! find_support(id, g, z))
                            break;
                }

        propagate();
    }

    auto GameEngine::index(const Config & g) const -> uint64_t
    {
        uint64_t rank = 0, local = 0;
        size_t m = _b.size();
        for (unsigned i = 0 ; i < g.size ; ++i) {
            auto x = g.pairs[i].from;
            rank += _binomial[x][i + 1];
            auto pos = _cand_pos[x * m + g.pairs[i].to];
            if (pos < 0)
                return npos;
            local = local * _checker.candidates(x).size() + pos;
        }
        return _base[g.size][rank] + local;
    }

    auto GameEngine::decode(unsigned s, uint64_t rank, uint64_t local) const -> Config
    {
        Config g;
        g.size = s;
        const Element * subset = _subsets[s].data() + rank * s;
        for (unsigned i = s ; i-- > 0 ; ) {
            auto & c = _checker.candidates(subset[i]);
            g.pairs[i] = Pair{ subset[i], c[local % c.size()] };
            local /= c.size();
        }
        return g;
    }

    auto GameEngine::hits_target(const Config & g) const -> bool
    {
        for (auto & t : _targets) {
            if (t.size() > g.size)
                continue;
            bool inside = true;
            for (auto & p : t) {
                bool found = false;
                for (unsigned i = 0 ; i < g.size ; ++i)
                    if (g.pairs[i] == p) {
                        found = true;
                        break;
                    }
                if (! found) {
                    inside = false;
                    break;
                }
            }
            if (inside)
                return true;
        }
        return false;
    }

    auto GameEngine::full_alive(const Config & g, Element z, Element b) const -> bool
    {
        if (! _checker.extends(g.pairs, g.size, z, b))
            return false;
        auto full = g.insert(z, b);
        if (hits_target(full))
            return false;
        for (unsigned i = 0 ; i < full.size ; ++i)
            if (full.pairs[i].from != z && ! _alive[index(full.erase_at(i))])
                return false;
        return true;
    }

    auto GameEngine::supports(const Config & g, Element z, size_t j) const -> bool
    {
        Element b = _checker.candidates(z)[j];
        if (g.size < _explicit)
            return _alive[index(g.insert(z, b))];
        return full_alive(g, z, b);
    }

    auto GameEngine::find_support(uint64_t id, const Config & g, Element z) -> bool
    {
        auto & c = _checker.candidates(z);
        auto & res = residual(id, z);
        size_t start = res ? res - 1 : 0;
        for (size_t step = 0 ; step < c.size() ; ++step) {
            size_t j = (start + step) % c.size();
            if (supports(g, z, j)) {
                res = j + 1;
                return true;
            }
        }
        res = 0;
        kill(id);
        return false;
    }

    auto GameEngine::config_of(uint64_t id) const -> Config
    {
        unsigned s = 0;
        while (id >= _base[s].back())
            ++s;
        auto it = std::upper_bound(_base[s].begin(), _base[s].end(), id);
        uint64_t rank = (it - _base[s].begin()) - 1;
        return decode(s, rank, id - _base[s][rank]);
    }

    auto GameEngine::propagate() -> void
    {
        size_t n = _a.size(), m = _b.size();
        while (! _stack.empty()) {
            uint64_t id = _stack.back();
            _stack.pop_back();
            auto d = config_of(id);

            // subfunction closure: one-larger maps containing d die too
            if (d.size < _explicit)
                for (Element x = 0 ; x < n ; ++x)
                    if (! d.has(x))
                        for (auto y : _checker.candidates(x))
                            kill(index(d.insert(x, y)));

            // maps whose extension towards some z was witnessed by d
            for (unsigned i = 0 ; i < d.size ; ++i) {
                auto g = d.erase_at(i);
                auto gid = index(g);
                Element z = d.pairs[i].from;
                if (_alive[gid] && residual(gid, z) == _cand_pos[z * m + d.pairs[i].to] + 1)
                    find_support(gid, g, z);
            }

            // full maps containing d are gone, so maximal explicit maps that used one of them as support
            if (d.size == _explicit)
                for (unsigned i = 0 ; i < d.size ; ++i) {
                    Element z = d.pairs[i].from;
                    auto j = _cand_pos[z * m + d.pairs[i].to] + 1;
                    auto rest = d.erase_at(i);
                    for (Element x = 0 ; x < n ; ++x)
                        if (! d.has(x))
                            for (auto y : _checker.candidates(x)) {
                                auto g = rest.insert(x, y);
                                auto gid = index(g);
                                if (_alive[gid] && residual(gid, z) == j)
                                    find_support(gid, g, z);
                            }
                }
        }
    }

    auto GameEngine::kill(uint64_t id) -> void
    {
        if (_alive[id] == 1) {
            _alive[id] = 0;
            _stack.push_back(id);
        }
    }
}

namespace pebble
{
    auto GameEngine::alive(const PartialHom & h) const -> bool
    {
        if (h.size() > _capacity)
            throw PreconditionError("configuration " + h.to_string() + " has more pairs than the " + to_string(_capacity) + " pebbles");
        Config g;
        for (auto & p : h) {
            if (p.from >= _a.size() || p.to >= _b.size())
                throw InputError("configuration " + h.to_string() + " mentions elements outside the universes");
            g.pairs[g.size++] = p;
        }
        if (g.size <= _explicit) {
            auto id = index(g);
            return id != npos && _alive[id] == 1;
        }
        auto last = g.pairs[g.size - 1];
        auto rest = g.erase_at(g.size - 1);
        return _cand_pos[last.from * _b.size() + last.to] >= 0 && _checker.legal(h) && _alive[index(rest)] == 1
            && full_alive(rest, last.from, last.to);
    }

    auto GameEngine::for_each_alive(const std::function<void (const PartialHom &)> & callback) const -> void
    {
        for (uint64_t id = 0 ; id < _total ; ++id)
            if (_alive[id] == 1) {
                auto g = config_of(id);
                callback(PartialHom(g.pairs, g.pairs + g.size));
            }

        if (_explicit >= _a.size())
            return;
        for (uint64_t id = _base[_explicit].front() ; id < _total ; ++id)
            if (_alive[id] == 1) {
                auto g = config_of(id);
                Element first = g.size ? g.pairs[g.size - 1].from + 1 : 0;
                for (Element z = first ; z < _a.size() ; ++z)
                    for (auto b : _checker.candidates(z))
                        if (full_alive(g, z, b)) {
                            auto full = g.insert(z, b);
                            callback(PartialHom(full.pairs, full.pairs + full.size));
                        }
            }
    }
}

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pebble/game_pair.hh>
#include <pebble/errors.hh>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

using std::size_t;
using std::string;
using std::vector;

namespace pebble
{
    GamePair::GamePair() :
        spoiler(0),
        duplicator(0)
    {
        spoiler.add_relation("E", 2);
        duplicator.add_relation("E", 2);
    }

    auto GamePair::index_names() -> void
    {
        _spoiler_ids.clear();
        _duplicator_ids.clear();
        for (size_t i = 0 ; i < spoiler_names.size() ; ++i)
            _spoiler_ids.emplace(spoiler_names[i], i);
        for (size_t i = 0 ; i < duplicator_names.size() ; ++i)
            _duplicator_ids.emplace(duplicator_names[i], i);
    }

    auto GamePair::spoiler_vertex(const string & name) const -> Element
    {
        auto it = _spoiler_ids.find(name);
        if (it == _spoiler_ids.end())
            throw PreconditionError("no Spoiler vertex named '" + name + "'");
        return it->second;
    }

    auto GamePair::duplicator_vertex(const string & name) const -> Element
    {
        auto it = _duplicator_ids.find(name);
        if (it == _duplicator_ids.end())
            throw PreconditionError("no Duplicator vertex named '" + name + "'");
        return it->second;
    }

    auto GamePair::has_spoiler_vertex(const string & name) const -> bool
    {
        return _spoiler_ids.count(name);
    }

    auto GamePair::has_duplicator_vertex(const string & name) const -> bool
    {
        return _duplicator_ids.count(name);
    }

    auto GamePair::block(Element v) const -> vector<Element>
    {
        vector<Element> result;
        if (! duplicator.colored())
            return result;
        for (Element u = 0 ; u < duplicator.size() ; ++u)
            if (duplicator.color(u) == int(v))
                result.push_back(u);
        return result;
    }

    auto GamePair::block(const string & name) const -> vector<Element>
    {
        return block(spoiler_vertex(name));
    }

    auto GamePair::color_count() const -> size_t
    {
        std::set<int> colors;
        if (spoiler.colored())
            colors.insert(spoiler.colors()->begin(), spoiler.colors()->end());
        if (duplicator.colored())
            colors.insert(duplicator.colors()->begin(), duplicator.colors()->end());
        return colors.size();
    }

    auto GamePair::operator== (const GamePair & other) const -> bool
    {
        return spoiler == other.spoiler && duplicator == other.duplicator && spoiler_names == other.spoiler_names
            && duplicator_names == other.duplicator_names;
    }

    auto natural_less(const string & a, const string & b) -> bool
    {
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
                size_t ie = i, je = j;
                while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie])))
                    ++ie;
                while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je])))
                    ++je;
                auto x = a.substr(i, ie - i), y = b.substr(j, je - j);
                x.erase(0, std::min(x.find_first_not_of('0'), x.size()));
                y.erase(0, std::min(y.find_first_not_of('0'), y.size()));
                if (x.size() != y.size())
                    return x.size() < y.size();
                if (x != y)
                    return x < y;
                i = ie;
                j = je;
            }
            else {
                if (a[i] != b[j])
                    return a[i] < b[j];
                ++i;
                ++j;
            }
        }
        if ((a.size() - i) != (b.size() - j))
            return (a.size() - i) < (b.size() - j);
        return a < b;
    }

    auto block_of(const string & name) -> string
    {
        auto p = name.rfind('_');
        if (p == string::npos)
            throw PreconditionError("'" + name + "' is not a Duplicator vertex name");
        return name.substr(0, p);
    }

    auto suffix_of(const string & name) -> string
    {
        auto p = name.rfind('_');
        if (p == string::npos)
            throw PreconditionError("'" + name + "' is not a Duplicator vertex name");
        return name.substr(p + 1);
    }

    auto PairBuilder::spoiler(const string & name) -> void
    {
        if (name.find('_') != string::npos)
            throw PreconditionError("Spoiler vertex names may not contain '_': " + name);
        _spoiler.emplace(name, 0);
    }

    auto PairBuilder::duplicator(const string & block, const string & suffix) -> string
    {
        if (! _spoiler.count(block))
            throw PreconditionError("Duplicator block '" + block + "' has no Spoiler vertex");
        auto name = block + "_" + suffix;
        _duplicator_block.emplace(name, block);
        return name;
    }

    auto PairBuilder::spoiler_edge(const string & a, const string & b) -> void
    {
        if (! _spoiler.count(a) || ! _spoiler.count(b))
            throw PreconditionError("Spoiler edge " + a + " -- " + b + " uses an unknown vertex");
        _spoiler_edges.emplace_back(a, b);
    }

    auto PairBuilder::duplicator_edge(const string & a, const string & b) -> void
    {
        if (! _duplicator_block.count(a) || ! _duplicator_block.count(b))
            throw PreconditionError("Duplicator edge " + a + " -- " + b + " uses an unknown vertex");
        _duplicator_edges.emplace_back(a, b);
    }

    auto PairBuilder::detach(const string & name) -> void
    {
        auto it = _duplicator_block.find(name);
        if (it == _duplicator_block.end())
            throw PreconditionError("no Duplicator vertex named '" + name + "'");
        it->second = "";
    }

    auto PairBuilder::add(const GamePair & pair, const std::function<string (const string &)> & rename)
        -> std::pair<vector<string>, vector<string> >
    {
        std::pair<vector<string>, vector<string> > result;
        for (auto & s : pair.spoiler_names) {
            result.first.push_back(rename(s));
            spoiler(result.first.back());
        }
        for (Element u = 0 ; u < pair.duplicator.size() ; ++u) {
            auto & d = pair.duplicator_names[u];
            auto name = duplicator(rename(block_of(d)), suffix_of(d));
            bool detached = pair.duplicator.colored() && pair.duplicator.color(u) >= int(pair.spoiler.size());
            if (detached)
                detach(name);
            result.second.push_back(name);
        }
        for (auto & [name, r] : pair.spoiler.relations())
            for (auto & t : r.tuples)
                if (t[0] <= t[1])
                    _spoiler_edges.emplace_back(result.first[t[0]], result.first[t[1]]);
        for (auto & [name, r] : pair.duplicator.relations())
            for (auto & t : r.tuples)
                if (t[0] <= t[1])
                    _duplicator_edges.emplace_back(result.second[t[0]], result.second[t[1]]);
        return result;
    }

    auto PairBuilder::finish() const -> GamePair
    {
        GamePair result;
        for (auto & [name, unused] : _spoiler)
            result.spoiler_names.push_back(name);
        for (auto & [name, block] : _duplicator_block)
            result.duplicator_names.push_back(name);
        std::sort(result.spoiler_names.begin(), result.spoiler_names.end(), natural_less);
        std::sort(result.duplicator_names.begin(), result.duplicator_names.end(), natural_less);
        result.index_names();

        result.spoiler = Structure(result.spoiler_names.size());
        result.spoiler.add_relation("E", 2);
        result.duplicator = Structure(result.duplicator_names.size());
        result.duplicator.add_relation("E", 2);

        vector<int> spoiler_colors(result.spoiler_names.size()), duplicator_colors(result.duplicator_names.size());
        std::iota(spoiler_colors.begin(), spoiler_colors.end(), 0);
        int fresh = result.spoiler_names.size();
        for (size_t u = 0 ; u < result.duplicator_names.size() ; ++u) {
            auto & block = _duplicator_block.at(result.duplicator_names[u]);
            duplicator_colors[u] = block.empty() ? fresh++ : int(result.spoiler_vertex(block));
        }
        result.spoiler.set_colors(std::move(spoiler_colors));
        result.duplicator.set_colors(std::move(duplicator_colors));

        for (auto & [a, b] : _spoiler_edges) {
            auto x = result.spoiler_vertex(a), y = result.spoiler_vertex(b);
            result.spoiler.add_edge(x, y);
            result.spoiler.add_edge(y, x);
        }
        for (auto & [a, b] : _duplicator_edges) {
            auto x = result.duplicator_vertex(a), y = result.duplicator_vertex(b);
            result.duplicator.add_edge(x, y);
            result.duplicator.add_edge(y, x);
        }
        result.spoiler.normalise();
        result.duplicator.normalise();
        return result;
    }
}

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pebble/io.hh>

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

using std::string;
using std::vector;

namespace pebble
{
    namespace
    {
        /// Runs a parser and turns library exceptions about shape or type into InputError.
        template <typename F_>
        auto guarded(const string & what, F_ && f) -> decltype(f())
        {
            try {
                return f();
            }
            catch (const nlohmann::json::exception & e) {
                throw InputError("malformed " + what + ": " + e.what());
            }
        }

        auto require(const Json & j, const string & key, const string & what) -> const Json &
        {
            if (! j.is_object() || ! j.contains(key))
                throw InputError(what + " is missing \"" + key + "\"");
            return j.at(key);
        }

        auto position_json(const KaiPosition & p) -> Json
        {
            return Json(p);
        }
    }

    auto to_json(const Structure & s) -> Json
    {
        Json j;
        j["universe"] = s.size();
        Json relations = Json::object();
        for (auto & [name, r] : s.relations())
            relations[name] = Json{ { "arity", r.arity }, { "tuples", r.tuples } };
        j["relations"] = relations;
        if (s.colors())
            j["colors"] = *s.colors();
        return j;
    }

    auto structure_from_json(const Json & j) -> Structure
    {
        return guarded("structure", [&] {
            auto n = require(j, "universe", "structure").get<std::int64_t>();
            if (n < 0)
                throw InputError("structure universe size is negative");
            Structure s(n);
            if (j.contains("relations"))
                for (auto & [name, r] : j.at("relations").items()) {
                    s.add_relation(name, require(r, "arity", "relation " + name).get<unsigned>());
                    for (auto & t : require(r, "tuples", "relation " + name))
                        s.add_tuple(name, t.get<Tuple>());
                }
            if (j.contains("colors"))
                s.set_colors(j.at("colors").get<vector<int> >());
            s.normalise();
            auto report = validate_structure(s);
            if (! report.ok())
                throw InputError("invalid structure: " + report.problems.front());
            return s;
        });
    }

    auto to_json(const KaiInstance & inst) -> Json
    {
        Json rules = Json::array();
        for (auto & r : inst.rules)
            rules.push_back({ r.u, r.v, r.w, r.c, r.d });
        return Json{ { "k", inst.k }, { "nodes", inst.nodes }, { "rules", rules }, { "start", position_json(inst.start) }, { "goal", inst.goal } };
    }

    auto kai_from_json(const Json & j) -> KaiInstance
    {
        return guarded("KAI instance", [&] {
            KaiInstance inst;
            inst.k = require(j, "k", "instance").get<unsigned>();
            inst.nodes = require(j, "nodes", "instance").get<unsigned>();
            bool has_rules = j.contains("rules"), has_triples = j.contains("rule_triples");
            if (has_rules == has_triples)
                throw InputError("instance must contain exactly one of \"rules\" and \"rule_triples\"");
            if (has_rules)
                for (auto & r : j.at("rules")) {
                    auto v = r.get<vector<unsigned> >();
                    if (v.size() != 5)
                        throw InputError("a rule has five entries u,v,w,c,d");
                    inst.rules.push_back(KaiRule{ v[0], v[1], v[2], v[3], v[4] });
                }
            else
                inst.rules = expand_rule_triples(j.at("rule_triples").get<vector<std::array<unsigned, 3> > >(), inst.k);
            inst.start = require(j, "start", "instance").get<KaiPosition>();
            inst.goal = require(j, "goal", "instance").get<unsigned>();
            return inst;
        });
    }

    auto to_json(const KaiStrategy & s) -> Json
    {
        Json kappa = Json::array();
        for (auto & [p, r] : s.kappa)
            kappa.push_back({ { "position", position_json(p) }, { "rule", r } });
        return Json{ { "k1", s.k1 }, { "k2", s.k2 }, { "kappa", kappa } };
    }

    auto to_json(const KaiSolution & s) -> Json
    {
        Json j{ { "winner", to_string(s.winner) }, { "positions", s.positions } };
        if (s.strategy)
            j["strategy"] = to_json(*s.strategy);
        if (! s.line.empty()) {
            Json line = Json::array();
            for (auto & m : s.line)
                line.push_back({ { "from", position_json(m.from) }, { "rule", m.rule }, { "to", position_json(m.to) } });
            j["line"] = line;
        }
        return j;
    }

    auto to_json(const PartialHom & h) -> Json
    {
        Json j = Json::array();
        for (auto & p : h)
            j.push_back({ p.from, p.to });
        return j;
    }

    auto partial_hom_from_json(const Json & j) -> PartialHom
    {
        return guarded("partial map", [&] {
            PartialHom h;
            for (auto & p : j) {
                auto v = p.get<vector<Element> >();
                if (v.size() != 2)
                    throw InputError("a map entry is a pair [from, to]");
                try {
                    h.set(v[0], v[1]);
                }
                catch (const PreconditionError & e) {
                    throw InputError(string("not a function: ") + e.what());
                }
            }
            return h;
        });
    }

    auto to_json(const StrategyFamily & f) -> Json
    {
        Json members = Json::array();
        for (std::size_t i = 0 ; i < f.members.size() ; ++i)
            members.push_back({ { "map", to_json(f.members[i]) }, { "critical", i < f.critical.size() && f.critical[i] } });
        Json j{ { "members", members } };
        if (f.boundary)
            j["boundary"] = to_json(*f.boundary);
        if (! f.scope.empty())
            j["scope"] = f.scope;
        return j;
    }

    auto family_from_json(const Json & j) -> StrategyFamily
    {
        return guarded("strategy family", [&] {
            StrategyFamily f;
            for (auto & m : require(j, "members", "family")) {
                f.members.push_back(partial_hom_from_json(require(m, "map", "family member")));
                f.critical.push_back(m.value("critical", false));
            }
            if (j.contains("boundary"))
                f.boundary = partial_hom_from_json(j.at("boundary"));
            if (j.contains("scope"))
                f.scope = j.at("scope").get<vector<Element> >();
            f.normalise();
            return f;
        });
    }

    auto to_json(const GamePair & p) -> Json
    {
        return Json{ { "spoiler", to_json(p.spoiler) }, { "duplicator", to_json(p.duplicator) },
            { "spoiler_names", p.spoiler_names }, { "duplicator_names", p.duplicator_names } };
    }

    auto game_pair_from_json(const Json & j) -> GamePair
    {
        return guarded("game pair", [&] {
            GamePair p;
            p.spoiler = structure_from_json(require(j, "spoiler", "game pair"));
            p.duplicator = structure_from_json(require(j, "duplicator", "game pair"));
            p.spoiler_names = j.value("spoiler_names", vector<string>{ });
            p.duplicator_names = j.value("duplicator_names", vector<string>{ });
            if (p.spoiler_names.size() != p.spoiler.size() || p.duplicator_names.size() != p.duplicator.size())
                throw InputError("game pair names do not match the universe sizes");
            p.index_names();
            return p;
        });
    }

    auto to_json(const ScopeRelation & r) -> Json
    {
        return Json{ { "scope", r.scope }, { "allowed", r.allowed } };
    }

    auto parse_json(const string & text) -> Json
    {
        try {
            return Json::parse(text);
        }
        catch (const nlohmann::json::exception & e) {
            throw InputError(string("not valid JSON: ") + e.what());
        }
    }

    auto read_json_file(const string & path) -> Json
    {
        std::ifstream in(path);
        if (! in)
            throw InputError("cannot read " + path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_json(buffer.str());
    }

    auto side_from_string(const string & s) -> Side
    {
        if (s == "spoiler")
            return Side::Spoiler;
        if (s == "duplicator")
            return Side::Duplicator;
        throw InputError("unknown side '" + s + "', expected spoiler or duplicator");
    }

    namespace
    {
        auto quote(const string & s) -> string
        {
            string result = "\"";
            for (char c : s) {
                if (c == '"' || c == '\\')
                    result += '\\';
                result += c;
            }
            return result + "\"";
        }

        auto symmetric(const Relation & r) -> bool
        {
            for (auto & t : r.tuples)
                if (! r.contains(Tuple{ t[1], t[0] }))
                    return false;
            return true;
        }

        auto dot(const Structure & s, const string & graph_name, const vector<string> & names,
                const std::function<std::optional<string> (int)> & cluster) -> string
        {
            auto name = [&] (Element v) { return quote(v < names.size() ? names[v] : "v" + std::to_string(v)); };
            bool undirected = true;
            for (auto & [rel, r] : s.relations())
                if (r.arity == 2 && ! symmetric(r))
                    undirected = false;

            std::ostringstream out;
            out << (undirected ? "graph " : "digraph ") << quote(graph_name) << " {\n";
            std::map<int, vector<Element> > classes;
            vector<Element> loose;
            for (Element v = 0 ; v < s.size() ; ++v) {
                if (s.colored() && cluster(s.color(v)))
                    classes[s.color(v)].push_back(v);
                else
                    loose.push_back(v);
            }
            for (auto & [color, members] : classes) {
                auto label = *cluster(color);
                out << "    subgraph " << quote("cluster_" + label) << " {\n";
                out << "        label=" << quote(label) << ";\n";
                for (auto v : members)
                    out << "        " << name(v) << ";\n";
                out << "    }\n";
            }
            for (auto v : loose)
                out << "    " << name(v) << ";\n";

            for (auto & [rel, r] : s.relations()) {
                if (r.arity != 2)
                    continue;
                for (auto & t : r.tuples) {
                    if (undirected && t[0] > t[1])
                        continue;
                    out << "    " << name(t[0]) << (undirected ? " -- " : " -> ") << name(t[1]);
                    if (rel != "E")
                        out << " [label=" << quote(rel) << "]";
                    out << ";\n";
                }
            }
            out << "}\n";
            return out.str();
        }
    }

    auto export_dot(const GamePair & p, Side side) -> string
    {
        auto & s = side == Side::Spoiler ? p.spoiler : p.duplicator;
        auto & names = side == Side::Spoiler ? p.spoiler_names : p.duplicator_names;
        return dot(s, side == Side::Spoiler ? "spoiler" : "duplicator", names, [&] (int c) -> std::optional<string> {
                if (c >= 0 && std::size_t(c) < p.spoiler_names.size())
                    return p.spoiler_names[c];
                return std::nullopt;
                });
    }

    auto export_dot(const Structure & s, const vector<string> & names) -> string
    {
        return dot(s, "structure", names, [] (int c) -> std::optional<string> { return "c" + std::to_string(c); });
    }
}

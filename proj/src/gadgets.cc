/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pebble/gadgets.hh>
#include <pebble/errors.hh>

#include <algorithm>
#include <map>
#include <set>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace pebble
{
    using std::to_string;

    auto overwrite(const KaiPosition & p, unsigned mask) -> Encoded
    {
        Encoded result = p;
        for (unsigned i = 0 ; i < result.size() ; ++i)
            if (mask >> i & 1)
                result[i] = 0;
        return result;
    }

    auto zero_position(unsigned k) -> Encoded
    {
        return Encoded(k, 0);
    }

    auto full_mask(unsigned k) -> unsigned
    {
        return (1u << k) - 1;
    }

    auto position_on(const GamePair & pair, const vector<string> & blocks, const Encoded & e) -> PartialHom
    {
        if (blocks.size() != e.size())
            throw PreconditionError("position has " + to_string(e.size()) + " entries for " + to_string(blocks.size()) + " blocks");
        PartialHom h;
        for (size_t i = 0 ; i < blocks.size() ; ++i)
            h.set(pair.spoiler_vertex(blocks[i]), pair.duplicator_vertex(blocks[i] + "_" + to_string(e[i])));
        return h;
    }

    auto row(const string & stem, unsigned k) -> vector<string>
    {
        vector<string> result;
        for (unsigned i = 1 ; i <= k ; ++i)
            result.push_back(stem + to_string(i));
        return result;
    }

    auto Gadget::boundary() const -> vector<Element>
    {
        vector<Element> result;
        for (auto & s : inputs)
            result.push_back(pair.spoiler_vertex(s));
        for (auto & r : outputs)
            for (auto & s : r)
                result.push_back(pair.spoiler_vertex(s));
        std::sort(result.begin(), result.end());
        return result;
    }

    namespace
    {
        auto check(unsigned k, unsigned n) -> void
        {
            if (k < 2)
                throw PreconditionError("gadgets need k at least 2, got " + to_string(k));
            if (n < 1)
                throw PreconditionError("gadgets need n at least 1, got " + to_string(n));
        }

        auto check_rule(const KaiRule & r, unsigned k, unsigned n) -> void
        {
            check(k, n);
            auto node = [&] (unsigned x) { return x >= 1 && x <= n; };
            if (! node(r.u) || ! node(r.v) || ! node(r.w) || r.u == r.v || r.u == r.w || r.v == r.w
                    || r.c < 1 || r.c > k || r.d < 1 || r.d > k || r.c == r.d)
                throw PreconditionError("rule " + to_string(r) + " is not valid for k = " + to_string(k) + ", n = " + to_string(n));
        }

        auto s(unsigned a, unsigned b) -> string
        {
            return to_string(a) + "," + to_string(b);
        }

        /// Input block x^i and output block y^i with vertices 0..n, and the Spoiler edges x^i -- y^i.
        auto rule_frame(PairBuilder & b, unsigned k, unsigned n) -> void
        {
            for (unsigned i = 1 ; i <= k ; ++i) {
                auto x = "x" + to_string(i), y = "y" + to_string(i);
                b.spoiler(x);
                b.spoiler(y);
                b.spoiler_edge(x, y);
                for (unsigned j = 0 ; j <= n ; ++j) {
                    b.duplicator(x, to_string(j));
                    b.duplicator(y, to_string(j));
                }
            }
        }

        auto rule_gadget(const string & kind, PairBuilder & b, const KaiRule & r, unsigned k, unsigned n) -> Gadget
        {
            Gadget g;
            g.kind = kind;
            g.pair = b.finish();
            g.k = k;
            g.n = n;
            g.rule = r;
            g.inputs = row("x", k);
            g.outputs = { row("y", k) };
            return g;
        }

        auto xy(unsigned i, unsigned a, unsigned b) -> std::pair<string, string>
        {
            return { "x" + to_string(i) + "_" + to_string(a), "y" + to_string(i) + "_" + to_string(b) };
        }
    }

    auto build_switch(unsigned k, unsigned n) -> Gadget
    {
        check(k, n);
        PairBuilder b;
        auto name = [] (const char * stem, unsigned i) { return stem + to_string(i); };

        for (unsigned i = 1 ; i <= k ; ++i)
            for (auto stem : { "x", "a", "b", "y" })
                b.spoiler(name(stem, i));
        for (unsigned i = 1 ; i <= k ; ++i) {
            b.spoiler_edge(name("x", i), name("a", i));
            b.spoiler_edge(name("b", i), name("y", i));
            for (unsigned j = 1 ; j <= k ; ++j) {
                if (i < j) {
                    b.spoiler_edge(name("a", i), name("a", j));
                    b.spoiler_edge(name("b", i), name("b", j));
                }
                b.spoiler_edge(name("a", i), name("b", j));
            }
        }

        // vertex names of the blocks X^i, A^i, B^i, Y^i
        auto X = [&] (unsigned i, unsigned s) { return name("x", i) + "_" + to_string(s); };
        auto Y = [&] (unsigned i, unsigned s) { return name("y", i) + "_" + to_string(s); };
        auto A0 = [&] (unsigned i) { return name("a", i) + "_0"; };
        auto A = [&] (unsigned i, unsigned s_, unsigned l) { return name("a", i) + "_" + s(s_, l); };
        auto B = [&] (unsigned i, unsigned s_) { return name("b", i) + "_" + to_string(s_); };
        auto B0 = [&] (unsigned i, unsigned l) { return name("b", i) + "_" + s(0, l); };

        for (unsigned i = 1 ; i <= k ; ++i) {
            for (unsigned t = 0 ; t <= n ; ++t) {
                b.duplicator(name("x", i), to_string(t));
                b.duplicator(name("y", i), to_string(t));
            }
            b.duplicator(name("a", i), "0");
            for (unsigned t = 1 ; t <= n ; ++t)
                for (unsigned l = 1 ; l <= k ; ++l)
                    b.duplicator(name("a", i), s(t, l));
            for (unsigned t = 1 ; t <= n ; ++t)
                b.duplicator(name("b", i), to_string(t));
            for (unsigned l = 1 ; l <= k ; ++l)
                b.duplicator(name("b", i), s(0, l));
        }

        auto all_a = [&] (unsigned i) {
            vector<string> result{ A0(i) };
            for (unsigned t = 1 ; t <= n ; ++t)
                for (unsigned l = 1 ; l <= k ; ++l)
                    result.push_back(A(i, t, l));
            return result;
        };
        auto all_b = [&] (unsigned i) {
            vector<string> result;
            for (unsigned t = 1 ; t <= n ; ++t)
                result.push_back(B(i, t));
            for (unsigned l = 1 ; l <= k ; ++l)
                result.push_back(B0(i, l));
            return result;
        };

        for (unsigned i = 1 ; i <= k ; ++i) {
            for (auto & a : all_a(i))
                b.duplicator_edge(X(i, 0), a);
            for (unsigned t = 1 ; t <= n ; ++t)
                for (unsigned l = 1 ; l <= k ; ++l)
                    b.duplicator_edge(X(i, t), A(i, t, l));
            for (auto & v : all_b(i))
                b.duplicator_edge(A0(i), v);
            for (unsigned t = 1 ; t <= n ; ++t)
                for (unsigned l = 1 ; l <= k ; ++l) {
                    b.duplicator_edge(A(i, t, l), B(i, t));
                    for (unsigned p = 1 ; p <= k ; ++p)
                        if (l != p)
                            b.duplicator_edge(A(i, t, l), B0(i, p));
                }
            for (unsigned t = 1 ; t <= n ; ++t)
                b.duplicator_edge(B(i, t), Y(i, t));
            for (unsigned l = 1 ; l <= k ; ++l)
                for (unsigned t = 0 ; t <= n ; ++t)
                    b.duplicator_edge(B0(i, l), Y(i, t));
        }

        for (unsigned i = 1 ; i <= k ; ++i)
            for (unsigned j = 1 ; j <= k ; ++j) {
                if (i == j)
                    continue;
                for (unsigned t = 1 ; t <= n ; ++t)
                    for (unsigned l = 1 ; l <= k ; ++l) {
                        for (unsigned q = 1 ; q <= n ; ++q)
                            for (unsigned p = 1 ; p <= k ; ++p)
                                if (l != p)
                                    b.duplicator_edge(A(i, t, l), A(j, q, p));
                        b.duplicator_edge(A0(i), A(j, t, l));
                    }
                for (unsigned l = 1 ; l <= k ; ++l)
                    for (unsigned p = 1 ; p <= k ; ++p)
                        b.duplicator_edge(B0(i, l), B0(j, p));
                for (unsigned t = 1 ; t <= n ; ++t)
                    for (unsigned q = 1 ; q <= n ; ++q)
                        b.duplicator_edge(B(i, t), B(j, q));
                for (unsigned l = 1 ; l <= k ; ++l)
                    b.duplicator_edge(A0(i), B0(j, l));
                for (unsigned t = 1 ; t <= n ; ++t)
                    b.duplicator_edge(A0(i), B(j, t));
                for (unsigned t = 1 ; t <= n ; ++t)
                    for (unsigned l = 1 ; l <= k ; ++l) {
                        for (unsigned q = 1 ; q <= n ; ++q)
                            b.duplicator_edge(A(i, t, l), B(j, q));
                        for (unsigned p = 1 ; p <= k ; ++p)
                            if (l != p)
                                b.duplicator_edge(A(i, t, l), B0(j, p));
                    }
            }

        Gadget g;
        g.kind = "switch";
        g.pair = b.finish();
        g.k = k;
        g.n = n;
        g.inputs = row("x", k);
        g.outputs = { row("y", k) };
        return g;
    }

    auto build_rs(const KaiRule & r, unsigned k, unsigned n) -> Gadget
    {
        check_rule(r, k, n);
        PairBuilder b;
        rule_frame(b, k, n);
        auto edge = [&] (unsigned i, unsigned from, unsigned to) {
            auto [x, y] = xy(i, from, to);
            b.duplicator_edge(x, y);
        };
        for (unsigned i = 1 ; i <= k ; ++i) {
            for (unsigned j = 0 ; j <= n ; ++j) {
                if (i == r.c)
                    edge(i, j, j == r.u ? r.w : 0);
                else if (i == r.d)
                    edge(i, j, j == r.v ? r.v : 0);
                else
                    edge(i, j, j == r.w ? 0 : j);
            }
        }
        return rule_gadget("RS", b, r, k, n);
    }

    auto build_rd(const KaiRule & r, unsigned k, unsigned n) -> Gadget
    {
        check_rule(r, k, n);
        PairBuilder b;
        rule_frame(b, k, n);
        auto edge = [&] (unsigned i, unsigned from, unsigned to) {
            auto [x, y] = xy(i, from, to);
            b.duplicator_edge(x, y);
        };
        for (unsigned i = 1 ; i <= k ; ++i) {
            if (i == r.c) {
                edge(i, 0, 0);
                edge(i, r.u, r.w);
            }
            else if (i == r.d) {
                edge(i, 0, 0);
                edge(i, r.v, r.v);
            }
            else
                for (unsigned j = 0 ; j <= n ; ++j)
                    if (j != r.w)
                        edge(i, j, j);
        }
        return rule_gadget("RD", b, r, k, n);
    }

    auto build_rule_gadgets(const KaiRule & r, unsigned k, unsigned n) -> std::pair<Gadget, Gadget>
    {
        return { build_rs(r, k, n), build_rd(r, k, n) };
    }

    auto build_init(const KaiPosition & start, unsigned k, unsigned n) -> Gadget
    {
        check(k, n);
        if (start.size() != k)
            throw PreconditionError("start position needs " + to_string(k) + " entries");
        for (auto x : start)
            if (x < 1 || x > n)
                throw PreconditionError("start position " + to_string(start) + " leaves 1.." + to_string(n));

        auto sw = build_switch(k, n);
        PairBuilder b;
        auto place = [&] (const string & prefix, const string & in, const string & out) {
            b.add(sw.pair, [&] (const string & v) {
                if (v[0] == 'x')
                    return in + v.substr(1);
                if (v[0] == 'y')
                    return out + v.substr(1);
                return prefix + "/" + v;
            });
        };
        place("M1", "a", "c");
        place("M2", "b", "d");

        b.spoiler("y");
        b.duplicator("y", "1");
        b.duplicator("y", "2");
        for (unsigned i = 1 ; i <= k ; ++i) {
            auto I = to_string(i);
            auto x = "x" + I;
            b.spoiler(x);
            for (unsigned j = 0 ; j <= n ; ++j)
                b.duplicator(x, to_string(j));
            b.spoiler_edge("y", "a" + I);
            b.spoiler_edge("y", "b" + I);
            b.spoiler_edge("c" + I, x);
            b.spoiler_edge("d" + I, x);

            auto S = to_string(start[i - 1]);
            b.duplicator_edge("y_1", "b" + I + "_0");
            b.duplicator_edge("y_1", "a" + I + "_" + S);
            b.duplicator_edge("y_1", "b" + I + "_" + S);
            b.duplicator_edge("y_2", "a" + I + "_0");
            b.duplicator_edge("y_2", "a" + I + "_" + S);
            b.duplicator_edge("y_2", "b" + I + "_" + S);
            for (unsigned j = 0 ; j <= n ; ++j) {
                b.duplicator_edge("c" + I + "_0", x + "_" + to_string(j));
                b.duplicator_edge("d" + I + "_0", x + "_" + to_string(j));
            }
            b.duplicator_edge("c" + I + "_" + S, x + "_" + S);
            b.duplicator_edge("d" + I + "_" + S, x + "_" + S);
        }

        Gadget g;
        g.kind = "init";
        g.pair = b.finish();
        g.k = k;
        g.n = n;
        g.start = start;
        g.inputs = {};
        g.outputs = { row("x", k) };
        return g;
    }

    auto build_choice(unsigned k, unsigned n, unsigned m, ChoiceEdges variant) -> Gadget
    {
        check(k, n);
        if (m < 1)
            throw PreconditionError("the choice gadget needs at least one output, got m = 0");

        PairBuilder b;
        auto out = [] (unsigned q, unsigned i) { return "y" + to_string(q) + "." + to_string(i); };
        for (unsigned i = 1 ; i <= k ; ++i) {
            auto I = to_string(i);
            b.spoiler("x" + I);
            b.spoiler("a" + I);
            b.spoiler_edge("x" + I, "a" + I);
            for (unsigned q = 1 ; q <= m ; ++q) {
                b.spoiler(out(q, i));
                b.spoiler_edge("a" + I, out(q, i));
            }
        }
        for (unsigned i = 1 ; i <= k ; ++i)
            for (unsigned j = i + 1 ; j <= k ; ++j)
                b.spoiler_edge("a" + to_string(i), "a" + to_string(j));

        auto A = [&] (unsigned i, unsigned l, unsigned q) { return "a" + to_string(i) + "_" + s(l, q); };
        for (unsigned i = 1 ; i <= k ; ++i) {
            auto I = to_string(i);
            for (unsigned l = 0 ; l <= n ; ++l)
                b.duplicator("x" + I, to_string(l));
            b.duplicator("a" + I, "0");
            for (unsigned l = 1 ; l <= n ; ++l)
                for (unsigned q = 1 ; q <= m ; ++q)
                    b.duplicator("a" + I, s(l, q));
            for (unsigned q = 1 ; q <= m ; ++q)
                for (unsigned l = 0 ; l <= n ; ++l)
                    b.duplicator(out(q, i), to_string(l));
        }

        for (unsigned i = 1 ; i <= k ; ++i) {
            auto I = to_string(i);
            b.duplicator_edge("x" + I + "_0", "a" + I + "_0");
            for (unsigned q = 1 ; q <= m ; ++q)
                b.duplicator_edge("a" + I + "_0", out(q, i) + "_0");
            for (unsigned l = 1 ; l <= n ; ++l)
                for (unsigned q = 1 ; q <= m ; ++q) {
                    b.duplicator_edge("x" + I + "_" + to_string(l), A(i, l, q));
                    b.duplicator_edge(A(i, l, q), out(q, i) + "_" + to_string(l));
                    for (unsigned q2 = 1 ; q2 <= m ; ++q2)
                        if (q2 != q)
                            b.duplicator_edge(A(i, l, q), out(q2, i) + "_0");
                }
            for (unsigned j = 1 ; j <= k ; ++j) {
                if (i == j)
                    continue;
                for (unsigned l = 1 ; l <= n ; ++l)
                    for (unsigned l2 = 1 ; l2 <= n ; ++l2)
                        for (unsigned q = 1 ; q <= m ; ++q)
                            b.duplicator_edge(A(i, l, q), A(j, l2, q));
                if (variant == ChoiceEdges::Repaired) {
                    b.duplicator_edge("a" + I + "_0", "a" + to_string(j) + "_0");
                    for (unsigned l = 1 ; l <= n ; ++l)
                        for (unsigned q = 1 ; q <= m ; ++q)
                            b.duplicator_edge("a" + I + "_0", A(j, l, q));
                }
            }
        }

        Gadget g;
        g.kind = "choice";
        g.pair = b.finish();
        g.k = k;
        g.n = n;
        g.m = m;
        g.inputs = row("x", k);
        for (unsigned q = 1 ; q <= m ; ++q) {
            vector<string> r;
            for (unsigned i = 1 ; i <= k ; ++i)
                r.push_back(out(q, i));
            g.outputs.push_back(r);
        }
        return g;
    }

    auto to_string(Orientation o) -> string
    {
        return o == Orientation::Text ? "text" : "figure";
    }

    auto decolor(const GamePair & pair, Orientation orientation) -> GamePair
    {
        if (! pair.colored())
            throw InputError("decoloring needs a fully colored pair");

        std::set<int> used;
        used.insert(pair.spoiler.colors()->begin(), pair.spoiler.colors()->end());
        used.insert(pair.duplicator.colors()->begin(), pair.duplicator.colors()->end());
        std::map<int, unsigned> index;
        for (auto c : used)
            index.emplace(c, index.size() + 1);
        unsigned w = used.size();

        GamePair result;
        auto convert = [&] (const Structure & in, const vector<string> & names, Structure & out, vector<string> & out_names) {
            size_t base = in.size();
            out = Structure(base + w + 1);
            out.add_relation("E", 2);
            out_names = names;
            for (unsigned i = 0 ; i <= w ; ++i)
                out_names.push_back("P/d" + to_string(i));
            for (auto & [name, r] : in.relations())
                for (auto & t : r.tuples)
                    out.add_tuple(name, t);
            auto d = [&] (unsigned i) { return Element(base + i); };
            for (Element x = 0 ; x < base ; ++x) {
                unsigned i = index.at(in.color(x));
                if (orientation == Orientation::Text) {
                    if (i < w) {
                        out.add_edge(d(i), x);
                        out.add_edge(x, d(i + 1));
                    }
                    else
                        out.add_edge(x, d(w));
                }
                else {
                    out.add_edge(x, d(i));
                    if (i < w)
                        out.add_edge(d(i + 1), x);
                }
            }
            out.add_edge(d(1), d(0));
            for (unsigned i = 0 ; i <= w ; ++i)
                out.add_edge(d(i), d(i));
            out.normalise();
        };
        convert(pair.spoiler, pair.spoiler_names, result.spoiler, result.spoiler_names);
        convert(pair.duplicator, pair.duplicator_names, result.duplicator, result.duplicator_names);
        result.index_names();
        return result;
    }

    auto ReductionOutput::placement(const string & id) const -> const Placement &
    {
        for (auto & p : placements)
            if (p.id == id)
                return p;
        throw PreconditionError("no gadget placed as '" + id + "'");
    }

    namespace
    {
        auto size_of(const string & id, const GamePair & p) -> GadgetSize
        {
            auto edges = [] (const Structure & s) {
                size_t count = 0;
                for (auto & [name, r] : s.relations())
                    for (auto & t : r.tuples)
                        count += t[0] < t[1] ? 1 : t[0] == t[1] ? 1 : 0;
                return count;
            };
            return GadgetSize{ id, p.spoiler.size(), p.duplicator.size(), edges(p.spoiler), edges(p.duplicator) };
        }
    }

    auto assemble_reduction(const KaiInstance & inst, const ReductionOptions & options) -> ReductionOutput
    {
        if (options.require_valid) {
            auto problems = validate_kai(inst);
            if (! problems.empty())
                throw InputError("invalid KAI instance: " + problems.front());
        }
        else if (inst.goal < 1 || inst.goal > inst.nodes)
            throw InputError("goal node " + to_string(inst.goal) + " is outside 1.." + to_string(inst.nodes));

        unsigned k = inst.k, n = inst.nodes, m = inst.rules.size();
        ReductionOutput result;
        result.instance = inst;
        result.x_row = row("X/x", k);
        result.y_row = row("Y/y", k);

        PairBuilder b;
        struct Pending
        {
            string id, kind;
            optional<size_t> rule;
            size_t gadget;
            std::pair<vector<string>, vector<string> > names;
        };
        vector<Pending> pending;

        auto place = [&] (const string & id, const string & kind, optional<size_t> rule, Gadget g,
                const std::map<string, string> & boundary) {
            result.gadgets.push_back(std::move(g));
            auto & proto = result.gadgets.back();
            auto names = b.add(proto.pair, [&] (const string & v) {
                auto it = boundary.find(v);
                return it != boundary.end() ? it->second : id + "/" + v;
            });
            pending.push_back(Pending{ id, kind, rule, result.gadgets.size() - 1, std::move(names) });
        };

        auto glue = [&] (std::map<string, string> & map, const vector<string> & local, const vector<string> & global) {
            for (size_t i = 0 ; i < local.size() ; ++i)
                map[local[i]] = global[i];
        };

        {
            std::map<string, string> bd;
            glue(bd, row("x", k), result.x_row);
            place("INIT", "init", std::nullopt, build_init(inst.start, k, n), bd);
        }
        if (m > 0) {
            std::map<string, string> bd;
            auto proto = build_choice(k, n, m, options.choice);
            glue(bd, proto.inputs, result.y_row);
            place("C", "choice", std::nullopt, std::move(proto), bd);
        }
        for (size_t l = 0 ; l < m ; ++l) {
            auto L = to_string(l + 1);
            auto & r = inst.rules[l];
            std::map<string, string> rs, ms, rd, md;
            glue(rs, row("x", k), result.x_row);
            glue(ms, row("x", k), row("RS" + L + "/y", k));
            glue(ms, row("y", k), result.y_row);
            auto choice_out = vector<string>();
            for (unsigned i = 1 ; i <= k ; ++i)
                choice_out.push_back("C/y" + L + "." + to_string(i));
            glue(rd, row("x", k), choice_out);
            glue(md, row("x", k), row("RD" + L + "/y", k));
            glue(md, row("y", k), result.x_row);
            place("RS" + L, "RS", l, build_rs(r, k, n), rs);
            place("MS" + L, "switch", l, build_switch(k, n), ms);
            place("RD" + L, "RD", l, build_rd(r, k, n), rd);
            place("MD" + L, "switch", l, build_switch(k, n), md);
        }

        // goal: y^i_gamma loses the color of y^i; without rules nothing is glued to the y row
        for (auto & y : m > 0 ? result.y_row : vector<string>{ }) {
            auto name = y + "_" + to_string(inst.goal);
            b.detach(name);
        }

        result.colored = b.finish();
        for (auto & p : pending) {
            Placement placement{ p.id, p.kind, p.rule, p.gadget, {}, {} };
            for (auto & v : p.names.first)
                placement.spoiler_map.push_back(result.colored.spoiler_vertex(v));
            for (auto & v : p.names.second)
                placement.duplicator_map.push_back(result.colored.duplicator_vertex(v));
            result.size.gadgets.push_back(size_of(p.id, result.gadgets[p.gadget].pair));
            result.placements.push_back(std::move(placement));
        }
        result.size.total = size_of("total", result.colored);
        result.size.colors = result.colored.color_count();
        if (options.decolor)
            result.plain = decolor(result.colored, options.orientation);
        return result;
    }
}

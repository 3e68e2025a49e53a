/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pebble/lemmas.hh>
#include <pebble/gadget_strategies.hh>
#include <pebble/pebble_game.hh>

#include <algorithm>
#include <random>
#include <tuple>

using std::size_t;
using std::string;
using std::vector;

namespace pebble
{
    using std::to_string;

    auto LemmaReport::failures() const -> size_t
    {
        return std::count_if(checks.begin(), checks.end(), [] (const LemmaCheck & c) { return ! c.passed; });
    }

    auto all_positions(unsigned k, unsigned n) -> vector<KaiPosition>
    {
        vector<KaiPosition> result;
        KaiPosition p(k, 1);
        while (true) {
            result.push_back(p);
            unsigned i = k;
            while (i > 0 && p[i - 1] == n)
                p[--i] = 1;
            if (i == 0)
                break;
            ++p[i - 1];
        }
        return result;
    }

    namespace
    {
        auto mask_string(unsigned T, unsigned k) -> string
        {
            string result = "{";
            for (unsigned i = 1 ; i <= k ; ++i)
                if (T >> (i - 1) & 1)
                    result += (result.size() > 1 ? "," : "") + to_string(i);
            return result + "}";
        }

        auto pt(const KaiPosition & p, unsigned T, unsigned k) -> string
        {
            return "p=" + to_string(p) + " T=" + mask_string(T, k);
        }

        /// Everything when the list is short or k = 2, otherwise a seeded random subset.
        template <typename T_>
        auto sample(vector<T_> all, const LemmaOptions & options, std::uint64_t salt) -> vector<T_>
        {
            if (options.k <= 2 || all.size() <= options.samples)
                return all;
            std::mt19937_64 rng(options.seed ^ (salt * 0x9e3779b97f4a7c15ULL));
            std::shuffle(all.begin(), all.end(), rng);
            all.resize(options.samples);
            return all;
        }

        struct Recorder
        {
            LemmaReport & report;
            string gadget;

            auto operator() (const string & clause, const string & params, bool passed, const string & detail = "") -> void
            {
                report.checks.push_back(LemmaCheck{ gadget, clause, params, passed, detail });
            }
        };

        auto describe(const StrategyReport & r) -> string
        {
            if (r.violations.empty())
                return "";
            auto & v = r.violations.front();
            string s = v.kind + " at " + v.member.to_string();
            if (v.element)
                s += " for element " + to_string(*v.element);
            return s + " (" + to_string(r.violation_count) + " violations)";
        }

        /// The family's boundary function, restricted to the given rows, equals the expected map, and
        /// every member agrees with it.
        auto boundary_ok(const Gadget & g, const StrategyFamily & f, const PartialHom & expected) -> bool
        {
            if (! f.boundary || boundary_violation(f))
                return false;
            auto dom = expected.domain();
            auto got = f.boundary->restricted_to([&] (Element e) { return std::binary_search(dom.begin(), dom.end(), e); });
            (void) g;
            return got == expected;
        }

        auto winning(const Gadget & g, const StrategyFamily & f, const PartialHom & expected, string & detail) -> bool
        {
            auto r = verify_strategy(g.pair.spoiler, g.pair.duplicator, g.k + 1, f, 1);
            detail = describe(r);
            bool bd = boundary_ok(g, f, expected);
            if (! bd)
                detail += " boundary mismatch";
            return r.is_winning && bd;
        }

        auto critical(const Gadget & g, const StrategyFamily & f, const PartialHom & expected, string & detail) -> bool
        {
            auto r = verify_strategy(g.pair.spoiler, g.pair.duplicator, g.k + 1, f, 1);
            detail = describe(r);
            bool bd = boundary_ok(g, f, expected);
            if (! bd)
                detail += " boundary mismatch";
            return r.is_critical && bd;
        }

        auto on(const Gadget & g, const vector<string> & row, const Encoded & e) -> PartialHom
        {
            return position_on(g.pair, row, e);
        }

        auto reach(const Gadget & g, const PartialHom & start, const vector<PartialHom> & targets) -> bool
        {
            return spoiler_reach(g.pair.spoiler, g.pair.duplicator, g.k + 1, start, targets);
        }

        auto all_rules(unsigned k, unsigned n) -> vector<KaiRule>
        {
            vector<std::array<unsigned, 3> > triples;
            for (unsigned u = 1 ; u <= n ; ++u)
                for (unsigned v = 1 ; v <= n ; ++v)
                    for (unsigned w = 1 ; w <= n ; ++w)
                        if (u != v && u != w && v != w)
                            triples.push_back({ u, v, w });
            return expand_rule_triples(triples, k);
        }
    }

    auto verify_rule_lemmas(const LemmaOptions & options, LemmaReport & report) -> void
    {
        unsigned k = options.k, n = options.n;
        if (n < 3)
            return;
        vector<std::pair<KaiRule, KaiPosition> > work;
        for (auto & r : all_rules(k, n))
            for (auto & p : all_positions(k, n))
                work.emplace_back(r, p);
        auto x = row("x", k), y = row("y", k);

        // cheap enough to stay exhaustive at every k, and sampling would rarely hit applicable rules
        for (auto & [r, p] : work) {
            auto [rs, rd] = build_rule_gadgets(r, k, n);
            auto name = "r=" + to_string(r) + " p=" + to_string(p);
            bool appl = applicable(r, p);
            Recorder rec_s{ report, "RS" }, rec_d{ report, "RD" };

            if (appl) {
                auto next = apply_rule(r, p);
                rec_s("(i) reach r(p)", name, reach(rs, on(rs, x, p), { on(rs, y, next) }));
                rec_d("(i) reach r(p)", name, reach(rd, on(rd, x, p), { on(rd, y, next) }));
            }
            else
                rec_d("(iii) Spoiler wins", name, reach(rd, on(rd, x, p), { }));

            unsigned blocked = 0;
            for (auto i : blocking_set(r, p))
                blocked |= 1u << (i - 1);
            for (unsigned T = 0 ; T <= full_mask(k) ; ++T) {
                string detail;
                auto f = rule_strategy(rs, p, T);
                auto expected = join(on(rs, x, overwrite(p, T)), on(rs, y, overwrite(apply_formally(r, p), T | blocked)));
                bool ok = winning(rs, f, expected, detail);
                rec_s("(ii) R winning", "r=" + to_string(r) + " " + pt(p, T, k), ok, detail);
                if (appl) {
                    auto fd = rule_strategy(rd, p, T);
                    auto expected_d = join(on(rd, x, overwrite(p, T)), on(rd, y, overwrite(apply_rule(r, p), T)));
                    ok = winning(rd, fd, expected_d, detail);
                    rec_d("(ii) R winning", "r=" + to_string(r) + " " + pt(p, T, k), ok, detail);
                }
            }
        }
    }

    auto verify_switch_lemma(const LemmaOptions & options, LemmaReport & report) -> void
    {
        unsigned k = options.k, n = options.n;
        auto g = build_switch(k, n);
        auto x = row("x", k), y = row("y", k);
        Recorder rec{ report, "switch" };
        auto zero = zero_position(k);

        for (auto & p : sample(all_positions(k, n), options, 2)) {
            auto name = "p=" + to_string(p);
            rec("(i) reach", name, reach(g, on(g, x, p), { on(g, y, p) }));

            for (unsigned T = 0 ; T <= full_mask(k) ; ++T) {
                string detail;
                auto f = switch_out(g, p, T);
                bool ok = winning(g, f, join(on(g, x, zero), on(g, y, overwrite(p, T))), detail);
                rec("(ii) out winning", pt(p, T, k), ok, detail);
                if (T != 0) {
                    auto h = switch_restart(g, p, T);
                    ok = winning(g, h, join(on(g, x, overwrite(p, T)), on(g, y, zero)), detail);
                    rec("(iii) restart winning", pt(p, T, k), ok, detail);
                }
            }

            string detail;
            auto in = switch_in(g, p);
            rec("(iv) in critical", name, critical(g, in, join(on(g, x, p), on(g, y, zero)), detail), detail);

            auto crit = switch_out_crit_set(g, p);
            for (unsigned t = 1 ; t <= k ; ++t) {
                auto c = switch_restart_crit_set(g, p, t);
                crit.insert(crit.end(), c.begin(), c.end());
            }
            std::sort(crit.begin(), crit.end());
            crit.erase(std::unique(crit.begin(), crit.end()), crit.end());
            auto members = in.critical_members();
            std::sort(members.begin(), members.end());
            rec("(iv)(a) crit is the union of the crit sets", name, members == crit);

            for (unsigned t = 1 ; t <= k ; ++t) {
                auto restart = switch_restart(g, p, 1u << (t - 1));
                bool all_in = true;
                for (auto & c : switch_restart_crit_set(g, p, t))
                    all_in = all_in && restart.contains(c);
                rec("(iv)(b) restart-crit in restart", name + " t=" + to_string(t), all_in);
            }
            auto out = switch_out(g, p, 0);
            bool all_out = true;
            for (auto & c : switch_out_crit_set(g, p))
                all_out = all_out && out.contains(c);
            rec("(iv)(c) out-crit in out", name, all_out);

            bool contained = true;
            for (auto & sigma : permutations(k)) {
                contained = contained && switch_out_crit(g, p, sigma).subset_of(switch_h_out(g, p, sigma))
                    && switch_out_crit(g, p, sigma).subset_of(switch_h_in(g, p, sigma));
                for (unsigned j = 1 ; j <= k ; ++j)
                    for (unsigned t = 1 ; t <= k ; ++t)
                        contained = contained && switch_restart_crit(g, p, sigma, j, t).subset_of(switch_h_in(g, p, sigma, sigma[t - 1]));
            }
            rec("crit positions lie in the generating maps", name, contained);
        }
    }

    auto verify_init_lemma(const LemmaOptions & options, LemmaReport & report) -> void
    {
        unsigned k = options.k, n = options.n;
        Recorder rec{ report, "init" };
        vector<std::tuple<KaiPosition, KaiPosition, unsigned> > work;
        auto positions = all_positions(k, n);
        auto starts = positions;
        if (k > 2 && starts.size() > options.init_starts) {
            LemmaOptions few = options;
            few.samples = options.init_starts;
            starts = sample(starts, few, 5);
        }
        for (auto & s : starts)
            for (auto & p : positions)
                for (unsigned T = 0 ; T <= full_mask(k) ; ++T)
                    work.emplace_back(s, p, T);
        work = sample(work, options, 3);
        std::sort(work.begin(), work.end());

        auto x = row("x", k);
        std::optional<KaiPosition> current;
        std::optional<Gadget> g;
        std::optional<UnionResult> winning_family;
        for (auto & [s, p, T] : work) {
            if (current != s) {
                current = s;
                g = build_init(s, k, n);
                auto name = "s=" + to_string(s);
                rec("(i) reach s", name, reach(*g, { }, { on(*g, x, s) }));
                winning_family = init_winning(*g);
                string detail;
                bool ok = winning(*g, winning_family->family, on(*g, x, s), detail);
                rec("(ii) I^init winning", name, ok && winning_family->uncovered.empty(),
                        detail + (winning_family->uncovered.empty() ? "" : " uncovered critical positions"));
            }
            auto at = init_at(*g, p, T);
            string detail;
            bool ok = critical(*g, at.family, on(*g, x, overwrite(p, T)), detail);
            bool covered = true;
            for (auto & c : at.family.critical_members())
                covered = covered && winning_family->family.contains(c);
            rec("(iii) critical, crit inside I^init", "s=" + to_string(s) + " " + pt(p, T, k), ok && covered,
                    detail + (covered ? "" : " crit not inside I^init"));
        }
    }

    auto verify_choice_lemma(const LemmaOptions & options, LemmaReport & report) -> void
    {
        unsigned k = options.k, n = options.n, m = options.m;
        auto g = build_choice(k, n, m, options.choice);
        Recorder rec{ report, "choice" };
        auto x = row("x", k);
        auto zero = zero_position(k);

        for (auto & p : sample(all_positions(k, n), options, 4)) {
            vector<PartialHom> targets;
            for (auto & out : g.outputs)
                targets.push_back(on(g, out, p));
            rec("(i) reach one output", "p=" + to_string(p) + " m=" + to_string(m), reach(g, on(g, x, p), targets));
            for (unsigned l = 1 ; l <= m ; ++l)
                for (unsigned T = 0 ; T <= full_mask(k) ; ++T) {
                    auto expected = on(g, x, overwrite(p, T));
                    for (unsigned q = 1 ; q <= m ; ++q)
                        expected = join(expected, on(g, g.outputs[q - 1], q == l ? overwrite(p, T) : zero));
                    string detail;
                    bool ok = winning(g, choice_strategy(g, l, p, T), expected, detail);
                    rec("(ii) C^l winning", "l=" + to_string(l) + " " + pt(p, T, k), ok, detail);
                }
        }
    }

    auto verify_gadget_lemmas(const LemmaOptions & options) -> LemmaReport
    {
        LemmaReport report;
        verify_rule_lemmas(options, report);
        verify_switch_lemma(options, report);
        verify_init_lemma(options, report);
        verify_choice_lemma(options, report);
        return report;
    }
}

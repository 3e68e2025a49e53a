/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pebble/kai.hh>

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <set>

using std::size_t;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace pebble
{
    auto to_string(KaiWinner w) -> string
    {
        return w == KaiWinner::Player1 ? "Player1" : "Player2";
    }

    auto to_string(const KaiRule & r) -> string
    {
        return "(" + std::to_string(r.u) + "," + std::to_string(r.v) + "," + std::to_string(r.w) + ","
            + std::to_string(r.c) + "," + std::to_string(r.d) + ")";
    }

    auto to_string(const KaiPosition & p) -> string
    {
        string result = "[";
        for (size_t i = 0 ; i < p.size() ; ++i)
            result += (i ? "," : "") + std::to_string(p[i]);
        return result + "]";
    }

    auto blocking_set(const KaiRule & r, const KaiPosition & p) -> vector<unsigned>
    {
        vector<unsigned> result;
        for (unsigned i = 1 ; i <= p.size() ; ++i)
            if ((i == r.c && p[i - 1] != r.u) || (i == r.d && p[i - 1] != r.v) || p[i - 1] == r.w)
                result.push_back(i);
        return result;
    }

    auto applicable(const KaiRule & r, const KaiPosition & p) -> bool
    {
        if (r.c < 1 || r.c > p.size() || r.d < 1 || r.d > p.size())
            return false;
        return blocking_set(r, p).empty();
    }

    auto apply_formally(const KaiRule & r, const KaiPosition & p) -> KaiPosition
    {
        auto result = p;
        result.at(r.c - 1) = r.w;
        return result;
    }

    auto apply_rule(const KaiRule & r, const KaiPosition & p) -> KaiPosition
    {
        auto blocked = blocking_set(r, p);
        if (! blocked.empty()) {
            string list;
            for (auto i : blocked)
                list += (list.empty() ? "" : ",") + std::to_string(i);
            throw PreconditionError("rule " + to_string(r) + " is not applicable at " + to_string(p) + ", blocking set {" + list + "}");
        }
        return apply_formally(r, p);
    }

    auto expand_rule_triples(const vector<std::array<unsigned, 3> > & triples, unsigned k) -> vector<KaiRule>
    {
        vector<KaiRule> result;
        for (auto & t : triples) {
            if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
                throw InputError("rule triple (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2])
                        + ") does not have pairwise distinct nodes");
            for (unsigned c = 1 ; c <= k ; ++c)
                for (unsigned d = 1 ; d <= k ; ++d)
                    if (c != d)
                        result.push_back(KaiRule{ t[0], t[1], t[2], c, d });
        }
        return result;
    }

    auto validate_kai(const KaiInstance & inst) -> vector<string>
    {
        vector<string> problems;
        if (inst.k < 2)
            problems.push_back("k must be at least 2, got " + std::to_string(inst.k));
        if (inst.nodes < 1)
            problems.push_back("there must be at least one node");
        auto node_ok = [&] (unsigned x) { return x >= 1 && x <= inst.nodes; };
        for (size_t i = 0 ; i < inst.rules.size() ; ++i) {
            auto & r = inst.rules[i];
            string where = "rule " + std::to_string(i + 1) + " " + to_string(r);
            if (! node_ok(r.u) || ! node_ok(r.v) || ! node_ok(r.w))
                problems.push_back(where + ": node out of range 1.." + std::to_string(inst.nodes));
            if (r.u == r.v || r.u == r.w || r.v == r.w)
                problems.push_back(where + ": nodes u,v,w must be pairwise distinct");
            if (r.c < 1 || r.c > inst.k || r.d < 1 || r.d > inst.k)
                problems.push_back(where + ": pebble out of range 1.." + std::to_string(inst.k));
            if (r.c == r.d)
                problems.push_back(where + ": pebbles c,d must be distinct");
        }
        if (inst.start.size() != inst.k)
            problems.push_back("start position has " + std::to_string(inst.start.size()) + " entries, expected k = " + std::to_string(inst.k));
        std::set<unsigned> seen;
        for (auto x : inst.start) {
            if (! node_ok(x))
                problems.push_back("start node " + std::to_string(x) + " out of range");
            if (! seen.insert(x).second)
                problems.push_back("start position is not injective: node " + std::to_string(x) + " carries two pebbles");
        }
        if (! node_ok(inst.goal))
            problems.push_back("goal node " + std::to_string(inst.goal) + " out of range");
        else if (seen.count(inst.goal))
            problems.push_back("start position already pebbles the goal node " + std::to_string(inst.goal));
        return problems;
    }

    namespace
    {
        struct PositionSpace
        {
            unsigned k, n;
            vector<KaiPosition> positions;
            vector<std::int64_t> index_of;

            auto code(const KaiPosition & p) const -> uint64_t
            {
                uint64_t c = 0;
                for (auto x : p)
                    c = c * (n + 1) + x;
                return c;
            }

            auto index(const KaiPosition & p) const -> std::int64_t { return index_of[code(p)]; }
        };

        auto build_space(unsigned k, unsigned n, uint64_t budget) -> PositionSpace
        {
            PositionSpace space{ k, n, {}, {} };
            double codes = 1;
            for (unsigned i = 0 ; i < k ; ++i)
                codes *= n + 1;
            if (codes > double(budget))
                throw ResourceError("KAI position space (" + std::to_string(n) + "+1)^" + std::to_string(k) + " exceeds the budget of "
                        + std::to_string(budget));
            space.index_of.assign(uint64_t(codes), -1);

            KaiPosition p(k, 0);
            vector<bool> used(n + 1, false);
            std::function<void (unsigned)> place = [&] (unsigned i) {
                if (i == k) {
                    space.index_of[space.code(p)] = space.positions.size();
                    space.positions.push_back(p);
                    return;
                }
                for (unsigned x = 1 ; x <= n ; ++x)
                    if (! used[x]) {
                        used[x] = true;
                        p[i] = x;
                        place(i + 1);
                        used[x] = false;
                    }
            };
            place(0);
            return space;
        }
    }

    auto solve_kai(const KaiInstance & inst, uint64_t budget) -> KaiSolution
    {
        auto problems = validate_kai(inst);
        if (! problems.empty())
            throw InputError("invalid KAI instance: " + problems.front());

        auto space = build_space(inst.k, inst.nodes, budget);
        size_t count = space.positions.size();
        auto & rules = inst.rules;

        // successor lists, one entry per applicable rule
        vector<vector<std::pair<size_t, size_t> > > succ(count), pred(count);
        for (size_t i = 0 ; i < count ; ++i)
            for (size_t r = 0 ; r < rules.size() ; ++r)
                if (applicable(rules[r], space.positions[i])) {
                    auto next = apply_rule(rules[r], space.positions[i]);
                    auto j = space.index(next);
                    if (j < 0)
                        throw std::logic_error("rule application broke injectivity");
                    succ[i].emplace_back(r, j);
                    pred[j].emplace_back(r, i);
                }

        auto has_goal = [&] (size_t i) {
            auto & p = space.positions[i];
            return std::find(p.begin(), p.end(), inst.goal) != p.end();
        };

        // attractor for Player 1; states are (position, whose turn), rank = order of discovery
        constexpr uint64_t unset = ~uint64_t(0);
        vector<uint64_t> rank1(count, unset), rank2(count, unset);
        vector<size_t> pending(count);
        std::deque<std::pair<size_t, int> > queue;
        uint64_t next_rank = 0;
        for (size_t i = 0 ; i < count ; ++i) {
            pending[i] = succ[i].size();
            if (has_goal(i) || succ[i].empty()) {
                rank2[i] = next_rank++;
                queue.emplace_back(i, 2);
            }
        }
        while (! queue.empty()) {
            auto [i, turn] = queue.front();
            queue.pop_front();
            if (turn == 2) {
                // Player 1 moves into a won Player 2 state
                for (auto [r, j] : pred[i])
                    if (rank1[j] == unset) {
                        rank1[j] = next_rank++;
                        queue.emplace_back(j, 1);
                    }
            }
            else {
                for (auto [r, j] : pred[i])
                    if (rank2[j] == unset && --pending[j] == 0) {
                        rank2[j] = next_rank++;
                        queue.emplace_back(j, 2);
                    }
            }
        }

        KaiSolution solution;
        solution.positions = count;
        auto s = space.index(inst.start);

        if (rank1[s] != unset) {
            solution.winner = KaiWinner::Player1;
            size_t at = s;
            while (true) {
                // Player 1 picks the fastest win
                std::pair<size_t, size_t> best{ 0, 0 };
                uint64_t best_rank = unset;
                for (auto [r, j] : succ[at])
                    if (rank2[j] < best_rank)
                        best_rank = rank2[j], best = { r, j };
                solution.line.push_back(KaiMove{ space.positions[at], best.first, space.positions[best.second] });
                at = best.second;
                if (has_goal(at) || succ[at].empty())
                    break;
                // Player 2 delays as long as possible
                uint64_t worst_rank = 0;
                for (auto [r, j] : succ[at])
                    if (rank1[j] >= worst_rank)
                        worst_rank = rank1[j], best = { r, j };
                solution.line.push_back(KaiMove{ space.positions[at], best.first, space.positions[best.second] });
                at = best.second;
            }
            return solution;
        }

        solution.winner = KaiWinner::Player2;
        KaiStrategy strategy;
        vector<bool> in1(count, false), in2(count, false);
        std::deque<std::pair<size_t, int> > todo{ { size_t(s), 1 } };
        in1[s] = true;
        while (! todo.empty()) {
            auto [i, turn] = todo.front();
            todo.pop_front();
            if (turn == 1) {
                strategy.k1.push_back(space.positions[i]);
                for (auto [r, j] : succ[i])
                    if (! in2[j]) {
                        in2[j] = true;
                        todo.emplace_back(j, 2);
                    }
            }
            else {
                strategy.k2.push_back(space.positions[i]);
                bool found = false;
                for (auto [r, j] : succ[i])
                    if (rank1[j] == unset) {
                        strategy.kappa[space.positions[i]] = r;
                        if (! in1[j]) {
                            in1[j] = true;
                            todo.emplace_back(j, 1);
                        }
                        found = true;
                        break;
                    }
                if (! found)
                    throw std::logic_error("Player 2 state outside the attractor has no safe move");
            }
        }
        std::sort(strategy.k1.begin(), strategy.k1.end());
        std::sort(strategy.k2.begin(), strategy.k2.end());

        auto failures = check_kai_strategy(inst, strategy);
        if (! failures.empty())
            throw std::logic_error("emitted KAI strategy fails its own check: " + failures.front());
        solution.strategy = std::move(strategy);
        return solution;
    }

    auto check_kai_strategy(const KaiInstance & inst, const KaiStrategy & strategy) -> vector<string>
    {
        vector<string> failures;
        std::set<KaiPosition> k1(strategy.k1.begin(), strategy.k1.end()), k2(strategy.k2.begin(), strategy.k2.end());

        if (! k1.count(inst.start))
            failures.push_back("start position " + to_string(inst.start) + " is not in K1");

        for (auto & p : k1)
            for (auto & r : inst.rules)
                if (applicable(r, p) && ! k2.count(apply_rule(r, p)))
                    failures.push_back("K1 position " + to_string(p) + " has rule " + to_string(r) + " leading outside K2");

        for (auto & p : k2) {
            if (std::find(p.begin(), p.end(), inst.goal) != p.end())
                failures.push_back("K2 position " + to_string(p) + " pebbles the goal");
            auto it = strategy.kappa.find(p);
            if (it == strategy.kappa.end() || it->second >= inst.rules.size()) {
                failures.push_back("K2 position " + to_string(p) + " has no chosen rule");
                continue;
            }
            auto & r = inst.rules[it->second];
            if (! applicable(r, p))
                failures.push_back("chosen rule " + to_string(r) + " is not applicable at K2 position " + to_string(p));
            else if (! k1.count(apply_rule(r, p)))
                failures.push_back("chosen rule " + to_string(r) + " leads from K2 position " + to_string(p) + " outside K1");
        }
        return failures;
    }
}

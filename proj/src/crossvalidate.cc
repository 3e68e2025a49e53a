/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pebble/crossvalidate.hh>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <thread>

using std::size_t;
using std::vector;

namespace pebble
{
    auto all_rule_triples(unsigned n) -> vector<std::array<unsigned, 3> >
    {
        vector<std::array<unsigned, 3> > result;
        for (unsigned u = 1 ; u <= n ; ++u)
            for (unsigned v = 1 ; v <= n ; ++v)
                for (unsigned w = 1 ; w <= n ; ++w)
                    if (u != v && u != w && v != w)
                        result.push_back({ u, v, w });
        return result;
    }

    namespace
    {
        auto injective_starts(unsigned k, unsigned n) -> vector<KaiPosition>
        {
            vector<KaiPosition> result;
            KaiPosition p;
            std::function<void ()> extend = [&] {
                if (p.size() == k) {
                    result.push_back(p);
                    return;
                }
                for (unsigned x = 1 ; x <= n ; ++x)
                    if (std::find(p.begin(), p.end(), x) == p.end()) {
                        p.push_back(x);
                        extend();
                        p.pop_back();
                    }
            };
            extend();
            return result;
        }
    }

    auto enumerate_kai_instances(unsigned k, unsigned n, unsigned max_triples) -> vector<KaiInstance>
    {
        auto triples = all_rule_triples(n);
        vector<vector<std::array<unsigned, 3> > > sets;
        for (unsigned size = 0 ; size <= max_triples && size <= triples.size() ; ++size) {
            vector<size_t> pick(size);
            std::iota(pick.begin(), pick.end(), 0);
            while (true) {
                vector<std::array<unsigned, 3> > set;
                for (auto i : pick)
                    set.push_back(triples[i]);
                sets.push_back(set);
                int i = int(size) - 1;
                while (i >= 0 && pick[i] == triples.size() - size + i)
                    --i;
                if (i < 0)
                    break;
                ++pick[i];
                for (size_t j = i + 1 ; j < size ; ++j)
                    pick[j] = pick[j - 1] + 1;
            }
        }

        auto starts = injective_starts(k, n);
        vector<KaiInstance> result;
        for (auto & set : sets)
            for (auto & s : starts)
                for (unsigned goal = 1 ; goal <= n ; ++goal)
                    if (std::find(s.begin(), s.end(), goal) == s.end())
                        result.push_back(KaiInstance{ k, n, expand_rule_triples(set, k), s, goal });
        return result;
    }

    auto random_kai_instance(std::mt19937_64 & rng, unsigned k, unsigned n, unsigned count) -> KaiInstance
    {
        if (n < k + 1)
            throw InputError("a valid instance needs more nodes than pebbles");
        auto triples = all_rule_triples(n);
        if (count > triples.size())
            throw InputError("only " + std::to_string(triples.size()) + " distinct rule triples exist on " + std::to_string(n) + " nodes");
        std::shuffle(triples.begin(), triples.end(), rng);
        triples.resize(count);
        std::sort(triples.begin(), triples.end());

        vector<unsigned> nodes(n);
        std::iota(nodes.begin(), nodes.end(), 1u);
        std::shuffle(nodes.begin(), nodes.end(), rng);
        KaiPosition start(nodes.begin(), nodes.begin() + k);
        return KaiInstance{ k, n, expand_rule_triples(triples, k), start, nodes[k] };
    }

    auto CrossCase::agrees() const -> bool
    {
        if (! skipped.empty() || ! kai || ! colored)
            return false;
        bool spoiler = *kai == KaiWinner::Player1;
        if ((*colored == Winner::Spoiler) != spoiler)
            return false;
        return ! plain || (*plain == Winner::Spoiler) == spoiler;
    }

    auto CrossSummary::agreements() const -> size_t
    {
        return std::count_if(cases.begin(), cases.end(), [] (const CrossCase & c) { return c.agrees(); });
    }

    auto CrossSummary::skipped() const -> size_t
    {
        return std::count_if(cases.begin(), cases.end(), [] (const CrossCase & c) { return ! c.skipped.empty(); });
    }

    auto CrossSummary::disagreements() const -> size_t
    {
        return cases.size() - agreements() - skipped();
    }

    namespace
    {
        auto run_case(const KaiInstance & inst, const CrossOptions & options) -> CrossCase
        {
            CrossCase c;
            c.instance = inst;
            auto start = std::chrono::steady_clock::now();
            try {
                c.kai = solve_kai(inst, options.budget).winner;
                ReductionOptions ro;
                ro.decolor = options.decolor.has_value();
                if (options.decolor)
                    ro.orientation = *options.decolor;
                auto red = assemble_reduction(inst, ro);
                c.spoiler_vertices = red.colored.spoiler.size();
                c.duplicator_vertices = red.colored.duplicator.size();
                SolveOptions so;
                so.budget = options.budget;
                auto r = solve_game(red.colored.spoiler, red.colored.duplicator, red.pebbles(), so);
                c.colored = r.winner;
                c.configurations = r.configurations;
                if (red.plain) {
                    // the d apparatus multiplies the configuration space, so try a total homomorphism first
                    so.homomorphism_shortcut = true;
                    auto p = solve_game(red.plain->spoiler, red.plain->duplicator, red.pebbles(), so);
                    c.plain = p.winner;
                    c.configurations += p.configurations;
                }
            }
            catch (const ResourceError & e) {
                c.skipped = std::string("budget exceeded: ") + e.what();
            }
            c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return c;
        }
    }

    auto crossvalidate(const vector<KaiInstance> & instances, const CrossOptions & options) -> CrossSummary
    {
        CrossSummary summary;
        summary.cases.resize(instances.size());
        std::atomic<size_t> next{ 0 };
        auto work = [&] {
            for (size_t i ; (i = next++) < instances.size() ; )
                summary.cases[i] = run_case(instances[i], options);
        };
        unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, instances.size()));
        vector<std::thread> threads;
        for (unsigned j = 1 ; j < jobs ; ++j)
            threads.emplace_back(work);
        work();
        for (auto & t : threads)
            t.join();
        return summary;
    }
}

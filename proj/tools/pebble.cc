/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pebble/consistency.hh>
#include <pebble/crossvalidate.hh>
#include <pebble/gadgets.hh>
#include <pebble/io.hh>
#include <pebble/kai.hh>
#include <pebble/lemmas.hh>
#include <pebble/pebble_game.hh>

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>

using namespace pebble;
using std::string;
using std::vector;

namespace
{
    enum ExitCode
    {
        success = 0,
        input_error = 2,
        budget_exceeded = 3,
        property_violation = 4
    };

    struct Common
    {
        string out;
        std::uint64_t seed = 1;
        std::uint64_t budget = default_config_budget;
        std::optional<string> decolor;
    };

    auto emit(const Common & common, const string & text) -> void
    {
        if (common.out.empty() || common.out == "-") {
            std::cout << text;
            return;
        }
        std::ofstream f(common.out);
        if (! f)
            throw InputError("cannot write " + common.out);
        f << text;
    }

    auto emit(const Common & common, const Json & j) -> void
    {
        emit(common, j.dump(2) + "\n");
    }

    auto orientation(const Common & common) -> std::optional<Orientation>
    {
        if (! common.decolor)
            return std::nullopt;
        if (*common.decolor == "text" || common.decolor->empty())
            return Orientation::Text;
        if (*common.decolor == "figure")
            return Orientation::Figure;
        throw InputError("--decolor takes text or figure, not '" + *common.decolor + "'");
    }

    auto reduction_options(const Common & common) -> ReductionOptions
    {
        ReductionOptions o;
        auto d = orientation(common);
        o.decolor = d.has_value();
        if (d)
            o.orientation = *d;
        return o;
    }

    auto load_instance(const string & path) -> KaiInstance
    {
        auto inst = kai_from_json(read_json_file(path));
        auto problems = validate_kai(inst);
        if (! problems.empty())
            throw InputError("invalid KAI instance: " + problems.front());
        return inst;
    }

    auto to_json(const GadgetSize & s) -> Json
    {
        return Json{ { "id", s.id }, { "spoiler_vertices", s.spoiler_vertices }, { "duplicator_vertices", s.duplicator_vertices },
            { "spoiler_edges", s.spoiler_edges }, { "duplicator_edges", s.duplicator_edges } };
    }

    auto to_json(const SizeReport & r) -> Json
    {
        Json gadgets = Json::array();
        for (auto & g : r.gadgets)
            gadgets.push_back(to_json(g));
        return Json{ { "gadgets", gadgets }, { "total", to_json(r.total) }, { "colors", r.colors } };
    }

    auto to_json(const CrossCase & c) -> Json
    {
        auto w = [] (auto & x) -> Json { return x ? Json(to_string(*x)) : Json(nullptr); };
        Json j{ { "instance", pebble::to_json(c.instance) }, { "kai", w(c.kai) }, { "colored", w(c.colored) } };
        if (c.plain)
            j["plain"] = to_string(*c.plain);
        j["agrees"] = c.agrees();
        j["spoiler_vertices"] = c.spoiler_vertices;
        j["duplicator_vertices"] = c.duplicator_vertices;
        j["configurations"] = c.configurations;
        if (! c.skipped.empty())
            j["skipped"] = c.skipped;
        return j;
    }

    /// Pairs come either from a GamePair file, from two structure files, or from reducing an instance.
    struct PairSource
    {
        string pair, spoiler, duplicator, instance;

        auto add(CLI::App * app) -> void
        {
            app->add_option("--pair", pair, "GamePair JSON");
            app->add_option("--spoiler", spoiler, "structure JSON for Spoiler's side (A)");
            app->add_option("--duplicator", duplicator, "structure JSON for Duplicator's side (B)");
            app->add_option("--instance", instance, "KAI instance JSON, reduced first");
        }

        auto load(const Common & common, std::size_t & pebbles) const -> GamePair
        {
            int given = ! pair.empty() + ! instance.empty() + (! spoiler.empty() || ! duplicator.empty());
            if (given != 1)
                throw InputError("give exactly one of --pair, --instance, or --spoiler with --duplicator");
            if (! pair.empty())
                return game_pair_from_json(read_json_file(pair));
            if (! instance.empty()) {
                auto red = assemble_reduction(load_instance(instance), reduction_options(common));
                if (pebbles == 0)
                    pebbles = red.pebbles();
                return red.plain ? *red.plain : red.colored;
            }
            if (spoiler.empty() || duplicator.empty())
                throw InputError("--spoiler and --duplicator go together");
            GamePair p;
            p.spoiler = structure_from_json(read_json_file(spoiler));
            p.duplicator = structure_from_json(read_json_file(duplicator));
            for (Element v = 0 ; v < p.spoiler.size() ; ++v)
                p.spoiler_names.push_back("a" + std::to_string(v));
            for (Element v = 0 ; v < p.duplicator.size() ; ++v)
                p.duplicator_names.push_back("b" + std::to_string(v));
            p.index_names();
            return p;
        }
    };

    auto least_squares_slope(const vector<double> & xs, const vector<double> & ys) -> double
    {
        double n = xs.size(), sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0 ; i < xs.size() ; ++i) {
            sx += xs[i];
            sy += ys[i];
            sxx += xs[i] * xs[i];
            sxy += xs[i] * ys[i];
        }
        double d = n * sxx - sx * sx;
        return d == 0 ? NAN : (n * sxy - sx * sy) / d;
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{ "Existential pebble games, the KAI game and the reduction between them" };
    app.require_subcommand(1);
    Common common;

    auto add_common = [&] (CLI::App * sub, bool decolor) {
        sub->add_option("--out", common.out, "output file (default stdout)");
        sub->add_option("--seed", common.seed, "64-bit seed for all randomness");
        sub->add_option("--budget-configs", common.budget, "configuration budget per solver call");
        if (decolor)
            sub->add_option("--decolor", common.decolor, "decolor the reduction (text or figure orientation)")
                ->expected(0, 1)->default_str("text");
    };

    unsigned k = 2, nodes = 4, triples = 1, rules = 0;
    string instance_path;

    auto gen = app.add_subcommand("gen-kai", "generate a random valid KAI instance");
    add_common(gen, false);
    gen->add_option("--k", k, "pebbles")->check(CLI::Range(2u, 16u));
    gen->add_option("--nodes", nodes, "nodes");
    auto triples_opt = gen->add_option("--rule-triples", triples, "number of rule triples, each expanded over all pebble pairs");
    gen->add_option("--rules", rules, "number of single rules instead of triples")->excludes(triples_opt);

    auto solve_kai_cmd = app.add_subcommand("solve-kai", "solve a KAI instance");
    add_common(solve_kai_cmd, false);
    solve_kai_cmd->add_option("instance", instance_path, "instance JSON")->required();

    auto reduce = app.add_subcommand("reduce", "build the game pair for a KAI instance");
    add_common(reduce, true);
    reduce->add_option("instance", instance_path, "instance JSON")->required();

    PairSource source;
    std::size_t pebbles = 0;
    bool witness = false;
    auto solve_pebble = app.add_subcommand("solve-pebble", "solve the existential pebble game");
    add_common(solve_pebble, true);
    source.add(solve_pebble);
    solve_pebble->add_option("--k", pebbles, "pebbles (default: k+1 for a reduced instance)");
    solve_pebble->add_flag("--witness", witness, "print Duplicator's greatest winning family");

    auto consistency = app.add_subcommand("consistency", "establish strong k-consistency");
    add_common(consistency, false);
    source.add(consistency);
    consistency->add_option("--k", pebbles, "k")->required();

    std::size_t samples = 50;
    unsigned outputs = 1;
    auto lemmas = app.add_subcommand("verify-lemmas", "check the gadget lemmas on explicit strategy families");
    add_common(lemmas, false);
    lemmas->add_option("--k", k, "pebbles")->check(CLI::Range(2u, 4u));
    lemmas->add_option("--nodes", nodes, "n");
    lemmas->add_option("--choice-outputs", outputs, "m, the outputs of the choice gadget");
    lemmas->add_option("--samples", samples, "positions drawn when there are more (k >= 3)");

    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::size_t random_cases = 0;
    auto cross = app.add_subcommand("crossvalidate", "compare KAI winners with pebble game winners on the reduction");
    add_common(cross, true);
    cross->add_option("--k", k, "pebbles");
    cross->add_option("--nodes", nodes, "nodes");
    cross->add_option("--rule-triples", triples, "largest triple set (exhaustive) or triples per instance (--random)");
    cross->add_option("--random", random_cases, "this many random instances instead of the exhaustive sweep");
    cross->add_option("--jobs", jobs, "worker threads");

    string side = "duplicator";
    auto dot = app.add_subcommand("export-dot", "write one side of a pair as DOT");
    add_common(dot, true);
    source.add(dot);
    dot->add_option("--side", side, "spoiler or duplicator");

    unsigned max_nodes = 6, per_size = 3;
    auto bench = app.add_subcommand("bench", "time the solvers against n and fit exponents");
    add_common(bench, false);
    bench->add_option("--k", k, "pebbles");
    bench->add_option("--nodes", max_nodes, "largest n");
    bench->add_option("--rule-triples", triples, "triples per instance");
    bench->add_option("--samples", per_size, "instances per n");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? success : input_error;
    }

    try {
        if (*gen) {
            std::mt19937_64 rng(common.seed);
            KaiInstance inst;
            if (rules > 0) {
                inst = random_kai_instance(rng, k, nodes, 0);
                vector<KaiRule> all;
                for (auto & t : all_rule_triples(nodes))
                    for (auto & r : expand_rule_triples({ t }, k))
                        all.push_back(r);
                if (rules > all.size())
                    throw InputError("only " + std::to_string(all.size()) + " distinct rules exist");
                std::shuffle(all.begin(), all.end(), rng);
                all.resize(rules);
                std::sort(all.begin(), all.end());
                inst.rules = all;
            }
            else
                inst = random_kai_instance(rng, k, nodes, triples);
            emit(common, pebble::to_json(inst));
        }
        else if (*solve_kai_cmd) {
            auto sol = solve_kai(load_instance(instance_path), common.budget);
            emit(common, pebble::to_json(sol));
        }
        else if (*reduce) {
            auto red = assemble_reduction(load_instance(instance_path), reduction_options(common));
            Json j{ { "instance", pebble::to_json(red.instance) }, { "pebbles", red.pebbles() },
                { "colored", pebble::to_json(red.colored) }, { "size", to_json(red.size) } };
            if (red.plain)
                j["plain"] = pebble::to_json(*red.plain);
            emit(common, j);
        }
        else if (*solve_pebble) {
            auto pair = source.load(common, pebbles);
            if (pebbles == 0)
                throw InputError("--k is required unless the pair comes from --instance");
            SolveOptions o;
            o.budget = common.budget;
            o.witness = witness;
            auto r = solve_game(pair.spoiler, pair.duplicator, pebbles, o);
            Json j{ { "winner", to_string(r.winner) }, { "pebbles", pebbles }, { "configurations", r.configurations } };
            if (r.witness)
                j["witness"] = pebble::to_json(*r.witness);
            emit(common, j);
        }
        else if (*consistency) {
            auto pair = source.load(common, pebbles);
            auto r = establish_strong_k_consistency(pair.spoiler, pair.duplicator, pebbles, common.budget);
            Json relations = Json::array();
            for (auto & s : scope_relations(r.established_family))
                relations.push_back(pebble::to_json(s));
            emit(common, Json{ { "k", pebbles }, { "establishable", r.establishable },
                    { "consistent", is_strongly_k_consistent(pair.spoiler, pair.duplicator, pebbles, { }, common.budget) },
                    { "initial_size", r.initial_size }, { "relations", relations } });
        }
        else if (*lemmas) {
            LemmaOptions o;
            o.k = k;
            o.n = nodes;
            o.m = outputs;
            o.samples = samples;
            o.seed = common.seed;
            auto report = verify_gadget_lemmas(o);
            std::map<string, std::pair<std::size_t, std::size_t> > counts;
            Json failures = Json::array();
            for (auto & c : report.checks) {
                auto & [all, bad] = counts[c.gadget + " " + c.clause];
                ++all;
                if (! c.passed) {
                    ++bad;
                    failures.push_back({ { "gadget", c.gadget }, { "clause", c.clause }, { "params", c.params }, { "detail", c.detail } });
                }
            }
            Json clauses = Json::array();
            for (auto & [name, c] : counts)
                clauses.push_back({ { "clause", name }, { "checks", c.first }, { "failed", c.second } });
            emit(common, Json{ { "k", k }, { "n", nodes }, { "m", outputs }, { "passed", report.passed() },
                    { "clauses", clauses }, { "failures", failures } });
            if (! report.passed())
                return property_violation;
        }
        else if (*cross) {
            vector<KaiInstance> instances;
            if (random_cases > 0) {
                std::mt19937_64 rng(common.seed);
                for (std::size_t i = 0 ; i < random_cases ; ++i)
                    instances.push_back(random_kai_instance(rng, k, nodes, triples));
            }
            else
                instances = enumerate_kai_instances(k, nodes, triples);
            CrossOptions o;
            o.budget = common.budget;
            o.decolor = orientation(common);
            o.jobs = jobs;
            auto summary = crossvalidate(instances, o);
            Json cases = Json::array();
            for (auto & c : summary.cases)
                cases.push_back(to_json(c));
            emit(common, Json{ { "instances", summary.cases.size() }, { "agreements", summary.agreements() },
                    { "disagreements", summary.disagreements() }, { "skipped", summary.skipped() }, { "cases", cases } });
            if (summary.disagreements() > 0)
                return property_violation;
        }
        else if (*dot) {
            auto s = side_from_string(side);
            auto pair = source.load(common, pebbles);
            emit(common, export_dot(pair, s));
        }
        else if (*bench) {
            std::mt19937_64 rng(common.seed);
            Json rows = Json::array();
            vector<double> log_n, log_kai, log_game;
            for (unsigned n = k + 1 ; n <= max_nodes ; ++n) {
                double kai_time = 0, game_time = 0;
                std::size_t solved = 0;
                for (unsigned i = 0 ; i < per_size ; ++i) {
                    auto inst = random_kai_instance(rng, k, n, std::min<unsigned>(triples, all_rule_triples(n).size()));
                    auto t0 = std::chrono::steady_clock::now();
                    solve_kai(inst, common.budget);
                    auto t1 = std::chrono::steady_clock::now();
                    try {
                        auto red = assemble_reduction(inst);
                        SolveOptions o;
                        o.budget = common.budget;
                        solve_game(red.colored.spoiler, red.colored.duplicator, red.pebbles(), o);
                        ++solved;
                    }
                    catch (const ResourceError &) {
                    }
                    auto t2 = std::chrono::steady_clock::now();
                    kai_time += std::chrono::duration<double>(t1 - t0).count();
                    game_time += std::chrono::duration<double>(t2 - t1).count();
                }
                kai_time /= per_size;
                game_time /= per_size;
                rows.push_back({ { "n", n }, { "kai_seconds", kai_time }, { "game_seconds", game_time }, { "game_solved", solved } });
                log_n.push_back(std::log(n));
                log_kai.push_back(std::log(std::max(kai_time, 1e-9)));
                log_game.push_back(std::log(std::max(game_time, 1e-9)));
            }
            auto exponent = [] (double x) -> Json { return std::isnan(x) ? Json(nullptr) : Json(x); };
            emit(common, Json{ { "k", k }, { "rows", rows }, { "kai_exponent", exponent(least_squares_slope(log_n, log_kai)) },
                    { "game_exponent", exponent(least_squares_slope(log_n, log_game)) } });
        }
    }
    catch (const InputError & e) {
        std::cerr << "input error: " << e.what() << "\n";
        return input_error;
    }
    catch (const PreconditionError & e) {
        std::cerr << "input error: " << e.what() << "\n";
        return input_error;
    }
    catch (const ResourceError & e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return budget_exceeded;
    }
    return success;
}

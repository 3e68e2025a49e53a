/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PEBBLE_GUARD_IO_HH
#define PEBBLE_GUARD_IO_HH 1

#include <pebble/consistency.hh>
#include <pebble/game_pair.hh>
#include <pebble/kai.hh>
#include <pebble/strategy.hh>
#include <pebble/structure.hh>

#include <json.hpp>

#include <string>

namespace pebble
{
    using Json = nlohmann::ordered_json;

    /// {"universe": n, "relations": {"E": {"arity": 2, "tuples": [...]}}, "colors": [...]}
    auto to_json(const Structure &) -> Json;
    auto structure_from_json(const Json &) -> Structure;

    /// Always printed with the expanded "rules"; either "rules" or "rule_triples" is accepted.
    auto to_json(const KaiInstance &) -> Json;
    auto kai_from_json(const Json &) -> KaiInstance;

    auto to_json(const KaiStrategy &) -> Json;
    auto to_json(const KaiSolution &) -> Json;

    /// {"members": [{"map": [[a, b], ...], "critical": bool}], "boundary": [...], "scope": [...]}
    auto to_json(const PartialHom &) -> Json;
    auto partial_hom_from_json(const Json &) -> PartialHom;
    auto to_json(const StrategyFamily &) -> Json;
    auto family_from_json(const Json &) -> StrategyFamily;

    /// Both structures plus the vertex names, which carry the block registry.
    auto to_json(const GamePair &) -> Json;
    auto game_pair_from_json(const Json &) -> GamePair;

    auto to_json(const ScopeRelation &) -> Json;

    /// Parse errors and missing files become InputError.
    auto read_json_file(const std::string & path) -> Json;
    auto parse_json(const std::string & text) -> Json;

    enum class Side
    {
        Spoiler,
        Duplicator
    };

    /// "spoiler" or "duplicator", anything else is an InputError.
    auto side_from_string(const std::string &) -> Side;

    /// Color classes become clusters, named after the Spoiler vertex of that color. A symmetric edge
    /// relation is written as an undirected graph.
    auto export_dot(const GamePair &, Side) -> std::string;
    auto export_dot(const Structure &, const std::vector<std::string> & names = {}) -> std::string;
}

#endif

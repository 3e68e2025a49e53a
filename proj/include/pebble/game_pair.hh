/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PEBBLE_GUARD_GAME_PAIR_HH
#define PEBBLE_GUARD_GAME_PAIR_HH 1

#include <pebble/structure.hh>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace pebble
{
    /// Spoiler's and Duplicator's graphs with named vertices. Both use the binary relation "E".
    ///
    /// When colored, Spoiler vertex v has color v, and every Duplicator vertex either has the color of
    /// the Spoiler vertex whose block it belongs to, or a color no Spoiler vertex has. Duplicator
    /// vertex names are "<spoiler name>_<suffix>" for the block they were created in.
    class GamePair
    {
        private:
            std::unordered_map<std::string, Element> _spoiler_ids, _duplicator_ids;

        public:
            Structure spoiler, duplicator;
            std::vector<std::string> spoiler_names, duplicator_names;

            GamePair();

            /// Rebuild the name lookups after editing the name vectors.
            auto index_names() -> void;

            auto spoiler_vertex(const std::string &) const -> Element;
            auto duplicator_vertex(const std::string &) const -> Element;
            auto has_spoiler_vertex(const std::string &) const -> bool;
            auto has_duplicator_vertex(const std::string &) const -> bool;

            /// Duplicator vertices with the color of the given Spoiler vertex.
            auto block(Element spoiler_vertex) const -> std::vector<Element>;
            auto block(const std::string & spoiler_name) const -> std::vector<Element>;

            auto colored() const -> bool { return spoiler.colored() && duplicator.colored(); }

            /// Number of distinct colors over both sides.
            auto color_count() const -> std::size_t;

            auto operator== (const GamePair & other) const -> bool;
    };

    /// Compare names so that embedded digit runs order numerically, x2 before x10.
    auto natural_less(const std::string &, const std::string &) -> bool;

    /// Collects named vertices and edges, glues by name, and produces a colored GamePair whose
    /// vertex numbering depends only on the set of names.
    class PairBuilder
    {
        private:
            std::map<std::string, int> _spoiler;
            std::map<std::string, std::string> _duplicator_block;
            std::vector<std::pair<std::string, std::string> > _spoiler_edges, _duplicator_edges;

        public:
            auto spoiler(const std::string & name) -> void;

            /// Adds "<block>_<suffix>" colored like the Spoiler vertex block, which must exist.
            auto duplicator(const std::string & block, const std::string & suffix) -> std::string;

            auto spoiler_edge(const std::string &, const std::string &) -> void;
            auto duplicator_edge(const std::string &, const std::string &) -> void;

            /// Give a Duplicator vertex a color of its own that no Spoiler vertex carries.
            auto detach(const std::string & duplicator_name) -> void;

            /// Copy a whole pair, renaming Spoiler vertices with rename; Duplicator vertices follow
            /// their block's new name. Returns the new names of both sides in the pair's order.
            auto add(const GamePair & pair, const std::function<std::string (const std::string &)> & rename)
                -> std::pair<std::vector<std::string>, std::vector<std::string> >;

            auto finish() const -> GamePair;
    };

    /// The Spoiler name a Duplicator name was derived from, i.e. everything before the last '_'.
    auto block_of(const std::string & duplicator_name) -> std::string;

    /// The part after the last '_'.
    auto suffix_of(const std::string & duplicator_name) -> std::string;
}

#endif

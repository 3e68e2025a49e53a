/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PEBBLE_GUARD_GADGETS_HH
#define PEBBLE_GUARD_GADGETS_HH 1

#include <pebble/game_pair.hh>
#include <pebble/kai.hh>

#include <optional>
#include <string>
#include <vector>

namespace pebble
{
    /// Position p with the pebbles in mask (bit i-1 for pebble i) overwritten by 0, the invalid index.
    using Encoded = std::vector<unsigned>;

    auto overwrite(const KaiPosition & p, unsigned mask) -> Encoded;
    auto zero_position(unsigned k) -> Encoded;
    auto full_mask(unsigned k) -> unsigned;

    /// {(block_i, block_i_e(i))}: the encoded position laid onto a row of blocks.
    auto position_on(const GamePair & pair, const std::vector<std::string> & blocks, const Encoded & e) -> PartialHom;

    struct Gadget
    {
        std::string kind;
        GamePair pair;
        unsigned k = 0, n = 0, m = 0;
        std::optional<KaiRule> rule;
        std::optional<KaiPosition> start;

        /// Spoiler names of the boundary rows. Switches and rule gadgets have one output row, the
        /// choice gadget has m, the initialisation gadget none.
        std::vector<std::string> inputs;
        std::vector<std::vector<std::string> > outputs;

        /// Every Spoiler vertex on some input or output row.
        auto boundary() const -> std::vector<Element>;
    };

    auto row(const std::string & stem, unsigned k) -> std::vector<std::string>;

    auto build_switch(unsigned k, unsigned n) -> Gadget;
    auto build_rs(const KaiRule & r, unsigned k, unsigned n) -> Gadget;
    auto build_rd(const KaiRule & r, unsigned k, unsigned n) -> Gadget;
    auto build_rule_gadgets(const KaiRule & r, unsigned k, unsigned n) -> std::pair<Gadget, Gadget>;
    auto build_init(const KaiPosition & start, unsigned k, unsigned n) -> Gadget;

    /// The displayed edge set of the choice gadget gives a^i_0 no neighbours in the other a-blocks,
    /// so the maps sending some a^i to a^i_0 are not homomorphisms. The repaired variant adds every
    /// edge between a^i_0 and A^j for i != j.
    enum class ChoiceEdges
    {
        Repaired,
        Literal
    };

    auto build_choice(unsigned k, unsigned n, unsigned m, ChoiceEdges = ChoiceEdges::Repaired) -> Gadget;

    enum class Orientation
    {
        Text,
        Figure
    };

    auto to_string(Orientation) -> std::string;

    /// Replace colors by the directed apparatus d_0..d_w, with a loop on each d_i. The result is an
    /// uncolored pair of digraphs.
    auto decolor(const GamePair &, Orientation = Orientation::Text) -> GamePair;

    struct GadgetSize
    {
        std::string id;
        std::size_t spoiler_vertices = 0, duplicator_vertices = 0, spoiler_edges = 0, duplicator_edges = 0;
    };

    /// Per placed gadget (its own vertices and edges before gluing) and for the glued pair.
    struct SizeReport
    {
        std::vector<GadgetSize> gadgets;
        GadgetSize total;
        std::size_t colors = 0;
    };

    /// Where a gadget ended up in the glued pair: local vertex ids to global ones.
    struct Placement
    {
        std::string id;
        std::string kind;
        std::optional<std::size_t> rule;
        std::size_t gadget;
        std::vector<Element> spoiler_map, duplicator_map;
    };

    struct ReductionOptions
    {
        ChoiceEdges choice = ChoiceEdges::Repaired;
        Orientation orientation = Orientation::Text;
        bool decolor = true;

        /// When false only the shape of the instance is checked (k, n, rule ranges, an injective
        /// start), so that size reports exist for every parameter combination.
        bool require_valid = true;
    };

    struct ReductionOutput
    {
        KaiInstance instance;
        GamePair colored;
        std::optional<GamePair> plain;
        SizeReport size;

        /// Prototype gadgets, referenced by index from placements.
        std::vector<Gadget> gadgets;
        std::vector<Placement> placements;

        /// Spoiler names of the global x and y rows.
        std::vector<std::string> x_row, y_row;

        /// The existential game on the pair uses one pebble more than the KAI game.
        auto pebbles() const -> std::size_t { return instance.k + 1; }

        auto placement(const std::string & id) const -> const Placement &;
    };

    auto assemble_reduction(const KaiInstance &, const ReductionOptions & = {}) -> ReductionOutput;
}

#endif

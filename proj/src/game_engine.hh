/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PEBBLE_GUARD_SRC_GAME_ENGINE_HH
#define PEBBLE_GUARD_SRC_GAME_ENGINE_HH 1

#include <pebble/legality.hh>
#include <pebble/structure.hh>

#include <cstdint>
#include <functional>
#include <vector>

namespace pebble
{
    /// Greatest-fixpoint solver over the configurations of the existential game with a given number of
    /// pebbles. Configurations with fewer than `capacity` pairs are stored explicitly, one byte each,
    /// addressed by (domain subset rank, mixed radix over candidate images). Full configurations are
    /// never stored: one is alive iff it is legal, avoids the targets, and all its maximal proper
    /// subfunctions are alive.
    ///
    /// Alive = Duplicator can keep the play legal and away from every target forever.
    class GameEngine
    {
        public:
            static constexpr unsigned max_pairs = 8;

            struct Config
            {
                Pair pairs[max_pairs];
                unsigned size = 0;

                auto insert(Element a, Element b) const -> Config;
                auto erase_at(unsigned i) const -> Config;
                auto has(Element a) const -> bool;
            };

        private:
            const Structure & _a;
            const Structure & _b;
            LegalityChecker _checker;
            unsigned _capacity, _explicit;
            std::vector<PartialHom> _targets;

            std::vector<std::vector<std::uint64_t> > _binomial;
            std::vector<std::vector<Element> > _subsets;
            std::vector<std::vector<std::uint64_t> > _base;
            std::vector<std::int32_t> _cand_pos;
            std::vector<std::uint8_t> _alive;
            std::vector<std::uint16_t> _residual;
            std::vector<std::uint64_t> _stack;
            std::uint64_t _total = 0;

            static constexpr std::uint64_t npos = ~std::uint64_t(0);

            auto index(const Config &) const -> std::uint64_t;
            auto decode(unsigned size, std::uint64_t rank, std::uint64_t local) const -> Config;
            auto hits_target(const Config &) const -> bool;
            auto full_alive(const Config & g, Element z, Element b) const -> bool;
            auto supports(const Config & g, Element z, std::size_t j) const -> bool;
            auto find_support(std::uint64_t id, const Config & g, Element z) -> bool;
            auto kill(std::uint64_t id) -> void;
            auto propagate() -> void;
            auto config_of(std::uint64_t id) const -> Config;
            auto residual(std::uint64_t id, Element z) -> std::uint16_t & { return _residual[id * _a.size() + z]; }

        public:
            GameEngine(const Structure & a, const Structure & b, unsigned capacity,
                    std::vector<PartialHom> targets, std::uint64_t budget);

            auto configurations() const -> std::uint64_t { return _total; }

            /// Is the configuration inside Duplicator's safe region? Illegal maps never are.
            auto alive(const PartialHom &) const -> bool;

            /// Every alive configuration including the implicit full ones, smaller domains first.
            auto for_each_alive(const std::function<void (const PartialHom &)> &) const -> void;
    };
}

#endif

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PEBBLE_GUARD_LEMMAS_HH
#define PEBBLE_GUARD_LEMMAS_HH 1

#include <pebble/gadgets.hh>

#include <cstdint>
#include <string>
#include <vector>

namespace pebble
{
    struct LemmaCheck
    {
        std::string gadget, clause, params;
        bool passed = false;
        std::string detail;
    };

    struct LemmaOptions
    {
        unsigned k = 2, n = 3, m = 1;

        /// Every position is checked when there are at most this many; otherwise this many are drawn.
        std::size_t samples = 50;

        /// Distinct initialisation starts drawn when sampling; each one costs a full I^init check.
        std::size_t init_starts = 4;
        std::uint64_t seed = 1;
        ChoiceEdges choice = ChoiceEdges::Repaired;
    };

    struct LemmaReport
    {
        std::vector<LemmaCheck> checks;

        auto failures() const -> std::size_t;
        auto passed() const -> bool { return failures() == 0 && ! checks.empty(); }
    };

    /// All maps [k] -> [n], in lexicographic order.
    auto all_positions(unsigned k, unsigned n) -> std::vector<KaiPosition>;

    auto verify_rule_lemmas(const LemmaOptions &, LemmaReport &) -> void;
    auto verify_switch_lemma(const LemmaOptions &, LemmaReport &) -> void;
    auto verify_init_lemma(const LemmaOptions &, LemmaReport &) -> void;
    auto verify_choice_lemma(const LemmaOptions &, LemmaReport &) -> void;

    /// Rule lemmas need three distinct nodes, so they are skipped (no checks recorded) when n < 3.
    auto verify_gadget_lemmas(const LemmaOptions &) -> LemmaReport;
}

#endif

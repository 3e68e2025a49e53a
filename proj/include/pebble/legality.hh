/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PEBBLE_GUARD_LEGALITY_HH
#define PEBBLE_GUARD_LEGALITY_HH 1

#include <pebble/structure.hh>

#include <vector>

namespace pebble
{
    /// Precomputed incidence lists and target lookups, so that checking whether one more pair keeps a
    /// map legal costs a handful of adjacency tests.
    class LegalityChecker
    {
        private:
            struct TargetRelation
            {
                unsigned arity;
                const Relation * relation;
                std::vector<bool> dense;
            };

            struct Incidence
            {
                unsigned relation;
                const Tuple * tuple;
            };

            const Structure & _a;
            const Structure & _b;
            std::vector<TargetRelation> _targets;
            std::vector<std::vector<Incidence> > _incidence;
            std::vector<std::vector<Element> > _candidates;

            auto target_has(const TargetRelation &, const Tuple &) const -> bool;

        public:
            LegalityChecker(const Structure & a, const Structure & b);

            /// Image candidates of a: every b such that {a↦b} is legal (color and single-element tuples).
            auto candidates(Element a) const -> const std::vector<Element> & { return _candidates[a]; }

            /// Is pairs ∪ {a↦b} legal, given that pairs is already legal and does not mention a?
            auto extends(const Pair * pairs, std::size_t n, Element a, Element b) const -> bool;

            auto legal(const PartialHom &) const -> bool;
    };
}

#endif

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PEBBLE_GUARD_STRUCTURE_HH
#define PEBBLE_GUARD_STRUCTURE_HH 1

#include <pebble/errors.hh>

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pebble
{
    using Element = std::uint32_t;
    using Tuple = std::vector<Element>;

    struct Relation
    {
        unsigned arity = 0;
        std::vector<Tuple> tuples;
        bool sorted = true;

        /// Binary search once normalised, linear scan before.
        auto contains(const Tuple &) const -> bool;
        auto operator== (const Relation & other) const -> bool { return arity == other.arity && tuples == other.tuples; }
    };

    class Structure
    {
        private:
            std::size_t _size = 0;
            std::map<std::string, Relation> _relations;
            std::optional<std::vector<int> > _colors;

        public:
            Structure() = default;
            explicit Structure(std::size_t universe_size);

            auto size() const -> std::size_t { return _size; }
            auto relations() const -> const std::map<std::string, Relation> & { return _relations; }
            auto colors() const -> const std::optional<std::vector<int> > & { return _colors; }
            auto colored() const -> bool { return _colors.has_value(); }
            auto color(Element e) const -> int { return (*_colors)[e]; }

            auto add_relation(const std::string & name, unsigned arity) -> void;

            /// No validation here, see validate_structure.
            auto add_tuple(const std::string & name, Tuple t) -> void;
            auto add_edge(Element from, Element to) -> void { add_tuple("E", Tuple{ from, to }); }

            auto set_colors(std::vector<int> colors) -> void { _colors = std::move(colors); }
            auto clear_colors() -> void { _colors.reset(); }

            /// Sorts and deduplicates tuples. Equality compares normalised structures only.
            auto normalise() -> void;

            auto has_tuple(const std::string & name, const Tuple & t) const -> bool;
            auto has_edge(Element from, Element to) const -> bool { return has_tuple("E", Tuple{ from, to }); }

            auto operator== (const Structure &) const -> bool = default;
    };

    struct ValidationReport
    {
        std::vector<std::string> problems;

        auto ok() const -> bool { return problems.empty(); }
    };

    auto validate_structure(const Structure &) -> ValidationReport;

    struct Pair
    {
        Element from, to;

        auto operator<=> (const Pair &) const = default;
    };

    class PartialHom
    {
        private:
            boost::container::small_vector<Pair, 4> _pairs;

        public:
            PartialHom() = default;
            PartialHom(std::initializer_list<Pair>);

            template <typename Iter_>
            PartialHom(Iter_ begin, Iter_ end)
            {
                for ( ; begin != end ; ++begin)
                    set(begin->from, begin->to);
            }

            auto size() const -> std::size_t { return _pairs.size(); }
            auto empty() const -> bool { return _pairs.empty(); }
            auto begin() const { return _pairs.begin(); }
            auto end() const { return _pairs.end(); }
            auto operator[] (std::size_t i) const -> const Pair & { return _pairs[i]; }

            auto find(Element a) const -> std::optional<Element>;
            auto defined_on(Element a) const -> bool { return find(a).has_value(); }

            /// Throws PreconditionError if a already maps somewhere else.
            auto set(Element a, Element b) -> void;
            auto erase(Element a) -> void;

            auto with(Element a, Element b) const -> PartialHom;
            auto without(Element a) const -> PartialHom;

            auto subset_of(const PartialHom &) const -> bool;
            auto compatible_with(const PartialHom &) const -> bool;
            auto restricted_to(const std::function<bool (Element)> &) const -> PartialHom;

            auto domain() const -> std::vector<Element>;

            auto operator<=> (const PartialHom & other) const -> std::strong_ordering;
            auto operator== (const PartialHom & other) const -> bool;

            auto to_string() const -> std::string;
    };

    struct PartialHomHash
    {
        auto operator() (const PartialHom &) const -> std::size_t;
    };

    /// Union of two compatible maps.
    auto join(const PartialHom &, const PartialHom &) -> PartialHom;

    auto is_partial_hom(const Structure & a, const Structure & b, const PartialHom & h) -> bool;

    /// Sorted by (size, lexicographic).
    auto enumerate_partial_homs(const Structure & a, const Structure & b, std::size_t max_domain,
            std::uint64_t budget = 100'000'000) -> std::vector<PartialHom>;

    /// Canonical family order used everywhere: smaller domains first.
    auto canonical_less(const PartialHom &, const PartialHom &) -> bool;

    /// Backtracking search for a total homomorphism respecting colors and pinned values.
    auto find_homomorphism(const Structure & a, const Structure & b, const PartialHom & pinned = {}) -> std::optional<PartialHom>;
    auto all_homomorphisms(const Structure & a, const Structure & b, const PartialHom & pinned,
            const std::function<void (const PartialHom &)> & callback, std::uint64_t limit = 10'000'000) -> void;
}

#endif

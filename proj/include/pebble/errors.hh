/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PEBBLE_GUARD_ERRORS_HH
#define PEBBLE_GUARD_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace pebble
{
    /// Malformed instance, structure or file. Exit code 2 on the command line.
    class InputError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// A configured budget would be exceeded. Exit code 3.
    class ResourceError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// An operation was called outside its contract (inapplicable rule, non-connectable strategies...).
    class PreconditionError : public std::logic_error
    {
        public:
            using std::logic_error::logic_error;
    };
}

#endif

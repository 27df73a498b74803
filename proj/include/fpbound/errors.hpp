#pragma once

#include <stdexcept>
#include <string>

namespace fpbound {

/// Operand shapes or variable counts disagree.
class DimensionError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// A component, circle, shell or annulus id that does not exist.
class UnknownId : public std::out_of_range
{
public:
    explicit UnknownId(std::string const& what_kind, std::string const& id)
        : std::out_of_range("unknown " + what_kind + " id '" + id + "'")
    {
    }
};

/// An operation was called outside the setting it is defined for.
class PreconditionError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace fpbound

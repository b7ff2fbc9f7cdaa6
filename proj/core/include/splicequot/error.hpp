#ifndef SPLICEQUOT_ERROR_HPP
#define SPLICEQUOT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace splicequot
{

// Base of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// A caller-supplied value violates an operation's precondition.
class InvalidInput : public Error
{
public:
    using Error::Error;
};

// A construction step has no free coefficient left.
class Infeasible : public Error
{
public:
    using Error::Error;
};

// A bounded search finished without a witness.
class NotFound : public Error
{
public:
    using Error::Error;
};

// A rewriting loop exceeded its iteration budget.
class NonTermination : public Error
{
public:
    using Error::Error;
};

// An internal invariant failed; indicates a bug, not bad input.
class InternalError : public Error
{
public:
    using Error::Error;
};

} // namespace splicequot

#endif

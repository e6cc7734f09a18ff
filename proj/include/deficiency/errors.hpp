#pragma once

#include <stdexcept>
#include <string>

namespace deficiency {

// Malformed caller input: bad vertex ids, self-loops, unparsable graph6.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Parameters outside the domain a constructor or bound is defined on.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An exact search was asked to run above its hard desk-scale limit.
class SizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

// A proof-guaranteed object was missing, or a procedure's precondition failed.
// Seeing one of these on valid input means the implementation is wrong.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace deficiency

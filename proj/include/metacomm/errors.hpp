#pragma once

#include <stdexcept>
#include <string>

namespace metacomm {

// Malformed textual input (bad JSON, wrong shape, unparsable number).
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A mathematical precondition was violated by the caller.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Input is valid but exceeds a configured size or iteration bound.
class capacity_error : public std::length_error {
public:
    using std::length_error::length_error;
};

// Two computation paths disagreed, or a proved invariant failed.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Deliberate perturbation of a closed-form path; verification sweeps use it
// to confirm they can fail.
struct Mutation {
    bool active = false;
};

}  // namespace metacomm

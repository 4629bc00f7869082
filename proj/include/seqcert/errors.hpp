#pragma once

#include <stdexcept>
#include <string>

namespace seqcert {

// Raised when a computation that must be exact is not (a non-integral
// division in an integer recursion, an oracle disagreeing with a recursion,
// a patchwork piece with a pole). Always indicates a bug or a false claim,
// never bad user input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// An exhaustive enumeration was asked to go beyond its configured size.
class BudgetExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace seqcert

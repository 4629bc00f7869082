#pragma once

#include "seqcert/exact/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace seqcert::seq {

using exact::Integer;
using exact::Rational;

// How a table was produced.
enum class Provenance {
    short_recursion,
    long_recursion,
    closed_form,
    binomial_identity,
    oracle,
    derived_recursion,
};

std::string_view to_string(Provenance p);

// values[i] is the term with index start_index + i.
struct SequenceTable {
    std::string name;
    std::vector<Rational> values;
    int start_index = 0;
    Provenance provenance = Provenance::closed_form;

    int end_index() const { return start_index + static_cast<int>(values.size()) - 1; }
    bool contains(int n) const { return n >= start_index && n <= end_index(); }
    // Throws std::out_of_range outside [start_index, end_index].
    const Rational& at(int n) const;
    // Throws ConsistencyError if the term is not an integer.
    Integer integer_at(int n) const;
};

// x_n = a_n / a_{n-1}, first entry at start_index + 1.
struct RatioSequence {
    std::string base_name;
    std::vector<Rational> values;
    int start_index = 1;

    int end_index() const { return start_index + static_cast<int>(values.size()) - 1; }
    bool contains(int n) const { return n >= start_index && n <= end_index(); }
    const Rational& at(int n) const;
};

// Throws std::domain_error on a zero or negative source term.
RatioSequence ratio_sequence(const SequenceTable& t);

}  // namespace seqcert::seq

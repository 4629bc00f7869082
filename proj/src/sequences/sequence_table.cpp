#include "seqcert/sequences/sequence_table.hpp"

#include <stdexcept>

namespace seqcert::seq {

std::string_view to_string(Provenance p)
{
    switch (p) {
    case Provenance::short_recursion: return "short-recursion";
    case Provenance::long_recursion: return "long-recursion";
    case Provenance::closed_form: return "closed-form";
    case Provenance::binomial_identity: return "binomial-identity";
    case Provenance::oracle: return "oracle";
    case Provenance::derived_recursion: return "derived-recursion";
    }
    return "unknown";
}

const Rational& SequenceTable::at(int n) const
{
    if (!contains(n))
        throw std::out_of_range(name + ": index " + std::to_string(n) + " outside table");
    return values[static_cast<std::size_t>(n - start_index)];
}

Integer SequenceTable::integer_at(int n) const
{
    return exact::to_integer(at(n), name + "(" + std::to_string(n) + ")");
}

const Rational& RatioSequence::at(int n) const
{
    if (!contains(n))
        throw std::out_of_range(base_name + " ratios: index " + std::to_string(n) + " outside table");
    return values[static_cast<std::size_t>(n - start_index)];
}

RatioSequence ratio_sequence(const SequenceTable& t)
{
    RatioSequence r;
    r.base_name = t.name;
    r.start_index = t.start_index + 1;
    for (std::size_t i = 0; i < t.values.size(); ++i) {
        if (t.values[i] <= 0)
            throw std::domain_error(t.name + ": ratio of a non-positive term at index "
                                    + std::to_string(t.start_index + static_cast<int>(i)));
        if (i > 0) r.values.push_back(t.values[i] / t.values[i - 1]);
    }
    return r;
}

}  // namespace seqcert::seq

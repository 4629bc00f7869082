#pragma once

#include "seqcert/exact/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace seqcert::cli {

enum class Command { seq, oracle, check, certify, alpha, report, verify };
enum class Format { csv, json };

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kPropertyFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kConsistency = 3;

struct RunConfig {
    Command command = Command::seq;
    std::string selector;  // sequence, family, property, patchwork or certificate path
    std::string target;    // second positional (check: which sequence)
    std::optional<int> n;
    std::optional<int> rank;
    std::optional<exact::Rational> t;
    int k_min = 0;
    int k_max = 8;
    bool strict = false;
    std::optional<exact::Rational> tol;
    std::optional<int> to;
    std::optional<exact::Rational> lower;
    std::optional<exact::Rational> upper;
    std::optional<exact::Rational> from;
    std::optional<Format> format;
    std::string out;  // empty: standard output
    bool ratios = false;
    std::string expect;
    int digits = 60;
    int threads = 0;
};

// Runs one command. The document goes to `out` (or the --out file),
// diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses arguments (without the program name handling beyond argv[0]) and runs.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace seqcert::cli

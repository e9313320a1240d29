// Monotone-3SAT instances: parsing, evaluation, brute-force satisfiability,
// and the normal form the reduction consumes.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace freezetag {

enum class Polarity { positive, negative };

inline Polarity opposite(Polarity p) {
    return p == Polarity::positive ? Polarity::negative : Polarity::positive;
}

struct Clause {
    Polarity polarity = Polarity::positive;
    std::array<int, 3> vars{};  // distinct, ascending, 1-based

    bool operator==(const Clause&) const = default;
    bool contains(int var) const {
        return vars[0] == var || vars[1] == var || vars[2] == var;
    }
};

struct MonotoneCnf {
    int var_count = 0;
    std::vector<Clause> clauses;

    bool operator==(const MonotoneCnf&) const = default;
};

// Index v-1 holds the value of x_v.
using Assignment = std::vector<bool>;

// A cnf in the shape the reduction expects: odd var_count, at least two
// clauses of each polarity, equally many of each, positives first.
struct NormalizedCnf {
    MonotoneCnf cnf;
    int half = 0;  // clauses per polarity, so cnf.clauses.size() == 2*half
    int original_var_count = 0;
    // Variables invented during normalization, with the value that
    // satisfies the dummy clause they were created for.
    std::vector<std::pair<int, bool>> dummy_defaults;

    int var_count() const { return cnf.var_count; }
    int clause_count() const { return static_cast<int>(cnf.clauses.size()); }
};

// DIMACS subset: optional "c ..." comment lines, one "p cnf <n> <m>" header,
// then m lines of exactly three same-sign nonzero integers ending in 0.
MonotoneCnf parse_dimacs(std::string_view text);
std::string to_dimacs(const MonotoneCnf& cnf);

// True iff every positive clause has a true variable and every negative
// clause has a false one. Throws LengthMismatch.
bool evaluate(const MonotoneCnf& cnf, const Assignment& a);

// Lexicographically smallest satisfying assignment (false < true, x_1 most
// significant), or nullopt. Throws TooLarge above var_cap.
std::optional<Assignment> brute_force_sat(const MonotoneCnf& cnf, int var_cap = 20);

// Deterministic rewrite into the normal form; idempotent and
// satisfiability-preserving. Steps, in order: add a fresh 3-variable clause
// for any absent polarity; add a fresh positive 3-variable clause while
// var_count is even; duplicate the first minority-polarity clause until the
// polarity counts match; if fewer than 4 clauses, duplicate the first clause
// of each polarity once. Finally clauses are stably reordered positives-first.
NormalizedCnf normalize(const MonotoneCnf& cnf);

// Extends an assignment of the pre-normalization variables by the recorded
// dummy values. Throws LengthMismatch.
Assignment extend_assignment(const NormalizedCnf& norm, const Assignment& original);

}  // namespace freezetag

// Freeze-tag solvers over explicit point sets: exact branch-and-bound,
// nearest-target greedy, and an independently written enumeration oracle for
// cross-checking the exact solver.
//
// All three search the same space of direct-travel wake trees: every agent
// moves straight from one wake event to its next target, and reaching a
// location wakes every robot homed there. The triangle inequality makes this
// restriction lossless (replacing any route by direct travel to the next
// target never increases a wake time; an L1 pass-through wake appears as two
// consecutive tree edges with additive distances).
#pragma once

#include "freezetag/rational.hpp"
#include "freezetag/reduction.hpp"
#include "freezetag/schedule.hpp"

namespace freezetag {

// Single fixed policy: ties break by smallest distance, then
// lexicographically smallest target point, then smallest robot id.
enum class TieBreak { lexicographic };

struct SolverConfig {
    // Exact search refuses instances with more distinct frozen homes.
    int location_cap = 10;
    // Wall-clock limit for the exact search; 0 means unlimited. On expiry
    // the best incumbent is returned with stats.optimal = false.
    double time_budget_seconds = 0;
    TieBreak tie_break = TieBreak::lexicographic;
};

struct SearchStats {
    long long nodes = 0;   // search states expanded
    long long pruned = 0;  // children cut by the incumbent bound
    bool optimal = true;   // false when the time budget stopped the search
};

struct SolveResult {
    Schedule schedule;
    Rational makespan;
    SearchStats stats;
};

// Minimal-makespan schedule by depth-first branch and bound. A state is the
// multiset of available agents (time, location) plus the unwoken locations;
// branching sends an agent directly to an unwoken location; pruning uses the
// incumbent (seeded by solve_greedy) against the bound
//   max(makespan so far, max over remaining L of min over agents (t + d)).
// Throws TooLarge when distinct frozen homes exceed cfg.location_cap.
SolveResult solve_exact(const FtpInstance& instance, const SolverConfig& cfg = {});

// Event-driven heuristic: every freshly woken (or freshly arrived) agent
// claims the nearest unclaimed frozen location and travels there; agents
// with nothing left to claim park. Deterministic under the fixed tie-break.
// stats is not meaningful for the heuristic (optimal is reported false).
SolveResult solve_greedy(const FtpInstance& instance);

// Minimal makespan by exhaustive enumeration of all direct-travel wake
// trees, without pruning; shares no search code with solve_exact. Throws
// TooLarge when distinct frozen homes exceed cap.
Rational enumerate_oracle(const FtpInstance& instance, int cap = 8);

}  // namespace freezetag

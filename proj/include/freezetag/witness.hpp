// Builds the explicit awakening schedule that certifies makespan L for a
// satisfiable instance: the schedule validates and finishes at exactly L,
// matching the lower bound, so optimality needs no search.
#pragma once

#include "freezetag/cnf.hpp"
#include "freezetag/reduction.hpp"
#include "freezetag/schedule.hpp"

namespace freezetag {

// Wake/arrival times by role class. Occurrence robots split into batches by
// the assignment: the first batch belongs to true literals and is the only
// one that can still reach a clause robot by L.
struct WitnessTimeline {
    Rational source_wake;  // 0
    Rational first_group;  // 2 + eps
    Rational second_group; // 2 + 3*eps
    Rational occ_c_first;  // 4 + eps
    Rational occ_c_second; // 4 + 3*eps
    Rational occ_d_first;  // L - 2*eps
    Rational clause_wake;  // L
    Rational occ_d_second; // L
    Rational s_wake;       // L
};

WitnessTimeline witness_timeline(const ReductionConstants& c);

// The forward-direction schedule for a satisfying assignment:
//   - the source wakes all R(i) at time 0; each R(i) visits the group of
//     x_i's assigned value (arriving 2+eps), then the opposite group
//     (2+3*eps), then S(i) (L);
//   - first-batch group members run group -> OccC (4+eps) -> OccD (L-2*eps);
//   - first-batch OccC robots run to their clause robot, arriving at L;
//   - second-batch members run group -> OccC (4+3*eps) and stop;
//   - second-batch OccC robots run to their OccD, arriving at L;
//   - S, OccD and clause robots are terminal.
// Throws NotSatisfying if a does not satisfy cnf, LengthMismatch on a length
// mismatch, RoleMismatch if roles or constants do not belong to cnf.
Schedule build_witness(const NormalizedCnf& cnf, const Assignment& a,
                       const RoleTable& roles, const ReductionConstants& c);

}  // namespace freezetag

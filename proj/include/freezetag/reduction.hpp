// Compiles a normalized monotone CNF into a 3D L1 freeze-tag instance whose
// optimal makespan is L exactly when the CNF is satisfiable, together with a
// table mapping every robot id to its gadget role.
#pragma once

#include <optional>
#include <vector>

#include "freezetag/cnf.hpp"
#include "freezetag/geometry.hpp"

namespace freezetag {

struct ReductionConstants {
    int n = 0;  // variables (odd, > 1)
    int m = 0;  // clauses (even, > 2)
    Rational alpha;    // 2/(n-1)
    Rational beta;     // 2/(m-2)
    Rational epsilon;  // alpha/8, comfortably below the alpha/4 ceiling
    Rational L;        // 6 + epsilon
    Point3 P;          // (0, 0, L-4-3*epsilon); its z is 2-2*epsilon > 0
    Point3 Q;          // (1, 1, 0)
};

// Throws BadShape unless n is odd and > 1 and m is even and > 2 (m == 2
// would leave beta undefined).
ReductionConstants constants(int n, int m);

enum class RoleKind { R, S, Group, OccC, OccD, Clause };

// R(i): one of the n robots at the origin; R(1) is the source.
// S(i): the far robot r_i must reach at time L.
// Group(i, pol, k): occurrence robot waiting at the shared group point of
//   variable i's pol side, destined for clause k of that polarity.
// OccC/OccD(i, pol, k): the near/far occurrence pair along the column of
//   clause k's slot for variable i.
// Clause(pol, k): the clause robot, at L1 distance L from the origin.
struct Role {
    RoleKind kind = RoleKind::R;
    int var = 0;  // 1..n; unused for Clause
    Polarity polarity = Polarity::positive;  // unused for R, S
    int clause = 0;  // 1..m/2 within the polarity; unused for R, S

    bool operator==(const Role&) const = default;
};

struct Robot {
    int id = 0;
    Point3 home;

    bool operator==(const Robot&) const = default;
};

struct FtpInstance {
    Metric metric = Metric::L1;
    std::vector<Robot> robots;  // ids dense 0..N-1, in id order
    int source_id = 0;
    std::optional<Rational> deadline;
};

using RoleTable = std::vector<Role>;  // indexed by robot id

struct Reduction {
    FtpInstance instance;
    RoleTable roles;
    ReductionConstants consts;
};

// Home position of a role. Group positions ignore the clause index: every
// member of a group sits at the shared group point. Throws IndexOutOfRange.
Point3 point_of_role(const Role& role, const ReductionConstants& c);

// Robot id order: R(1..n), S(1..n), then per clause in normalized order its
// three Group members, OccCs and OccDs (variable-ascending), then the clause
// robots in clause order. Total count is 2n + 10m. The instance's deadline
// field is set to L.
Reduction reduce(const NormalizedCnf& cnf);

}  // namespace freezetag

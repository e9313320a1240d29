#include "freezetag/witness.hpp"

#include <map>
#include <string>
#include <tuple>

#include "freezetag/errors.hpp"

namespace freezetag {

WitnessTimeline witness_timeline(const ReductionConstants& c) {
    WitnessTimeline t;
    t.source_wake = Rational(0);
    t.first_group = Rational(2) + c.epsilon;
    t.second_group = Rational(2) + c.epsilon * 3;
    t.occ_c_first = Rational(4) + c.epsilon;
    t.occ_c_second = Rational(4) + c.epsilon * 3;
    t.occ_d_first = c.L - c.epsilon * 2;
    t.clause_wake = c.L;
    t.occ_d_second = c.L;
    t.s_wake = c.L;
    return t;
}

namespace {

using RoleKey = std::tuple<int, int, int, int>;

RoleKey key_of(const Role& r) {
    return {static_cast<int>(r.kind), r.var, static_cast<int>(r.polarity), r.clause};
}

// True iff the occurrence's literal is true, i.e. it belongs to the batch
// woken on the first group visit.
bool first_batch(const Role& r, const Assignment& a) {
    return (r.polarity == Polarity::positive) == a[r.var - 1];
}

}  // namespace

Schedule build_witness(const NormalizedCnf& norm, const Assignment& a,
                       const RoleTable& roles, const ReductionConstants& c) {
    const MonotoneCnf& cnf = norm.cnf;
    if (static_cast<int>(a.size()) != cnf.var_count)
        throw LengthMismatch("assignment has " + std::to_string(a.size()) +
                             " values for " + std::to_string(cnf.var_count) + " variables");
    if (!evaluate(cnf, a)) throw NotSatisfying("assignment does not satisfy the formula");
    int m = norm.clause_count();
    if (m != 2 * norm.half) throw BadShape("normalized cnf with unbalanced polarities");
    for (int j = 0; j < m; ++j)
        if ((cnf.clauses[j].polarity == Polarity::positive) != (j < norm.half))
            throw BadShape("normalized cnf must list positive clauses first");
    if (c.n != cnf.var_count || c.m != m)
        throw RoleMismatch("constants sized for n=" + std::to_string(c.n) + ", m=" +
                           std::to_string(c.m) + " but the formula has n=" +
                           std::to_string(cnf.var_count) + ", m=" + std::to_string(m));

    // The expected roles, as a multiset; every role is distinct because the
    // per-polarity clause index separates even duplicated clauses.
    std::map<RoleKey, int> expected;
    for (int i = 1; i <= c.n; ++i) {
        ++expected[key_of({RoleKind::R, i})];
        ++expected[key_of({RoleKind::S, i})];
    }
    for (int j = 0; j < m; ++j) {
        const Clause& cl = cnf.clauses[j];
        int k = j < norm.half ? j + 1 : j - norm.half + 1;
        for (int v : cl.vars) {
            ++expected[key_of({RoleKind::Group, v, cl.polarity, k})];
            ++expected[key_of({RoleKind::OccC, v, cl.polarity, k})];
            ++expected[key_of({RoleKind::OccD, v, cl.polarity, k})];
        }
        ++expected[key_of({RoleKind::Clause, 0, cl.polarity, k})];
    }
    if (static_cast<int>(roles.size()) != 2 * c.n + 10 * c.m)
        throw RoleMismatch("role table has " + std::to_string(roles.size()) +
                           " entries, expected " + std::to_string(2 * c.n + 10 * c.m));
    for (const Role& r : roles) {
        auto it = expected.find(key_of(r));
        if (it == expected.end() || it->second == 0)
            throw RoleMismatch("role table does not match the formula");
        --it->second;
    }

    WitnessTimeline tl = witness_timeline(c);
    Schedule s;
    s.itineraries.reserve(roles.size());
    for (int id = 0; id < static_cast<int>(roles.size()); ++id) {
        const Role& r = roles[id];
        Itinerary it;
        it.robot = id;
        switch (r.kind) {
            case RoleKind::R: {
                Polarity side = a[r.var - 1] ? Polarity::positive : Polarity::negative;
                Point3 g1 = point_of_role({RoleKind::Group, r.var, side, 1}, c);
                Point3 g2 = point_of_role({RoleKind::Group, r.var, opposite(side), 1}, c);
                it.waypoints = {{tl.source_wake, point_of_role(r, c)},
                                {tl.first_group, g1},
                                {tl.second_group, g2},
                                {tl.s_wake, point_of_role({RoleKind::S, r.var}, c)}};
                break;
            }
            case RoleKind::S:
                it.waypoints = {{tl.s_wake, point_of_role(r, c)}};
                break;
            case RoleKind::Group: {
                Point3 g = point_of_role(r, c);
                Point3 cp = point_of_role({RoleKind::OccC, r.var, r.polarity, r.clause}, c);
                if (first_batch(r, a)) {
                    Point3 dp = point_of_role({RoleKind::OccD, r.var, r.polarity, r.clause}, c);
                    it.waypoints = {{tl.first_group, g}, {tl.occ_c_first, cp}, {tl.occ_d_first, dp}};
                } else {
                    it.waypoints = {{tl.second_group, g}, {tl.occ_c_second, cp}};
                }
                break;
            }
            case RoleKind::OccC: {
                Point3 cp = point_of_role(r, c);
                if (first_batch(r, a)) {
                    Point3 target = point_of_role({RoleKind::Clause, 0, r.polarity, r.clause}, c);
                    it.waypoints = {{tl.occ_c_first, cp}, {tl.clause_wake, target}};
                } else {
                    Point3 dp = point_of_role({RoleKind::OccD, r.var, r.polarity, r.clause}, c);
                    it.waypoints = {{tl.occ_c_second, cp}, {tl.occ_d_second, dp}};
                }
                break;
            }
            case RoleKind::OccD: {
                Rational t = first_batch(r, a) ? tl.occ_d_first : tl.occ_d_second;
                it.waypoints = {{t, point_of_role(r, c)}};
                break;
            }
            case RoleKind::Clause:
                it.waypoints = {{tl.clause_wake, point_of_role(r, c)}};
                break;
        }
        s.itineraries.push_back(std::move(it));
    }
    return s;
}

}  // namespace freezetag

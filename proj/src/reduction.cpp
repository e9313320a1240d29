#include "freezetag/reduction.hpp"

#include <string>

#include "freezetag/errors.hpp"

namespace freezetag {

ReductionConstants constants(int n, int m) {
    if (n <= 1 || n % 2 == 0)
        throw BadShape("variable count must be odd and > 1, got " + std::to_string(n));
    if (m <= 2 || m % 2 == 1)
        throw BadShape("clause count must be even and > 2, got " + std::to_string(m));
    ReductionConstants c;
    c.n = n;
    c.m = m;
    c.alpha = Rational(2, n - 1);
    c.beta = Rational(2, m - 2);
    c.epsilon = c.alpha / 8;
    c.L = Rational(6) + c.epsilon;
    c.P = {Rational(0), Rational(0), c.L - 4 - c.epsilon * 3};
    c.Q = {Rational(1), Rational(1), Rational(0)};
    return c;
}

namespace {

// Shared group point of variable i's side: T_i for positive, F_i for
// negative, i.e. (2-(i-1)a, (i-1)a, +-eps).
Point3 group_point(int i, Polarity pol, const ReductionConstants& c) {
    Rational ja = c.alpha * (i - 1);
    Rational z = pol == Polarity::positive ? c.epsilon : -c.epsilon;
    return {Rational(2) - ja, ja, z};
}

Point3 occ_c_point(int i, Polarity pol, int k, const ReductionConstants& c) {
    Rational kb = c.beta * (k - 1);
    Point3 lift{kb, kb, Rational(2) - kb * 2};
    if (pol == Polarity::negative) lift.z = -lift.z;
    return group_point(i, pol, c) + lift;
}

}  // namespace

Point3 point_of_role(const Role& role, const ReductionConstants& c) {
    bool needs_var = role.kind != RoleKind::Clause;
    if (needs_var && (role.var < 1 || role.var > c.n))
        throw IndexOutOfRange("variable index " + std::to_string(role.var) +
                              " outside 1.." + std::to_string(c.n));
    bool needs_clause = role.kind != RoleKind::R && role.kind != RoleKind::S;
    if (needs_clause && (role.clause < 1 || role.clause > c.m / 2))
        throw IndexOutOfRange("clause index " + std::to_string(role.clause) +
                              " outside 1.." + std::to_string(c.m / 2));
    switch (role.kind) {
        case RoleKind::R:
            return {Rational(0), Rational(0), Rational(0)};
        case RoleKind::Group:
            return group_point(role.var, role.polarity, c);
        case RoleKind::S: {
            Rational ja = c.alpha * (role.var - 1);
            Rational h = (c.L - 2 - c.epsilon * 4) / 2;
            return {Rational(2) - ja + h, ja + h, Rational(0)};
        }
        case RoleKind::OccC:
            return occ_c_point(role.var, role.polarity, role.clause, c);
        case RoleKind::OccD: {
            Point3 base = occ_c_point(role.var, role.polarity, role.clause, c);
            return role.polarity == Polarity::positive ? base + c.P : base - c.P;
        }
        case RoleKind::Clause:
            return occ_c_point((c.n + 1) / 2, role.polarity, role.clause, c) + c.Q;
    }
    throw Error("bad role kind");
}

Reduction reduce(const NormalizedCnf& norm) {
    const MonotoneCnf& cnf = norm.cnf;
    int n = cnf.var_count;
    int m = norm.clause_count();
    if (m != 2 * norm.half) throw BadShape("normalized cnf with unbalanced polarities");
    for (int j = 0; j < m; ++j) {
        bool want_positive = j < norm.half;
        if ((cnf.clauses[j].polarity == Polarity::positive) != want_positive)
            throw BadShape("normalized cnf must list positive clauses first");
    }
    Reduction r;
    r.consts = constants(n, m);
    r.instance.metric = Metric::L1;
    r.instance.source_id = 0;
    r.instance.deadline = r.consts.L;

    auto add = [&](const Role& role) {
        int id = static_cast<int>(r.roles.size());
        r.roles.push_back(role);
        r.instance.robots.push_back({id, point_of_role(role, r.consts)});
    };

    for (int i = 1; i <= n; ++i) add({RoleKind::R, i});
    for (int i = 1; i <= n; ++i) add({RoleKind::S, i});
    for (int j = 0; j < m; ++j) {
        const Clause& cl = cnf.clauses[j];
        int k = j < norm.half ? j + 1 : j - norm.half + 1;
        for (int v : cl.vars) add({RoleKind::Group, v, cl.polarity, k});
        for (int v : cl.vars) add({RoleKind::OccC, v, cl.polarity, k});
        for (int v : cl.vars) add({RoleKind::OccD, v, cl.polarity, k});
    }
    for (int j = 0; j < m; ++j) {
        const Clause& cl = cnf.clauses[j];
        int k = j < norm.half ? j + 1 : j - norm.half + 1;
        add({RoleKind::Clause, 0, cl.polarity, k});
    }
    if (static_cast<int>(r.roles.size()) != 2 * n + 10 * m)
        throw Error("reduction produced wrong robot census");
    return r;
}

}  // namespace freezetag

#include <doctest.h>

#include "freezetag/cnf.hpp"
#include "freezetag/errors.hpp"
#include "freezetag/geometry.hpp"
#include "freezetag/reduction.hpp"
#include "testgen.hpp"

using namespace freezetag;

namespace {

Rational rat(const char* s) { return Rational::parse(s); }

Point3 pt(const char* x, const char* y, const char* z) {
    return {rat(x), rat(y), rat(z)};
}

NormalizedCnf example_norm() {
    return normalize(parse_dimacs("p cnf 3 4\n1 2 3 0\n1 2 3 0\n-1 -2 -3 0\n-1 -2 -3 0\n"));
}

}  // namespace

TEST_SUITE("reduction") {

TEST_CASE("constants for the 3-variable 4-clause shape") {
    ReductionConstants c = constants(3, 4);
    CHECK(c.alpha == Rational(1));
    CHECK(c.beta == Rational(1));
    CHECK(c.epsilon == rat("1/8"));
    CHECK(c.L == rat("49/8"));
    CHECK(c.P == pt("0", "0", "7/4"));
    CHECK(c.Q == pt("1", "1", "0"));
}

TEST_CASE("constants scale with the formula") {
    ReductionConstants c = constants(5, 4);
    CHECK(c.alpha == rat("1/2"));
    CHECK(c.epsilon == rat("1/16"));
    CHECK(c.L == rat("97/16"));
    CHECK(c.P == pt("0", "0", "15/8"));
    CHECK(constants(3, 6).beta == rat("1/2"));
    CHECK(constants(15, 12).alpha == rat("1/7"));
}

TEST_CASE("constants reject malformed shapes") {
    CHECK_THROWS_AS(constants(1, 4), BadShape);
    CHECK_THROWS_AS(constants(4, 4), BadShape);
    CHECK_THROWS_AS(constants(0, 4), BadShape);
    CHECK_THROWS_AS(constants(3, 2), BadShape);
    CHECK_THROWS_AS(constants(3, 5), BadShape);
    CHECK_THROWS_AS(constants(3, 0), BadShape);
}

TEST_CASE("role positions match the hand-computed gadget layout") {
    ReductionConstants c = constants(3, 4);
    CHECK(point_of_role({RoleKind::R, 2}, c) == pt("0", "0", "0"));
    CHECK(point_of_role({RoleKind::Group, 1, Polarity::positive, 1}, c) == pt("2", "0", "1/8"));
    CHECK(point_of_role({RoleKind::Group, 1, Polarity::negative, 1}, c) == pt("2", "0", "-1/8"));
    CHECK(point_of_role({RoleKind::Group, 2, Polarity::positive, 1}, c) == pt("1", "1", "1/8"));
    CHECK(point_of_role({RoleKind::Group, 3, Polarity::positive, 1}, c) == pt("0", "2", "1/8"));
    CHECK(point_of_role({RoleKind::S, 1}, c) == pt("61/16", "29/16", "0"));
    CHECK(point_of_role({RoleKind::OccC, 1, Polarity::positive, 1}, c) == pt("2", "0", "17/8"));
    CHECK(point_of_role({RoleKind::OccC, 1, Polarity::positive, 2}, c) == pt("3", "1", "1/8"));
    CHECK(point_of_role({RoleKind::OccD, 1, Polarity::positive, 1}, c) == pt("2", "0", "31/8"));
    CHECK(point_of_role({RoleKind::OccC, 1, Polarity::negative, 1}, c) == pt("2", "0", "-17/8"));
    CHECK(point_of_role({RoleKind::OccD, 1, Polarity::negative, 1}, c) == pt("2", "0", "-31/8"));
    CHECK(point_of_role({RoleKind::Clause, 0, Polarity::positive, 1}, c) == pt("2", "2", "17/8"));
    CHECK(point_of_role({RoleKind::Clause, 0, Polarity::negative, 2}, c) == pt("3", "3", "-1/8"));
}

TEST_CASE("group position is shared across the clause index") {
    ReductionConstants c = constants(3, 6);
    for (int k = 1; k <= 3; ++k)
        CHECK(point_of_role({RoleKind::Group, 2, Polarity::negative, k}, c) ==
              point_of_role({RoleKind::Group, 2, Polarity::negative, 1}, c));
}

TEST_CASE("role positions reject out-of-range indices") {
    ReductionConstants c = constants(3, 4);
    CHECK_THROWS_AS(point_of_role({RoleKind::R, 0}, c), IndexOutOfRange);
    CHECK_THROWS_AS(point_of_role({RoleKind::R, 4}, c), IndexOutOfRange);
    CHECK_THROWS_AS(point_of_role({RoleKind::OccC, 1, Polarity::positive, 0}, c),
                    IndexOutOfRange);
    CHECK_THROWS_AS(point_of_role({RoleKind::OccC, 1, Polarity::positive, 3}, c),
                    IndexOutOfRange);
    // Clause roles carry no variable, so a stale var field is ignored.
    CHECK(point_of_role({RoleKind::Clause, 99, Polarity::positive, 1}, c) ==
          pt("2", "2", "17/8"));
}

TEST_CASE("reduce lays out robots in the documented id order") {
    Reduction r = reduce(example_norm());
    CHECK(r.instance.robots.size() == 46);
    CHECK(r.roles.size() == 46);
    CHECK(r.instance.metric == Metric::L1);
    CHECK(r.instance.source_id == 0);
    REQUIRE(r.instance.deadline.has_value());
    CHECK(*r.instance.deadline == rat("49/8"));
    for (int id = 0; id < 46; ++id) {
        CHECK(r.instance.robots[id].id == id);
        CHECK(r.instance.robots[id].home == point_of_role(r.roles[id], r.consts));
    }
    CHECK(r.roles[0] == Role{RoleKind::R, 1});
    CHECK(r.roles[2] == Role{RoleKind::R, 3});
    CHECK(r.roles[3] == Role{RoleKind::S, 1});
    CHECK(r.roles[6] == Role{RoleKind::Group, 1, Polarity::positive, 1});
    CHECK(r.roles[8] == Role{RoleKind::Group, 3, Polarity::positive, 1});
    CHECK(r.roles[9] == Role{RoleKind::OccC, 1, Polarity::positive, 1});
    CHECK(r.roles[12] == Role{RoleKind::OccD, 1, Polarity::positive, 1});
    CHECK(r.roles[15] == Role{RoleKind::Group, 1, Polarity::positive, 2});
    CHECK(r.roles[24] == Role{RoleKind::Group, 1, Polarity::negative, 1});
    CHECK(r.roles[42] == Role{RoleKind::Clause, 0, Polarity::positive, 1});
    CHECK(r.roles[45] == Role{RoleKind::Clause, 0, Polarity::negative, 2});
    CHECK(r.instance.robots[9].home == pt("2", "0", "17/8"));
    CHECK(r.instance.robots[42].home == pt("2", "2", "17/8"));
}

TEST_CASE("reduce rejects cnfs not in normal form") {
    NormalizedCnf bad = example_norm();
    bad.half = 1;
    CHECK_THROWS_AS(reduce(bad), BadShape);
    NormalizedCnf swapped = example_norm();
    std::swap(swapped.cnf.clauses[0], swapped.cnf.clauses[2]);  // negative first
    CHECK_THROWS_AS(reduce(swapped), BadShape);
    NormalizedCnf even;  // var_count 4 violates the odd-count requirement
    even.cnf = parse_dimacs("p cnf 4 4\n1 2 3 0\n1 2 4 0\n-1 -2 -3 0\n-1 -2 -4 0\n");
    even.half = 2;
    CHECK_THROWS_AS(reduce(even), BadShape);
}

TEST_CASE("gadget distances are what the timeline relies on") {
    testgen::Rng rng(23);
    Point3 origin = pt("0", "0", "0");
    for (int iter = 0; iter < 8; ++iter) {
        NormalizedCnf norm =
            testgen::random_normal_cnf(rng, 2 * rng.range(1, 5) + 1, rng.range(2, 5));
        Reduction r = reduce(norm);
        const ReductionConstants& c = r.consts;
        Rational two(2);
        // Every clause robot sits at L1 distance exactly L from the origin.
        // Group points sit at 2 + eps; the two sides of a variable differ by
        // 2*eps; occurrence columns and clause hops are length 2 exactly.
        for (int id = 0; id < static_cast<int>(r.roles.size()); ++id) {
            const Role& role = r.roles[id];
            const Point3& home = r.instance.robots[id].home;
            switch (role.kind) {
                case RoleKind::Clause:
                    CHECK(l1_distance(origin, home) == c.L);
                    break;
                case RoleKind::Group: {
                    CHECK(l1_distance(origin, home) == two + c.epsilon);
                    Role twin = role;
                    twin.polarity = opposite(role.polarity);
                    CHECK(l1_distance(home, point_of_role(twin, c)) == c.epsilon * 2);
                    CHECK(l1_distance(home, point_of_role(
                                                {RoleKind::OccC, role.var, role.polarity,
                                                 role.clause}, c)) == two);
                    break;
                }
                case RoleKind::OccC: {
                    Role d{RoleKind::OccD, role.var, role.polarity, role.clause};
                    CHECK(l1_distance(home, point_of_role(d, c)) == two - c.epsilon * 2);
                    Role cl{RoleKind::Clause, 0, role.polarity, role.clause};
                    CHECK(l1_distance(home, point_of_role(cl, c)) == two);
                    break;
                }
                case RoleKind::S: {
                    // Last witness leg: group point to S, plus the earlier
                    // legs, is exactly L with zero slack.
                    Role g{RoleKind::Group, role.var, Polarity::negative, 1};
                    Rational legs = (two + c.epsilon) + c.epsilon * 2 +
                                    l1_distance(point_of_role(g, c), home);
                    CHECK(legs == c.L);
                    break;
                }
                case RoleKind::R:
                    CHECK(home == origin);
                    break;
                case RoleKind::OccD:
                    break;
            }
        }
    }
}

}  // TEST_SUITE

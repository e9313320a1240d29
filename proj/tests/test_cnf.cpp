#include <doctest.h>

#include <optional>
#include <string>

#include "freezetag/cnf.hpp"
#include "freezetag/errors.hpp"
#include "testgen.hpp"

using namespace freezetag;

namespace {

const char* kExample =
    "p cnf 3 4\n"
    "1 2 3 0\n"
    "1 2 3 0\n"
    "-1 -2 -3 0\n"
    "-1 -2 -3 0\n";

// Every triple appears positively (so at most two variables are false) and
// negatively (at most two true); both cannot hold over five variables.
MonotoneCnf unsat5() {
    MonotoneCnf cnf;
    cnf.var_count = 5;
    for (Polarity pol : {Polarity::positive, Polarity::negative})
        for (int a = 1; a <= 5; ++a)
            for (int b = a + 1; b <= 5; ++b)
                for (int c = b + 1; c <= 5; ++c)
                    cnf.clauses.push_back({pol, {a, b, c}});
    return cnf;
}

}  // namespace

TEST_SUITE("cnf") {

TEST_CASE("dimacs parse accepts the subset") {
    MonotoneCnf cnf = parse_dimacs("c a comment\n\np cnf 5 2\nc mid comment\n3 1 5 0\n-2 -4 -5 0\n");
    CHECK(cnf.var_count == 5);
    REQUIRE(cnf.clauses.size() == 2);
    CHECK(cnf.clauses[0].polarity == Polarity::positive);
    CHECK(cnf.clauses[0].vars == std::array<int, 3>{1, 3, 5});
    CHECK(cnf.clauses[1].polarity == Polarity::negative);
    CHECK(cnf.clauses[1].vars == std::array<int, 3>{2, 4, 5});
    CHECK(parse_dimacs("p cnf 7 0\n").clauses.empty());
}

TEST_CASE("dimacs parse rejects with the precise error") {
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 -2 3 0\n"), NonMonotoneClause);
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 1 2 0\n"), RepeatedVariable);
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 2 4 0\n"), IndexOutOfRange);
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n-1 -2 -4 0\n"), IndexOutOfRange);
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 2 0\n"), BadArity);
    CHECK_THROWS_AS(parse_dimacs("p cnf 4 1\n1 2 3 4 0\n"), BadArity);
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 2 3\n"), SyntaxError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 2\n1 2 3 0\n"), SyntaxError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 0\n1 2 3 0\n"), SyntaxError);
    CHECK_THROWS_AS(parse_dimacs("1 2 3 0\n"), SyntaxError);
    CHECK_THROWS_AS(parse_dimacs("p cnf x 1\n1 2 3 0\n"), SyntaxError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 2 3 0 junk\n"), SyntaxError);
    CHECK_THROWS_AS(parse_dimacs(""), SyntaxError);
}

TEST_CASE("dimacs roundtrips byte for byte") {
    CHECK(to_dimacs(parse_dimacs(kExample)) == kExample);
    testgen::Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        MonotoneCnf cnf = testgen::random_cnf(rng, rng.range(3, 9), rng.range(0, 8));
        std::string text = to_dimacs(cnf);
        CHECK(parse_dimacs(text) == cnf);
        CHECK(to_dimacs(parse_dimacs(text)) == text);
    }
}

TEST_CASE("evaluate checks every clause") {
    MonotoneCnf cnf = parse_dimacs(kExample);
    CHECK(evaluate(cnf, {false, false, true}));
    CHECK(evaluate(cnf, {true, false, false}));
    CHECK(!evaluate(cnf, {true, true, true}));    // negative clause unhappy
    CHECK(!evaluate(cnf, {false, false, false}));  // positive clause unhappy
    CHECK_THROWS_AS(evaluate(cnf, {true, true}), LengthMismatch);
    CHECK(evaluate(MonotoneCnf{}, {}));
}

TEST_CASE("brute force finds the lexicographically smallest model") {
    MonotoneCnf cnf = parse_dimacs(kExample);
    std::optional<Assignment> a = brute_force_sat(cnf);
    REQUIRE(a.has_value());
    CHECK(*a == Assignment{false, false, true});
    CHECK(evaluate(cnf, *a));

    CHECK(!brute_force_sat(unsat5()).has_value());

    MonotoneCnf wide;
    wide.var_count = 25;
    CHECK_THROWS_AS(brute_force_sat(wide), TooLarge);
    CHECK(brute_force_sat(wide, 25).has_value());
}

TEST_CASE("normalize pads a lone positive clause to reduction form") {
    MonotoneCnf cnf = parse_dimacs("p cnf 3 1\n1 2 3 0\n");
    NormalizedCnf norm = normalize(cnf);
    CHECK(norm.var_count() == 9);
    CHECK(norm.half == 2);
    CHECK(to_dimacs(norm.cnf) ==
          "p cnf 9 4\n"
          "1 2 3 0\n"
          "7 8 9 0\n"
          "-4 -5 -6 0\n"
          "-4 -5 -6 0\n");
    CHECK(norm.original_var_count == 3);
    // Positive-clause dummies default true, negative-clause dummies false.
    CHECK(norm.dummy_defaults ==
          std::vector<std::pair<int, bool>>{
              {4, false}, {5, false}, {6, false}, {7, true}, {8, true}, {9, true}});
}

TEST_CASE("normalize handles the empty formula") {
    MonotoneCnf cnf;
    NormalizedCnf norm = normalize(cnf);
    CHECK(norm.var_count() == 9);
    CHECK(norm.clause_count() == 4);
    CHECK(norm.half == 2);
    CHECK(brute_force_sat(norm.cnf).has_value());
}

TEST_CASE("normalize balances and reorders, positives first") {
    MonotoneCnf cnf = parse_dimacs("p cnf 5 3\n-1 -2 -3 0\n1 2 4 0\n-2 -3 -5 0\n");
    NormalizedCnf norm = normalize(cnf);
    CHECK(norm.var_count() == 5);  // odd already, both polarities present
    CHECK(norm.half == 2);
    CHECK(to_dimacs(norm.cnf) ==
          "p cnf 5 4\n"
          "1 2 4 0\n"
          "1 2 4 0\n"
          "-1 -2 -3 0\n"
          "-2 -3 -5 0\n");
    CHECK(norm.dummy_defaults.empty());
}

TEST_CASE("normalize is idempotent and satisfiability-preserving") {
    testgen::Rng rng(13);
    for (int i = 0; i < 60; ++i) {
        MonotoneCnf cnf = testgen::random_cnf(rng, rng.range(3, 8), rng.range(0, 6));
        NormalizedCnf once = normalize(cnf);
        CHECK(once.clause_count() == 2 * once.half);
        CHECK(once.var_count() % 2 == 1);
        CHECK(once.half >= 2);
        for (int j = 0; j < once.clause_count(); ++j)
            CHECK((once.cnf.clauses[j].polarity == Polarity::positive) == (j < once.half));
        NormalizedCnf twice = normalize(once.cnf);
        CHECK(twice.cnf == once.cnf);
        CHECK(twice.half == once.half);
        CHECK(brute_force_sat(cnf).has_value() == brute_force_sat(once.cnf).has_value());
    }
    CHECK(!brute_force_sat(normalize(unsat5()).cnf).has_value());
}

TEST_CASE("extend_assignment applies the recorded dummy values") {
    NormalizedCnf norm = normalize(parse_dimacs("p cnf 3 1\n1 2 3 0\n"));
    Assignment ext = extend_assignment(norm, {true, false, false});
    CHECK(ext == Assignment{true, false, false, false, false, false, true, true, true});
    CHECK(evaluate(norm.cnf, ext));
    CHECK_THROWS_AS(extend_assignment(norm, {true}), LengthMismatch);
}

TEST_CASE("a satisfying original assignment extends to a normalized one") {
    testgen::Rng rng(17);
    for (int i = 0; i < 40; ++i) {
        MonotoneCnf cnf = testgen::random_cnf(rng, rng.range(3, 7), rng.range(1, 5));
        std::optional<Assignment> a = brute_force_sat(cnf);
        if (!a) continue;
        NormalizedCnf norm = normalize(cnf);
        CHECK(evaluate(norm.cnf, extend_assignment(norm, *a)));
    }
}

}  // TEST_SUITE

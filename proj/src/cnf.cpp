#include "freezetag/cnf.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>

#include "freezetag/errors.hpp"

namespace freezetag {

namespace {

Clause clause_from_literals(long a, long b, long c, int var_count, int line_no) {
    auto where = [line_no] { return " (line " + std::to_string(line_no) + ")"; };
    bool pos = a > 0;
    if ((b > 0) != pos || (c > 0) != pos)
        throw NonMonotoneClause("mixed literal signs in one clause" + where());
    std::array<long, 3> v{std::abs(a), std::abs(b), std::abs(c)};
    std::sort(v.begin(), v.end());
    if (v[0] == v[1] || v[1] == v[2])
        throw RepeatedVariable("variable repeated inside a clause" + where());
    if (v[2] > var_count)
        throw IndexOutOfRange("variable index " + std::to_string(v[2]) +
                              " exceeds declared count" + where());
    Clause cl;
    cl.polarity = pos ? Polarity::positive : Polarity::negative;
    cl.vars = {static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2])};
    return cl;
}

}  // namespace

MonotoneCnf parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int declared_clauses = 0;
    MonotoneCnf cnf;

    while (std::getline(in, line)) {
        ++line_no;
        auto where = [line_no] { return " (line " + std::to_string(line_no) + ")"; };
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (!have_header) {
            std::string p, kind;
            if (!(ls >> p >> kind >> cnf.var_count >> declared_clauses) || p != "p" ||
                kind != "cnf" || cnf.var_count < 1 || declared_clauses < 0)
                throw SyntaxError("expected header 'p cnf <n> <m>'" + where());
            std::string extra;
            if (ls >> extra) throw SyntaxError("trailing tokens after header" + where());
            have_header = true;
            continue;
        }
        long lits[3];
        long terminator = -1;
        if (!(ls >> lits[0] >> lits[1] >> lits[2]))
            throw BadArity("clause line needs exactly three literals" + where());
        if (lits[0] == 0 || lits[1] == 0 || lits[2] == 0)
            throw BadArity("clause line needs exactly three literals" + where());
        if (!(ls >> terminator))
            throw SyntaxError("clause line not terminated by 0" + where());
        if (terminator != 0) throw BadArity("more than three literals in a clause" + where());
        std::string extra;
        if (ls >> extra) throw SyntaxError("trailing tokens after clause" + where());
        cnf.clauses.push_back(clause_from_literals(lits[0], lits[1], lits[2],
                                                   cnf.var_count, line_no));
    }
    if (!have_header) throw SyntaxError("missing 'p cnf' header");
    if (static_cast<int>(cnf.clauses.size()) != declared_clauses)
        throw SyntaxError("header declares " + std::to_string(declared_clauses) +
                          " clauses, found " + std::to_string(cnf.clauses.size()));
    return cnf;
}

std::string to_dimacs(const MonotoneCnf& cnf) {
    std::ostringstream out;
    out << "p cnf " << cnf.var_count << ' ' << cnf.clauses.size() << '\n';
    for (const Clause& cl : cnf.clauses) {
        int sign = cl.polarity == Polarity::positive ? 1 : -1;
        out << sign * cl.vars[0] << ' ' << sign * cl.vars[1] << ' ' << sign * cl.vars[2]
            << " 0\n";
    }
    return out.str();
}

bool evaluate(const MonotoneCnf& cnf, const Assignment& a) {
    if (static_cast<int>(a.size()) != cnf.var_count)
        throw LengthMismatch("assignment has " + std::to_string(a.size()) +
                             " values for " + std::to_string(cnf.var_count) + " variables");
    for (const Clause& cl : cnf.clauses) {
        bool want = cl.polarity == Polarity::positive;
        bool sat = false;
        for (int v : cl.vars) sat = sat || (a[v - 1] == want);
        if (!sat) return false;
    }
    return true;
}

std::optional<Assignment> brute_force_sat(const MonotoneCnf& cnf, int var_cap) {
    int n = cnf.var_count;
    if (n > var_cap || n > 62)
        throw TooLarge("brute force over " + std::to_string(n) + " variables exceeds cap " +
                       std::to_string(std::min(var_cap, 62)));
    // Bit n-1-(v-1) of the counter holds x_v, so counting up enumerates
    // assignments in lexicographic order with false < true.
    std::vector<std::uint64_t> masks(cnf.clauses.size());
    for (std::size_t c = 0; c < cnf.clauses.size(); ++c)
        for (int v : cnf.clauses[c].vars)
            masks[c] |= std::uint64_t{1} << (n - v);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        bool ok = true;
        for (std::size_t c = 0; c < cnf.clauses.size() && ok; ++c) {
            std::uint64_t hit = bits & masks[c];
            ok = cnf.clauses[c].polarity == Polarity::positive ? hit != 0
                                                               : hit != masks[c];
        }
        if (ok) {
            Assignment a(n);
            for (int v = 1; v <= n; ++v) a[v - 1] = (bits >> (n - v)) & 1;
            return a;
        }
    }
    return std::nullopt;
}

NormalizedCnf normalize(const MonotoneCnf& input) {
    NormalizedCnf out;
    out.cnf = input;
    out.original_var_count = input.var_count;
    MonotoneCnf& cnf = out.cnf;

    auto add_dummy_clause = [&](Polarity pol) {
        int base = cnf.var_count;
        Clause cl{pol, {base + 1, base + 2, base + 3}};
        cnf.var_count += 3;
        cnf.clauses.push_back(cl);
        bool value = pol == Polarity::positive;
        for (int v : cl.vars) out.dummy_defaults.emplace_back(v, value);
    };
    auto count = [&](Polarity pol) {
        return static_cast<int>(std::count_if(cnf.clauses.begin(), cnf.clauses.end(),
                                              [pol](const Clause& c) { return c.polarity == pol; }));
    };
    auto first_of = [&](Polarity pol) {
        return *std::find_if(cnf.clauses.begin(), cnf.clauses.end(),
                             [pol](const Clause& c) { return c.polarity == pol; });
    };

    if (count(Polarity::positive) == 0) add_dummy_clause(Polarity::positive);
    if (count(Polarity::negative) == 0) add_dummy_clause(Polarity::negative);
    while (cnf.var_count % 2 == 0) add_dummy_clause(Polarity::positive);
    int p = count(Polarity::positive), q = count(Polarity::negative);
    while (p != q) {
        Polarity minority = p < q ? Polarity::positive : Polarity::negative;
        cnf.clauses.push_back(first_of(minority));
        (p < q ? p : q) += 1;
    }
    if (p + q < 4) {
        cnf.clauses.push_back(first_of(Polarity::positive));
        cnf.clauses.push_back(first_of(Polarity::negative));
        p += 1, q += 1;
    }

    std::stable_sort(cnf.clauses.begin(), cnf.clauses.end(),
                     [](const Clause& a, const Clause& b) {
                         return a.polarity == Polarity::positive && b.polarity == Polarity::negative;
                     });
    out.half = p;
    return out;
}

Assignment extend_assignment(const NormalizedCnf& norm, const Assignment& original) {
    if (static_cast<int>(original.size()) != norm.original_var_count)
        throw LengthMismatch("expected assignment over " +
                             std::to_string(norm.original_var_count) + " variables, got " +
                             std::to_string(original.size()));
    Assignment a(norm.var_count());
    std::copy(original.begin(), original.end(), a.begin());
    for (auto [var, value] : norm.dummy_defaults) a[var - 1] = value;
    return a;
}

}  // namespace freezetag

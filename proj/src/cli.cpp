#include "freezetag/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "freezetag/cnf.hpp"
#include "freezetag/errors.hpp"
#include "freezetag/json_io.hpp"
#include "freezetag/reduction.hpp"
#include "freezetag/schedule.hpp"
#include "freezetag/solvers.hpp"
#include "freezetag/witness.hpp"

namespace freezetag {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SyntaxError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    file << content;
    if (!file) throw SyntaxError("cannot write " + path);
}

// Writes to the given path, or to the stream when no path was requested.
void emit(std::ostream& out, const std::string& path, const std::string& content) {
    if (path.empty())
        out << content;
    else
        write_file(path, content);
}

// mt19937_64 with rejection sampling: the draw sequence is pinned by the
// standard, so seeded output is identical on every platform.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t floor = (0 - n) % n;  // 2^64 mod n
        std::uint64_t x;
        do x = eng(); while (x < floor);
        return x % n;
    }
};

Assignment parse_assignment(const std::string& s) {
    Assignment a;
    for (char ch : s) {
        if (ch == 'T' || ch == 't' || ch == '1')
            a.push_back(true);
        else if (ch == 'F' || ch == 'f' || ch == '0')
            a.push_back(false);
        else
            throw SyntaxError("assignments are strings over T/F");
    }
    return a;
}

int cmd_gen_cnf(int vars, int clauses, std::uint64_t seed, const std::string& out_path,
                std::ostream& out) {
    if (vars < 3) throw BadShape("gen-cnf needs at least 3 variables");
    if (clauses < 0) throw BadShape("clause count must be nonnegative");
    Rng rng(seed);
    MonotoneCnf cnf;
    cnf.var_count = vars;
    for (int j = 0; j < clauses; ++j) {
        Clause cl;
        cl.polarity = rng.below(2) ? Polarity::negative : Polarity::positive;
        std::array<int, 3> v{};
        v[0] = static_cast<int>(rng.below(vars)) + 1;
        do v[1] = static_cast<int>(rng.below(vars)) + 1; while (v[1] == v[0]);
        do v[2] = static_cast<int>(rng.below(vars)) + 1; while (v[2] == v[0] || v[2] == v[1]);
        std::sort(v.begin(), v.end());
        cl.vars = v;
        cnf.clauses.push_back(cl);
    }
    emit(out, out_path, to_dimacs(cnf));
    return 0;
}

int cmd_normalize(const std::string& in_path, const std::string& out_path, std::ostream& out) {
    NormalizedCnf norm = normalize(parse_dimacs(read_file(in_path)));
    emit(out, out_path, to_dimacs(norm.cnf));
    return 0;
}

int cmd_reduce(const std::string& in_path, const std::string& out_path,
               const std::string& roles_path, std::ostream& out) {
    Reduction red = reduce(normalize(parse_dimacs(read_file(in_path))));
    emit(out, out_path, serialize_instance(red.instance));
    if (!roles_path.empty()) write_file(roles_path, serialize_roles(red.roles));
    return 0;
}

int cmd_witness(const std::string& in_path, const std::string& assign, bool auto_pick,
                const std::string& out_path, std::ostream& out, std::ostream& err) {
    MonotoneCnf cnf = parse_dimacs(read_file(in_path));
    Assignment a;
    if (auto_pick) {
        std::optional<Assignment> found = brute_force_sat(cnf);
        if (!found) {
            err << "error: the formula is unsatisfiable\n";
            return 1;
        }
        a = std::move(*found);
    } else {
        a = parse_assignment(assign);
    }
    NormalizedCnf norm = normalize(cnf);
    Reduction red = reduce(norm);
    Schedule sched = build_witness(norm, extend_assignment(norm, a), red.roles, red.consts);
    emit(out, out_path, serialize_schedule(sched));
    return 0;
}

int cmd_verify(const std::string& inst_path, const std::string& sched_path,
               const std::string& deadline_str, std::ostream& out) {
    FtpInstance inst = parse_instance(read_file(inst_path));
    Schedule sched = parse_schedule(read_file(sched_path));
    std::optional<Rational> deadline = inst.deadline;  // flag overrides the file
    if (!deadline_str.empty()) deadline = Rational::parse(deadline_str);
    ValidationReport report = validate(inst, sched, deadline);
    out << serialize_report(report, /*compact=*/true);
    return report.valid ? 0 : 1;
}

int cmd_solve(const std::string& inst_path, bool exact, const std::string& out_path,
              int location_cap, double time_budget, bool stats_json, std::ostream& out,
              std::ostream& err) {
    FtpInstance inst = parse_instance(read_file(inst_path));
    SolveResult res;
    if (exact) {
        SolverConfig cfg;
        cfg.location_cap = location_cap;
        cfg.time_budget_seconds = time_budget;
        res = solve_exact(inst, cfg);
    } else {
        res = solve_greedy(inst);
    }
    if (stats_json) {
        nlohmann::json stats;
        stats["makespan"] = res.makespan.str();
        stats["method"] = exact ? "exact" : "greedy";
        if (exact) {
            stats["nodes"] = res.stats.nodes;
            stats["optimal"] = res.stats.optimal;
            stats["pruned"] = res.stats.pruned;
        }
        err << stats.dump() << "\n";
    } else if (exact) {
        err << "makespan " << res.makespan << ", nodes " << res.stats.nodes << ", pruned "
            << res.stats.pruned << (res.stats.optimal ? "" : ", time budget hit") << "\n";
    } else {
        err << "makespan " << res.makespan << " (greedy)\n";
    }
    emit(out, out_path, serialize_schedule(res.schedule));
    return 0;
}

int cmd_bounds(const std::string& inst_path, std::ostream& out) {
    FtpInstance inst = parse_instance(read_file(inst_path));
    nlohmann::json v;
    v["greedy_makespan"] = solve_greedy(inst).makespan.str();
    v["lower_bound"] = lower_bound(inst).str();
    out << v.dump() << "\n";
    return 0;
}

// satisfiable (by brute force) ⇒ the witness schedule validates with
// makespan exactly L; and the triangle-inequality lower bound equals L
// whether or not the formula is satisfiable.
int cmd_roundtrip(const std::string& in_path, std::ostream& out) {
    MonotoneCnf cnf = parse_dimacs(read_file(in_path));
    std::optional<Assignment> sat = brute_force_sat(cnf);
    NormalizedCnf norm = normalize(cnf);
    Reduction red = reduce(norm);
    bool lb_is_l = lower_bound(red.instance) == red.consts.L;
    bool ok = lb_is_l;
    nlohmann::json v;
    v["lower_bound_is_L"] = lb_is_l;
    v["satisfiable"] = sat.has_value();
    if (sat) {
        Schedule sched =
            build_witness(norm, extend_assignment(norm, *sat), red.roles, red.consts);
        ValidationReport rep = validate(red.instance, sched, red.consts.L);
        v["witness_valid"] = rep.valid;
        v["witness_makespan"] = rep.makespan.str();
        ok = ok && rep.valid && rep.makespan == red.consts.L;
    }
    v["ok"] = ok;
    out << v.dump() << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"monotone-3sat to freeze-tag reduction toolkit", "freezetag"};
    app.require_subcommand(1);

    int vars = 0, clauses = 0;
    std::uint64_t seed = 1;
    std::string in_path, out_path, roles_path, sched_path, assign, deadline_str;
    bool auto_pick = false, use_exact = false, use_greedy = false, stats_json = false;
    int location_cap = 10;
    double time_budget = 0;

    CLI::App* gen = app.add_subcommand("gen-cnf", "emit a seeded random monotone 3-cnf");
    gen->add_option("--vars", vars, "number of variables (>= 3)")->required();
    gen->add_option("--clauses", clauses, "number of clauses")->required();
    gen->add_option("--seed", seed, "rng seed (default 1)");
    gen->add_option("-o,--output", out_path, "output path (default stdout)");

    CLI::App* norm = app.add_subcommand("normalize", "rewrite a cnf into reduction form");
    norm->add_option("input", in_path, "cnf file")->required();
    norm->add_option("-o,--output", out_path, "output path (default stdout)");

    CLI::App* red = app.add_subcommand("reduce", "compile a cnf into a freeze-tag instance");
    red->add_option("input", in_path, "cnf file")->required();
    red->add_option("-o,--output", out_path, "instance path (default stdout)");
    red->add_option("--roles", roles_path, "also write the role table here");

    CLI::App* wit = app.add_subcommand("witness", "build the schedule certifying makespan L");
    wit->add_option("input", in_path, "cnf file")->required();
    CLI::Option* oassign =
        wit->add_option("--assign", assign, "assignment over T/F for the input variables");
    CLI::Option* oauto = wit->add_flag("--auto", auto_pick, "brute-force an assignment");
    oassign->excludes(oauto);
    oauto->excludes(oassign);
    wit->add_option("-o,--output", out_path, "schedule path (default stdout)");

    CLI::App* ver = app.add_subcommand("verify", "validate a schedule against an instance");
    ver->add_option("instance", in_path, "instance file")->required();
    ver->add_option("schedule", sched_path, "schedule file")->required();
    ver->add_option("--deadline", deadline_str, "overrides the instance's deadline");

    CLI::App* sol = app.add_subcommand("solve", "solve an instance");
    sol->add_option("instance", in_path, "instance file")->required();
    CLI::Option* oexact = sol->add_flag("--exact", use_exact, "optimal branch and bound");
    CLI::Option* ogreedy = sol->add_flag("--greedy", use_greedy, "nearest-target heuristic");
    oexact->excludes(ogreedy);
    ogreedy->excludes(oexact);
    sol->add_option("-o,--output", out_path, "schedule path (default stdout)");
    sol->add_option("--location-cap", location_cap, "exact-search size refusal threshold");
    sol->add_option("--time-budget", time_budget, "exact-search seconds (0 = unlimited)");
    sol->add_flag("--stats-json", stats_json, "machine-readable diagnostics on stderr");

    CLI::App* bnd = app.add_subcommand("bounds", "print lower and greedy upper bounds");
    bnd->add_option("instance", in_path, "instance file")->required();

    CLI::App* rt = app.add_subcommand("roundtrip", "check the reduction contract on a cnf");
    rt->add_option("input", in_path, "cnf file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_gen_cnf(vars, clauses, seed, out_path, out);
        if (norm->parsed()) return cmd_normalize(in_path, out_path, out);
        if (red->parsed()) return cmd_reduce(in_path, out_path, roles_path, out);
        if (wit->parsed()) {
            if (!auto_pick && assign.empty()) {
                err << "error: witness needs --assign or --auto\n";
                return 2;
            }
            return cmd_witness(in_path, assign, auto_pick, out_path, out, err);
        }
        if (ver->parsed()) return cmd_verify(in_path, sched_path, deadline_str, out);
        if (sol->parsed()) {
            if (!use_exact && !use_greedy) {
                err << "error: solve needs --exact or --greedy\n";
                return 2;
            }
            return cmd_solve(in_path, use_exact, out_path, location_cap, time_budget,
                             stats_json, out, err);
        }
        if (bnd->parsed()) return cmd_bounds(in_path, out);
        if (rt->parsed()) return cmd_roundtrip(in_path, out);
    } catch (const NotSatisfying& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace freezetag

#include "freezetag/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "freezetag/errors.hpp"
#include "freezetag/geometry.hpp"

namespace freezetag {

namespace {

// Distinct frozen homes in lexicographic point order (so "smallest index"
// and "lexicographically smallest point" coincide), with the robots homed at
// each, plus the source's position expressed as an index into pts.
struct Layout {
    std::vector<Point3> pts;               // frozen homes, then the source's
                                           // position iff it is not one
    std::vector<std::vector<int>> robots;  // frozen ids per home, ascending
    int frozen_locs = 0;                   // pts[0..frozen_locs) are frozen homes
    int src = 0;                           // index of the source's position
    int src_index = -1;                    // position of the source robot in
                                           // FtpInstance::robots
};

Layout make_layout(const FtpInstance& inst) {
    Layout lay;
    std::map<Point3, std::vector<int>> homes;
    const Robot* source = nullptr;
    for (std::size_t i = 0; i < inst.robots.size(); ++i) {
        const Robot& r = inst.robots[i];
        if (r.id == inst.source_id) {
            source = &r;
            lay.src_index = static_cast<int>(i);
            continue;
        }
        homes[r.home].push_back(r.id);
    }
    if (!source) throw BadShape("source id is missing from the robot list");
    for (auto& [pt, ids] : homes) {
        std::sort(ids.begin(), ids.end());
        lay.pts.push_back(pt);
        lay.robots.push_back(std::move(ids));
    }
    lay.frozen_locs = static_cast<int>(lay.pts.size());
    lay.src = lay.frozen_locs;
    for (int j = 0; j < lay.frozen_locs; ++j)
        if (lay.pts[j] == source->home) lay.src = j;
    if (lay.src == lay.frozen_locs) lay.pts.push_back(source->home);
    return lay;
}

std::vector<std::vector<Rational>> distance_table(Metric metric,
                                                  const std::vector<Point3>& pts) {
    std::size_t n = pts.size();
    std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            d[i][j] = d[j][i] = distance(metric, pts[i], pts[j]);
    return d;
}

// Branch and bound over direct-travel wake trees. Visits are generated in
// nondecreasing arrival order, which enumerates every tree exactly once
// (each tree has one arrival-sorted visit sequence, up to ties).
struct ExactSearch {
    const Layout& lay;
    const std::vector<std::vector<Rational>>& d;

    struct Class {
        Rational t;  // time all robots of the class became available
        int loc;
        int count;
    };
    std::vector<Class> agents;
    std::uint64_t remaining = 0;
    Rational mk;  // max activation so far on the current path

    Rational best_mk;  // incumbent value, seeded by the greedy schedule
    bool improved = false;
    std::vector<std::pair<int, int>> path, best_path;  // (class index, target)

    SearchStats stats;
    bool use_budget = false;
    bool timed_out = false;
    std::chrono::steady_clock::time_point deadline;

    void dfs(const Rational& last_arrival) {
        if (remaining == 0) {
            if (mk < best_mk) {
                best_mk = mk;
                best_path = path;
                improved = true;
            }
            return;
        }
        ++stats.nodes;
        if (use_budget && std::chrono::steady_clock::now() >= deadline) timed_out = true;
        if (timed_out) return;

        struct Child {
            Rational arr;
            int ci, r;
        };
        std::vector<Child> kids;
        for (int ci = 0; ci < static_cast<int>(agents.size()); ++ci) {
            if (agents[ci].count == 0) continue;
            bool twin = false;  // identical classes branch identically
            for (int cj = 0; cj < ci && !twin; ++cj)
                twin = agents[cj].count > 0 && agents[cj].loc == agents[ci].loc &&
                       agents[cj].t == agents[ci].t;
            if (twin) continue;
            for (int r = 0; r < lay.frozen_locs; ++r) {
                if (!(remaining >> r & 1)) continue;
                Rational arr = agents[ci].t + d[agents[ci].loc][r];
                if (arr < last_arrival) continue;
                Rational nmk = max(mk, arr);
                if (nmk >= best_mk) {
                    ++stats.pruned;
                    continue;
                }
                if (bound_after(ci, r, arr, nmk) >= best_mk) {
                    ++stats.pruned;
                    continue;
                }
                kids.push_back({std::move(arr), ci, r});
            }
        }
        std::sort(kids.begin(), kids.end(), [](const Child& a, const Child& b) {
            if (a.arr != b.arr) return a.arr < b.arr;
            if (a.ci != b.ci) return a.ci < b.ci;
            return a.r < b.r;
        });
        for (const Child& k : kids) {
            if (timed_out) return;
            Rational nmk = max(mk, k.arr);
            if (nmk >= best_mk) {  // incumbent may have improved since sorting
                ++stats.pruned;
                continue;
            }
            agents[k.ci].count -= 1;
            agents.push_back({k.arr, k.r, 1 + static_cast<int>(lay.robots[k.r].size())});
            remaining &= ~(std::uint64_t(1) << k.r);
            path.emplace_back(k.ci, k.r);
            Rational saved_mk = mk;
            mk = nmk;
            dfs(k.arr);
            mk = std::move(saved_mk);
            path.pop_back();
            remaining |= std::uint64_t(1) << k.r;
            agents.pop_back();
            agents[k.ci].count += 1;
        }
    }

    // Admissible completion bound after hypothetically sending class ci to r:
    // every still-unwoken location needs some agent to arrive, no earlier
    // than the best direct trip from any available agent (triangle
    // inequality covers agents woken later).
    Rational bound_after(int ci, int r, const Rational& arr, const Rational& nmk) {
        Rational bound = nmk;
        for (int r2 = 0; r2 < lay.frozen_locs; ++r2) {
            if (r2 == r || !(remaining >> r2 & 1)) continue;
            Rational reach = arr + d[r][r2];
            for (int cj = 0; cj < static_cast<int>(agents.size()); ++cj) {
                int avail = agents[cj].count - (cj == ci ? 1 : 0);
                if (avail == 0) continue;
                Rational via = agents[cj].t + d[agents[cj].loc][r2];
                if (via < reach) reach = std::move(via);
            }
            if (reach > bound) bound = std::move(reach);
            if (bound >= best_mk) return bound;
        }
        return bound;
    }
};

// Replays a decision path into per-robot itineraries; the class indices in
// the path match ExactSearch's creation order exactly. The moving robot of a
// class is always its smallest id.
Schedule schedule_from_path(const FtpInstance& inst, const Layout& lay,
                            const std::vector<std::vector<Rational>>& d,
                            const std::vector<std::pair<int, int>>& path) {
    std::map<int, int> idx_of;
    Schedule s;
    s.itineraries.resize(inst.robots.size());
    for (std::size_t i = 0; i < inst.robots.size(); ++i) {
        s.itineraries[i].robot = inst.robots[i].id;
        idx_of[inst.robots[i].id] = static_cast<int>(i);
    }
    struct Class {
        Rational t;
        int loc;
    };
    std::vector<Class> classes;
    std::vector<std::vector<int>> pool;

    std::vector<int> first = {inst.source_id};
    s.itineraries[idx_of[inst.source_id]].waypoints = {{Rational(0), lay.pts[lay.src]}};
    if (lay.src < lay.frozen_locs)
        for (int id : lay.robots[lay.src]) {
            s.itineraries[idx_of[id]].waypoints = {{Rational(0), lay.pts[lay.src]}};
            first.push_back(id);
        }
    std::sort(first.begin(), first.end());
    classes.push_back({Rational(0), lay.src});
    pool.push_back(std::move(first));

    for (auto [ci, r] : path) {
        Rational arr = classes[ci].t + d[classes[ci].loc][r];
        int mover = pool[ci].front();
        pool[ci].erase(pool[ci].begin());
        s.itineraries[idx_of[mover]].waypoints.push_back({arr, lay.pts[r]});
        std::vector<int> woken = lay.robots[r];
        for (int id : woken)
            s.itineraries[idx_of[id]].waypoints = {{arr, lay.pts[r]}};
        woken.push_back(mover);
        std::sort(woken.begin(), woken.end());
        classes.push_back({std::move(arr), r});
        pool.push_back(std::move(woken));
    }
    return s;
}

}  // namespace

SolveResult solve_greedy(const FtpInstance& inst) {
    SolveResult res;
    res.stats.optimal = false;
    if (inst.robots.empty()) return res;
    Layout lay = make_layout(inst);
    int locs = lay.frozen_locs;

    std::map<int, int> idx_of;
    res.schedule.itineraries.resize(inst.robots.size());
    for (std::size_t i = 0; i < inst.robots.size(); ++i) {
        res.schedule.itineraries[i].robot = inst.robots[i].id;
        idx_of[inst.robots[i].id] = static_cast<int>(i);
    }
    auto waypoints = [&](int id) -> std::vector<Waypoint>& {
        return res.schedule.itineraries[idx_of[id]].waypoints;
    };

    std::vector<char> claimed(locs, 0);
    struct Event {
        Rational t;
        int agent;
        int target;
    };
    auto later = [](const Event& a, const Event& b) {
        if (a.t != b.t) return b.t < a.t;
        return a.agent > b.agent;
    };
    std::priority_queue<Event, std::vector<Event>, decltype(later)> pending(later);

    // A free agent at pt claims the nearest unclaimed home; pts are in
    // lexicographic order, so the first minimum realizes the point tie-break.
    auto assign = [&](int agent, const Point3& pt, const Rational& now) {
        int target = -1;
        Rational best;
        for (int r = 0; r < locs; ++r) {
            if (claimed[r]) continue;
            Rational dr = distance(inst.metric, pt, lay.pts[r]);
            if (target < 0 || dr < best) {
                target = r;
                best = std::move(dr);
            }
        }
        if (target < 0) return;  // nothing left: park
        claimed[target] = 1;
        pending.push({now + best, agent, target});
    };

    waypoints(inst.source_id) = {{Rational(0), lay.pts[lay.src]}};
    std::vector<int> freed = {inst.source_id};
    if (lay.src < locs) {
        claimed[lay.src] = 1;
        for (int id : lay.robots[lay.src]) {
            waypoints(id) = {{Rational(0), lay.pts[lay.src]}};
            freed.push_back(id);
        }
        std::sort(freed.begin(), freed.end());
    }
    for (int id : freed) assign(id, lay.pts[lay.src], Rational(0));

    while (!pending.empty()) {
        Event e = pending.top();
        pending.pop();
        const Point3& pt = lay.pts[e.target];
        waypoints(e.agent).push_back({e.t, pt});
        if (e.t > res.makespan) res.makespan = e.t;
        freed = {e.agent};
        for (int id : lay.robots[e.target]) {
            waypoints(id) = {{e.t, pt}};
            freed.push_back(id);
        }
        std::sort(freed.begin(), freed.end());
        for (int id : freed) assign(id, pt, e.t);
    }
    return res;
}

SolveResult solve_exact(const FtpInstance& inst, const SolverConfig& cfg) {
    if (cfg.location_cap <= 0) throw BadShape("location cap must be positive");
    SolveResult res = solve_greedy(inst);
    res.stats = SearchStats{};
    if (inst.robots.empty()) return res;

    Layout lay = make_layout(inst);
    if (lay.frozen_locs > cfg.location_cap || lay.frozen_locs > 63)
        throw TooLarge("instance has " + std::to_string(lay.frozen_locs) +
                       " distinct frozen locations, cap is " +
                       std::to_string(std::min(cfg.location_cap, 63)));
    if (lay.frozen_locs == 0) return res;

    auto d = distance_table(inst.metric, lay.pts);
    ExactSearch search{lay, d};
    search.best_mk = res.makespan;
    search.agents.push_back(
        {Rational(0), lay.src,
         1 + (lay.src < lay.frozen_locs ? static_cast<int>(lay.robots[lay.src].size()) : 0)});
    search.remaining = (std::uint64_t(1) << lay.frozen_locs) - 1;
    if (lay.src < lay.frozen_locs) search.remaining &= ~(std::uint64_t(1) << lay.src);
    if (cfg.time_budget_seconds > 0) {
        search.use_budget = true;
        search.deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(cfg.time_budget_seconds));
    }
    search.dfs(Rational(0));

    if (search.improved) {
        res.schedule = schedule_from_path(inst, lay, d, search.best_path);
        res.makespan = search.best_mk;
    }
    res.stats = search.stats;
    res.stats.optimal = !search.timed_out;
    return res;
}

}  // namespace freezetag

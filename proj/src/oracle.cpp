// Brute-force optimum by full enumeration of direct-travel wake trees.
// Deliberately written from scratch, sharing no search code with
// solve_exact, so the two can cross-check each other.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "freezetag/errors.hpp"
#include "freezetag/geometry.hpp"
#include "freezetag/solvers.hpp"

namespace freezetag {

namespace {

struct Enumerator {
    std::vector<std::vector<Rational>> dist;  // over locations + source spot
    std::vector<int> extra;                   // robots woken at each location
    int locs = 0;
    bool found = false;
    Rational best;

    // Generates every wake tree once by emitting its visits in nondecreasing
    // arrival order (arrivals along a branch strictly increase, so each tree
    // has a unique sorted visit sequence up to cross-branch ties). No
    // pruning: every complete tree is costed.
    void visit(std::vector<std::pair<Rational, int>>& agents, std::uint64_t left,
               const Rational& floor, const Rational& mk) {
        if (left == 0) {
            if (!found || mk < best) {
                best = mk;
                found = true;
            }
            return;
        }
        std::size_t n = agents.size();
        for (std::size_t i = 0; i < n; ++i) {
            bool twin = false;  // agents with equal state yield equal subtrees
            for (std::size_t j = 0; j < i && !twin; ++j) twin = agents[j] == agents[i];
            if (twin) continue;
            for (int r = 0; r < locs; ++r) {
                if (!(left >> r & 1)) continue;
                Rational arr = agents[i].first + dist[agents[i].second][r];
                if (arr < floor) continue;
                auto saved = agents[i];
                agents[i] = {arr, r};
                for (int c = 0; c < extra[r]; ++c) agents.emplace_back(arr, r);
                visit(agents, left & ~(std::uint64_t(1) << r), arr, mk < arr ? arr : mk);
                agents.resize(n);
                agents[i] = std::move(saved);
            }
        }
    }
};

}  // namespace

Rational enumerate_oracle(const FtpInstance& inst, int cap) {
    if (cap <= 0) throw BadShape("location cap must be positive");
    if (inst.robots.empty()) return Rational(0);
    const Robot* source = nullptr;
    for (const Robot& r : inst.robots)
        if (r.id == inst.source_id) source = &r;
    if (!source) throw BadShape("source id is missing from the robot list");

    std::vector<Point3> homes;
    std::vector<int> count;
    for (const Robot& r : inst.robots) {
        if (r.id == inst.source_id) continue;
        std::size_t j = 0;
        while (j < homes.size() && !(homes[j] == r.home)) ++j;
        if (j == homes.size()) {
            homes.push_back(r.home);
            count.push_back(0);
        }
        ++count[j];
    }
    int locs = static_cast<int>(homes.size());
    if (locs > cap || locs > 63)
        throw TooLarge("instance has " + std::to_string(locs) +
                       " distinct frozen locations, cap is " +
                       std::to_string(std::min(cap, 63)));
    if (locs == 0) return Rational(0);

    Enumerator e;
    e.locs = locs;
    e.extra = count;
    int start = locs;
    for (int j = 0; j < locs; ++j)
        if (homes[j] == source->home) start = j;
    if (start == locs) homes.push_back(source->home);
    std::size_t n = homes.size();
    e.dist.assign(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            e.dist[i][j] = e.dist[j][i] = distance(inst.metric, homes[i], homes[j]);

    std::vector<std::pair<Rational, int>> agents;
    agents.emplace_back(Rational(0), start);
    std::uint64_t left = (std::uint64_t(1) << locs) - 1;
    if (start < locs) {  // robots homed with the source wake at time 0
        left &= ~(std::uint64_t(1) << start);
        for (int c = 0; c < count[start]; ++c) agents.emplace_back(Rational(0), start);
    }
    e.visit(agents, left, Rational(0), Rational(0));
    return e.best;
}

}  // namespace freezetag

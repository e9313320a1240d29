#include "freezetag/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <utility>

#include "freezetag/errors.hpp"

namespace freezetag {

std::string violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::SpeedViolation: return "SpeedViolation";
        case ViolationKind::UnjustifiedActivation: return "UnjustifiedActivation";
        case ViolationKind::CyclicJustification: return "CyclicJustification";
        case ViolationKind::DeadlineExceeded: return "DeadlineExceeded";
        case ViolationKind::BadItinerary: return "BadItinerary";
    }
    return "?";
}

namespace {

struct WaypointKey {
    Rational t;
    Point3 pos;

    bool operator==(const WaypointKey&) const = default;
};

struct WaypointKeyHash {
    std::size_t operator()(const WaypointKey& k) const noexcept {
        return k.t.hash() * 0x9e3779b97f4a7c15ULL ^ std::hash<Point3>{}(k.pos);
    }
};

bool leg_within_speed(Metric metric, const Point3& a, const Point3& b, const Rational& dt) {
    if (metric == Metric::L2) {
        // L2 distances are approximate; validated with absolute tolerance.
        return l2_distance(a, b) <= dt.to_double() + 1e-9;
    }
    return distance(metric, a, b) <= dt;
}

}  // namespace

ValidationReport validate(const FtpInstance& instance, const Schedule& sched,
                          const std::optional<Rational>& deadline) {
    ValidationReport report;
    auto flag = [&report](int robot, ViolationKind kind, std::string detail) {
        report.violations.push_back({robot, kind, std::move(detail)});
    };

    int robot_count = static_cast<int>(instance.robots.size());
    std::vector<const Itinerary*> itin(robot_count, nullptr);
    for (const Itinerary& it : sched.itineraries) {
        if (it.robot < 0 || it.robot >= robot_count) {
            flag(it.robot, ViolationKind::BadItinerary, "itinerary for unknown robot id");
            continue;
        }
        if (itin[it.robot]) {
            flag(it.robot, ViolationKind::BadItinerary, "duplicate itinerary for robot");
            continue;
        }
        itin[it.robot] = &it;
    }

    // Shape and speed checks; activation times are first-waypoint times.
    std::vector<std::optional<Rational>> activation(robot_count);
    for (int id = 0; id < robot_count; ++id) {
        const Itinerary* it = itin[id];
        if (!it) {
            flag(id, ViolationKind::BadItinerary, "no itinerary for robot");
            continue;
        }
        if (it->waypoints.empty()) {
            flag(id, ViolationKind::BadItinerary, "empty waypoint list");
            continue;
        }
        const Waypoint& first = it->waypoints.front();
        if (first.pos != instance.robots[id].home) {
            flag(id, ViolationKind::BadItinerary,
                 "first waypoint " + first.pos.str() + " is not the robot's home " +
                     instance.robots[id].home.str());
            continue;
        }
        if (id == instance.source_id && !first.t.is_zero()) {
            flag(id, ViolationKind::BadItinerary,
                 "source itinerary must start at time 0, starts at " + first.t.str());
            continue;
        }
        bool ok = true;
        for (std::size_t w = 1; w < it->waypoints.size(); ++w) {
            const Waypoint& prev = it->waypoints[w - 1];
            const Waypoint& next = it->waypoints[w];
            if (next.t < prev.t) {
                flag(id, ViolationKind::BadItinerary,
                     "waypoint times decrease at t=" + next.t.str());
                ok = false;
                break;
            }
            if (!leg_within_speed(instance.metric, prev.pos, next.pos, next.t - prev.t)) {
                flag(id, ViolationKind::SpeedViolation,
                     "leg " + prev.pos.str() + " -> " + next.pos.str() + " covers distance " +
                         distance(instance.metric, prev.pos, next.pos).str() + " in time " +
                         (next.t - prev.t).str());
                ok = false;
                break;
            }
        }
        if (ok) activation[id] = first.t;
    }

    // Who is where when: waypoint (t, pos) -> robots holding it.
    std::unordered_map<WaypointKey, std::vector<int>, WaypointKeyHash> holders;
    for (int id = 0; id < robot_count; ++id) {
        if (!activation[id]) continue;
        for (const Waypoint& w : itin[id]->waypoints)
            holders[{w.t, w.pos}].push_back(id);
    }

    // Wake justification. Requiring the waker to activate strictly earlier
    // (source-at-0 excepted) makes the justification relation acyclic by
    // construction: every edge advances time, and the source has no parent.
    report.justifier.assign(robot_count, -1);
    for (int id = 0; id < robot_count; ++id) {
        if (id == instance.source_id || !activation[id]) continue;
        const Rational& t = *activation[id];
        auto found = holders.find({t, instance.robots[id].home});
        int waker = -1;
        bool candidates = false;
        if (found != holders.end()) {
            for (int other : found->second) {
                if (other == id) continue;
                candidates = true;
                bool timed = *activation[other] < t ||
                             (other == instance.source_id && t.is_zero());
                if (timed && (waker == -1 || other < waker)) waker = other;
            }
        }
        if (waker >= 0) {
            report.justifier[id] = waker;
        } else if (candidates) {
            flag(id, ViolationKind::CyclicJustification,
                 "every robot present at wake time " + t.str() +
                     " activates at that same instant");
        } else {
            flag(id, ViolationKind::UnjustifiedActivation,
                 "no other robot holds waypoint (" + t.str() + ", " +
                     instance.robots[id].home.str() + ")");
        }
    }

    for (int id = 0; id < robot_count; ++id) {
        if (!activation[id]) continue;
        if (*activation[id] > report.makespan) report.makespan = *activation[id];
        if (deadline && *activation[id] > *deadline)
            flag(id, ViolationKind::DeadlineExceeded,
                 "activation " + activation[id]->str() + " after deadline " + deadline->str());
    }

    report.valid = report.violations.empty();
    return report;
}

Rational makespan(const Schedule& sched) {
    Rational best;
    for (const Itinerary& it : sched.itineraries) {
        if (it.waypoints.empty())
            throw BadItinerary("empty waypoint list for robot " + std::to_string(it.robot));
        for (std::size_t w = 1; w < it.waypoints.size(); ++w)
            if (it.waypoints[w].t < it.waypoints[w - 1].t)
                throw BadItinerary("waypoint times decrease for robot " +
                                   std::to_string(it.robot));
        best = max(best, it.waypoints.front().t);
    }
    return best;
}

Rational lower_bound(const FtpInstance& instance) {
    if (instance.robots.empty()) return Rational(0);
    const Point3& origin = instance.robots.at(instance.source_id).home;
    Rational best;
    for (const Robot& r : instance.robots) {
        if (r.id == instance.source_id) continue;
        best = max(best, distance(instance.metric, origin, r.home));
    }
    return best;
}

}  // namespace freezetag

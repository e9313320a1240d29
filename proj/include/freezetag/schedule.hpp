// Awakening schedules: representation, exact validation, makespan, and the
// universal triangle-inequality lower bound.
//
// A schedule declares every wake explicitly: robot f activates at the time
// of its first waypoint, and some other robot must hold a waypoint with
// exactly that time and position. An active robot may pass through a frozen
// robot's home without waking it; an L1 pass-through wake is expressed by
// inserting the zero-detour waypoint, which on_l1_geodesic certifies.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freezetag/rational.hpp"
#include "freezetag/reduction.hpp"

namespace freezetag {

struct Waypoint {
    Rational t;
    Point3 pos;

    bool operator==(const Waypoint&) const = default;
};

struct Itinerary {
    int robot = 0;
    // Time-nondecreasing; the first waypoint is (activation time, home).
    std::vector<Waypoint> waypoints;

    bool operator==(const Itinerary&) const = default;
};

struct Schedule {
    std::vector<Itinerary> itineraries;

    bool operator==(const Schedule&) const = default;
};

enum class ViolationKind {
    SpeedViolation,
    UnjustifiedActivation,
    CyclicJustification,
    DeadlineExceeded,
    BadItinerary,
};

std::string violation_kind_name(ViolationKind k);

struct Violation {
    int robot = -1;
    ViolationKind kind = ViolationKind::BadItinerary;
    std::string detail;
};

struct ValidationReport {
    bool valid = false;
    Rational makespan;
    std::vector<Violation> violations;
    // Chosen justifying waker per robot id (-1 for the source and for
    // robots whose wake could not be justified).
    std::vector<int> justifier;
};

// Never throws; problems are reported as violations. Checks, in order:
// itinerary shape and speed (exact under L1/Linf, 1e-9 tolerance under L2),
// wake justification for every non-source robot, timing of the justification
// relation (each waker activates strictly before the wake it justifies,
// except the source justifying time-0 wakes), and the deadline if given.
ValidationReport validate(const FtpInstance& instance, const Schedule& sched,
                          const std::optional<Rational>& deadline = std::nullopt);

// Max activation time over all robots (0 for an empty schedule). Throws
// BadItinerary on an empty waypoint list or decreasing times.
Rational makespan(const Schedule& sched);

// Max over frozen robots of distance(metric, source home, robot home).
// Every valid schedule's makespan is at least this: the waker chain from the
// source to a robot has total length at least the direct distance.
Rational lower_bound(const FtpInstance& instance);

}  // namespace freezetag

// 3D points over exact rationals and the metrics the toolkit supports.
//
// One length unit is one time unit at unit speed, so distances double as
// travel times throughout.
#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include "freezetag/rational.hpp"

namespace freezetag {

enum class Metric { L1, Linf, L2 };

std::string metric_name(Metric m);
Metric metric_from_name(std::string_view name);  // throws SyntaxError

struct Point3 {
    Rational x, y, z;

    bool operator==(const Point3&) const = default;
    // Lexicographic; meaningful only as a deterministic tie-break order.
    std::strong_ordering operator<=>(const Point3&) const = default;

    Point3 operator+(const Point3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Point3 operator-(const Point3& o) const { return {x - o.x, y - o.y, z - o.z}; }

    std::string str() const;  // "(x, y, z)"
};

// Exact.
Rational l1_distance(const Point3& a, const Point3& b);
Rational linf_distance(const Point3& a, const Point3& b);

// sqrt of the exact squared distance, evaluated in double. The result is
// within 1.5 ulp of the true value: absolute error stays below 1e-12 for
// distances up to ~1e3 and below 1.6e-9 across coordinates up to 1e6
// (IEEE double cannot represent values near 3.5e6 any closer than ~2e-10,
// so no tighter bound is possible at that magnitude).
double l2_distance(const Point3& a, const Point3& b);

// Distance under m. L1 and Linf are exact; for L2 the result is the exact
// binary value of l2_distance(a, b), i.e. an approximation of the real
// distance carried losslessly in rational form.
Rational distance(Metric m, const Point3& a, const Point3& b);

// True iff l1(a, via) + l1(via, b) == l1(a, b) exactly, i.e. via lies on
// some L1 geodesic from a to b.
bool on_l1_geodesic(const Point3& a, const Point3& via, const Point3& b);

}  // namespace freezetag

template <>
struct std::hash<freezetag::Point3> {
    std::size_t operator()(const freezetag::Point3& p) const noexcept {
        std::size_t h = p.x.hash();
        h = h * 0x100000001b3ULL ^ p.y.hash();
        h = h * 0x100000001b3ULL ^ p.z.hash();
        return h;
    }
};

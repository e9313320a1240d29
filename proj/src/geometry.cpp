#include "freezetag/geometry.hpp"

#include <cmath>

#include "freezetag/errors.hpp"

namespace freezetag {

std::string metric_name(Metric m) {
    switch (m) {
        case Metric::L1: return "L1";
        case Metric::Linf: return "Linf";
        case Metric::L2: return "L2";
    }
    return "?";
}

Metric metric_from_name(std::string_view name) {
    if (name == "L1") return Metric::L1;
    if (name == "Linf") return Metric::Linf;
    if (name == "L2") return Metric::L2;
    throw SyntaxError("unknown metric: '" + std::string(name) + "'");
}

std::string Point3::str() const {
    return "(" + x.str() + ", " + y.str() + ", " + z.str() + ")";
}

Rational l1_distance(const Point3& a, const Point3& b) {
    return abs(a.x - b.x) + abs(a.y - b.y) + abs(a.z - b.z);
}

Rational linf_distance(const Point3& a, const Point3& b) {
    return max(abs(a.x - b.x), max(abs(a.y - b.y), abs(a.z - b.z)));
}

double l2_distance(const Point3& a, const Point3& b) {
    Rational dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    Rational sq = dx * dx + dy * dy + dz * dz;
    return std::sqrt(sq.to_double());
}

Rational distance(Metric m, const Point3& a, const Point3& b) {
    switch (m) {
        case Metric::L1: return l1_distance(a, b);
        case Metric::Linf: return linf_distance(a, b);
        case Metric::L2: return Rational::from_double(l2_distance(a, b));
    }
    throw Error("bad metric tag");
}

bool on_l1_geodesic(const Point3& a, const Point3& via, const Point3& b) {
    return l1_distance(a, via) + l1_distance(via, b) == l1_distance(a, b);
}

}  // namespace freezetag

#include "freezetag/json_io.hpp"

#include <json.hpp>

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "freezetag/errors.hpp"
#include "freezetag/geometry.hpp"

namespace freezetag {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw SyntaxError(std::string("bad json: ") + e.what());
    }
}

const json& field(const json& j, const char* key) {
    if (!j.is_object()) throw SyntaxError("expected a json object");
    auto it = j.find(key);
    if (it == j.end()) throw SyntaxError(std::string("missing field \"") + key + '"');
    return *it;
}

int int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer())
        throw SyntaxError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::string string_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string())
        throw SyntaxError(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

json point_json(const Point3& p) {
    return json::array({p.x.str(), p.y.str(), p.z.str()});
}

Point3 parse_point(const json& v) {
    if (!v.is_array() || v.size() != 3 || !v[0].is_string() || !v[1].is_string() ||
        !v[2].is_string())
        throw SyntaxError("a position must be an array of three rational strings");
    return {Rational::parse(v[0].get<std::string>()),
            Rational::parse(v[1].get<std::string>()),
            Rational::parse(v[2].get<std::string>())};
}

const char* kind_name(RoleKind k) {
    switch (k) {
        case RoleKind::R: return "R";
        case RoleKind::S: return "S";
        case RoleKind::Group: return "Group";
        case RoleKind::OccC: return "OccC";
        case RoleKind::OccD: return "OccD";
        case RoleKind::Clause: return "Clause";
    }
    throw Error("bad role kind");
}

RoleKind kind_from_name(const std::string& s) {
    if (s == "R") return RoleKind::R;
    if (s == "S") return RoleKind::S;
    if (s == "Group") return RoleKind::Group;
    if (s == "OccC") return RoleKind::OccC;
    if (s == "OccD") return RoleKind::OccD;
    if (s == "Clause") return RoleKind::Clause;
    throw SyntaxError("unknown role kind \"" + s + '"');
}

bool kind_has_var(RoleKind k) { return k != RoleKind::Clause; }
bool kind_has_clause(RoleKind k) { return k != RoleKind::R && k != RoleKind::S; }

}  // namespace

std::string serialize_instance(const FtpInstance& inst) {
    json j;
    j["metric"] = metric_name(inst.metric);
    j["source"] = inst.source_id;
    json robots = json::array();
    for (const Robot& r : inst.robots) {
        json rj;
        rj["id"] = r.id;
        rj["pos"] = point_json(r.home);
        robots.push_back(std::move(rj));
    }
    j["robots"] = std::move(robots);
    if (inst.deadline) j["deadline"] = inst.deadline->str();
    return j.dump(2) + "\n";
}

FtpInstance parse_instance(std::string_view text) {
    json j = parse_json(text);
    FtpInstance inst;
    inst.metric = metric_from_name(string_field(j, "metric"));
    inst.source_id = int_field(j, "source");
    const json& robots = field(j, "robots");
    if (!robots.is_array()) throw SyntaxError("field \"robots\" must be an array");
    std::set<int> seen;
    for (const json& rj : robots) {
        Robot r;
        r.id = int_field(rj, "id");
        if (r.id < 0) throw SyntaxError("robot ids must be nonnegative");
        if (!seen.insert(r.id).second)
            throw SyntaxError("duplicate robot id " + std::to_string(r.id));
        r.home = parse_point(field(rj, "pos"));
        inst.robots.push_back(std::move(r));
    }
    if (!seen.count(inst.source_id))
        throw SyntaxError("source id " + std::to_string(inst.source_id) +
                          " is not among the robots");
    if (auto it = j.find("deadline"); j.is_object() && it != j.end()) {
        if (!it->is_string()) throw SyntaxError("field \"deadline\" must be a string");
        inst.deadline = Rational::parse(it->get<std::string>());
    }
    return inst;
}

std::string serialize_roles(const RoleTable& roles) {
    json arr = json::array();
    for (std::size_t id = 0; id < roles.size(); ++id) {
        const Role& r = roles[id];
        json role;
        role["kind"] = kind_name(r.kind);
        if (kind_has_var(r.kind)) role["var"] = r.var;
        if (kind_has_clause(r.kind)) {
            role["clause"] = r.clause;
            role["polarity"] = r.polarity == Polarity::positive ? "pos" : "neg";
        }
        json entry;
        entry["id"] = static_cast<int>(id);
        entry["role"] = std::move(role);
        arr.push_back(std::move(entry));
    }
    return arr.dump(2) + "\n";
}

RoleTable parse_roles(std::string_view text) {
    json j = parse_json(text);
    if (!j.is_array()) throw SyntaxError("a role table must be a json array");
    RoleTable roles(j.size());
    std::vector<char> seen(j.size(), 0);
    for (const json& entry : j) {
        int id = int_field(entry, "id");
        if (id < 0 || id >= static_cast<int>(roles.size()))
            throw SyntaxError("role ids must cover exactly 0.." +
                              std::to_string(roles.size() - 1));
        if (seen[id]) throw SyntaxError("duplicate role id " + std::to_string(id));
        seen[id] = 1;
        const json& rj = field(entry, "role");
        Role r;
        r.kind = kind_from_name(string_field(rj, "kind"));
        if (kind_has_var(r.kind)) r.var = int_field(rj, "var");
        if (kind_has_clause(r.kind)) {
            r.clause = int_field(rj, "clause");
            std::string pol = string_field(rj, "polarity");
            if (pol != "pos" && pol != "neg")
                throw SyntaxError("polarity must be \"pos\" or \"neg\"");
            r.polarity = pol == "pos" ? Polarity::positive : Polarity::negative;
        }
        roles[id] = r;
    }
    return roles;
}

std::string serialize_schedule(const Schedule& sched) {
    json its = json::array();
    for (const Itinerary& it : sched.itineraries) {
        json wps = json::array();
        for (const Waypoint& w : it.waypoints) {
            json wj;
            wj["pos"] = point_json(w.pos);
            wj["t"] = w.t.str();
            wps.push_back(std::move(wj));
        }
        json ij;
        ij["robot"] = it.robot;
        ij["waypoints"] = std::move(wps);
        its.push_back(std::move(ij));
    }
    json j;
    j["itineraries"] = std::move(its);
    return j.dump(2) + "\n";
}

Schedule parse_schedule(std::string_view text) {
    json j = parse_json(text);
    const json& its = field(j, "itineraries");
    if (!its.is_array()) throw SyntaxError("field \"itineraries\" must be an array");
    Schedule sched;
    for (const json& ij : its) {
        Itinerary it;
        it.robot = int_field(ij, "robot");
        const json& wps = field(ij, "waypoints");
        if (!wps.is_array()) throw SyntaxError("field \"waypoints\" must be an array");
        for (const json& wj : wps)
            it.waypoints.push_back(
                {Rational::parse(string_field(wj, "t")), parse_point(field(wj, "pos"))});
        sched.itineraries.push_back(std::move(it));
    }
    return sched;
}

std::string serialize_report(const ValidationReport& report, bool compact) {
    json j;
    j["valid"] = report.valid;
    j["makespan"] = report.makespan.str();
    json vs = json::array();
    for (const Violation& v : report.violations) {
        json vj;
        vj["detail"] = v.detail;
        vj["kind"] = violation_kind_name(v.kind);
        vj["robot"] = v.robot;
        vs.push_back(std::move(vj));
    }
    j["violations"] = std::move(vs);
    return (compact ? j.dump() : j.dump(2)) + "\n";
}

}  // namespace freezetag

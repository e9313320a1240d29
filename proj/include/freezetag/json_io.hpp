// JSON file formats for instances, role tables, schedules and validation
// reports. Serializers are deterministic (sorted keys, two-space indent,
// trailing newline) and all scalars use the Rational text form, so
// serialize(parse(serialize(x))) reproduces the bytes of serialize(x).
#pragma once

#include <string>
#include <string_view>

#include "freezetag/reduction.hpp"
#include "freezetag/schedule.hpp"

namespace freezetag {

// {"metric":"L1","robots":[{"id":0,"pos":["0","0","0"]},...],"source":0}
// plus optional "deadline":"49/8". Parser throws SyntaxError on malformed
// JSON, duplicate or negative ids, or a source id not among the robots.
std::string serialize_instance(const FtpInstance& inst);
FtpInstance parse_instance(std::string_view text);

// Array of {"id":0,"role":{"kind":"R","var":1}}; "polarity" ("pos"/"neg")
// and "clause" appear only on roles that carry them. Ids must cover 0..N-1.
std::string serialize_roles(const RoleTable& roles);
RoleTable parse_roles(std::string_view text);

// {"itineraries":[{"robot":0,"waypoints":[{"pos":["0","0","0"],"t":"0"}]}]}
std::string serialize_schedule(const Schedule& sched);
Schedule parse_schedule(std::string_view text);

// {"makespan":"49/8","valid":true,"violations":[{"detail":"...","kind":
// "SpeedViolation","robot":3},...]}; single line when compact.
std::string serialize_report(const ValidationReport& report, bool compact = false);

}  // namespace freezetag

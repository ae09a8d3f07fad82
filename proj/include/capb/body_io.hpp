#pragma once

#include <string>

#include "json.hpp"

#include "capb/cap_body.hpp"
#include "capb/ilp.hpp"
#include "capb/illuminate.hpp"

namespace capb {

// Cap-body file: {"caps": [{"center": [x,y,z], "radius_rad": r}, ...]} or
// {"vertices": [[x,y,z], ...]} — exactly one of the two keys.  Centers are
// normalized on load; radii must lie in (0, pi/2 - 1e-12).
CapBody load_body(const std::string& path);
void save_body(const CapBody& body, const std::string& path);
nlohmann::ordered_json body_to_json(const CapBody& body);
CapBody body_from_json(const nlohmann::ordered_json& j);

// Direction-set file: {"directions": [[x,y,z], ...]}, nonempty; entries are
// normalized on load.
DirectionSet load_directions(const std::string& path);
void save_directions(const DirectionSet& dirs, const std::string& path);

nlohmann::ordered_json report_to_json(const IlluminationReport& report);
nlohmann::ordered_json certificate_to_json(const CertificateReport& report);

// Pretty-prints `j` to `path` with a trailing newline; ParseError on I/O
// failure.
void write_json_file(const nlohmann::ordered_json& j, const std::string& path);

}  // namespace capb

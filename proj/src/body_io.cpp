#include "capb/body_io.hpp"

#include <cstdint>
#include <fstream>

#include "capb/errors.hpp"

namespace capb {

namespace {

using nlohmann::ordered_json;

void require(bool ok, const std::string& what) {
  if (!ok) throw ParseError(what);
}

Vec3 parse_triple(const ordered_json& j, const std::string& what) {
  require(j.is_array() && j.size() == 3, what + " must be an array of 3 numbers");
  for (const auto& c : j) {
    require(c.is_number(), what + " must contain only numbers");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

ordered_json triple(const Vec3& v) {
  return ordered_json::array({v.x, v.y, v.z});
}

ordered_json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace

void write_json_file(const ordered_json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw ParseError("failed writing " + path);
}

CapBody body_from_json(const ordered_json& j) {
  require(j.is_object(), "body must be a JSON object");
  const bool has_caps = j.contains("caps");
  const bool has_vertices = j.contains("vertices");
  require(has_caps != has_vertices,
          "body must contain exactly one of \"caps\" or \"vertices\"");

  if (has_caps) {
    const auto& arr = j.at("caps");
    require(arr.is_array(), "\"caps\" must be an array");
    std::vector<Cap> caps;
    for (const auto& e : arr) {
      require(e.is_object() && e.contains("center") && e.contains("radius_rad"),
              "each cap needs \"center\" and \"radius_rad\"");
      require(e.at("radius_rad").is_number(), "\"radius_rad\" must be a number");
      const double r = e.at("radius_rad").get<double>();
      if (!(r > 0.0 && r < kHalfPi - 1e-12)) {
        throw RadiusOutOfRange("cap radius " + std::to_string(r) +
                               " outside (0, pi/2 - 1e-12)");
      }
      caps.emplace_back(UnitVector(parse_triple(e.at("center"), "cap center")),
                        r);
    }
    return CapBody::from_caps(caps);
  }

  const auto& arr = j.at("vertices");
  require(arr.is_array(), "\"vertices\" must be an array");
  std::vector<Vertex> vertices;
  for (const auto& e : arr) {
    vertices.push_back({parse_triple(e, "vertex")});
  }
  return CapBody::from_vertices(vertices);
}

ordered_json body_to_json(const CapBody& body) {
  ordered_json caps = ordered_json::array();
  for (const Cap& c : body.caps()) {
    ordered_json e;
    e["center"] = triple(c.center.vec());
    e["radius_rad"] = c.radius;
    caps.push_back(e);
  }
  return ordered_json{{"caps", caps}};
}

CapBody load_body(const std::string& path) {
  return body_from_json(parse_file(path));
}

void save_body(const CapBody& body, const std::string& path) {
  write_json_file(body_to_json(body), path);
}

DirectionSet load_directions(const std::string& path) {
  ordered_json j = parse_file(path);
  require(j.is_object() && j.contains("directions"),
          "direction file must be an object with \"directions\"");
  const auto& arr = j.at("directions");
  require(arr.is_array() && !arr.empty(),
          "\"directions\" must be a nonempty array");
  DirectionSet ds;
  for (const auto& e : arr) {
    ds.directions.emplace_back(parse_triple(e, "direction"));
  }
  return ds;
}

void save_directions(const DirectionSet& dirs, const std::string& path) {
  ordered_json arr = ordered_json::array();
  for (const UnitVector& v : dirs.directions) arr.push_back(triple(v.vec()));
  write_json_file(ordered_json{{"directions", arr}}, path);
}

ordered_json report_to_json(const IlluminationReport& report) {
  ordered_json per_cap = ordered_json::array();
  for (const CapAssignment& a : report.per_cap) {
    ordered_json e;
    e["cap"] = a.cap_index;
    if (a.direction_index >= 0) {
      e["direction"] = a.direction_index;
    } else {
      e["direction"] = nullptr;
    }
    per_cap.push_back(e);
  }
  ordered_json j;
  j["per_cap"] = per_cap;
  j["unlit"] = report.unlit;
  j["hull_ok"] = report.hull_ok;
  j["illuminated"] = report.illuminated;
  return j;
}

ordered_json certificate_to_json(const CertificateReport& report) {
  const Rational& m = report.m_t;
  if (!m.get_num().fits_slong_p() || !m.get_den().fits_slong_p() ||
      !report.floor_m_t.fits_slong_p()) {
    throw Error("certificate values exceed 64-bit range");
  }
  ordered_json j;
  j["t"] = report.t;
  j["D"] = report.D;
  j["M_t"] = ordered_json{{"num", static_cast<std::int64_t>(m.get_num().get_si())},
                          {"den", static_cast<std::int64_t>(m.get_den().get_si())}};
  j["floor_M_t"] = static_cast<std::int64_t>(report.floor_m_t.get_si());
  j["verdict_lt_3"] = report.verdict_lt_3;
  j["counts"] = report.counts;
  j["mode"] = report.mode == ProofMode::Exact ? "exact" : "float";
  return j;
}

}  // namespace capb

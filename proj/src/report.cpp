#include "wct/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace wct {

namespace {

std::string row(const char* label, const QualityRange& q, int decimals) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%-16s%10.*f%10.*f\n", label, decimals, q.min, decimals, q.max);
  return buf;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

nlohmann::json range_json(const TetMesh& m, const QualityRange& q) {
  auto where = [&](TetId t) {
    const TetVerts& v = m.tets()[t];
    return nlohmann::json{{"tet", t}, {"vertices", {v[0], v[1], v[2], v[3]}}};
  };
  return {{"min", q.min}, {"max", q.max}, {"argmin", where(q.argmin)}, {"argmax", where(q.argmax)}};
}

}  // namespace

std::string format_table(const QualityReport& r) {
  std::string s;
  s += "                       Min       Max\n";
  s += row("h/R", r.h_over_r, 3);
  s += row("Face Angle", r.face_angle_deg, 2);
  s += row("Dihedral Angle", r.dihedral_angle_deg, 2);
  s += row("R/l", r.r_over_l, 3);
  s += "\ntets " + std::to_string(r.num_tets) + ", faces " + std::to_string(r.num_faces) +
       ", edges " + std::to_string(r.num_edges) + ", vertices " + std::to_string(r.num_vertices) +
       '\n';
  s += std::string("2-well-centered: ") + yes_no(r.all_2wc) + '\n';
  s += std::string("3-well-centered: ") + yes_no(r.all_3wc) + '\n';
  s += std::string("completely well-centered: ") + yes_no(r.completely_wc) + '\n';
  return s;
}

std::string format_json(const TetMesh& m, const QualityReport& r) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["counts"] = {{"tets", r.num_tets},
                 {"faces", r.num_faces},
                 {"edges", r.num_edges},
                 {"vertices", r.num_vertices}};
  j["h_over_r"] = range_json(m, r.h_over_r);
  j["face_angle_deg"] = range_json(m, r.face_angle_deg);
  j["dihedral_angle_deg"] = range_json(m, r.dihedral_angle_deg);
  j["r_over_l"] = range_json(m, r.r_over_l);
  j["all_2wc"] = r.all_2wc;
  j["all_3wc"] = r.all_3wc;
  j["completely_wc"] = r.completely_wc;
  return j.dump(2) + '\n';
}

}  // namespace wct

#pragma once

// JSON files for instances and solutions. Ids are array positions.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>

#include <json.hpp>

#include "lsdc/instance.hpp"
#include "lsdc/solve.hpp"

namespace lsdc {

namespace detail {

[[noreturn]] inline void schema_error(const std::string& what) { throw Error(ErrorCode::bad_schema, what); }

inline double number_at(const nlohmann::json& row, std::size_t k, const std::string& where) {
  if (!row.is_array() || k >= row.size() || !row[k].is_number()) schema_error(where + " must be an array of numbers");
  return row[k].get<double>();
}

}  // namespace detail

inline Instance instance_from_json(const nlohmann::json& j) {
  if (!j.is_object()) detail::schema_error("instance must be a JSON object");
  if (!j.contains("variant") || !j["variant"].is_string()) detail::schema_error("missing string field 'variant'");
  const auto variant = parse_variant(j["variant"].get<std::string>());
  if (!variant) detail::schema_error("unknown variant '" + j["variant"].get<std::string>() + "'");
  Instance inst;
  inst.variant = *variant;
  if (!j.contains("line_y") || !j["line_y"].is_number()) detail::schema_error("missing numeric field 'line_y'");
  inst.line_y = j["line_y"].get<double>();

  if (!j.contains("points") || !j["points"].is_array()) detail::schema_error("missing array field 'points'");
  for (const auto& row : j["points"]) {
    if (row.size() != 2) detail::schema_error("each point must be [x, y]");
    inst.points.push_back({detail::number_at(row, 0, "point"), detail::number_at(row, 1, "point"), inst.points.size()});
  }

  const bool halfplanes = inst.variant == Variant::lower_halfplane;
  const char* field = halfplanes ? "halfplanes" : "disks";
  const char* other = halfplanes ? "disks" : "halfplanes";
  if (j.contains(other)) detail::schema_error(std::string("field '") + other + "' is not allowed for this variant");
  if (!j.contains(field) || !j[field].is_array()) detail::schema_error(std::string("missing array field '") + field + "'");
  for (const auto& row : j[field]) {
    const std::size_t id = inst.regions.size();
    if (halfplanes) {
      if (row.size() != 2) detail::schema_error("each half-plane must be [a, b]");
      inst.regions.push_back(Region::lower_halfplane(detail::number_at(row, 0, "half-plane"),
                                                     detail::number_at(row, 1, "half-plane"), id));
    } else {
      if (row.size() != 3) detail::schema_error("each disk must be [cx, cy, r]");
      inst.regions.push_back(Region::disk(detail::number_at(row, 0, "disk"), detail::number_at(row, 1, "disk"),
                                          detail::number_at(row, 2, "disk"), id));
    }
  }
  return inst;
}

inline nlohmann::ordered_json instance_to_json(const Instance& inst) {
  nlohmann::ordered_json j;
  j["variant"] = std::string(to_string(inst.variant));
  j["line_y"] = inst.line_y;
  j["points"] = nlohmann::ordered_json::array();
  for (const Point& p : inst.points) j["points"].push_back({p.x, p.y});
  const bool halfplanes = inst.variant == Variant::lower_halfplane;
  auto& rows = j[halfplanes ? "halfplanes" : "disks"] = nlohmann::ordered_json::array();
  for (const Region& s : inst.regions) {
    if (halfplanes)
      rows.push_back({s.slope, s.intercept});
    else
      rows.push_back({s.cx, s.cy, s.radius});
  }
  return j;
}

inline nlohmann::ordered_json solution_to_json(const Solution& sol) {
  nlohmann::ordered_json j;
  j["status"] = std::string(to_string(sol.status));
  j["size"] = sol.size();
  j["disks"] = sol.chosen;
  j["witness"] = sol.witness ? nlohmann::ordered_json(*sol.witness) : nlohmann::ordered_json(nullptr);
  return j;
}

inline Solution solution_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("status") || !j["status"].is_string())
    detail::schema_error("solution needs a string field 'status'");
  Solution sol;
  const std::string status = j["status"].get<std::string>();
  if (status == "optimal")
    sol.status = Status::optimal;
  else if (status == "infeasible")
    sol.status = Status::infeasible;
  else
    detail::schema_error("unknown status '" + status + "'");
  if (!j.contains("disks") || !j["disks"].is_array()) detail::schema_error("solution needs an array field 'disks'");
  for (const auto& id : j["disks"]) {
    if (!id.is_number_unsigned()) detail::schema_error("disk ids must be non-negative integers");
    sol.chosen.push_back(id.get<std::size_t>());
  }
  if (j.contains("size") && (!j["size"].is_number_unsigned() || j["size"].get<std::size_t>() != sol.chosen.size()))
    detail::schema_error("'size' does not match the number of disks");
  if (j.contains("witness") && !j["witness"].is_null()) {
    if (!j["witness"].is_number_unsigned()) detail::schema_error("'witness' must be a point id or null");
    sol.witness = j["witness"].get<std::size_t>();
  }
  return sol;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) detail::schema_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline nlohmann::json parse_json_file(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    detail::schema_error(path.string() + ": " + e.what());
  }
}

inline Instance load_instance(const std::filesystem::path& path) {
  try {
    return instance_from_json(parse_json_file(path));
  } catch (const nlohmann::json::exception& e) {
    detail::schema_error(path.string() + ": " + e.what());
  }
}

inline Solution load_solution(const std::filesystem::path& path) {
  try {
    return solution_from_json(parse_json_file(path));
  } catch (const nlohmann::json::exception& e) {
    detail::schema_error(path.string() + ": " + e.what());
  }
}

// Writes to a sibling temporary file, then renames it over the target.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

inline void save_instance(const std::filesystem::path& path, const Instance& inst) {
  write_file_atomic(path, instance_to_json(inst).dump(2) + "\n");
}

inline void save_solution(const std::filesystem::path& path, const Solution& sol) {
  write_file_atomic(path, solution_to_json(sol).dump() + "\n");
}

}  // namespace lsdc

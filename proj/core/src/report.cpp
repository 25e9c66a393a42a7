// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#include "wpolar/report.hpp"

#include <fstream>
#include <json.hpp>

#include "wpolar/errors.hpp"

namespace wpolar {

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string Report::to_json(bool include_wall_time) const {
  using json = nlohmann::ordered_json;
  json root;
  root["schema_version"] = schema_version;
  root["seed"] = seed;
  root["all_pass"] = all_pass();
  json arr = json::array();
  for (const auto& c : checks) {
    json jc;
    jc["check_id"] = c.check_id;
    json jp = json::object();
    for (const auto& [k, v] : c.params) jp[k] = v;
    jc["params"] = jp;
    jc["mean"] = c.mean;
    jc["std_err"] = c.std_err;
    jc["n"] = c.n;
    if (c.target)
      jc["target"] = *c.target;
    else
      jc["target"] = nullptr;
    if (c.z_score)
      jc["z_score"] = *c.z_score;
    else
      jc["z_score"] = nullptr;
    jc["pass"] = c.pass;
    if (c.kappa_selected)
      jc["kappa_selected"] = *c.kappa_selected;
    else
      jc["kappa_selected"] = nullptr;
    if (include_wall_time) jc["wall_time_s"] = c.wall_time_s;
    arr.push_back(jc);
  }
  root["checks"] = arr;
  return root.dump(2);
}

void Report::write(const std::string& file) const {
  std::ofstream out(file);
  if (!out) throw CsvError("cannot write " + file);
  out << to_json() << '\n';
}

}  // namespace wpolar

#include <json.hpp>

#include "dituran/search.hpp"

namespace dituran {

std::string report_to_json(const ExtremalReport& r, bool include_stats) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["pattern"] = r.pattern;
  j["object"] = r.object;
  j["n"] = r.n;
  j["ex"] = r.ex_value;
  j["complete"] = r.complete;
  j["overflow"] = r.overflow;
  j["extremal_count"] = r.extremal_set.size();
  auto forms = nlohmann::json::array();
  auto reps = nlohmann::json::array();
  for (const auto& c : r.extremal_set) {
    forms.push_back(c.form.hex());
    reps.push_back(serialize(c.representative));
  }
  j["canonical_forms"] = forms;
  j["representatives"] = reps;
  if (include_stats) j["nodes_explored"] = r.nodes_explored;
  return j.dump(2) + "\n";
}

bool matches_golden(const ExtremalReport& r, const std::string& golden_json, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  nlohmann::json g;
  try {
    g = nlohmann::json::parse(golden_json);
  } catch (const nlohmann::json::exception& e) {
    return fail(std::string("golden file is not JSON: ") + e.what());
  }
  if (g.value("pattern", "") != r.pattern) return fail("pattern differs");
  if (g.value("n", -1) != r.n) return fail("n differs");
  if (g.value("ex", std::int64_t{-1}) != r.ex_value)
    return fail("ex differs: golden " + g["ex"].dump() + ", got " + std::to_string(r.ex_value));
  std::vector<std::string> forms;
  for (const auto& c : r.extremal_set) forms.push_back(c.form.hex());
  if (g.value("canonical_forms", std::vector<std::string>{}) != forms) return fail("extremal classes differ");
  return true;
}

}  // namespace dituran

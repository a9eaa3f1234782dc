#include "multitwist/report.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "multitwist/error.hpp"

namespace multitwist {

using nlohmann::json;

double round_significant(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0 || digits <= 0 || digits >= 17) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::stod(buf);
}

ClassifyReport make_classify_report(const ConfigurationGraph& g, double tol) {
  ClassifyReport r;
  for (auto& c : classify_verified(g, tol)) {
    ClassifyReport::Component out{c.label.name(), to_string(c.label.kind), c.label.is_eh10, c.mu, "", c.graph};
    if (c.label.kind != FamilyKind::kDominant) out.closed_form = closed_form_mu(c.label).to_string();
    r.free = r.free || c.label.kind == FamilyKind::kDominant;
    r.components.push_back(std::move(out));
  }
  return r;
}

std::string to_json(const ClassifyReport& r, int digits, int indent) {
  json doc;
  doc["components"] = json::array();
  for (const auto& c : r.components) {
    json comp;
    comp["family"] = c.family;
    comp["kind"] = c.kind;
    comp["is_eh10"] = c.is_eh10;
    comp["mu"] = round_significant(c.mu, digits);
    if (!c.closed_form.empty()) comp["closed_form"] = c.closed_form;
    comp["graph"] = json::parse(to_json(c.graph));
    doc["components"].push_back(std::move(comp));
  }
  doc["free"] = r.free;
  return doc.dump(indent);
}

ClassifyReport parse_classify_report(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kSchema, std::string("report is not valid JSON: ") + e.what());
  }
  auto require = [](const json& obj, const char* key, bool (json::*is)() const noexcept) -> const json& {
    if (!obj.is_object() || !obj.contains(key) || !(obj.at(key).*is)())
      throw Error(ErrorKind::kSchema, std::string("report field '") + key + "' missing or mistyped");
    return obj.at(key);
  };
  ClassifyReport r;
  r.free = require(doc, "free", &json::is_boolean).get<bool>();
  for (const auto& c : require(doc, "components", &json::is_array)) {
    const std::string family = require(c, "family", &json::is_string).get<std::string>();
    const std::string kind = require(c, "kind", &json::is_string).get<std::string>();
    const bool eh10 = require(c, "is_eh10", &json::is_boolean).get<bool>();
    const double mu = require(c, "mu", &json::is_number).get<double>();
    std::string closed;
    if (c.contains("closed_form")) closed = require(c, "closed_form", &json::is_string).get<std::string>();
    ConfigurationGraph g = parse_config(require(c, "graph", &json::is_object).dump());
    if (kind != "Recessive" && kind != "Critical" && kind != "Dominant")
      throw Error(ErrorKind::kSchema, "unknown component kind '" + kind + "'");
    r.components.push_back({family, kind, eh10, mu, closed, std::move(g)});
  }
  return r;
}

}  // namespace multitwist

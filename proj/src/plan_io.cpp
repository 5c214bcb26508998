#include "gammapair/plan_io.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gammapair {
namespace {

using ordered_json = nlohmann::ordered_json;

int require_int(const nlohmann::json& j, const char* key) {
  if (!j.at(key).is_number_integer()) {
    throw std::invalid_argument(std::string("plan: field '") + key +
                                "' must be an integer");
  }
  return j.at(key).get<int>();
}

double require_number(const nlohmann::json& j, const char* key) {
  if (!j.at(key).is_number()) {
    throw std::invalid_argument(std::string("plan: field '") + key +
                                "' must be a number");
  }
  return j.at(key).get<double>();
}

bool require_bool(const nlohmann::json& j, const char* key) {
  if (!j.at(key).is_boolean()) {
    throw std::invalid_argument(std::string("plan: field '") + key +
                                "' must be a boolean");
  }
  return j.at(key).get<bool>();
}

}  // namespace

PlanDocument make_plan_document(const Method1Plan& plan, double rho_target,
                                bool swapped) {
  PlanDocument doc;
  doc.method = 1;
  doc.r = plan.r;
  doc.s = plan.s;
  doc.alpha0 = plan.alpha0;
  doc.theta = 0.0;
  doc.rate = plan.rate;
  doc.rho_target = rho_target;
  doc.rho_theoretical = plan.rho_theoretical;
  doc.swapped = swapped;
  return doc;
}

PlanDocument make_plan_document(const Method2Plan& plan, double rho_target,
                                bool swapped) {
  PlanDocument doc;
  doc.method = 2;
  doc.r = plan.r;
  doc.s = plan.s;
  doc.alpha0 = plan.alpha0;
  doc.theta = plan.theta;
  doc.rate = plan.rate;
  doc.rho_target = rho_target;
  doc.rho_theoretical = plan.rho_theoretical;
  doc.swapped = swapped;
  return doc;
}

Method1Plan to_method1_plan(const PlanDocument& doc) {
  if (doc.method != 1) {
    throw std::invalid_argument("plan: expected method 1");
  }
  return make_method1_plan(doc.r, doc.s, doc.alpha0, doc.rate);
}

Method2Plan to_method2_plan(const PlanDocument& doc) {
  if (doc.method != 2) {
    throw std::invalid_argument("plan: expected method 2");
  }
  return make_method2_plan(doc.r, doc.s, doc.alpha0, doc.theta, doc.rate);
}

std::string format_plan(const PlanDocument& doc) {
  ordered_json j;
  j["method"] = doc.method;
  j["r"] = doc.r;
  j["s"] = doc.s;
  j["alpha0"] = doc.alpha0;
  if (doc.method == 2) j["theta"] = doc.theta;
  j["rate"] = doc.rate;
  j["rho_target"] = doc.rho_target;
  j["rho_theoretical"] = doc.rho_theoretical;
  j["swapped"] = doc.swapped;
  return j.dump(2) + "\n";
}

PlanDocument parse_plan(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("plan: not valid JSON: ") +
                                e.what());
  }
  if (!j.is_object()) {
    throw std::invalid_argument("plan: top level must be a JSON object");
  }

  if (!j.contains("method")) {
    throw std::invalid_argument("plan: missing field 'method'");
  }
  const int method = require_int(j, "method");
  if (method != 1 && method != 2) {
    throw std::invalid_argument("plan: 'method' must be 1 or 2");
  }

  std::set<std::string> allowed = {"method",     "r",    "s",
                                   "alpha0",     "rate", "rho_target",
                                   "rho_theoretical", "swapped"};
  if (method == 2) allowed.insert("theta");
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) {
      throw std::invalid_argument("plan: unknown field '" + item.key() + "'");
    }
  }
  for (const auto& key : allowed) {
    if (!j.contains(key)) {
      throw std::invalid_argument("plan: missing field '" + key + "'");
    }
  }

  PlanDocument doc;
  doc.method = method;
  doc.r = require_int(j, "r");
  doc.s = require_int(j, "s");
  doc.alpha0 = require_number(j, "alpha0");
  doc.theta = method == 2 ? require_number(j, "theta") : 0.0;
  doc.rate = require_number(j, "rate");
  doc.rho_target = require_number(j, "rho_target");
  doc.rho_theoretical = require_number(j, "rho_theoretical");
  doc.swapped = require_bool(j, "swapped");

  // Revalidate parameter constraints and the stored correlation; the
  // factories throw std::domain_error on bad parameters.
  double recomputed = 0.0;
  try {
    recomputed = method == 1 ? to_method1_plan(doc).rho_theoretical
                             : to_method2_plan(doc).rho_theoretical;
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(std::string("plan: invalid parameters: ") +
                                e.what());
  }
  if (std::fabs(recomputed - doc.rho_theoretical) > 1e-9) {
    std::ostringstream msg;
    msg << "plan: rho_theoretical " << doc.rho_theoretical
        << " does not match its parameters (expected " << recomputed << ")";
    throw std::invalid_argument(msg.str());
  }
  return doc;
}

}  // namespace gammapair

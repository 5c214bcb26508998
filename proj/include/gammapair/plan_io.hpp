#pragma once

#include <string>

#include "gammapair/model.hpp"

namespace gammapair {

// Serializable description of a plan, as written by `plan` and consumed by
// `sample`/`verify`. theta is only meaningful when method == 2. swapped
// records that the caller's (m, n) arrived in descending order and the
// coordinates should be presented swapped back.
struct PlanDocument {
  int method = 1;
  int r = 1;
  int s = 1;
  double alpha0 = 0.0;
  double theta = 0.0;
  double rate = 1.0;
  double rho_target = 0.0;
  double rho_theoretical = 0.0;
  bool swapped = false;
};

PlanDocument make_plan_document(const Method1Plan& plan, double rho_target,
                                bool swapped);
PlanDocument make_plan_document(const Method2Plan& plan, double rho_target,
                                bool swapped);

// Validated view of the document as a sampler plan. Throws
// std::invalid_argument if the document's method does not match.
Method1Plan to_method1_plan(const PlanDocument& doc);
Method2Plan to_method2_plan(const PlanDocument& doc);

// JSON text with a fixed field order; ends with a newline.
std::string format_plan(const PlanDocument& doc);

// Strict parse: every required field present with the right type, no
// unknown fields, theta present exactly when method == 2, and the stored
// rho_theoretical consistent with the parameters. Throws
// std::invalid_argument otherwise.
PlanDocument parse_plan(const std::string& text);

}  // namespace gammapair

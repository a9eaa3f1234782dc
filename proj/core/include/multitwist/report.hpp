#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "multitwist/classify.hpp"
#include "multitwist/config.hpp"

namespace multitwist {

/// Machine-readable result of `multitwist classify`. Each component carries
/// its own graph in the input schema, so a report can be re-checked.
struct ClassifyReport {
  struct Component {
    std::string family;  ///< FamilyLabel::name()
    std::string kind;    ///< Recessive / Critical / Dominant
    bool is_eh10 = false;
    double mu = 0.0;
    std::string closed_form;  ///< empty for dominant components
    ConfigurationGraph graph;
  };
  std::vector<Component> components;
  bool free = false;
};

/// Rounds to the given number of significant digits.
double round_significant(double x, int digits);

ClassifyReport make_classify_report(const ConfigurationGraph& g, double tol = kDefaultTol);
std::string to_json(const ClassifyReport& r, int digits = 12, int indent = -1);
/// Throws kSchema / kValidation.
ClassifyReport parse_classify_report(std::string_view json_text);

}  // namespace multitwist

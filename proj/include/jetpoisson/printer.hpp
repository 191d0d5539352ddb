#pragma once

#include <string>

#include "jetpoisson/diff_operator.hpp"

namespace jetpoisson {

// canonical jet spelling: "u" for the zero index, otherwise "u[2,0]" with
// one entry per independent variable
std::string jet_name(const Signature& sig, const JetVar& v);

// canonical rendering; parse_expression(sig, to_string(sig, f)) == f
std::string to_string(const Signature& sig, const DiffFunction& f);

// canonical rendering; 1x1 operators print bare, matrices as [[...],[...]]
std::string to_string(const Signature& sig, const DiffOperator& p);

// "(a, b, ...)" with canonical components
std::string to_string(const Signature& sig, const std::vector<DiffFunction>& tuple);

}  // namespace jetpoisson

#pragma once

#include <string>
#include <variant>

#include "et/natural.hpp"
#include "et/numberfield.hpp"
#include "et/rational.hpp"
#include "et/tensor.hpp"

namespace et {

/// Concrete carrier element seen through a decoder: a natural, a rational,
/// a number-field element, or a tensor vector. Keeping carriers concrete is
/// what makes admissibility auditable.
using Value = std::variant<Natural, Rational, FieldElement, TensorVector>;

bool value_eq(const Value& a, const Value& b);
std::string value_str(const Value& b);

}  // namespace et

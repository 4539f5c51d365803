#pragma once

#include "et/field_structure.hpp"
#include "et/structures.hpp"
#include "et/tensor_structure.hpp"

namespace et {

/// Prebuilt number fields.
NumberField::Ptr q_field();       // degree 1
NumberField::Ptr sqrt2_field();   // x^2 - 2
NumberField::Ptr gauss_field();   // x^2 + 1, conj i -> -i
NumberField::Ptr zeta8_field();   // x^4 + 1, conj root -> root^7

/// The shared two-letter qubit alphabet {0, 1}.
Alphabet::Ptr qubit_alphabet();

/// Named prebuilt structures (cached, built on first use):
///   nat-s, nat-s-alt, nat-plus, q, q-alt,
///   sqrt2, zeta8               (field extensions over q)
///   vec1-q, vec2-q             (finite-dimensional spaces over Q)
///   tensor-q, tensor-q-rev     (qubit tensor space over Q)
///   tensor-z8, tensor-z8-rev   (qubit tensor space over Q(zeta8))
const std::vector<std::string>& registry_names();
StructurePtr registry_get(const std::string& name);
TermStructurePtr registry_get_term(const std::string& name);

/// Term structure of a field loaded from a description file.
TermStructurePtr field_structure_for(NumberField::Ptr field);

/// The "-alt" / "-rev" counterpart used by translation demos, if any.
std::optional<std::string> registry_variant(const std::string& name);

}  // namespace et

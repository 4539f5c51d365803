#include "et/registry.hpp"

#include <map>
#include <mutex>

namespace et {

namespace {
Rational R(long long n) { return Rational(n); }
}  // namespace

NumberField::Ptr q_field() {
  static NumberField::Ptr field =
      NumberField::from_min_poly({R(0), R(1)}, std::uint64_t{1}, "q");
  return field;
}

NumberField::Ptr sqrt2_field() {
  static NumberField::Ptr field = NumberField::from_min_poly({R(-2), R(0), R(1)}, 1, "sqrt2");
  return field;
}

NumberField::Ptr gauss_field() {
  static NumberField::Ptr field = NumberField::from_min_poly({R(1), R(0), R(1)}, 3, "gauss");
  return field;
}

NumberField::Ptr zeta8_field() {
  static NumberField::Ptr field =
      NumberField::from_min_poly({R(1), R(0), R(0), R(0), R(1)}, 7, "zeta8");
  return field;
}

Alphabet::Ptr qubit_alphabet() {
  static Alphabet::Ptr alphabet = Alphabet::make({"0", "1"});
  return alphabet;
}

TermStructurePtr field_structure_for(NumberField::Ptr field) {
  return make_field_structure(std::move(field), registry_get("q"));
}

const std::vector<std::string>& registry_names() {
  static const std::vector<std::string> names = {
      "nat-s",  "nat-s-alt", "nat-plus",  "q",         "q-alt",     "sqrt2",        "zeta8",
      "vec1-q", "vec2-q",    "tensor-q",  "tensor-q-rev", "tensor-z8", "tensor-z8-rev"};
  return names;
}

TermStructurePtr registry_get_term(const std::string& name) {
  static std::recursive_mutex mu;
  static std::map<std::string, TermStructurePtr> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;

  auto build = [&]() -> TermStructurePtr {
    if (name == "nat-s") return make_nat_s(false);
    if (name == "nat-s-alt") return make_nat_s(true);
    if (name == "nat-plus") return make_nat_plus();
    if (name == "q") return make_q(false);
    if (name == "q-alt") return make_q(true);
    if (name == "sqrt2") return make_field_structure(sqrt2_field(), registry_get_term("q"));
    if (name == "zeta8") return make_field_structure(zeta8_field(), registry_get_term("q"));
    if (name == "vec1-q")
      return make_vector_structure(1, q_field(), registry_get_term("field-q"), "vec1-q");
    if (name == "vec2-q")
      return make_vector_structure(2, q_field(), registry_get_term("field-q"), "vec2-q");
    if (name == "field-q")
      return make_field_structure(q_field(), registry_get_term("q"), "field-q");
    if (name == "tensor-q")
      return make_tensor_structure(qubit_alphabet(), q_field(), registry_get_term("field-q"),
                                   "tensor-q", false);
    if (name == "tensor-q-rev")
      return make_tensor_structure(qubit_alphabet(), q_field(), registry_get_term("field-q"),
                                   "tensor-q-rev", true);
    if (name == "tensor-z8")
      return make_tensor_structure(qubit_alphabet(), zeta8_field(), registry_get_term("zeta8"),
                                   "tensor-z8", false);
    if (name == "tensor-z8-rev")
      return make_tensor_structure(qubit_alphabet(), zeta8_field(), registry_get_term("zeta8"),
                                   "tensor-z8-rev", true);
    throw Error("unknown structure '" + name + "'");
  };
  TermStructurePtr built = build();
  auto [pos, inserted] = cache.emplace(name, built);
  return pos->second;
}

StructurePtr registry_get(const std::string& name) { return registry_get_term(name); }

std::optional<std::string> registry_variant(const std::string& name) {
  if (name == "nat-s") return "nat-s-alt";
  if (name == "q") return "q-alt";
  if (name == "tensor-q") return "tensor-q-rev";
  if (name == "tensor-z8") return "tensor-z8-rev";
  return std::nullopt;
}

}  // namespace et

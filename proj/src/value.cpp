#include "et/value.hpp"

namespace et {

bool value_eq(const Value& a, const Value& b) {
  if (a.index() != b.index()) return false;
  if (const auto* n = std::get_if<Natural>(&a)) return *n == std::get<Natural>(b);
  if (const auto* r = std::get_if<Rational>(&a)) return *r == std::get<Rational>(b);
  if (const auto* f = std::get_if<FieldElement>(&a)) return nf_eq(*f, std::get<FieldElement>(b));
  return tv_eq(std::get<TensorVector>(a), std::get<TensorVector>(b));
}

std::string value_str(const Value& v) {
  if (const auto* n = std::get_if<Natural>(&v)) return n->str();
  if (const auto* r = std::get_if<Rational>(&v)) return r->str();
  if (const auto* f = std::get_if<FieldElement>(&v)) return f->str();
  return std::get<TensorVector>(v).str();
}

}  // namespace et

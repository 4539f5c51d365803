#pragma once

#include <optional>

#include "et/numberfield.hpp"
#include "et/term_structure.hpp"

namespace et {

/// Term indexing of a finite-degree extension of Q over the canonical
/// rational indexing: elements denoted by terms
///   add(smul(S^l0(0), e0), add(smul(S^l1(0), e1), ...))
/// with the l_k indices of the scalar structure. Operations: smul, add, mul
/// on elements plus the lifted scalar ops. Multiplication decodes through
/// the field's structure constants.
TermStructurePtr make_field_structure(NumberField::Ptr field, StructurePtr scalar_structure,
                                      std::string name = {});

/// Canonical index of a field element in such a structure.
Index field_canonical_index(const TermStructure& ts, const FieldElement& v);

/// One item of the rational enumeration inside an extension field:
/// the triple, the found index f(p,q,r), and its decoded rational value.
/// A budget overrun on any of the item's searches yields a skip marker.
struct RationalYield {
  std::uint64_t p = 0, q = 0, r = 0;
  std::optional<Index> index;
  std::optional<Rational> value;
  bool skipped() const { return !index.has_value(); }
};

/// Enumerates the indices of the rational subfield of an extension: walks
/// triples (p,q,r) in diagonal order and yields the index of
/// (J(p) - J(q)) / (J(r) + u), where J(0) = z, J(k+1) = J(k) + u and the
/// subtraction/division are derived from the structure's add/mul by
/// budgeted search.
class RationalEnumerator {
 public:
  RationalEnumerator(StructurePtr structure, SearchBudget per_item_budget);

  RationalYield next();

 private:
  Index j_chain(std::uint64_t k);
  std::optional<Index> derived(const OpEntry& forward, const Index& n, const Index& p,
                               const std::string& memo_key);

  StructurePtr structure_;
  SearchBudget budget_;
  const OpEntry* add_;
  const OpEntry* mul_;
  Index zero_index_;
  Index unit_index_;
  std::vector<Index> j_cache_;
  std::map<std::string, Index> search_cache_;
  std::uint64_t diag_ = 0, p_ = 0, q_ = 0;  // r = diag - p - q
};

}  // namespace et

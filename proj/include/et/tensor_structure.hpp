#pragma once

#include "et/tensor.hpp"
#include "et/term_structure.hpp"

namespace et {

/// Term indexing of the tensor space over an alphabet with scalars from a
/// field structure: terms built from generator constants e_j, scalar
/// multiplication, vector addition and the tensor product (realized on
/// values as word concatenation). reversed_generators reverses which
/// generator each e_j label denotes, giving a second admissible indexing of
/// the same space.
TermStructurePtr make_tensor_structure(Alphabet::Ptr alphabet, NumberField::Ptr field,
                                       StructurePtr field_structure, std::string name,
                                       bool reversed_generators = false);

/// The finite-dimensional sub-case: words of length exactly one, no tensor
/// product among the operations.
TermStructurePtr make_vector_structure(std::size_t dimension, NumberField::Ptr field,
                                       StructurePtr field_structure, std::string name);

/// A planted, computable stand-in for a basis permutation: forward/inverse
/// on basis-word ranks, defined on [0, range).
struct PermutationOracle {
  std::string name;
  std::function<std::uint64_t(std::uint64_t)> forward;
  std::function<std::uint64_t(std::uint64_t)> inverse;
  std::uint64_t range = UINT64_MAX;

  static PermutationOracle identity();
  static PermutationOracle adjacent_swap();
  static PermutationOracle reversal_on(std::uint64_t n);  // p -> n-1-p below n
};

/// The indexing phi o i: same domain and enumerator as the base tensor
/// structure, decoder post-composed with the linear extension of
/// e_p -> e_{forward(p)}. Operations keep addition and scalar multiplication
/// (phi is linear); the tensor product is not carried.
StructurePtr permuted_indexing(TermStructurePtr base, PermutationOracle oracle);

/// Applies the linear basis permutation to a decoded vector.
TensorVector permute_vector(const TensorVector& v, const PermutationOracle& oracle);

/// B(p): index of the canonical term S^z(0).e_0 + ... + S^z(0).e_{p-1} +
/// S^u(0).e_p, which decodes to the rank-p basis vector.
Index basis_index_term(std::uint64_t p, const TermStructure& base);

/// C(x): the rank p with decode(x) = e_p. Throws NotABasisVector otherwise.
std::uint64_t which_basis(const Index& x, const TermStructure& base);

/// h(p) = C(g(B(p))) for p < range: the permutation a translator from the
/// permuted indexing back to the base one must realize.
std::vector<std::uint64_t> extract_permutation(const Translator& g, const TermStructure& base,
                                               std::uint64_t range);

/// Canonical term index of a tensor vector: summands in word-rank order,
/// right-nested, scalars as numerals of their least index under the scalar
/// enumerator (found by budgeted search). The zero vector is S^z(0).e_0.
Index tv_to_term(const TensorVector& v, const TermStructure& ts, SearchBudget budget);

/// Denotation of a term index of the structure (inverse of tv_to_term).
TensorVector term_to_tv(const Index& x, const TermStructure& ts);

}  // namespace et

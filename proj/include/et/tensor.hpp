#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "et/numberfield.hpp"

namespace et {

/// The finite generative set of a tensor space: an ordered list of generator
/// names. Words over it form the basis, ranked by length then lexicographic
/// generator order.
class Alphabet {
 public:
  using Ptr = std::shared_ptr<const Alphabet>;

  static Ptr make(std::vector<std::string> generators);

  std::size_t size() const { return generators_.size(); }
  const std::string& generator(std::size_t i) const { return generators_.at(i); }
  std::optional<std::size_t> find(const std::string& name) const;

 private:
  explicit Alphabet(std::vector<std::string> gens) : generators_(std::move(gens)) {}
  std::vector<std::string> generators_;
};

/// A nonempty word of generator ids; denotes the tensor product of its
/// letters. Ordered by length, then lexicographically.
class BasisWord {
 public:
  BasisWord(Alphabet::Ptr alphabet, std::vector<std::uint32_t> letters);

  const Alphabet::Ptr& alphabet() const { return alphabet_; }
  const std::vector<std::uint32_t>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  /// Position in the length-then-lex enumeration e_0, e_1, ...
  Natural rank() const;
  static BasisWord from_rank(const Alphabet::Ptr& alphabet, const Natural& rank);

  BasisWord concat(const BasisWord& other) const;

  std::string str() const;  // |01> style (generator names joined)

  friend bool operator==(const BasisWord& a, const BasisWord& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator<(const BasisWord& a, const BasisWord& b) {
    if (a.letters_.size() != b.letters_.size()) return a.letters_.size() < b.letters_.size();
    return a.letters_ < b.letters_;
  }

 private:
  Alphabet::Ptr alphabet_;
  std::vector<std::uint32_t> letters_;
};

/// Sparse exact vector of a tensor space: a finite map from basis words to
/// nonzero field elements. Words of different lengths may coexist.
class TensorVector {
 public:
  TensorVector(Alphabet::Ptr alphabet, NumberField::Ptr field);

  static TensorVector zero(Alphabet::Ptr alphabet, NumberField::Ptr field);
  static TensorVector basis(const BasisWord& word, const NumberField::Ptr& field);
  static TensorVector single(const BasisWord& word, const FieldElement& coeff);

  const Alphabet::Ptr& alphabet() const { return alphabet_; }
  const NumberField::Ptr& field() const { return field_; }
  const std::map<BasisWord, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  /// Coefficient of a word (zero element if absent).
  FieldElement coefficient(const BasisWord& word) const;

  /// Adds c to the coefficient of word, pruning zeros.
  void accumulate(const BasisWord& word, const FieldElement& c);

  std::string str() const;

 private:
  Alphabet::Ptr alphabet_;
  NumberField::Ptr field_;
  std::map<BasisWord, FieldElement> terms_;
};

TensorVector tv_add(const TensorVector& u, const TensorVector& v);
TensorVector tv_sub(const TensorVector& u, const TensorVector& v);
TensorVector tv_scale(const FieldElement& s, const TensorVector& v);
/// Bilinear extension of word concatenation.
TensorVector tv_tensor(const TensorVector& u, const TensorVector& v);
bool tv_eq(const TensorVector& u, const TensorVector& v);

/// Text form: `(0,1/2,0,-1/2)|00> + (1)|11>`; `0` alone is the zero vector.
std::string tensor_text(const TensorVector& v);
TensorVector parse_tensor_text(const Alphabet::Ptr& alphabet, const NumberField::Ptr& field,
                               const std::string& text);

}  // namespace et

#pragma once

#include <complex>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "et/rational.hpp"

namespace et {

class FieldElement;

/// A finite-degree extension of the rationals, described by structure
/// constants: basis e_0..e_{d-1} with e_0 the unit and
/// e_p * e_q = sum_r m[p][q][r] e_r.
///
/// Fields are built from a monic minimal polynomial (basis = powers of a
/// root) and are immutable and shareable afterwards. The numeric embedding
/// is display-only; no exact computation consults it.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  using Ptr = std::shared_ptr<const NumberField>;

  /// coeffs = c_0 .. c_d with c_d = 1 (monic, constant first). If
  /// conj_root_power is given, the distinguished automorphism maps the root
  /// a to a^k; it must be an involution (checked exactly at build time).
  static Ptr from_min_poly(std::vector<Rational> coeffs,
                           std::optional<std::uint64_t> conj_root_power = std::nullopt,
                           std::string name = {});

  std::size_t degree() const { return degree_; }
  const std::string& name() const { return name_; }
  const std::string& basis_label(std::size_t p) const { return basis_labels_[p]; }
  const Rational& structure_constant(std::size_t p, std::size_t q, std::size_t r) const {
    return constants_[(p * degree_ + q) * degree_ + r];
  }
  bool has_conjugation() const { return !conjugation_.empty(); }
  const std::vector<Rational>& min_poly() const { return min_poly_; }
  std::optional<std::uint64_t> conj_root_power() const { return conj_power_; }

  /// Image of basis element e_p under the distinguished automorphism.
  const std::vector<Rational>& conjugate_basis(std::size_t p) const;

  std::complex<double> embed_basis(std::size_t p) const { return embedding_[p]; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_rational(const Rational& r) const;
  FieldElement element(std::vector<Rational> coords) const;
  FieldElement basis_element(std::size_t p) const;

  /// Overwrites one structure constant. Test hook for planted-fault audits;
  /// returns a modified copy, the original stays valid.
  static Ptr with_corrupted_constant(const Ptr& field, std::size_t p, std::size_t q,
                                     std::size_t r, const Rational& value);

 private:
  NumberField() = default;

  std::size_t degree_ = 0;
  std::string name_;
  std::vector<std::string> basis_labels_;
  std::vector<Rational> constants_;               // d*d*d, row-major (p, q, r)
  std::vector<std::vector<Rational>> conjugation_;  // d rows of d coords
  std::vector<std::complex<double>> embedding_;
  std::vector<Rational> min_poly_;
  std::optional<std::uint64_t> conj_power_;
};

/// An element of a NumberField: d exact rational coordinates over the basis.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(NumberField::Ptr field, std::vector<Rational> coords);

  const NumberField::Ptr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& coord(std::size_t p) const { return coords_[p]; }

  bool is_zero() const;
  bool is_rational() const;  // all coordinates beyond e_0 zero

  std::complex<double> embed() const;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const FieldElement& x);

 private:
  NumberField::Ptr field_;
  std::vector<Rational> coords_;
};

FieldElement nf_add(const FieldElement& a, const FieldElement& b);
FieldElement nf_sub(const FieldElement& a, const FieldElement& b);
FieldElement nf_neg(const FieldElement& a);
FieldElement nf_scale(const Rational& s, const FieldElement& a);
FieldElement nf_mul(const FieldElement& a, const FieldElement& b);
/// Multiplicative inverse via an exact linear solve against the
/// multiplication-by-a matrix. Throws DivisionByZero for 0 and InvalidField
/// when the constants do not define a field.
FieldElement nf_inverse(const FieldElement& a);
FieldElement nf_div(const FieldElement& a, const FieldElement& b);
FieldElement nf_conj(const FieldElement& a);
bool nf_eq(const FieldElement& a, const FieldElement& b);

/// Field description file:
///   minpoly: 1 0 0 0 1      (coefficients, constant first, monic)
///   conj: 7                 (optional: root -> root^7)
///   name: zeta8             (optional)
NumberField::Ptr parse_field_file(const std::string& text);
NumberField::Ptr load_field_file(const std::string& path);
std::string field_file_text(const NumberField& field);

/// Parses an element written as a coordinate tuple: `(0, 1/2, 0, -1/2)`.
FieldElement parse_field_element(const NumberField::Ptr& field, const std::string& text);

}  // namespace et
